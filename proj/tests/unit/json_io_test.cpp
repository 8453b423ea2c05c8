#include <gtest/gtest.h>

#include "isodual/json_io.hpp"

using namespace isodual;

TEST(Json, ScalarSchemas) {
    const RingSpec z9(3, 2);
    EXPECT_EQ(to_json(z9), json::parse(R"({"p":3,"e":2})"));
    EXPECT_EQ(ring_spec_from_json(to_json(z9)), z9);

    const FqPoly f(3, {2, 0, 1});
    EXPECT_EQ(to_json(f), json::parse(R"({"p":3,"coeffs":[2,0,1]})"));
    EXPECT_EQ(fq_poly_from_json(to_json(f)), f);

    const RPoly g(z9, {8, 2, 1, 8, 3, 1});
    EXPECT_EQ(to_json(g)["coeffs"], json::parse("[8,2,1,8,3,1]"));
    EXPECT_EQ(rpoly_from_json(to_json(g)), g);

    const auto s = find_splittings(11, 3)[0];
    const auto sj = to_json(s);
    EXPECT_EQ(sj["mu_minus1"], "swaps");
    EXPECT_EQ(splitting_from_json(sj), s);
}

TEST(Json, CodeRoundTrip) {
    const RingSpec z9(3, 2);
    const RPoly g1(z9, {8, 2, 1, 8, 3, 1}), g2(z9, {8, 6, 1, 8, 7, 1}), x1(z9, {8, 1});
    const auto e1 = from_two_stage(x1 * g1, g1 * g2, 1, 11);
    const auto j = to_json(e1);
    EXPECT_EQ(j["n"], 11);
    EXPECT_EQ(j["F"].size(), 3u);
    EXPECT_EQ(code_from_json(j), e1);
    EXPECT_EQ(code_from_json(json::parse(j.dump())), e1);
}

TEST(Json, ConstructionRoundTrip) {
    for (auto r : {split_cofactor_isodual(5, 1, RingSpec(3, 2)), duadic_lift(11, RingSpec(3, 2), find_splittings(11, 3)[0]),
                   duadic_lift(11, RingSpec(3, 3), find_splittings(11, 3)[0]),
                   duadic_isodual(13, 1, RingSpec(3, 2), find_splittings(13, 3)[0])}) {
        const auto checks = verify(r, {}, false);
        const json doc = to_json(r, &checks);
        const auto back = construction_from_json(json::parse(doc.dump()));
        EXPECT_EQ(to_json(back), to_json(r));
        for (auto& c : doc["codes"]) EXPECT_TRUE(c.contains("verified"));
    }
}

TEST(Json, RejectsMalformedInput) {
    EXPECT_THROW(ring_spec_from_json(json::parse(R"({"p":4,"e":2})")), Error);
    EXPECT_THROW(ring_spec_from_json(json::parse(R"({"p":3})")), Error);
    EXPECT_THROW(code_from_json(json::parse(R"({"ring":{"p":3,"e":2},"n":11,"F":[[1],[1],[1]]})")), Error);
    EXPECT_THROW(splitting_from_json(json::parse(R"({"m":11,"q":3,"s1":[],"s2":[],"a":2,"mu_minus1":"maybe"})")),
                 Error);
    EXPECT_THROW(claim_from_json(json::parse(R"({"kind":"weird"})")), Error);
}
