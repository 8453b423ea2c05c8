#include <gtest/gtest.h>

#include <random>

#include "isodual/ring.hpp"

using namespace isodual;

TEST(RingSpec, RejectsBadParameters) {
    EXPECT_THROW(RingSpec(4, 2), Error);
    EXPECT_THROW(RingSpec(1, 1), Error);
    EXPECT_THROW(RingSpec(3, 0), Error);
    EXPECT_THROW(RingSpec(3, 40), Error);  // 3^40 does not fit
    EXPECT_NO_THROW(RingSpec(65521, 1));
    EXPECT_EQ(RingSpec(5, 2).modulus(), 25u);
    EXPECT_EQ(RingSpec(3, 3).gamma_power(2), 9u);
}

TEST(RElem, SmallArithmetic) {
    const RingSpec z9(3, 2), z4(2, 2);
    EXPECT_EQ((RElem(z9, 7) + RElem(z9, 5)).value(), 3u);
    EXPECT_EQ((RElem(z9, 8) * RElem(z9, 8)).value(), 1u);
    EXPECT_EQ((RElem(z4, 2) * RElem(z4, 2)).value(), 0u);
    EXPECT_EQ((RElem(z9, 2) - RElem(z9, 5)).value(), 6u);
    EXPECT_EQ(RElem(z9, -1).value(), 8u);
}

TEST(RElem, MismatchedRings) {
    EXPECT_THROW(RElem(RingSpec(3, 2), 1) + RElem(RingSpec(3, 3), 1), Error);
}

TEST(RElem, Units) {
    const RingSpec z9(3, 2);
    EXPECT_TRUE(is_unit(RElem(z9, 2)));
    EXPECT_FALSE(is_unit(RElem(z9, 3)));
    EXPECT_FALSE(is_unit(RElem(z9, 0)));
}

TEST(RElem, Inverse) {
    EXPECT_EQ(inverse(RElem(RingSpec(3, 2), 2)).value(), 5u);
    EXPECT_EQ(inverse(RElem(RingSpec(5, 2), 7)).value(), 18u);
    try {
        inverse(RElem(RingSpec(3, 2), 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_a_unit);
    }
}

TEST(RElem, Valuation) {
    const RingSpec z9(3, 2);
    EXPECT_EQ(gamma_valuation(RElem(z9, 6)), 1u);
    EXPECT_EQ(gamma_valuation(RElem(z9, 2)), 0u);
    EXPECT_EQ(gamma_valuation(RElem(z9, 0)), 2u);
}

TEST(RElem, RandomizedProperties) {
    std::mt19937_64 rng(7);
    for (auto [p, e] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 2u}, {7u, 3u}, {3u, 5u}}) {
        const RingSpec spec(p, e);
        std::uniform_int_distribution<std::uint64_t> pick(0, spec.modulus() - 1);
        for (int trial = 0; trial < 500; ++trial) {
            const RElem a(spec, static_cast<std::int64_t>(pick(rng)));
            const RElem b(spec, static_cast<std::int64_t>(pick(rng)));
            if (is_unit(a)) EXPECT_EQ((a * inverse(a)).value(), 1u);
            EXPECT_EQ(is_unit(a * b), is_unit(a) && is_unit(b));
            EXPECT_EQ(gamma_valuation(a * b), std::min(e, gamma_valuation(a) + gamma_valuation(b)));
        }
    }
}

TEST(IntegerHelpers, PrimalityAndFactors) {
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(4294967291ull));
    EXPECT_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
    EXPECT_EQ(prime_divisors(242), (std::vector<std::uint64_t>{2, 11}));
    EXPECT_EQ(canonical_mod(-3, 9), 6u);
    EXPECT_FALSE(inv_mod(6, 9).has_value());
}
