#include "isodual/json_io.hpp"

namespace isodual {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error(Errc::invalid_argument, std::string("malformed ") + what + ": " + e.what());
    }
}

std::vector<std::int64_t> signed_coeffs(const json& j) {
    std::vector<std::int64_t> out;
    for (auto& c : j) out.push_back(c.get<std::int64_t>());
    return out;
}

}  // namespace

json to_json(const RingSpec& spec) { return {{"p", spec.p()}, {"e", spec.e()}}; }

json to_json(const FqPoly& f) { return {{"p", f.p()}, {"coeffs", f.coeffs()}}; }

json to_json(const RPoly& f) { return {{"ring", to_json(f.spec())}, {"coeffs", f.coeffs()}}; }

json to_json(const Splitting& s) {
    return {{"m", s.m},
            {"q", s.q},
            {"s1", s.s1},
            {"s2", s.s2},
            {"a", s.a},
            {"mu_minus1", s.given_by_mu_minus1 ? "swaps" : (s.invariant_under_mu_minus1 ? "fixes" : "neither")}};
}

json to_json(const CyclicCode& c) {
    json fam = json::array();
    for (auto& f : c.family()) fam.push_back(f.coeffs());
    return {{"ring", to_json(c.spec())}, {"n", c.n()}, {"F", std::move(fam)}};
}

json to_json(const Claim& c) {
    json j = {{"kind", to_string(c.kind)}};
    if (!c.partner.empty()) j["partner"] = c.partner;
    if (c.kind == ClaimKind::multiplier_image || c.multiplier != 0) j["multiplier"] = c.multiplier;
    return j;
}

json to_json(const EquivalenceCertificate& cert) {
    return {{"multiplier", cert.multiplier}, {"lambda", cert.lambda}};
}

json to_json(const WeightReport& w) {
    return {{"min_weight", w.weight}, {"strategy", to_string(w.strategy)}, {"enumerated", w.enumerated}};
}

json to_json(const CodeVerification& v) {
    json claims = json::array();
    for (auto& c : v.claims) {
        json cj = to_json(c.claim);
        cj["holds"] = c.holds;
        if (c.certificate) cj["certificate"] = to_json(*c.certificate);
        claims.push_back(std::move(cj));
    }
    json j = {{"cardinality_log", v.cardinality_log}, {"claims", std::move(claims)}, {"claims_hold", v.claims_hold()}};
    if (v.weight) j["weight"] = to_json(*v.weight);
    if (v.weight_upper_bound) j["weight_upper_bound"] = *v.weight_upper_bound;
    return j;
}

json to_json(const ConstructionResult& r, const std::vector<CodeVerification>* checks) {
    const auto& p = r.params;
    json params = {{"kind", p.kind}, {"ring", to_json(p.spec)}, {"m", p.m}};
    if (p.a) params["a"] = p.a;
    if (p.alpha) params["alpha"] = *p.alpha;
    if (p.splitting) params["splitting"] = to_json(*p.splitting);
    if (p.g1) params["g1"] = p.g1->coeffs();
    if (p.g2) params["g2"] = p.g2->coeffs();

    json codes = json::array();
    for (std::size_t i = 0; i < r.codes.size(); ++i) {
        const auto& lc = r.codes[i];
        json claims = json::array();
        for (auto& c : lc.claims) claims.push_back(to_json(c));
        json cj = {{"label", lc.label}, {"code", to_json(lc.code)}, {"claims", std::move(claims)}};
        if (lc.generator) cj["generator"] = lc.generator->coeffs();
        if (checks) {
            for (auto& v : *checks)
                if (v.label == lc.label) cj["verified"] = to_json(v);
        }
        codes.push_back(std::move(cj));
    }
    return {{"params", std::move(params)}, {"codes", std::move(codes)}, {"notes", r.notes}};
}

RingSpec ring_spec_from_json(const json& j) {
    return guarded("ring", [&] { return RingSpec(j.at("p").get<std::uint64_t>(), j.at("e").get<unsigned>()); });
}

FqPoly fq_poly_from_json(const json& j) {
    return guarded("F_p polynomial",
                   [&] { return FqPoly(j.at("p").get<std::uint64_t>(), signed_coeffs(j.at("coeffs"))); });
}

RPoly rpoly_from_json(const json& j) {
    return guarded("polynomial", [&] { return RPoly(ring_spec_from_json(j.at("ring")), signed_coeffs(j.at("coeffs"))); });
}

Splitting splitting_from_json(const json& j) {
    return guarded("splitting", [&] {
        Splitting s{j.at("m").get<std::uint64_t>(),
                    j.at("q").get<std::uint64_t>(),
                    j.at("s1").get<std::vector<std::uint64_t>>(),
                    j.at("s2").get<std::vector<std::uint64_t>>(),
                    j.at("a").get<std::uint64_t>(),
                    false,
                    false};
        const auto mu = j.at("mu_minus1").get<std::string>();
        if (mu != "swaps" && mu != "fixes" && mu != "neither")
            throw Error(Errc::invalid_argument, "mu_minus1 must be swaps, fixes or neither");
        s.given_by_mu_minus1 = mu == "swaps";
        s.invariant_under_mu_minus1 = mu == "fixes";
        return s;
    });
}

CyclicCode code_from_json(const json& j) {
    return guarded("code", [&] {
        const RingSpec spec = ring_spec_from_json(j.at("ring"));
        std::vector<RPoly> fam;
        for (auto& f : j.at("F")) fam.emplace_back(spec, signed_coeffs(f));
        return CyclicCode(spec, j.at("n").get<std::uint64_t>(), std::move(fam));
    });
}

Claim claim_from_json(const json& j) {
    return guarded("claim", [&] {
        return Claim{parse_claim_kind(j.at("kind").get<std::string>()), j.value("partner", std::string{}),
                     j.value("multiplier", std::int64_t{0})};
    });
}

ConstructionResult construction_from_json(const json& j) {
    return guarded("construction", [&] {
        const json& pj = j.at("params");
        const RingSpec spec = ring_spec_from_json(pj.at("ring"));
        ConstructionParams params{pj.at("kind").get<std::string>(), spec, pj.at("m").get<std::uint64_t>(),
                                  pj.value("a", 0u), std::nullopt, std::nullopt, std::nullopt, std::nullopt};
        if (pj.contains("alpha")) params.alpha = pj["alpha"].get<std::uint64_t>();
        if (pj.contains("splitting")) params.splitting = splitting_from_json(pj["splitting"]);
        if (pj.contains("g1")) params.g1 = RPoly(spec, signed_coeffs(pj["g1"]));
        if (pj.contains("g2")) params.g2 = RPoly(spec, signed_coeffs(pj["g2"]));

        ConstructionResult r{std::move(params), {}, {}};
        for (auto& cj : j.at("codes")) {
            std::vector<Claim> claims;
            for (auto& c : cj.at("claims")) claims.push_back(claim_from_json(c));
            std::optional<RPoly> gen;
            if (cj.contains("generator")) gen = RPoly(spec, signed_coeffs(cj["generator"]));
            r.codes.push_back({cj.at("label").get<std::string>(), code_from_json(cj.at("code")), std::move(gen),
                               std::move(claims)});
        }
        if (j.contains("notes")) r.notes = j["notes"].get<std::vector<std::string>>();
        return r;
    });
}

}  // namespace isodual
