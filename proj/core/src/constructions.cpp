#include "isodual/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace isodual {

namespace {

struct Setup {
    RElem alpha;
    RElem alpha_inv;
    std::uint64_t half;  // 2^{a-1}
    std::uint64_t n;     // 2^a m
};

Setup setup_even_length(std::uint64_t m, unsigned a, const RingSpec& spec) {
    if (m == 0 || m % 2 == 0) throw Error(Errc::invalid_argument, "m must be odd");
    if (m % spec.p() == 0) throw Error(Errc::invalid_argument, "m must be prime to p");
    if (a < 1 || a > 20) throw Error(Errc::invalid_argument, "a must lie in [1, 20]");
    const std::uint64_t order = std::uint64_t{1} << a;
    const RElem alpha = primitive_root_of_unity(order, spec);
    return {alpha, inverse(alpha), order / 2, order * m};
}

// g(alpha^{-k} x), made monic
RPoly twisted(const RPoly& g, const Setup& s, std::uint64_t k) {
    return substitute_scaled(g, pow(s.alpha_inv, k), true);
}

RPoly binomial(const RingSpec& spec, std::uint64_t degree, std::int64_t constant) {
    return RPoly::monomial(spec, degree) + RPoly(spec, {constant});
}

LabeledCode free_code(std::string label, RPoly generator, std::uint64_t n, std::vector<Claim> claims) {
    CyclicCode code = from_generator(generator, n);
    return {std::move(label), std::move(code), std::move(generator), std::move(claims)};
}

void check_duadic_pair(std::uint64_t m, const RPoly& g1, const RPoly& g2) {
    const RingSpec& spec = g1.spec();
    if (g1.degree() < 1 || g2.degree() < 1)
        throw Error(Errc::invalid_argument, "g1 and g2 must both be nonconstant");
    if (!g1.is_monic() || !g2.is_monic()) throw Error(Errc::not_monic, "g1 and g2 must be monic");
    if (binomial(spec, 1, -1) * g1 * g2 != xn_minus_1(m, spec))
        throw Error(Errc::not_divisible, "(x - 1) g1 g2 != x^" + std::to_string(m) + " - 1");
}

std::vector<LabeledCode> paired_codes(const Setup& s, const RPoly& g1, const RPoly& g2) {
    const RingSpec& spec = g1.spec();
    std::vector<LabeledCode> out;
    const std::pair<const RPoly*, const RPoly*> orders[] = {{&g1, &g2}, {&g2, &g1}};
    const char* names[] = {"12", "21"};
    for (int idx = 0; idx < 2; ++idx) {
        auto [gi, gj] = orders[idx];
        RPoly body = RPoly::one(spec);
        for (std::uint64_t k = 1; k <= s.half; ++k) body = body * twisted(*gi, s, 2 * k);
        for (std::uint64_t k = 0; k < s.half; ++k) body = body * twisted(*gj, s, 2 * k + 1);
        const std::string base = std::string("C_") + names[idx];
        out.push_back(free_code(base + "_minus", binomial(spec, s.half, -1) * body, s.n, {{ClaimKind::isodual, ""}}));
        out.push_back(free_code(base + "_plus", binomial(spec, s.half, 1) * body, s.n, {{ClaimKind::isodual, ""}}));
    }
    return out;
}

}  // namespace

const char* to_string(ClaimKind kind) noexcept {
    switch (kind) {
        case ClaimKind::isodual: return "isodual";
        case ClaimKind::self_dual: return "self-dual";
        case ClaimKind::dual_of: return "dual-of";
        case ClaimKind::dual_equivalent: return "dual-equivalent";
        case ClaimKind::multiplier_image: return "multiplier-image";
    }
    return "isodual";
}

ClaimKind parse_claim_kind(const std::string& s) {
    for (auto k : {ClaimKind::isodual, ClaimKind::self_dual, ClaimKind::dual_of, ClaimKind::dual_equivalent,
                   ClaimKind::multiplier_image})
        if (s == to_string(k)) return k;
    throw Error(Errc::invalid_argument, "unknown claim kind '" + s + "'");
}

const LabeledCode& ConstructionResult::at(const std::string& label) const {
    for (auto& c : codes)
        if (c.label == label) return c;
    throw Error(Errc::invalid_argument, "no code labelled '" + label + "'");
}

ConstructionResult split_cofactor_isodual(std::uint64_t m, unsigned a, const RingSpec& spec) {
    const Setup s = setup_even_length(m, a, spec);
    const RPoly f = r_exact_div(xn_minus_1(m, spec), binomial(spec, 1, -1));

    RPoly minus = binomial(spec, s.half, -1);
    for (std::uint64_t k = 0; k < s.half; ++k) minus = minus * twisted(f, s, 2 * k + 1);
    RPoly plus = binomial(spec, s.half, 1);
    for (std::uint64_t k = 1; k <= s.half; ++k) plus = plus * twisted(f, s, 2 * k);

    ConstructionResult r{{"thm42", spec, m, a, s.alpha.value(), std::nullopt, std::nullopt, std::nullopt}, {}, {}};
    r.codes.push_back(free_code("C_minus", std::move(minus), s.n, {{ClaimKind::isodual, ""}}));
    r.codes.push_back(free_code("C_plus", std::move(plus), s.n, {{ClaimKind::isodual, ""}}));
    return r;
}

ConstructionResult paired_factor_isodual(std::uint64_t m, unsigned a, const RingSpec& spec, const RPoly& g1,
                                         const RPoly& g2) {
    const Setup s = setup_even_length(m, a, spec);
    if (g1.spec() != spec || g2.spec() != spec) throw Error(Errc::mismatched_ring, "g1, g2 over the wrong ring");
    check_duadic_pair(m, g1, g2);
    ConstructionResult r{{"thm44", spec, m, a, s.alpha.value(), std::nullopt, g1, g2}, {}, {}};
    r.codes = paired_codes(s, g1, g2);
    return r;
}

CyclicCode half_length_code(std::uint64_t m, unsigned a, const RingSpec& spec) {
    const Setup s = setup_even_length(m, a, spec);
    return from_generator(binomial(spec, s.n / 2, -1), s.n);
}

ConstructionResult half_length_isodual(std::uint64_t m, unsigned a, const RingSpec& spec) {
    const Setup s = setup_even_length(m, a, spec);
    ConstructionResult r{{"remark46", spec, m, a, s.alpha.value(), std::nullopt, std::nullopt, std::nullopt}, {}, {}};
    r.codes.push_back(free_code("half", binomial(spec, s.n / 2, -1), s.n, {{ClaimKind::isodual, ""}}));
    return r;
}

std::pair<RPoly, RPoly> duadic_lifts(std::uint64_t m, const RingSpec& spec, const Splitting& splitting) {
    if (splitting.m != m) throw Error(Errc::invalid_argument, "splitting modulus does not match m");
    if (m % 2 == 0 || m % spec.p() == 0) throw Error(Errc::invalid_argument, "m must be odd and prime to p");
    if (!is_quadratic_residue(spec.p() % m, m))
        throw Error(Errc::empty_result, std::to_string(spec.p()) + " is not a square mod " + std::to_string(m));
    auto [f1, f2] = duadic_generators(splitting, spec.p());
    const FqPoly x_minus_1 = FqPoly(spec.p(), {-1, 1});
    auto lifts = hensel_lift_factorization({x_minus_1, f1, f2}, m, spec);
    return {lifts[1], lifts[2]};
}

ConstructionResult duadic_lift(std::uint64_t m, const RingSpec& spec, const Splitting& splitting) {
    auto [g1, g2] = duadic_lifts(m, spec, splitting);
    const RPoly x_minus_1 = binomial(spec, 1, -1);
    const bool swaps = splitting.given_by_mu_minus1;
    const auto w = static_cast<std::int64_t>(splitting.a);

    ConstructionResult r{{"duadic", spec, m, 0, std::nullopt, splitting, g1, g2}, {}, {}};
    r.codes.push_back(free_code("D'_1", g1, m,
                                {{ClaimKind::dual_of, swaps ? "C'_1" : "C'_2"},
                                 {ClaimKind::multiplier_image, "D'_2", w}}));
    r.codes.push_back(free_code("D'_2", g2, m,
                                {{ClaimKind::dual_of, swaps ? "C'_2" : "C'_1"},
                                 {ClaimKind::multiplier_image, "D'_1", w}}));
    r.codes.push_back(free_code("C'_1", x_minus_1 * g1, m, {{ClaimKind::multiplier_image, "C'_2", w}}));
    r.codes.push_back(free_code("C'_2", x_minus_1 * g2, m, {{ClaimKind::multiplier_image, "C'_1", w}}));

    if (spec.e() % 2 == 0) {
        const unsigned j = spec.e() / 2;
        const RPoly both = g1 * g2;
        std::vector<Claim> c1, c2;
        if (swaps) {
            c1 = {{ClaimKind::self_dual, ""}};
            c2 = {{ClaimKind::self_dual, ""}};
        } else {
            c1 = {{ClaimKind::dual_of, "E_2"}, {ClaimKind::isodual, "", w}};
            c2 = {{ClaimKind::dual_of, "E_1"}, {ClaimKind::isodual, "", w}};
        }
        c1.push_back({ClaimKind::multiplier_image, "E_2", w});
        c2.push_back({ClaimKind::multiplier_image, "E_1", w});
        r.codes.push_back({"E_1", from_two_stage(x_minus_1 * g1, both, j, m), std::nullopt, std::move(c1)});
        r.codes.push_back({"E_2", from_two_stage(x_minus_1 * g2, both, j, m), std::nullopt, std::move(c2)});
    } else {
        r.notes.push_back("e = " + std::to_string(spec.e()) + " is odd: E_1 and E_2 are not defined");
    }
    return r;
}

ConstructionResult duadic_isodual(std::uint64_t m, unsigned a, const RingSpec& spec, const Splitting& splitting) {
    const Setup s = setup_even_length(m, a, spec);
    auto [g1, g2] = duadic_lifts(m, spec, splitting);
    ConstructionResult r{{"thm510", spec, m, a, s.alpha.value(), splitting, g1, g2}, {}, {}};
    r.codes = paired_codes(s, g1, g2);

    const bool swaps = splitting.given_by_mu_minus1;
    const RPoly* gs[] = {&g1, &g2};
    for (int i = 0; i < 2; ++i) {
        RPoly body = RPoly::one(spec);
        for (std::uint64_t k = 1; k <= 2 * s.half; ++k) body = body * twisted(*gs[i], s, k);
        const std::string base = "C_" + std::to_string(i + 1);
        const std::string other_plus = "C_" + std::to_string(2 - i) + "_plus";
        std::vector<Claim> minus_claims, plus_claims;
        if (swaps) {
            minus_claims = {{ClaimKind::isodual, ""}};
            plus_claims = {{ClaimKind::isodual, ""}};
        } else {
            minus_claims = {{ClaimKind::dual_equivalent, other_plus}};
        }
        r.codes.push_back(free_code(base + "_minus", binomial(spec, s.half, -1) * body, s.n, std::move(minus_claims)));
        r.codes.push_back(free_code(base + "_plus", binomial(spec, s.half, 1) * body, s.n, std::move(plus_claims)));
    }
    if (!swaps) r.notes.push_back("-1 fixes the splitting: C_i codes are paired with the duals of C_j codes");
    return r;
}

bool CodeVerification::claims_hold() const noexcept {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimCheck& c) { return c.holds; });
}

std::vector<CodeVerification> verify(const ConstructionResult& result, const WeightOptions& options,
                                     bool compute_weights) {
    std::vector<CodeVerification> out;
    for (auto& lc : result.codes) {
        CodeVerification v{lc.label, cardinality_log(lc.code), {}, std::nullopt, std::nullopt};
        for (auto& claim : lc.claims) {
            ClaimCheck check{claim, false, std::nullopt};
            switch (claim.kind) {
                case ClaimKind::isodual:
                    if (claim.multiplier != 0) {
                        check.holds = apply_multiplier(lc.code, claim.multiplier) == dual(lc.code);
                        if (check.holds) check.certificate = EquivalenceCertificate{claim.multiplier, 1};
                        break;
                    }
                    check.certificate = certify_isodual(lc.code);
                    check.holds = check.certificate.has_value();
                    break;
                case ClaimKind::self_dual:
                    check.holds = is_self_dual(lc.code);
                    break;
                case ClaimKind::dual_of:
                    check.holds = dual(lc.code) == result.at(claim.partner).code;
                    break;
                case ClaimKind::dual_equivalent:
                    check.certificate = find_equivalence(result.at(claim.partner).code, dual(lc.code));
                    check.holds = check.certificate.has_value();
                    break;
                case ClaimKind::multiplier_image:
                    check.holds = apply_multiplier(lc.code, claim.multiplier) == result.at(claim.partner).code;
                    break;
            }
            v.claims.push_back(std::move(check));
        }
        if (compute_weights && !lc.code.is_zero()) {
            try {
                v.weight = min_hamming_weight(lc.code, options);
            } catch (const BudgetExceeded& e) {
                v.weight_upper_bound = e.upper_bound();
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace isodual
