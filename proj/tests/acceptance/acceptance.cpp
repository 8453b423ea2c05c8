// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes within its time limit.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "code_families.hpp"
#include "isodual/constructions.hpp"
#include "oracles.hpp"

using namespace isodual;

namespace {

struct Check {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

RPoly rp(const RingSpec& s, std::vector<std::int64_t> c) { return RPoly(s, c); }

RPoly monic(const RPoly& f) { return f.scaled(inverse(RElem(f.spec(), static_cast<std::int64_t>(f.leading()))).value()); }

WeightOptions residue_only() {
    WeightOptions o;
    o.strategy = WeightStrategy::residue;
    return o;
}

oracle::Vec residue_coeffs(const RPoly& g) {
    oracle::Vec out;
    for (auto c : g.coeffs()) out.push_back(c % g.spec().p());
    return out;
}

const RingSpec z4(2, 2), z9(3, 2), z25(5, 2);

/* 1: length-10 split-cofactor codes over Z_9 */
void length_ten_codes(Check& c) {
    const auto r = split_cofactor_isodual(5, 1, z9);
    const RPoly printed[] = {rp(z9, {8, 2, 7, 2, 7, 1}), rp(z9, {1, 2, 2, 2, 2, 1})};
    c.expect(r.codes.size() == 2, "expected two codes");
    for (std::size_t i = 0; i < 2 && i < r.codes.size(); ++i) {
        const auto& code = r.codes[i].code;
        c.expect(code == from_generator(printed[i], 10), r.codes[i].label + " differs from the printed generator");
        const auto w = min_hamming_weight(code);
        c.expect(w.weight == 4, r.codes[i].label + " weight " + std::to_string(w.weight));
        const auto cert = certify_isodual(code);
        c.expect(cert && apply_certificate(code, *cert) == dual(code), r.codes[i].label + " has no certificate");
    }
}

/* 2: length-22 paired-factor codes over Z_9 */
void length_22_paired_codes(Check& c) {
    const RPoly g1 = rp(z9, {8, 2, 1, 8, 3, 1}), g2 = rp(z9, {8, 6, 1, 8, 7, 1});
    const auto r = paired_factor_isodual(11, 1, z9, g1, g2);
    c.expect(r.codes.size() == 4, "expected four codes");
    for (auto& lc : r.codes) c.expect(lc.code.n() == 22, lc.label + " has wrong length");
    // printed with leading coefficient 8
    const RPoly printed[] = {rp(z9, {8, 6, 0, 8, 6, 3, 4, 5, 0, 1, 5, 8}), rp(z9, {1, 5, 8, 0, 4, 4, 6, 6, 1, 0, 3, 8})};
    for (auto& g : printed) {
        const auto target = from_generator(monic(g), 22);
        const bool found = std::any_of(r.codes.begin(), r.codes.end(), [&](const LabeledCode& lc) { return lc.code == target; });
        c.expect(found, "printed generator " + to_string(g) + " not among the codes");
        const auto w = min_hamming_weight(target, residue_only());
        c.expect(w.weight == 7, "residue weight " + std::to_string(w.weight));
        const auto brute = oracle::brute_min_weight_fp(residue_coeffs(monic(g)), 22, 3);
        c.expect(brute == 7, "message enumeration weight " + std::to_string(brute));
    }
}

/* 3: length-11 duadic lift over Z_9 */
void length_11_lift(Check& c) {
    const RPoly g1 = rp(z9, {8, 2, 1, 8, 3, 1}), g2 = rp(z9, {8, 6, 1, 8, 7, 1});
    const auto lifted = hensel_lift_factorization(factor_xn_minus_1(11, 3), 11, z9);
    c.expect(lifted == std::vector<RPoly>{rp(z9, {8, 1}), g1, g2}, "lifted factors differ");
    c.expect(reciprocal(g1) == g2, "reciprocal(g1) != g2");
    const RPoly x1 = rp(z9, {8, 1});
    for (auto [gi, name] : {std::pair{g1, "E_1"}, {g2, "E_2"}}) {
        const auto e = from_two_stage(x1 * gi, g1 * g2, 1, 11);
        c.expect(is_self_dual(e), std::string(name) + " not self-dual");
        c.expect(cardinality_log(e) == 11, std::string(name) + " has wrong size");
    }
    const auto r = duadic_lift(11, z9, find_splittings(11, 3).at(0));
    c.expect(is_self_dual(r.at("E_1").code) && is_self_dual(r.at("E_2").code), "constructed E-codes not self-dual");
}

/* 4: length-31 duadic lift over Z_4 */
void length_31_lift(Check& c) {
    std::vector<RPoly> printed = {rp(z4, {3, 1}),
                                  rp(z4, {3, 2, 3, 0, 0, 1}),
                                  rp(z4, {3, 3, 1, 3, 2, 1}),
                                  rp(z4, {3, 3, 1, 0, 3, 1}),
                                  rp(z4, {3, 0, 0, 1, 2, 1}),
                                  rp(z4, {3, 1, 0, 3, 1, 1}),
                                  rp(z4, {3, 2, 1, 3, 1, 1})};
    auto lifted = hensel_lift_factorization(factor_xn_minus_1(31, 2), 31, z4);
    auto order = [](const RPoly& a, const RPoly& b) { return a.coeffs() < b.coeffs(); };
    const RPoly g1 = printed[1] * printed[2] * printed[3];
    const RPoly g2 = printed[4] * printed[5] * printed[6];
    std::sort(lifted.begin(), lifted.end(), order);
    std::sort(printed.begin(), printed.end(), order);
    c.expect(lifted == printed, "lifted factors differ from the printed list");
    c.expect(reciprocal(g1) == g2, "reciprocal(g1) != g2");
    const auto e = from_two_stage(rp(z4, {3, 1}) * g1, g1 * g2, 1, 31);
    c.expect(is_self_dual(e), "E-code not self-dual");
    c.expect(cardinality_log(e) == 31, "log2 |E| = " + std::to_string(cardinality_log(e)));
    for (auto& s : find_splittings(31, 2)) {
        const auto r = duadic_lift(31, z4, s);
        c.expect(is_self_dual(r.at("E_1").code) && cardinality_log(r.at("E_1").code) == 31,
                 "constructed E_1 not self-dual for a splitting");
    }
}

/* 5: length-22 codes over Z_25 */
void length_22_over_z25(Check& c) {
    const RPoly g1 = rp(z25, {24, 16, 1, 24, 17, 1}), g2 = rp(z25, {24, 8, 1, 24, 9, 1});
    const auto lifted = hensel_lift_factorization(factor_xn_minus_1(11, 5), 11, z25);
    c.expect(lifted == std::vector<RPoly>{rp(z25, {24, 1}), g1, g2}, "lifted factors differ");
    const RElem minus_one(z25, -1);
    const RPoly x_minus_1 = rp(z25, {24, 1}), x_plus_1 = rp(z25, {1, 1});
    const RPoly g[] = {g1, g2};
    for (int i = 0; i < 2; ++i) {
        const RPoly mixed = x_minus_1 * g[i] * substitute_scaled(g[1 - i], minus_one, true);
        const RPoly same = x_plus_1 * g[i] * substitute_scaled(g[i], minus_one, true);
        const auto wm = min_hamming_weight(from_generator(mixed, 22), residue_only()).weight;
        const auto ws = min_hamming_weight(from_generator(same, 22), residue_only()).weight;
        c.expect(wm == 8, "<(x-1)g_i g_j(-x)> weight " + std::to_string(wm));
        c.expect(ws == 6, "<(x+1)g_i g_i(-x)> weight " + std::to_string(ws));
        c.expect(certify_isodual(from_generator(mixed, 22)).has_value(), "mixed code not certified");
        c.expect(certify_isodual(from_generator(same, 22)).has_value(), "same-index code not certified");
    }
}

/* 6: dual versus brute-force annihilator */
void dual_oracle(Check& c) {
    for (auto [spec, n] : {std::pair{z4, 3u}, {z4, 5u}, {z4, 7u}, {z9, 2u}, {z9, 4u}, {z9, 5u}, {z9, 7u}, {z9, 8u}}) {
        const families::Components comps(spec, n);
        std::vector<oracle::Vec> blocks;
        for (auto& h : comps.hats) blocks.push_back(h.coeffs());
        const oracle::ProfileHistogram hist(spec.p(), spec.e(), n, blocks);
        const auto mod = spec.modulus();
        comps.for_each_levels([&](const std::vector<unsigned>& levels) {
            const auto code = comps.code(levels);
            const auto d = dual(code);
            std::vector<unsigned> need(levels.size());
            std::vector<oracle::Vec> spanning;
            for (std::size_t i = 0; i < levels.size(); ++i) {
                need[i] = levels[i] < spec.e() ? spec.e() - levels[i] : 0;
                if (levels[i] >= spec.e()) continue;
                const auto gamma = spec.gamma_power(levels[i]);
                for (auto& row : oracle::cyclic_shifts(comps.hats[i].scaled(gamma).coeffs(), n, mod)) spanning.push_back(row);
            }
            std::ostringstream tag;
            tag << "Z_" << mod << " n=" << n << " levels=";
            for (auto l : levels) tag << l;
            const auto rows = generator_matrix(d);
            const unsigned ann = hist.annihilator_log(need);
            c.expect(ann == cardinality_log(d), tag.str() + ": annihilator size differs");
            c.expect(oracle::span_log(rows, spec.p(), spec.e()) == ann, tag.str() + ": dual rows span wrong size");
            c.expect(oracle::span_log(spanning, spec.p(), spec.e()) == cardinality_log(code), tag.str() + ": code size");
            for (auto& r : rows)
                for (auto& s : spanning)
                    if (oracle::dot(r, s, mod) != 0) {
                        c.expect(false, tag.str() + ": dual row not orthogonal");
                        return;
                    }
        });
    }
}

/* 7: property suite */
void property_suite(Check& c) {
    const std::vector<std::pair<RingSpec, std::uint64_t>> small = {
        {z4, 3}, {z4, 5}, {z4, 7}, {z4, 9}, {z9, 2}, {z9, 4}, {z9, 5}, {z9, 7}, {z9, 8}, {z25, 3}, {z25, 4}, {z4, 15}, {z4, 21}, {RingSpec(2, 3), 7}, {RingSpec(2, 3), 9}, {RingSpec(3, 3), 4}};
    std::size_t agreement_checked = 0;
    for (auto& [spec, n] : small) {
        const families::Components comps(spec, n);
        comps.for_each_code([&](const CyclicCode& code) {
            const auto d = dual(code);
            c.expect(dual(d) == code, "dual involution fails");
            c.expect(cardinality_log(code) + cardinality_log(d) == spec.e() * n, "cardinality pairing fails");
            if (code.is_zero() || cardinality_log(code) * std::log2(static_cast<double>(spec.p())) > std::log2(1e6)) return;
            WeightOptions both;
            both.strategy = WeightStrategy::both;
            try {
                min_hamming_weight(code, both);
                ++agreement_checked;
            } catch (const Error& e) {
                c.expect(false, std::string("strategy disagreement: ") + e.what());
            }
        });
    }
    c.expect(agreement_checked >= 500, "only " + std::to_string(agreement_checked) + " codes in the agreement sweep");

    for (auto [p, e, m, a] : {std::tuple{5u, 2u, 3u, 2u}, {3u, 2u, 5u, 1u}, {5u, 2u, 11u, 1u}}) {
        const RingSpec spec(p, e);
        const std::uint64_t order = std::uint64_t{1} << a;
        const RElem alpha_inv = inverse(primitive_root_of_unity(order, spec));
        const auto lifted = hensel_lift_factorization(factor_xn_minus_1(m, p), m, spec);
        RPoly prod = xn_minus_1(order, spec);
        for (std::uint64_t k = 1; k <= order; ++k)
            for (std::size_t i = 1; i < lifted.size(); ++i) prod = prod * substitute_scaled(lifted[i], pow(alpha_inv, k), true);
        c.expect(prod == xn_minus_1(order * m, spec), "even-length factorization identity fails");
    }

    std::mt19937_64 rng(2024);
    const RingSpec specs[] = {z4, z9, z25, RingSpec(3, 3), RingSpec(7, 2)};
    for (int trial = 0; trial < 1000; ++trial) {
        const RingSpec& spec = specs[trial % 5];
        std::uniform_int_distribution<std::int64_t> coef(0, static_cast<std::int64_t>(spec.modulus()) - 1);
        std::uniform_int_distribution<int> deg(0, 9);
        auto random_poly = [&] {
            std::vector<std::int64_t> v(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& x : v) x = coef(rng);
            // unit constant and leading terms keep deg(fg) = deg f + deg g
            if (v[0] % static_cast<std::int64_t>(spec.p()) == 0) v[0] += 1;
            if (v.back() % static_cast<std::int64_t>(spec.p()) == 0) v.back() += 1;
            return RPoly(spec, v);
        };
        const RPoly f = random_poly(), g = random_poly();
        c.expect(reciprocal(f * g) == reciprocal(f) * reciprocal(g), "reciprocal not multiplicative");
    }
}

/* 8: torsion-code dichotomy over all splittings */
void dichotomy(Check& c) {
    std::size_t splittings = 0;
    for (std::uint64_t p : {3u, 5u}) {
        const RingSpec spec(p, 2);
        for (std::uint64_t m = 3; m <= 25; m += 2) {
            if (m % p == 0 || !is_quadratic_residue(p % m, m)) continue;
            std::vector<Splitting> all;
            try {
                all = find_splittings(m, p);
            } catch (const Error& e) {
                c.expect(false, "no splitting for p=" + std::to_string(p) + " m=" + std::to_string(m));
                continue;
            }
            for (auto& s : all) {
                ++splittings;
                const std::string tag = "p=" + std::to_string(p) + " m=" + std::to_string(m);
                c.expect(s.given_by_mu_minus1 != s.invariant_under_mu_minus1, tag + ": flags not exclusive");
                const auto r = duadic_lift(m, spec, s);
                const auto& e1 = r.at("E_1").code;
                const auto& e2 = r.at("E_2").code;
                const bool self = is_self_dual(e1) && is_self_dual(e2);
                const bool pair = dual(e1) == e2 && dual(e2) == e1 &&
                                  apply_multiplier(e1, static_cast<std::int64_t>(s.a)) == e2;
                if (s.given_by_mu_minus1)
                    c.expect(self, tag + ": E-codes not self-dual");
                else
                    c.expect(pair && !self, tag + ": E-codes not a mutually dual equivalent pair");
            }
        }
    }
    c.expect(splittings >= 5, "too few splittings examined");
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<void(Check&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "length-10 split-cofactor isodual codes over Z_9", 1.0, length_ten_codes},
        {2, "length-22 paired-factor isodual codes over Z_9", 10.0, length_22_paired_codes},
        {3, "length-11 lift and self-dual torsion codes over Z_9", 1.0, length_11_lift},
        {4, "length-31 lift and self-dual torsion code over Z_4", 5.0, length_31_lift},
        {5, "length-22 duadic isodual codes over Z_25", 600.0, length_22_over_z25},
        {6, "dual equals brute-force annihilator (Z_4, Z_9, n <= 8)", 120.0, dual_oracle},
        {7, "property suite", 600.0, property_suite},
        {8, "torsion-code dichotomy over all splittings", 600.0, dichotomy},
    };
    int failed = 0;
    for (auto& cr : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.run(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > cr.limit_s) check.failures.push_back("over time limit");
        const bool ok = check.failures.empty();
        failed += ok ? 0 : 1;
        std::printf("%s  %d  %s  (%.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.name, secs, cr.limit_s);
        for (std::size_t i = 0; i < check.failures.size() && i < 10; ++i)
            std::printf("      %s\n", check.failures[i].c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
