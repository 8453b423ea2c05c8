#include "isodual/cyclic_code.hpp"

#include <numeric>

namespace isodual {

namespace {

std::vector<RPoly> lift_family(const std::vector<FqPoly>& residues, std::uint64_t n, const RingSpec& spec) {
    return hensel_lift_factorization(residues, n, spec);
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > limit / base) return limit + 1;
        r *= base;
    }
    return r;
}

}  // namespace

CyclicCode::CyclicCode(const RingSpec& spec, std::uint64_t n, std::vector<RPoly> family)
    : spec_(spec), n_(n), family_(std::move(family)) {
    if (n == 0 || n % spec.p() == 0)
        throw Error(Errc::invalid_argument, "code length must be positive and prime to p");
    if (family_.size() != spec.e() + 1)
        throw Error(Errc::invalid_argument, "canonical family needs e + 1 = " + std::to_string(spec.e() + 1) +
                                                " polynomials");
    RPoly product = RPoly::one(spec);
    for (std::size_t i = 0; i < family_.size(); ++i) {
        const RPoly& f = family_[i];
        if (f.spec() != spec) throw Error(Errc::mismatched_ring, "family polynomial over the wrong ring");
        if (!f.is_monic()) throw Error(Errc::not_monic, "F_" + std::to_string(i) + " = " + to_string(f) + " is not monic");
        for (std::size_t j = 0; j < i; ++j) {
            if (!fq_gcd(f.reduce(), family_[j].reduce()).is_one())
                throw Error(Errc::not_coprime, "F_" + std::to_string(j) + " and F_" + std::to_string(i) + " share a factor");
        }
        product = product * f;
    }
    if (product != xn_minus_1(n, spec))
        throw Error(Errc::not_divisible, "family does not multiply to x^" + std::to_string(n) + " - 1");
}

RPoly CyclicCode::hat(unsigned i) const { return r_exact_div(xn_minus_1(n_, spec_), family_.at(i)); }

bool CyclicCode::is_free() const noexcept {
    for (std::size_t i = 2; i < family_.size(); ++i)
        if (!family_[i].is_one()) return false;
    return true;
}

CyclicCode from_generators(const RingSpec& spec, std::uint64_t n, const std::vector<GammaGenerator>& gens) {
    if (n == 0 || n % spec.p() == 0)
        throw Error(Errc::invalid_argument, "code length must be positive and prime to p");
    const RPoly whole = xn_minus_1(n, spec);
    std::vector<FqPoly> residues;
    for (auto& g : gens) {
        if (g.divisor.spec() != spec) throw Error(Errc::mismatched_ring, "generator over the wrong ring");
        if (!g.divisor.is_monic()) throw Error(Errc::not_monic, "generator " + to_string(g.divisor) + " is not monic");
        if (!r_mod_monic(whole, g.divisor).is_zero())
            throw Error(Errc::not_divisible, to_string(g.divisor) + " does not divide x^" + std::to_string(n) + " - 1");
        residues.push_back(g.divisor.reduce());
    }
    // Each irreducible component sits at the smallest gamma power whose
    // generator does not vanish on it; e means the code is zero there.
    const unsigned e = spec.e();
    std::vector<FqPoly> family(e + 1, FqPoly::one(spec.p()));
    for (auto& comp : cyclotomic_factorization(n, spec.p())) {
        unsigned level = e;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (gens[k].gamma_exponent < level && !fq_mod(residues[k], comp.poly).is_zero())
                level = gens[k].gamma_exponent;
        }
        const unsigned slot = level == e ? 0 : level + 1;
        family[slot] = family[slot] * comp.poly;
    }
    return CyclicCode(spec, n, lift_family(family, n, spec));
}

CyclicCode from_generator(const RPoly& g, std::uint64_t n) { return from_generators(g.spec(), n, {{0, g}}); }

CyclicCode from_two_stage(const RPoly& g_free, const RPoly& g_torsion, unsigned j, std::uint64_t n) {
    if (j < 1 || j >= g_free.spec().e())
        throw Error(Errc::invalid_argument, "torsion exponent must lie in [1, e-1], got " + std::to_string(j));
    return from_generators(g_free.spec(), n, {{0, g_free}, {j, g_torsion}});
}

CyclicCode zero_code(const RingSpec& spec, std::uint64_t n) {
    std::vector<RPoly> family(spec.e() + 1, RPoly::one(spec));
    family[0] = xn_minus_1(n, spec);
    return CyclicCode(spec, n, std::move(family));
}

CyclicCode whole_space(const RingSpec& spec, std::uint64_t n) {
    std::vector<RPoly> family(spec.e() + 1, RPoly::one(spec));
    family[1] = xn_minus_1(n, spec);
    return CyclicCode(spec, n, std::move(family));
}

CyclicCode dual(const CyclicCode& c) {
    // C-perp = <Fhat_0*, p Fhat_e*, ..., p^{e-1} Fhat_2*>
    const unsigned e = c.spec().e();
    std::vector<RPoly> family(e + 1, RPoly::one(c.spec()));
    family[1] = reciprocal(c.factor(0));
    for (unsigned i = 2; i <= e; ++i) family[i] = reciprocal(c.factor(e - i + 2));
    family[0] = reciprocal(c.factor(1));
    return CyclicCode(c.spec(), c.n(), std::move(family));
}

std::uint64_t cardinality_log(const CyclicCode& c) {
    const unsigned e = c.spec().e();
    std::uint64_t total = 0;
    for (unsigned i = 1; i <= e; ++i) total += (e - i + 1) * static_cast<std::uint64_t>(c.factor(i).degree());
    return total;
}

Matrix generator_matrix(const CyclicCode& c) {
    Matrix rows;
    const std::uint64_t m = c.spec().modulus();
    for (unsigned i = 1; i <= c.spec().e(); ++i) {
        const auto d = static_cast<std::size_t>(c.factor(i).degree());
        if (d == 0) continue;
        const RPoly block = c.hat(i).scaled(c.spec().gamma_power(i - 1) % m);
        for (std::size_t k = 0; k < d; ++k) {
            std::vector<std::uint64_t> row(c.n(), 0);
            for (std::size_t t = 0; t < block.coeffs().size(); ++t) row[t + k] = block.coeffs()[t];
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

Matrix with_constant_row(const Matrix& g, std::uint64_t value, bool on_top) {
    if (g.empty()) throw Error(Errc::invalid_argument, "cannot infer row length from an empty matrix");
    Matrix out;
    const std::vector<std::uint64_t> row(g.front().size(), value);
    if (on_top) out.push_back(row);
    out.insert(out.end(), g.begin(), g.end());
    if (!on_top) out.push_back(row);
    return out;
}

bool contains(const CyclicCode& c, const Codeword& w) {
    if (w.entries.size() != c.n())
        throw Error(Errc::invalid_argument, "word length " + std::to_string(w.entries.size()) + " does not match n = " +
                                                std::to_string(c.n()));
    if (w.spec != c.spec()) throw Error(Errc::mismatched_ring, "word over the wrong ring");
    const RPoly poly = RPoly::from_canonical(c.spec(), w.entries);
    // The image of w in R[x]/(F_i) must lie in p^{i-1} R[x]/(F_i); F_0 needs zero.
    for (unsigned i = 0; i <= c.spec().e(); ++i) {
        const RPoly r = r_mod_monic(poly, c.factor(i));
        const std::uint64_t need = i == 0 ? c.spec().modulus() : c.spec().gamma_power(i - 1);
        for (auto coef : r.coeffs())
            if (coef % need != 0) return false;
    }
    return true;
}

void for_each_codeword(const CyclicCode& c, std::uint64_t limit,
                       const std::function<void(std::span<const std::uint64_t>)>& visit) {
    const std::uint64_t total = checked_pow(c.spec().p(), cardinality_log(c), limit);
    if (total > limit)
        throw Error(Errc::too_large, "code has more than " + std::to_string(limit) + " codewords");
    // C is the direct sum of p^{i-1} <Fhat_i>, and <Fhat_i> is free on the
    // shifts x^k Fhat_i, so coefficients mod p^{e-i+1} give each word once.
    const Matrix rows = generator_matrix(c);
    std::vector<std::uint64_t> radix;
    for (unsigned i = 1; i <= c.spec().e(); ++i)
        for (long k = 0; k < c.factor(i).degree(); ++k) radix.push_back(c.spec().gamma_power(c.spec().e() - i + 1));
    const std::uint64_t m = c.spec().modulus();
    std::vector<std::uint64_t> word(c.n(), 0), digit(rows.size(), 0);
    visit(word);
    for (;;) {
        std::size_t j = 0;
        for (; j < rows.size(); ++j) {
            for (std::size_t t = 0; t < word.size(); ++t) word[t] = (word[t] + rows[j][t]) % m;
            if (++digit[j] < radix[j]) break;
            digit[j] = 0;
        }
        if (j == rows.size()) break;
        visit(word);
    }
}

std::vector<Codeword> enumerate(const CyclicCode& c, std::uint64_t limit) {
    std::vector<Codeword> out;
    for_each_codeword(c, limit, [&](std::span<const std::uint64_t> w) {
        out.push_back({c.spec(), std::vector<std::uint64_t>(w.begin(), w.end())});
    });
    return out;
}

CyclicCode apply_scaling(const CyclicCode& c, const RElem& lambda) {
    if (lambda.spec() != c.spec()) throw Error(Errc::mismatched_ring, "scalar from a different ring");
    if (!is_unit(lambda)) throw Error(Errc::not_a_unit, "scaling needs a unit");
    if (pow(lambda, c.n()).value() != 1)
        throw Error(Errc::invalid_argument, std::to_string(lambda.value()) + "^" + std::to_string(c.n()) + " != 1");
    std::vector<RPoly> family;
    for (auto& f : c.family()) family.push_back(substitute_scaled(f, lambda, true));
    return CyclicCode(c.spec(), c.n(), std::move(family));
}

CyclicCode apply_multiplier(const CyclicCode& c, std::int64_t a) {
    const std::uint64_t n = c.n();
    if (std::gcd(canonical_mod(a, n), n) != 1 && n > 1)
        throw Error(Errc::invalid_argument, "multiplier " + std::to_string(a) + " is not coprime to " + std::to_string(n));
    // New F_i has the roots beta^j with beta^{aj} a root of F_i.
    const FqPoly whole = fq_xn_minus_1(n, c.spec().p());
    std::vector<FqPoly> residues;
    for (auto& f : c.family()) residues.push_back(fq_gcd(multiplier_mod(f, a, n).reduce(), whole));
    return CyclicCode(c.spec(), n, lift_family(residues, n, c.spec()));
}

bool is_self_dual(const CyclicCode& c) { return dual(c) == c; }

CyclicCode apply_certificate(const CyclicCode& c, const EquivalenceCertificate& cert) {
    return apply_scaling(apply_multiplier(c, cert.multiplier), RElem(c.spec(), static_cast<std::int64_t>(cert.lambda)));
}

std::optional<EquivalenceCertificate> find_equivalence(const CyclicCode& from, const CyclicCode& to) {
    if (from.spec() != to.spec() || from.n() != to.n()) return std::nullopt;
    if (cardinality_log(from) != cardinality_log(to)) return std::nullopt;
    if (from == to) return EquivalenceCertificate{1, 1};
    const auto roots = nth_roots_of_unity(from.n(), from.spec());
    for (std::int64_t a : {-1, 1}) {
        const CyclicCode permuted = apply_multiplier(from, a);
        for (auto& lambda : roots) {
            if (apply_scaling(permuted, lambda) == to) return EquivalenceCertificate{a, lambda.value()};
        }
    }
    return std::nullopt;
}

std::optional<EquivalenceCertificate> certify_isodual(const CyclicCode& c) { return find_equivalence(c, dual(c)); }

}  // namespace isodual
