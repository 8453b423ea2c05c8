#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isodual/r_poly.hpp"

namespace isodual {

/// A cyclic code of length n over Z_{p^e} (gcd(n, p) = 1) in canonical form:
/// the unique family F_0..F_e of monic pairwise coprime divisors with
/// F_0 * ... * F_e = x^n - 1 and C = <Fhat_1, p Fhat_2, ..., p^{e-1} Fhat_e>,
/// Fhat_i = (x^n - 1) / F_i. F_0 collects the components where C vanishes.
///
/// Two codes are equal iff their families are equal.
class CyclicCode {
   public:
    CyclicCode(const RingSpec& spec, std::uint64_t n, std::vector<RPoly> family);

    const RingSpec& spec() const noexcept { return spec_; }
    std::uint64_t n() const noexcept { return n_; }
    const std::vector<RPoly>& family() const noexcept { return family_; }
    const RPoly& factor(unsigned i) const { return family_.at(i); }
    RPoly hat(unsigned i) const;

    bool is_zero() const noexcept { return family_[0].degree() == static_cast<long>(n_); }
    // A free code has F_2 = ... = F_e = 1.
    bool is_free() const noexcept;

    friend bool operator==(const CyclicCode&, const CyclicCode&) = default;

   private:
    RingSpec spec_;
    std::uint64_t n_;
    std::vector<RPoly> family_;
};

struct Codeword {
    RingSpec spec;
    std::vector<std::uint64_t> entries;
};

/* construction */

// p^gamma_exponent * divisor, where divisor is a monic divisor of x^n - 1.
struct GammaGenerator {
    unsigned gamma_exponent;
    RPoly divisor;
};

// The ideal generated by the given scaled divisors, in canonical form.
CyclicCode from_generators(const RingSpec& spec, std::uint64_t n, const std::vector<GammaGenerator>& gens);
// Free code <g>; g monic and dividing x^n - 1.
CyclicCode from_generator(const RPoly& g, std::uint64_t n);
// <g_free, p^j g_torsion> with 1 <= j <= e - 1.
CyclicCode from_two_stage(const RPoly& g_free, const RPoly& g_torsion, unsigned j, std::uint64_t n);
CyclicCode zero_code(const RingSpec& spec, std::uint64_t n);
CyclicCode whole_space(const RingSpec& spec, std::uint64_t n);

/* structure */

CyclicCode dual(const CyclicCode& c);
// log_p |C|
std::uint64_t cardinality_log(const CyclicCode& c);

using Matrix = std::vector<std::vector<std::uint64_t>>;  // row-major

// Cyclic shifts of p^{i-1} Fhat_i, deg F_i rows per block i = 1..e.
Matrix generator_matrix(const CyclicCode& c);
// G with a constant row (value, value, ..., value) placed on top or at the bottom.
Matrix with_constant_row(const Matrix& g, std::uint64_t value, bool on_top);

bool contains(const CyclicCode& c, const Codeword& w);

// Calls visit once per codeword. Throws Errc::too_large when |C| > limit.
void for_each_codeword(const CyclicCode& c, std::uint64_t limit,
                       const std::function<void(std::span<const std::uint64_t>)>& visit);
std::vector<Codeword> enumerate(const CyclicCode& c, std::uint64_t limit);

/* equivalence maps */

// c(x) -> c(lambda x) for a unit lambda with lambda^n = 1.
CyclicCode apply_scaling(const CyclicCode& c, const RElem& lambda);
// c(x) -> c(x^a) mod x^n - 1 for gcd(a, n) = 1.
CyclicCode apply_multiplier(const CyclicCode& c, std::int64_t a);

bool is_self_dual(const CyclicCode& c);

struct EquivalenceCertificate {
    std::int64_t multiplier;  // a unit mod n; find_equivalence only uses 1 or -1
    std::uint64_t lambda;     // scaling applied after the multiplier

    friend bool operator==(const EquivalenceCertificate&, const EquivalenceCertificate&) = default;
};

// Searches maps c -> scaling_lambda(multiplier_a(c)) with a in {1, -1} and
// lambda an n-th root of unity for one that sends `from` onto `to`.
// Order tried: identity, then a = -1, then a = 1, lambda ascending.
std::optional<EquivalenceCertificate> find_equivalence(const CyclicCode& from, const CyclicCode& to);
// find_equivalence(c, dual(c)). An empty result does not prove c is not isodual.
std::optional<EquivalenceCertificate> certify_isodual(const CyclicCode& c);
CyclicCode apply_certificate(const CyclicCode& c, const EquivalenceCertificate& cert);

/* minimum Hamming weight */

enum class WeightStrategy { automatic, direct, residue, both };

const char* to_string(WeightStrategy s) noexcept;
WeightStrategy parse_weight_strategy(const std::string& s);

struct WeightOptions {
    WeightStrategy strategy = WeightStrategy::automatic;
    // Largest |C| enumerated directly over Z_{p^e}.
    std::uint64_t budget = 2'000'000;
    // Largest number of residue-code words (up to scalars) enumerated over F_p.
    std::uint64_t residue_budget = 100'000'000;
    // 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct WeightReport {
    std::uint64_t weight;
    WeightStrategy strategy;  // direct, residue or both
    std::uint64_t enumerated;
};

// Direct strategy enumerates C. Residue strategy enumerates the torsion code
// {v mod p : p^{e-1} v in C} = <F_0 mod p> over F_p, whose minimum weight
// equals that of C. Throws Errc::zero_code, BudgetExceeded.
WeightReport min_hamming_weight(const CyclicCode& c, const WeightOptions& options = {});

std::uint64_t hamming_weight(std::span<const std::uint64_t> word) noexcept;

}  // namespace isodual
