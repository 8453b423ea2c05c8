#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isodual/fq_poly.hpp"
#include "isodual/ring.hpp"

namespace isodual {

/// Dense polynomial over Z_{p^e}, ascending degree, canonical coefficients.
class RPoly {
   public:
    explicit RPoly(const RingSpec& spec) : spec_(spec) {}
    RPoly(const RingSpec& spec, const std::vector<std::int64_t>& coeffs);

    static RPoly zero(const RingSpec& spec) { return RPoly(spec); }
    static RPoly one(const RingSpec& spec) { return RPoly(spec, {1}); }
    static RPoly monomial(const RingSpec& spec, std::size_t degree, std::uint64_t c = 1);
    static RPoly from_canonical(const RingSpec& spec, std::vector<std::uint64_t> coeffs);
    // Coefficient-wise embedding of 0..p-1 into Z_{p^e}.
    static RPoly lift(const FqPoly& f, const RingSpec& spec);

    const RingSpec& spec() const noexcept { return spec_; }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    std::uint64_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::uint64_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

    RPoly scaled(std::uint64_t c) const;
    // Coefficient-wise reduction modulo p.
    FqPoly reduce() const;

    friend bool operator==(const RPoly&, const RPoly&) = default;

   private:
    void trim() noexcept;

    RingSpec spec_;
    std::vector<std::uint64_t> coeffs_;
};

RPoly operator+(const RPoly& a, const RPoly& b);
RPoly operator-(const RPoly& a, const RPoly& b);
RPoly operator*(const RPoly& a, const RPoly& b);

// Euclidean division by a monic divisor.
std::pair<RPoly, RPoly> r_divmod_monic(const RPoly& a, const RPoly& b);
RPoly r_mod_monic(const RPoly& a, const RPoly& b);
// Exact quotient a / b for monic b; throws Errc::not_divisible on a nonzero remainder.
RPoly r_exact_div(const RPoly& a, const RPoly& b);

RPoly xn_minus_1(std::uint64_t n, const RingSpec& spec);

// f* = f(0)^{-1} x^deg(f) f(1/x). Throws Errc::non_unit_constant_term.
RPoly reciprocal(const RPoly& f);

// Coefficient i multiplied by lambda^i; optionally rescaled to be monic.
RPoly substitute_scaled(const RPoly& f, const RElem& lambda, bool normalize_monic);

// f(x^a) mod (x^n - 1); a may be negative.
RPoly multiplier_mod(const RPoly& f, std::int64_t a, std::uint64_t n);

// Lifts a monic pairwise coprime factorization of x^n - 1 over F_p to the
// unique monic factorization over Z_{p^e}, one p-adic digit per step.
// Constant factors equal to 1 are allowed and lift to 1.
std::vector<RPoly> hensel_lift_factorization(const std::vector<FqPoly>& factors, std::uint64_t n,
                                             const RingSpec& spec);

// The unique monic divisor of x^n - 1 over Z_{p^e} reducing to d.
RPoly lift_divisor(const FqPoly& d, std::uint64_t n, const RingSpec& spec);

// Smallest alpha in Z_{p^e} with multiplicative order exactly `order`, where
// order is a power of two. Throws Errc::no_such_root unless p = 1 mod order.
RElem primitive_root_of_unity(std::uint64_t order, const RingSpec& spec);

// All units lambda with lambda^n = 1, ascending.
std::vector<RElem> nth_roots_of_unity(std::uint64_t n, const RingSpec& spec);

// "x^5 + 7x^4 + 8x^3 + x^2 + 2x + 8", canonical coefficients, descending.
std::string to_string(const RPoly& f);
inline std::ostream& operator<<(std::ostream& os, const RPoly& f) { return os << to_string(f); }
// Accepts the emitted form plus signs, '*', spaces and negative coefficients.
RPoly parse_rpoly(std::string_view text, const RingSpec& spec);

}  // namespace isodual
