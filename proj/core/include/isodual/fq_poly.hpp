#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "isodual/ring.hpp"

namespace isodual {

/// Dense polynomial over the prime field F_p, ascending degree. The zero
/// polynomial has an empty coefficient list.
class FqPoly {
   public:
    explicit FqPoly(std::uint64_t p);
    FqPoly(std::uint64_t p, const std::vector<std::int64_t>& coeffs);

    static FqPoly zero(std::uint64_t p) { return FqPoly(p); }
    static FqPoly one(std::uint64_t p) { return FqPoly(p, {1}); }
    static FqPoly monomial(std::uint64_t p, std::size_t degree, std::uint64_t c = 1);
    static FqPoly from_canonical(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    std::uint64_t p() const noexcept { return p_; }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    std::uint64_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::uint64_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

    FqPoly monic() const;
    FqPoly scaled(std::uint64_t c) const;
    std::uint64_t eval(std::uint64_t x) const noexcept;

    friend bool operator==(const FqPoly&, const FqPoly&) = default;

   private:
    void trim() noexcept;

    std::uint64_t p_;
    std::vector<std::uint64_t> coeffs_;
};

FqPoly operator+(const FqPoly& a, const FqPoly& b);
FqPoly operator-(const FqPoly& a, const FqPoly& b);
FqPoly operator*(const FqPoly& a, const FqPoly& b);

std::pair<FqPoly, FqPoly> fq_divmod(const FqPoly& a, const FqPoly& b);
FqPoly fq_mod(const FqPoly& a, const FqPoly& b);
// Monic gcd; gcd(0, 0) = 0.
FqPoly fq_gcd(const FqPoly& a, const FqPoly& b);

struct FqBezout {
    FqPoly gcd;  // monic
    FqPoly s;
    FqPoly t;  // s*a + t*b = gcd
};
FqBezout fq_ext_gcd(const FqPoly& a, const FqPoly& b);

// base^exp mod modulus.
FqPoly fq_powmod(const FqPoly& base, std::uint64_t exp, const FqPoly& modulus);
bool fq_is_irreducible(const FqPoly& f);
FqPoly fq_xn_minus_1(std::uint64_t n, std::uint64_t p);
// Monic reciprocal over F_p; requires a nonzero constant term.
FqPoly fq_reciprocal(const FqPoly& f);

std::string to_string(const FqPoly& f);
inline std::ostream& operator<<(std::ostream& os, const FqPoly& f) { return os << to_string(f); }

/* cyclotomic structure */

// Smallest l >= 1 with q^l = 1 mod n.
std::uint64_t ord_mod(std::uint64_t n, std::uint64_t q);

/// Partition of Z_m into q-cyclotomic cosets. Cosets are sorted, listed by
/// their minimal element, and the coset of 0 comes first.
struct CosetPartition {
    std::uint64_t m;
    std::uint64_t q;
    std::vector<std::vector<std::uint64_t>> cosets;

    // Index into cosets of the coset containing residue r.
    std::size_t index_of(std::uint64_t r) const;
};

CosetPartition cyclotomic_cosets(std::uint64_t m, std::uint64_t q);

bool is_quadratic_residue(std::uint64_t q, std::uint64_t n);

struct CyclotomicFactor {
    std::vector<std::uint64_t> coset;  // exponents i with beta^i a root
    FqPoly poly;
};

// One monic irreducible factor of x^n - 1 over F_p per p-cyclotomic coset,
// ordered by minimal coset representative.
std::vector<CyclotomicFactor> cyclotomic_factorization(std::uint64_t n, std::uint64_t p);
std::vector<FqPoly> factor_xn_minus_1(std::uint64_t n, std::uint64_t p);

/* duadic splittings */

struct Splitting {
    std::uint64_t m;
    std::uint64_t q;
    std::vector<std::uint64_t> s1;  // sorted
    std::vector<std::uint64_t> s2;  // sorted
    std::uint64_t a;                // witness multiplier: a*s1 = s2 and a*s2 = s1 (mod m)
    bool given_by_mu_minus1;        // -s1 = s2
    bool invariant_under_mu_minus1; // -s1 = s1

    friend bool operator==(const Splitting&, const Splitting&) = default;
};

// All splittings of Z_m \ {0} into unions of q-cyclotomic cosets that are
// swapped by some multiplier. s1 always contains 1; sorted by s1.
// Throws Errc::empty_result when q is not a square mod m or no pairing exists.
std::vector<Splitting> find_splittings(std::uint64_t m, std::uint64_t q);

// Odd-like duadic generators f1 = prod_{i in s1}(x - beta^i), f2 likewise,
// for the same primitive root beta used by cyclotomic_factorization(m, p).
std::pair<FqPoly, FqPoly> duadic_generators(const Splitting& splitting, std::uint64_t p);

}  // namespace isodual
