#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isodual/error.hpp"

namespace isodual {

/* integer helpers */

bool is_prime(std::uint64_t n) noexcept;
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;
std::optional<std::uint64_t> inv_mod(std::uint64_t a, std::uint64_t m) noexcept;
// Prime factors of n in ascending order, without multiplicity.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
// Canonical representative of a (possibly negative) integer modulo m.
std::uint64_t canonical_mod(std::int64_t a, std::uint64_t m) noexcept;

/// The finite chain ring Z_{p^e}. Its maximal ideal is generated by p and
/// its residue field is F_p.
class RingSpec {
   public:
    // Rejects composite p, e == 0 and moduli that do not fit in 32 bits.
    RingSpec(std::uint64_t p, unsigned e);

    std::uint64_t p() const noexcept { return p_; }
    unsigned e() const noexcept { return e_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    // p^k for 0 <= k <= e.
    std::uint64_t gamma_power(unsigned k) const;

    std::uint64_t reduce(std::int64_t v) const noexcept { return canonical_mod(v, modulus_); }

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

   private:
    std::uint64_t p_;
    unsigned e_;
    std::uint64_t modulus_;
};

std::string to_string(const RingSpec& spec);

class RElem {
   public:
    RElem(const RingSpec& spec, std::int64_t value) : spec_(spec), value_(spec.reduce(value)) {}

    const RingSpec& spec() const noexcept { return spec_; }
    std::uint64_t value() const noexcept { return value_; }

    friend bool operator==(const RElem&, const RElem&) = default;

   private:
    RingSpec spec_;
    std::uint64_t value_;
};

RElem add(const RElem& a, const RElem& b);
RElem sub(const RElem& a, const RElem& b);
RElem mul(const RElem& a, const RElem& b);
inline RElem operator+(const RElem& a, const RElem& b) { return add(a, b); }
inline RElem operator-(const RElem& a, const RElem& b) { return sub(a, b); }
inline RElem operator*(const RElem& a, const RElem& b) { return mul(a, b); }

bool is_unit(const RElem& a) noexcept;
// Throws Errc::not_a_unit when p divides the value.
RElem inverse(const RElem& a);
// Largest j <= e with p^j | value; e for zero.
unsigned gamma_valuation(const RElem& a) noexcept;
RElem pow(const RElem& a, std::uint64_t exp);

}  // namespace isodual
