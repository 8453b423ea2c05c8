#include "isodual/ring.hpp"

#include <limits>
#include <numeric>

namespace isodual {

const char* to_string(Errc code) noexcept {
    switch (code) {
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::mismatched_ring: return "MismatchedRing";
        case Errc::not_a_unit: return "NotAUnit";
        case Errc::non_unit_constant_term: return "NonUnitConstantTerm";
        case Errc::not_monic: return "NotMonic";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::not_coprime: return "NotCoprime";
        case Errc::not_divisible: return "NotDivisible";
        case Errc::empty_result: return "EmptyResult";
        case Errc::no_such_root: return "NoSuchRoot";
        case Errc::too_large: return "TooLarge";
        case Errc::zero_code: return "ZeroCode";
        case Errc::budget_exceeded: return "BudgetExceeded";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % small == 0) return n == small;
    }
    // Miller-Rabin with these bases is deterministic for all 64-bit n.
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::optional<std::uint64_t> inv_mod(std::uint64_t a, std::uint64_t m) noexcept {
    if (m == 1) return 0;
    std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    if (old_r != 1) return std::nullopt;
    return canonical_mod(old_s, m);
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t canonical_mod(std::int64_t a, std::uint64_t m) noexcept {
    if (a >= 0) return static_cast<std::uint64_t>(a) % m;
    const std::uint64_t neg = (static_cast<std::uint64_t>(-(a + 1)) + 1) % m;
    return neg == 0 ? 0 : m - neg;
}

RingSpec::RingSpec(std::uint64_t p, unsigned e) : p_(p), e_(e), modulus_(1) {
    if (!is_prime(p)) throw Error(Errc::invalid_argument, "ring characteristic " + std::to_string(p) + " is not prime");
    if (e == 0) throw Error(Errc::invalid_argument, "nilpotency index must be at least 1");
    for (unsigned i = 0; i < e; ++i) {
        if (modulus_ > std::numeric_limits<std::uint32_t>::max() / p)
            throw Error(Errc::invalid_argument, "modulus " + std::to_string(p) + "^" + std::to_string(e) +
                                                    " does not fit in 32 bits");
        modulus_ *= p;
    }
}

std::uint64_t RingSpec::gamma_power(unsigned k) const {
    if (k > e_) throw Error(Errc::invalid_argument, "gamma exponent exceeds nilpotency index");
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) r *= p_;
    return r;
}

std::string to_string(const RingSpec& spec) {
    return "Z_" + std::to_string(spec.modulus()) + " (p=" + std::to_string(spec.p()) + ", e=" +
           std::to_string(spec.e()) + ")";
}

namespace {

void require_same(const RElem& a, const RElem& b) {
    if (a.spec() != b.spec())
        throw Error(Errc::mismatched_ring, "operands live in " + to_string(a.spec()) + " and " + to_string(b.spec()));
}

}  // namespace

RElem add(const RElem& a, const RElem& b) {
    require_same(a, b);
    return RElem(a.spec(), static_cast<std::int64_t>((a.value() + b.value()) % a.spec().modulus()));
}

RElem sub(const RElem& a, const RElem& b) {
    require_same(a, b);
    const std::uint64_t m = a.spec().modulus();
    return RElem(a.spec(), static_cast<std::int64_t>((a.value() + m - b.value()) % m));
}

RElem mul(const RElem& a, const RElem& b) {
    require_same(a, b);
    return RElem(a.spec(), static_cast<std::int64_t>(mul_mod(a.value(), b.value(), a.spec().modulus())));
}

bool is_unit(const RElem& a) noexcept { return a.value() % a.spec().p() != 0; }

RElem inverse(const RElem& a) {
    const auto inv = inv_mod(a.value(), a.spec().modulus());
    if (!inv) throw Error(Errc::not_a_unit, std::to_string(a.value()) + " is not a unit in " + to_string(a.spec()));
    return RElem(a.spec(), static_cast<std::int64_t>(*inv));
}

unsigned gamma_valuation(const RElem& a) noexcept {
    if (a.value() == 0) return a.spec().e();
    unsigned v = 0;
    std::uint64_t x = a.value();
    while (x % a.spec().p() == 0) {
        x /= a.spec().p();
        ++v;
    }
    return v;
}

RElem pow(const RElem& a, std::uint64_t exp) {
    return RElem(a.spec(), static_cast<std::int64_t>(pow_mod(a.value(), exp, a.spec().modulus())));
}

}  // namespace isodual
