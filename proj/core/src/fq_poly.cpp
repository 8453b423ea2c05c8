#include "isodual/fq_poly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace isodual {

namespace {

void require_same_field(const FqPoly& a, const FqPoly& b) {
    if (a.p() != b.p())
        throw Error(Errc::mismatched_ring,
                    "polynomials over F_" + std::to_string(a.p()) + " and F_" + std::to_string(b.p()));
}

std::uint64_t field_inverse(std::uint64_t a, std::uint64_t p) {
    const auto inv = inv_mod(a, p);
    if (!inv) throw Error(Errc::division_by_zero, "zero has no inverse in F_" + std::to_string(p));
    return *inv;
}

}  // namespace

FqPoly::FqPoly(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw Error(Errc::invalid_argument, "field size " + std::to_string(p) + " is not prime");
}

FqPoly::FqPoly(std::uint64_t p, const std::vector<std::int64_t>& coeffs) : FqPoly(p) {
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) coeffs_.push_back(canonical_mod(c, p));
    trim();
}

FqPoly FqPoly::monomial(std::uint64_t p, std::size_t degree, std::uint64_t c) {
    FqPoly f(p);
    f.coeffs_.assign(degree + 1, 0);
    f.coeffs_[degree] = c % p;
    f.trim();
    return f;
}

FqPoly FqPoly::from_canonical(std::uint64_t p, std::vector<std::uint64_t> coeffs) {
    FqPoly f(p);
    for (auto& c : coeffs) c %= p;
    f.coeffs_ = std::move(coeffs);
    f.trim();
    return f;
}

void FqPoly::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FqPoly FqPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_inverse(leading(), p_));
}

FqPoly FqPoly::scaled(std::uint64_t c) const {
    FqPoly r(*this);
    for (auto& x : r.coeffs_) x = mul_mod(x, c % p_, p_);
    r.trim();
    return r;
}

std::uint64_t FqPoly::eval(std::uint64_t x) const noexcept {
    std::uint64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (mul_mod(acc, x, p_) + *it) % p_;
    return acc;
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + b.coeff(i)) % a.p();
    return FqPoly::from_canonical(a.p(), std::move(c));
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + a.p() - b.coeff(i)) % a.p();
    return FqPoly::from_canonical(a.p(), std::move(c));
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return FqPoly::zero(a.p());
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<std::uint64_t> c(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) c[i + j] = (c[i + j] + mul_mod(x[i], y[j], a.p())) % a.p();
    }
    return FqPoly::from_canonical(a.p(), std::move(c));
}

std::pair<FqPoly, FqPoly> fq_divmod(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
    const std::uint64_t p = a.p();
    if (a.degree() < b.degree()) return {FqPoly::zero(p), a};
    std::vector<std::uint64_t> rem = a.coeffs();
    std::vector<std::uint64_t> quo(a.coeffs().size() - b.coeffs().size() + 1, 0);
    const std::uint64_t lead_inv = field_inverse(b.leading(), p);
    const std::size_t db = b.coeffs().size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
        const std::uint64_t c = mul_mod(rem[k + db], lead_inv, p);
        quo[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] = (rem[k + j] + p - mul_mod(c, b.coeffs()[j], p)) % p;
    }
    rem.resize(db);
    return {FqPoly::from_canonical(p, std::move(quo)), FqPoly::from_canonical(p, std::move(rem))};
}

FqPoly fq_mod(const FqPoly& a, const FqPoly& b) { return fq_divmod(a, b).second; }

FqPoly fq_gcd(const FqPoly& a, const FqPoly& b) {
    FqPoly x = a, y = b;
    while (!y.is_zero()) {
        FqPoly r = fq_mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

FqBezout fq_ext_gcd(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    const std::uint64_t p = a.p();
    FqPoly old_r = a, r = b;
    FqPoly old_s = FqPoly::one(p), s = FqPoly::zero(p);
    FqPoly old_t = FqPoly::zero(p), t = FqPoly::one(p);
    while (!r.is_zero()) {
        auto [q, rem] = fq_divmod(old_r, r);
        old_r = std::exchange(r, std::move(rem));
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r.is_zero()) return {old_r, old_s, old_t};
    const std::uint64_t inv = field_inverse(old_r.leading(), p);
    return {old_r.scaled(inv), old_s.scaled(inv), old_t.scaled(inv)};
}

FqPoly fq_powmod(const FqPoly& base, std::uint64_t exp, const FqPoly& modulus) {
    FqPoly result = fq_mod(FqPoly::one(base.p()), modulus);
    FqPoly b = fq_mod(base, modulus);
    while (exp > 0) {
        if (exp & 1) result = fq_mod(result * b, modulus);
        exp >>= 1;
        if (exp > 0) b = fq_mod(b * b, modulus);
    }
    return result;
}

bool fq_is_irreducible(const FqPoly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const FqPoly g = f.monic();
    const std::uint64_t p = f.p();
    const auto d = static_cast<std::uint64_t>(g.degree());
    const FqPoly x = FqPoly::monomial(p, 1);
    // frob[k] = x^{p^k} mod g
    std::vector<FqPoly> frob{fq_mod(x, g)};
    for (std::uint64_t k = 1; k <= d; ++k) frob.push_back(fq_powmod(frob.back(), p, g));
    if (frob[d] != fq_mod(x, g)) return false;
    for (auto r : prime_divisors(d)) {
        if (!fq_gcd(frob[d / r] - x, g).is_one()) return false;
    }
    return true;
}

FqPoly fq_xn_minus_1(std::uint64_t n, std::uint64_t p) {
    return FqPoly::monomial(p, n) - FqPoly::one(p);
}

FqPoly fq_reciprocal(const FqPoly& f) {
    if (f.is_zero() || f.coeff(0) == 0)
        throw Error(Errc::non_unit_constant_term, "reciprocal needs a nonzero constant term");
    std::vector<std::uint64_t> rev(f.coeffs().rbegin(), f.coeffs().rend());
    return FqPoly::from_canonical(f.p(), std::move(rev)).monic();
}

std::string to_string(const FqPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (long i = f.degree(); i >= 0; --i) {
        const std::uint64_t c = f.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (c != 1 || i == 0) out += std::to_string(c);
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

/* cyclotomic structure */

std::uint64_t ord_mod(std::uint64_t n, std::uint64_t q) {
    if (n == 0 || std::gcd(n, q) != 1)
        throw Error(Errc::invalid_argument,
                    "ord_mod needs gcd(n, q) = 1, got n=" + std::to_string(n) + ", q=" + std::to_string(q));
    if (n == 1) return 1;
    std::uint64_t x = q % n;
    for (std::uint64_t l = 1;; ++l) {
        if (x == 1) return l;
        x = mul_mod(x, q, n);
    }
}

std::size_t CosetPartition::index_of(std::uint64_t r) const {
    r %= m;
    for (std::size_t i = 0; i < cosets.size(); ++i) {
        if (std::binary_search(cosets[i].begin(), cosets[i].end(), r)) return i;
    }
    throw Error(Errc::invalid_argument, "residue not covered by coset partition");
}

CosetPartition cyclotomic_cosets(std::uint64_t m, std::uint64_t q) {
    if (m == 0 || std::gcd(m, q) != 1)
        throw Error(Errc::invalid_argument,
                    "cyclotomic cosets need gcd(m, q) = 1, got m=" + std::to_string(m) + ", q=" + std::to_string(q));
    CosetPartition part{m, q, {}};
    std::vector<bool> seen(m, false);
    for (std::uint64_t i = 0; i < m; ++i) {
        if (seen[i]) continue;
        std::vector<std::uint64_t> coset;
        std::uint64_t j = i;
        do {
            seen[j] = true;
            coset.push_back(j);
            j = mul_mod(j, q, m);
        } while (j != i);
        std::sort(coset.begin(), coset.end());
        part.cosets.push_back(std::move(coset));
    }
    return part;
}

bool is_quadratic_residue(std::uint64_t q, std::uint64_t n) {
    if (n == 0 || n % 2 == 0)
        throw Error(Errc::invalid_argument, "quadratic residuosity is only defined here for odd n");
    if (std::gcd(q, n) != 1)
        throw Error(Errc::invalid_argument, "quadratic residuosity needs gcd(q, n) = 1");
    // q is a square mod n iff it is a square mod every odd prime dividing n
    // (units lift uniquely through odd prime powers); Euler's criterion per prime.
    for (auto r : prime_divisors(n)) {
        if (pow_mod(q % r, (r - 1) / 2, r) != 1) return false;
    }
    return true;
}

namespace {

// GF(p^s) realised as F_p[y]/(modulus); elements are FqPoly of degree < s.
struct ExtensionField {
    std::uint64_t p;
    std::uint64_t s;
    FqPoly modulus;

    FqPoly mul(const FqPoly& a, const FqPoly& b) const { return fq_mod(a * b, modulus); }
    FqPoly pow(const FqPoly& a, std::uint64_t e) const { return fq_powmod(a, e, modulus); }

    FqPoly element(std::uint64_t index) const {
        std::vector<std::uint64_t> c(s, 0);
        for (std::uint64_t i = 0; i < s; ++i) {
            c[i] = index % p;
            index /= p;
        }
        return FqPoly::from_canonical(p, std::move(c));
    }
};

std::uint64_t checked_power(std::uint64_t p, std::uint64_t s) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < s; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / p)
            throw Error(Errc::too_large, "splitting field F_" + std::to_string(p) + "^" + std::to_string(s) +
                                             " is too large");
        r *= p;
    }
    return r;
}

// First monic irreducible of degree s in lexicographic order of the
// ascending coefficient list (constant term most significant).
FqPoly first_irreducible(std::uint64_t p, std::uint64_t s) {
    const std::uint64_t count = checked_power(p, s);
    // candidates below p^(s-1) have zero constant term
    const std::uint64_t start = s > 1 ? count / p : 0;
    for (std::uint64_t k = start; k < count; ++k) {
        std::vector<std::uint64_t> c(s + 1, 0);
        std::uint64_t idx = k;
        for (std::uint64_t i = 0; i < s; ++i) {
            c[s - 1 - i] = idx % p;
            idx /= p;
        }
        c[s] = 1;
        FqPoly f = FqPoly::from_canonical(p, std::move(c));
        if (fq_is_irreducible(f)) return f;
    }
    throw Error(Errc::invalid_argument, "no irreducible polynomial found");  // unreachable for prime p
}

// Primitive n-th root of unity in GF(p^s), s = ord_n(p): the first element z
// in scan order for which z^((p^s-1)/n) has exact order n.
FqPoly primitive_nth_root(const ExtensionField& field, std::uint64_t n) {
    const FqPoly one = FqPoly::one(field.p);
    if (n == 1) return one;
    const std::uint64_t group_order = checked_power(field.p, field.s) - 1;
    const std::uint64_t cofactor = group_order / n;
    const auto primes = prime_divisors(n);
    for (std::uint64_t idx = 1; idx <= group_order; ++idx) {
        const FqPoly beta = field.pow(field.element(idx), cofactor);
        bool exact = true;
        for (auto r : primes) {
            if (field.pow(beta, n / r) == one) {
                exact = false;
                break;
            }
        }
        if (exact) return beta;
    }
    throw Error(Errc::invalid_argument, "no primitive root of unity found");  // unreachable
}

}  // namespace

std::vector<CyclotomicFactor> cyclotomic_factorization(std::uint64_t n, std::uint64_t p) {
    if (!is_prime(p)) throw Error(Errc::invalid_argument, std::to_string(p) + " is not prime");
    if (n == 0 || n % p == 0)
        throw Error(Errc::invalid_argument,
                    "x^n - 1 has repeated roots over F_" + std::to_string(p) + " for n=" + std::to_string(n));
    const std::uint64_t s = ord_mod(n, p);
    const ExtensionField field{p, s, first_irreducible(p, s)};
    const FqPoly beta = primitive_nth_root(field, n);

    std::vector<FqPoly> beta_powers{FqPoly::one(p)};
    for (std::uint64_t i = 1; i < n; ++i) beta_powers.push_back(field.mul(beta_powers.back(), beta));

    std::vector<CyclotomicFactor> out;
    for (auto& coset : cyclotomic_cosets(n, p).cosets) {
        // prod_{i in coset} (X - beta^i) with coefficients in GF(p^s)
        std::vector<FqPoly> poly{FqPoly::one(p)};
        for (auto i : coset) {
            const FqPoly neg_root = FqPoly::zero(p) - beta_powers[i];
            std::vector<FqPoly> next(poly.size() + 1, FqPoly::zero(p));
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k + 1] = next[k + 1] + poly[k];
                next[k] = next[k] + field.mul(poly[k], neg_root);
            }
            poly = std::move(next);
        }
        std::vector<std::uint64_t> coeffs;
        for (auto& c : poly) {
            if (c.degree() > 0) throw Error(Errc::invalid_argument, "minimal polynomial left the prime field");
            coeffs.push_back(c.coeff(0));
        }
        out.push_back({coset, FqPoly::from_canonical(p, std::move(coeffs))});
    }
    return out;
}

std::vector<FqPoly> factor_xn_minus_1(std::uint64_t n, std::uint64_t p) {
    std::vector<FqPoly> out;
    for (auto& f : cyclotomic_factorization(n, p)) out.push_back(std::move(f.poly));
    return out;
}

/* duadic splittings */

std::vector<Splitting> find_splittings(std::uint64_t m, std::uint64_t q) {
    if (m == 0 || m % 2 == 0) throw Error(Errc::invalid_argument, "splittings need an odd modulus");
    if (std::gcd(m, q) != 1) throw Error(Errc::invalid_argument, "splittings need gcd(m, q) = 1");
    if (m == 1) throw Error(Errc::empty_result, "Z_1 has no nonzero residues to split");
    if (!is_quadratic_residue(q % m, m))
        throw Error(Errc::empty_result,
                    std::to_string(q) + " is not a square mod " + std::to_string(m) + "; no duadic splitting exists");

    const CosetPartition part = cyclotomic_cosets(m, q);
    const std::size_t count = part.cosets.size();  // coset 0 is {0}
    const std::size_t one_idx = part.index_of(1);
    std::map<std::vector<std::uint64_t>, Splitting> found;

    for (std::uint64_t a = 2; a < m; ++a) {
        if (std::gcd(a, m) != 1) continue;
        std::vector<std::size_t> image(count);
        bool has_fixed = false;
        for (std::size_t c = 1; c < count; ++c) {
            image[c] = part.index_of(mul_mod(part.cosets[c].front(), a, m));
            if (image[c] == c) has_fixed = true;
        }
        if (has_fixed) continue;

        std::vector<std::vector<std::size_t>> cycles;
        std::vector<bool> seen(count, false);
        bool even = true;
        for (std::size_t c = 1; c < count && even; ++c) {
            if (seen[c]) continue;
            std::vector<std::size_t> cycle;
            for (std::size_t x = c; !seen[x]; x = image[x]) {
                seen[x] = true;
                cycle.push_back(x);
            }
            even = cycle.size() % 2 == 0;
            cycles.push_back(std::move(cycle));
        }
        if (!even) continue;
        if (cycles.size() > 24) throw Error(Errc::too_large, "too many coset cycles to enumerate splittings");

        // Alternate membership along each cycle; one bit per cycle picks the phase.
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cycles.size()); ++mask) {
            std::vector<bool> in_s1(count, false);
            for (std::size_t k = 0; k < cycles.size(); ++k) {
                for (std::size_t pos = 0; pos < cycles[k].size(); ++pos)
                    in_s1[cycles[k][pos]] = (pos % 2 == 0) != (((mask >> k) & 1) != 0);
            }
            if (!in_s1[one_idx]) continue;
            std::vector<std::uint64_t> s1, s2;
            for (std::size_t c = 1; c < count; ++c) {
                auto& dst = in_s1[c] ? s1 : s2;
                dst.insert(dst.end(), part.cosets[c].begin(), part.cosets[c].end());
            }
            std::sort(s1.begin(), s1.end());
            std::sort(s2.begin(), s2.end());
            if (found.count(s1)) continue;

            std::vector<std::uint64_t> neg(s1.size());
            std::transform(s1.begin(), s1.end(), neg.begin(), [m](std::uint64_t r) { return (m - r) % m; });
            std::sort(neg.begin(), neg.end());
            Splitting sp{m, q, s1, s2, a, neg == s2, neg == s1};
            found.emplace(s1, std::move(sp));
        }
    }
    if (found.empty())
        throw Error(Errc::empty_result, "no multiplier pairs the nonzero " + std::to_string(q) + "-cyclotomic cosets mod " +
                                            std::to_string(m));
    std::vector<Splitting> out;
    for (auto& [key, sp] : found) out.push_back(std::move(sp));
    return out;
}

std::pair<FqPoly, FqPoly> duadic_generators(const Splitting& splitting, std::uint64_t p) {
    if (splitting.q % splitting.m != p % splitting.m)
        throw Error(Errc::invalid_argument, "splitting was computed for a different field size");
    FqPoly f1 = FqPoly::one(p), f2 = FqPoly::one(p);
    for (auto& factor : cyclotomic_factorization(splitting.m, p)) {
        const std::uint64_t rep = factor.coset.front();
        if (rep == 0) continue;
        if (std::binary_search(splitting.s1.begin(), splitting.s1.end(), rep))
            f1 = f1 * factor.poly;
        else
            f2 = f2 * factor.poly;
    }
    return {f1, f2};
}

}  // namespace isodual
