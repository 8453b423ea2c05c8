#include "isodual/r_poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace isodual {

namespace {

void require_same_ring(const RPoly& a, const RPoly& b) {
    if (a.spec() != b.spec())
        throw Error(Errc::mismatched_ring, "polynomials over " + to_string(a.spec()) + " and " + to_string(b.spec()));
}

}  // namespace

RPoly::RPoly(const RingSpec& spec, const std::vector<std::int64_t>& coeffs) : spec_(spec) {
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) coeffs_.push_back(spec.reduce(c));
    trim();
}

RPoly RPoly::monomial(const RingSpec& spec, std::size_t degree, std::uint64_t c) {
    std::vector<std::uint64_t> v(degree + 1, 0);
    v[degree] = c;
    return from_canonical(spec, std::move(v));
}

RPoly RPoly::from_canonical(const RingSpec& spec, std::vector<std::uint64_t> coeffs) {
    RPoly f(spec);
    for (auto& c : coeffs) c %= spec.modulus();
    f.coeffs_ = std::move(coeffs);
    f.trim();
    return f;
}

RPoly RPoly::lift(const FqPoly& f, const RingSpec& spec) {
    if (f.p() != spec.p()) throw Error(Errc::mismatched_ring, "residue field does not match ring");
    return from_canonical(spec, f.coeffs());
}

void RPoly::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RPoly RPoly::scaled(std::uint64_t c) const {
    RPoly r(*this);
    for (auto& x : r.coeffs_) x = mul_mod(x, c, spec_.modulus());
    r.trim();
    return r;
}

FqPoly RPoly::reduce() const { return FqPoly::from_canonical(spec_.p(), coeffs_); }

RPoly operator+(const RPoly& a, const RPoly& b) {
    require_same_ring(a, b);
    const std::uint64_t m = a.spec().modulus();
    std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + b.coeff(i)) % m;
    return RPoly::from_canonical(a.spec(), std::move(c));
}

RPoly operator-(const RPoly& a, const RPoly& b) {
    require_same_ring(a, b);
    const std::uint64_t m = a.spec().modulus();
    std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + m - b.coeff(i)) % m;
    return RPoly::from_canonical(a.spec(), std::move(c));
}

RPoly operator*(const RPoly& a, const RPoly& b) {
    require_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return RPoly::zero(a.spec());
    const std::uint64_t m = a.spec().modulus();
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<std::uint64_t> c(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) c[i + j] = (c[i + j] + x[i] * y[j]) % m;
    }
    return RPoly::from_canonical(a.spec(), std::move(c));
}

std::pair<RPoly, RPoly> r_divmod_monic(const RPoly& a, const RPoly& b) {
    require_same_ring(a, b);
    if (!b.is_monic()) throw Error(Errc::not_monic, "divisor " + to_string(b) + " is not monic");
    const RingSpec& spec = a.spec();
    const std::uint64_t m = spec.modulus();
    if (a.degree() < b.degree()) return {RPoly::zero(spec), a};
    std::vector<std::uint64_t> rem = a.coeffs();
    const std::size_t db = b.coeffs().size() - 1;
    std::vector<std::uint64_t> quo(rem.size() - db, 0);
    for (std::size_t k = quo.size(); k-- > 0;) {
        const std::uint64_t c = rem[k + db];
        quo[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] = (rem[k + j] + m - c * b.coeffs()[j] % m) % m;
    }
    rem.resize(db);
    return {RPoly::from_canonical(spec, std::move(quo)), RPoly::from_canonical(spec, std::move(rem))};
}

RPoly r_mod_monic(const RPoly& a, const RPoly& b) { return r_divmod_monic(a, b).second; }

RPoly r_exact_div(const RPoly& a, const RPoly& b) {
    auto [q, r] = r_divmod_monic(a, b);
    if (!r.is_zero()) throw Error(Errc::not_divisible, to_string(b) + " does not divide " + to_string(a));
    return q;
}

RPoly xn_minus_1(std::uint64_t n, const RingSpec& spec) {
    return RPoly::monomial(spec, n) - RPoly::one(spec);
}

RPoly reciprocal(const RPoly& f) {
    if (f.is_zero() || f.coeff(0) % f.spec().p() == 0)
        throw Error(Errc::non_unit_constant_term, "constant term of " + to_string(f) + " is not a unit");
    const std::uint64_t inv = *inv_mod(f.coeff(0), f.spec().modulus());
    std::vector<std::uint64_t> rev(f.coeffs().rbegin(), f.coeffs().rend());
    return RPoly::from_canonical(f.spec(), std::move(rev)).scaled(inv);
}

RPoly substitute_scaled(const RPoly& f, const RElem& lambda, bool normalize_monic) {
    if (lambda.spec() != f.spec()) throw Error(Errc::mismatched_ring, "scalar from a different ring");
    if (!is_unit(lambda)) throw Error(Errc::not_a_unit, "substitution scalar must be a unit");
    const std::uint64_t m = f.spec().modulus();
    std::vector<std::uint64_t> c = f.coeffs();
    std::uint64_t power = 1;
    for (auto& x : c) {
        x = mul_mod(x, power, m);
        power = mul_mod(power, lambda.value(), m);
    }
    RPoly out = RPoly::from_canonical(f.spec(), std::move(c));
    if (normalize_monic && !out.is_zero()) out = out.scaled(*inv_mod(out.leading(), m));
    return out;
}

RPoly multiplier_mod(const RPoly& f, std::int64_t a, std::uint64_t n) {
    if (n == 0) throw Error(Errc::invalid_argument, "length must be positive");
    const std::uint64_t am = canonical_mod(a, n);
    if (std::gcd(am, n) != 1 && n > 1)
        throw Error(Errc::invalid_argument, "multiplier " + std::to_string(a) + " is not coprime to " + std::to_string(n));
    const std::uint64_t m = f.spec().modulus();
    std::vector<std::uint64_t> c(n, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const std::uint64_t pos = mul_mod(i % n, am, n);
        c[pos] = (c[pos] + f.coeffs()[i]) % m;
    }
    return RPoly::from_canonical(f.spec(), std::move(c));
}

std::vector<RPoly> hensel_lift_factorization(const std::vector<FqPoly>& factors, std::uint64_t n,
                                             const RingSpec& spec) {
    const std::uint64_t p = spec.p();
    if (n == 0 || n % p == 0)
        throw Error(Errc::invalid_argument, "Hensel lifting of x^n - 1 needs gcd(n, p) = 1");
    FqPoly product = FqPoly::one(p);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const FqPoly& f = factors[i];
        if (f.p() != p) throw Error(Errc::mismatched_ring, "factor over the wrong residue field");
        if (!f.is_monic()) throw Error(Errc::not_monic, "factor " + to_string(f) + " is not monic");
        for (std::size_t j = 0; j < i; ++j) {
            if (!fq_gcd(f, factors[j]).is_one())
                throw Error(Errc::not_coprime, to_string(f) + " and " + to_string(factors[j]) + " are not coprime");
        }
        product = product * f;
    }
    if (product != fq_xn_minus_1(n, p))
        throw Error(Errc::not_divisible, "factors do not multiply to x^" + std::to_string(n) + " - 1 over F_" +
                                             std::to_string(p));

    // Bezout certificates: s_i * prod_{j != i} f_j = 1 mod f_i.
    std::vector<FqPoly> inverse_cofactor;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() == 0) {
            inverse_cofactor.push_back(FqPoly::zero(p));
            continue;
        }
        FqPoly cof = FqPoly::one(p);
        for (std::size_t j = 0; j < factors.size(); ++j)
            if (j != i) cof = cof * factors[j];
        inverse_cofactor.push_back(fq_ext_gcd(fq_mod(cof, factors[i]), factors[i]).s);
    }

    std::vector<RPoly> lifts;
    for (auto& f : factors) lifts.push_back(RPoly::lift(f, spec));
    const RPoly target = xn_minus_1(n, spec);
    std::uint64_t pk = 1;
    for (unsigned k = 1; k < spec.e(); ++k) {
        pk *= p;
        RPoly prod = RPoly::one(spec);
        for (auto& g : lifts) prod = prod * g;
        const RPoly err = target - prod;
        std::vector<std::uint64_t> digit;
        for (auto c : err.coeffs()) {
            if (c % pk != 0) throw Error(Errc::not_coprime, "Hensel invariant violated");  // unreachable
            digit.push_back((c / pk) % p);
        }
        const FqPoly e_k = FqPoly::from_canonical(p, std::move(digit));
        if (e_k.is_zero()) continue;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i].degree() == 0) continue;
            const FqPoly delta = fq_mod(e_k * inverse_cofactor[i], factors[i]);
            lifts[i] = lifts[i] + RPoly::lift(delta, spec).scaled(pk);
        }
    }
    return lifts;
}

RPoly lift_divisor(const FqPoly& d, std::uint64_t n, const RingSpec& spec) {
    const FqPoly whole = fq_xn_minus_1(n, spec.p());
    if (!d.is_monic()) throw Error(Errc::not_monic, "divisor must be monic");
    auto [cof, rem] = fq_divmod(whole, d);
    if (!rem.is_zero()) throw Error(Errc::not_divisible, to_string(d) + " does not divide x^n - 1");
    return hensel_lift_factorization({d, cof}, n, spec).front();
}

RElem primitive_root_of_unity(std::uint64_t order, const RingSpec& spec) {
    if (order == 0 || (order & (order - 1)) != 0)
        throw Error(Errc::invalid_argument, "root order must be a power of two");
    if (order == 1) return RElem(spec, 1);
    const std::uint64_t p = spec.p();
    if (p == 2 || (p - 1) % order != 0)
        throw Error(Errc::no_such_root, "no primitive " + std::to_string(order) + "-th root of unity in " +
                                            to_string(spec) + " since p != 1 mod " + std::to_string(order));
    const std::uint64_t m = spec.modulus();
    std::uint64_t best = m;
    for (std::uint64_t r = 2; r < p; ++r) {
        if (pow_mod(r, order, p) != 1 || pow_mod(r, order / 2, p) == 1) continue;
        // Newton iteration on x^order - 1; the derivative is a unit since p is odd.
        std::uint64_t alpha = r;
        for (unsigned it = 0; it <= spec.e() + 1; ++it) {
            const std::uint64_t f = (pow_mod(alpha, order, m) + m - 1) % m;
            if (f == 0) break;
            const std::uint64_t df = mul_mod(order % m, pow_mod(alpha, order - 1, m), m);
            alpha = (alpha + m - mul_mod(f, *inv_mod(df, m), m)) % m;
        }
        best = std::min(best, alpha);
    }
    return RElem(spec, static_cast<std::int64_t>(best));
}

std::vector<RElem> nth_roots_of_unity(std::uint64_t n, const RingSpec& spec) {
    const std::uint64_t p = spec.p();
    const std::uint64_t m = spec.modulus();
    // R* as a product of cyclic groups: (generator, order).
    std::vector<std::pair<std::uint64_t, std::uint64_t>> gens;
    if (p == 2) {
        if (spec.e() == 2) gens.push_back({3, 2});
        if (spec.e() >= 3) {
            gens.push_back({m - 1, 2});
            gens.push_back({5, m / 4});
        }
    } else {
        const auto primes = prime_divisors(p - 1);
        std::uint64_t g = 1;
        for (std::uint64_t r = 2; r < p; ++r) {
            if (std::all_of(primes.begin(), primes.end(), [&](std::uint64_t q) { return pow_mod(r, (p - 1) / q, p) != 1; })) {
                g = r;
                break;
            }
        }
        // A primitive root mod p generates mod p^e iff it generates mod p^2.
        if (spec.e() >= 2 && pow_mod(g, p - 1, p * p) == 1) g += p;
        const std::uint64_t order = m / p * (p - 1);
        if (order > 1) gens.push_back({g % m, order});
    }
    std::vector<std::uint64_t> roots{1};
    for (auto [g, order] : gens) {
        const std::uint64_t d = std::gcd(n, order);
        const std::uint64_t step = pow_mod(g, order / d, m);
        std::vector<std::uint64_t> next;
        std::uint64_t x = 1;
        for (std::uint64_t k = 0; k < d; ++k) {
            for (auto r : roots) next.push_back(mul_mod(r, x, m));
            x = mul_mod(x, step, m);
        }
        roots = std::move(next);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    std::vector<RElem> out;
    for (auto r : roots) out.emplace_back(spec, static_cast<std::int64_t>(r));
    return out;
}

std::string to_string(const RPoly& f) {
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

RPoly parse_rpoly(std::string_view text, const RingSpec& spec) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw Error(Errc::invalid_argument, "empty polynomial text");
    const std::int64_t m = static_cast<std::int64_t>(spec.modulus());
    std::vector<std::int64_t> coeffs;
    std::size_t i = 0;
    auto read_number = [&](std::int64_t& out) {
        const std::size_t start = i;
        std::int64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = (v * 10 + (s[i] - '0')) % (m * 1000000);
            ++i;
        }
        if (i == start) return false;
        out = v;
        return true;
    };
    auto fail = [&]() { throw Error(Errc::invalid_argument, "cannot parse polynomial '" + std::string(text) + "'"); };
    bool first = true;
    while (i < s.size()) {
        std::int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        } else if (!first) {
            fail();
        }
        first = false;
        std::int64_t coef = 1;
        const bool has_coef = read_number(coef);
        if (has_coef && i < s.size() && s[i] == '*') ++i;
        std::size_t exp = 0;
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::int64_t e = 0;
                if (!read_number(e)) fail();
                exp = static_cast<std::size_t>(e);
            }
        } else if (!has_coef) {
            fail();
        }
        if (coeffs.size() <= exp) coeffs.resize(exp + 1, 0);
        coeffs[exp] = (coeffs[exp] + sign * (coef % m)) % m;
    }
    return RPoly(spec, coeffs);
}

}  // namespace isodual
