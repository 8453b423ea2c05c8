#pragma once

// Brute-force reference computations for the test suites. Everything here
// works on plain integer vectors and does not call into the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;

inline u64 powm(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// Ascending coefficient lists; trailing zeros trimmed.
inline Vec trim(Vec a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline Vec mul(const Vec& a, const Vec& b, u64 mod) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % mod;
    return trim(r);
}

inline Vec from_signed(std::initializer_list<long long> c, u64 mod) {
    Vec r;
    for (auto v : c) r.push_back(static_cast<u64>(((v % static_cast<long long>(mod)) + mod) % mod));
    return trim(r);
}

inline Vec xn_minus_1(u64 n, u64 mod) {
    Vec r(n + 1, 0);
    r[0] = mod - 1;
    r[n] = 1;
    return r;
}

inline bool brute_is_square(u64 q, u64 n) {
    for (u64 y = 0; y < n; ++y)
        if (y * y % n == q % n) return true;
    return false;
}

inline u64 brute_ord(u64 n, u64 q) {
    u64 x = q % n;
    for (u64 l = 1;; ++l, x = x * q % n)
        if (x == 1 % n) return l;
}

inline Vec brute_roots_of_unity(u64 n, u64 mod, u64 p) {
    Vec out;
    for (u64 v = 1; v < mod; ++v)
        if (v % p != 0 && powm(v, n, mod) == 1) out.push_back(v);
    return out;
}

inline unsigned valuation(u64 v, u64 p, unsigned e) {
    if (v == 0) return e;
    unsigned k = 0;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    return k;
}

// log_p of the size of the Z_{p^e}-module spanned by the rows, by
// elimination with minimum-valuation pivots.
inline unsigned span_log(std::vector<Vec> rows, u64 p, unsigned e) {
    u64 mod = 1;
    for (unsigned i = 0; i < e; ++i) mod *= p;
    unsigned total = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t top = 0;
    std::vector<bool> used_col(cols, false);
    while (top < rows.size()) {
        unsigned best = e;
        std::size_t br = 0, bc = 0;
        for (std::size_t r = top; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                if (used_col[c]) continue;
                const unsigned v = valuation(rows[r][c] % mod, p, e);
                if (v < best) {
                    best = v;
                    br = r;
                    bc = c;
                }
            }
        if (best == e) break;
        std::swap(rows[top], rows[br]);
        used_col[bc] = true;
        total += e - best;
        u64 pk = 1;
        for (unsigned i = 0; i < best; ++i) pk *= p;
        const u64 unit = rows[top][bc] / pk;
        u64 unit_inv = 1;
        for (u64 t = 1; t < mod; ++t)
            if (unit * t % mod == 1) {
                unit_inv = t;
                break;
            }
        for (std::size_t r = top + 1; r < rows.size(); ++r) {
            if (rows[r][bc] % mod == 0) continue;
            // rows[r][bc] has valuation >= best, so it is a multiple of the pivot
            const u64 factor = (rows[r][bc] / pk) % mod * unit_inv % mod;
            for (std::size_t c = 0; c < cols; ++c)
                rows[r][c] = (rows[r][c] + (mod - factor) * rows[top][c]) % mod;
        }
        ++top;
    }
    return total;
}

inline std::vector<Vec> cyclic_shifts(const Vec& poly, u64 n, u64 mod) {
    std::vector<Vec> out;
    for (u64 s = 0; s < n; ++s) {
        Vec row(n, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) row[(i + s) % n] = (row[(i + s) % n] + poly[i]) % mod;
        out.push_back(row);
    }
    return out;
}

inline u64 dot(const Vec& a, const Vec& b, u64 mod) {
    u64 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = (s + a[i] * b[i]) % mod;
    return s;
}

// Calls visit on every vector in {0, ..., radix-1}^len.
inline void for_each_vector(std::size_t len, u64 radix, const std::function<void(const Vec&)>& visit) {
    Vec v(len, 0);
    while (true) {
        visit(v);
        std::size_t i = 0;
        while (i < len && ++v[i] == radix) v[i++] = 0;
        if (i == len) return;
    }
}

/// For every v in R^n, records how deeply v is orthogonal to the cyclic
/// shifts of each block of polynomials: profile_i(v) is the minimum
/// valuation of <v, shift> over the shifts of block i. A cyclic code
/// spanned by p^{l_i} * block_i has annihilator {v : profile_i(v) >= e - l_i}.
struct ProfileHistogram {
    u64 p;
    unsigned e;
    u64 n;
    std::size_t block_count;
    std::vector<u64> counts;  // indexed by the profile read as base-(e+1) digits

    ProfileHistogram(u64 p_, unsigned e_, u64 n_, const std::vector<Vec>& block_polys)
        : p(p_), e(e_), n(n_), block_count(block_polys.size()) {
        u64 mod = 1;
        for (unsigned i = 0; i < e; ++i) mod *= p;
        std::size_t slots = 1;
        for (std::size_t b = 0; b < block_count; ++b) slots *= e + 1;
        counts.assign(slots, 0);

        // column-major shift rows: col[i] lists entry i of every (block, shift) row
        std::vector<std::size_t> owner;
        std::vector<Vec> col(n);
        for (std::size_t b = 0; b < block_count; ++b)
            for (auto& row : cyclic_shifts(block_polys[b], n, mod)) {
                owner.push_back(b);
                for (u64 i = 0; i < n; ++i) col[i].push_back(row[i]);
            }
        std::vector<unsigned> val(mod);
        for (u64 v = 0; v < mod; ++v) val[v] = valuation(v, p, e);

        std::vector<u64> dots(owner.size(), 0);
        Vec v(n, 0);
        std::vector<unsigned> prof(block_count);
        while (true) {
            std::fill(prof.begin(), prof.end(), e);
            for (std::size_t k = 0; k < owner.size(); ++k) prof[owner[k]] = std::min(prof[owner[k]], val[dots[k]]);
            std::size_t code = 0;
            for (std::size_t b = block_count; b-- > 0;) code = code * (e + 1) + prof[b];
            ++counts[code];
            // odometer step; a wrap from mod-1 to 0 is also +1 modulo mod
            std::size_t i = 0;
            for (; i < n; ++i) {
                const Vec& c = col[i];
                for (std::size_t k = 0; k < dots.size(); ++k) {
                    dots[k] += c[k];
                    if (dots[k] >= mod) dots[k] -= mod;
                }
                if (++v[i] < mod) break;
                v[i] = 0;
            }
            if (i == n) break;
        }
    }

    // log_p of |{v : profile_b(v) >= need_b for all blocks b}|
    unsigned annihilator_log(const std::vector<unsigned>& need) const {
        u64 total = 0;
        for (std::size_t code = 0; code < counts.size(); ++code) {
            std::size_t rest = code;
            bool ok = true;
            for (std::size_t b = 0; b < block_count; ++b, rest /= e + 1) ok = ok && rest % (e + 1) >= need[b];
            if (ok) total += counts[code];
        }
        unsigned lg = 0;
        while (total % p == 0 && total > 1) {
            total /= p;
            ++lg;
        }
        return total == 1 ? lg : ~0u;  // a count that is not a power of p signals a bug
    }
};

// Min weight of the F_p-code {m(x) g(x) : deg m < n - deg g} by listing
// every message.
inline u64 brute_min_weight_fp(const Vec& g, u64 n, u64 p) {
    const std::size_t k = n - (g.size() - 1);
    u64 best = n + 1;
    for_each_vector(k, p, [&](const Vec& msg) {
        if (std::all_of(msg.begin(), msg.end(), [](u64 x) { return x == 0; })) return;
        Vec word(n, 0);
        for (std::size_t i = 0; i < k; ++i)
            if (msg[i])
                for (std::size_t j = 0; j < g.size(); ++j) word[i + j] = (word[i + j] + msg[i] * g[j]) % p;
        const u64 w = static_cast<u64>(std::count_if(word.begin(), word.end(), [](u64 x) { return x != 0; }));
        best = std::min(best, w);
    });
    return best;
}

}  // namespace oracle
