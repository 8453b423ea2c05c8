#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "isodual/cyclic_code.hpp"

namespace isodual {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

struct SparseRow {
    std::vector<std::pair<std::uint32_t, std::uint64_t>> entries;
};

// Spans of rows over Z_modulus where row j takes coefficients 0..radix[j]-1
// and radix[j] * row_j = 0. Distinct digit vectors give distinct words.
struct Span {
    std::uint64_t modulus;
    std::size_t length;
    std::vector<SparseRow> rows;
    std::vector<std::uint64_t> radix;
};

// Enumerates base + sum_{j < free} d_j row_j over all digits.
struct WorkUnit {
    std::vector<std::uint64_t> base;
    std::size_t free;
};

struct UnitResult {
    std::uint64_t best = kNone;
    std::uint64_t visited = 0;
    bool stopped = false;
};

void add_row(std::vector<std::uint64_t>& word, std::uint64_t& weight, const SparseRow& row, std::uint64_t m) {
    for (auto [pos, val] : row.entries) {
        const std::uint64_t old = word[pos];
        const std::uint64_t now = (old + val) % m;
        word[pos] = now;
        weight += (now != 0);
        weight -= (old != 0);
    }
}

UnitResult run_unit(const Span& span, const WorkUnit& unit, std::uint64_t cap) {
    UnitResult res;
    std::vector<std::uint64_t> word = unit.base;
    std::uint64_t weight = hamming_weight(word);
    std::vector<std::uint64_t> digit(unit.free, 0);
    for (;;) {
        ++res.visited;
        if (weight != 0 && weight < res.best) res.best = weight;
        if (res.visited >= cap) {
            res.stopped = true;
            return res;
        }
        std::size_t j = 0;
        for (; j < unit.free; ++j) {
            add_row(word, weight, span.rows[j], span.modulus);
            if (++digit[j] < span.radix[j]) break;
            digit[j] = 0;
        }
        if (j == unit.free) return res;
    }
}

std::uint64_t unit_size(const Span& span, const WorkUnit& unit) {
    std::uint64_t s = 1;
    for (std::size_t j = 0; j < unit.free; ++j) {
        if (s > kNone / span.radix[j]) return kNone;
        s *= span.radix[j];
    }
    return s;
}

// Fixes the top free digit of a unit, producing radix sub-units.
std::vector<WorkUnit> split(const Span& span, const WorkUnit& unit) {
    std::vector<WorkUnit> out;
    const std::size_t top = unit.free - 1;
    std::vector<std::uint64_t> word = unit.base;
    std::uint64_t weight = 0;
    for (std::uint64_t d = 0; d < span.radix[top]; ++d) {
        out.push_back({word, top});
        add_row(word, weight, span.rows[top], span.modulus);
    }
    return out;
}

// Units covering every nonzero word once. With projective = true (field
// spans) only words whose highest nonzero digit equals 1 are produced.
std::vector<WorkUnit> make_units(const Span& span, bool projective) {
    std::vector<WorkUnit> units;
    if (projective) {
        for (std::size_t lead = 0; lead < span.rows.size(); ++lead) {
            std::vector<std::uint64_t> base(span.length, 0);
            std::uint64_t w = 0;
            add_row(base, w, span.rows[lead], span.modulus);
            units.push_back({std::move(base), lead});
        }
    } else {
        units.push_back({std::vector<std::uint64_t>(span.length, 0), span.rows.size()});
    }
    return units;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > kNone / base) return kNone;
        r *= base;
    }
    return r;
}

struct SpanResult {
    std::uint64_t best;
    std::uint64_t visited;
};

// Minimum nonzero weight over the span. Throws BudgetExceeded when the word
// count exceeds budget, after a deterministic sequential partial scan.
SpanResult min_weight_of_span(const Span& span, bool projective, std::uint64_t budget, unsigned threads,
                              const std::string& label) {
    std::vector<WorkUnit> units = make_units(span, projective);
    std::uint64_t total = 0;
    for (auto& u : units) {
        const std::uint64_t size = unit_size(span, u);
        total = total > kNone - size ? kNone : total + size;
    }
    if (total > budget) {
        UnitResult partial;
        std::uint64_t remaining = budget;
        for (auto& u : units) {
            if (remaining == 0) break;
            const UnitResult r = run_unit(span, u, remaining);
            partial.best = std::min(partial.best, r.best);
            partial.visited += r.visited;
            remaining -= r.visited;
        }
        throw BudgetExceeded(label + " enumeration needs " + std::to_string(total) + " words, budget is " +
                                 std::to_string(budget),
                             partial.best, partial.visited);
    }

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    // Break large units up so that workers share the load.
    const std::uint64_t target = std::max<std::uint64_t>(1, total / (8ull * threads));
    std::vector<WorkUnit> work;
    while (!units.empty()) {
        WorkUnit u = std::move(units.back());
        units.pop_back();
        if (threads > 1 && u.free > 0 && unit_size(span, u) > target) {
            for (auto& sub : split(span, u)) units.push_back(std::move(sub));
        } else {
            work.push_back(std::move(u));
        }
    }

    std::vector<UnitResult> results(work.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < work.size(); i = next++) results[i] = run_unit(span, work[i], kNone);
    };
    if (threads == 1 || work.size() == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    SpanResult out{kNone, 0};
    for (auto& r : results) {
        out.best = std::min(out.best, r.best);
        out.visited += r.visited;
    }
    return out;
}

SparseRow to_sparse(const std::vector<std::uint64_t>& row) {
    SparseRow s;
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) s.entries.push_back({static_cast<std::uint32_t>(i), row[i]});
    return s;
}

Span direct_span(const CyclicCode& c) {
    Span span{c.spec().modulus(), c.n(), {}, {}};
    const Matrix rows = generator_matrix(c);
    for (auto& r : rows) span.rows.push_back(to_sparse(r));
    for (unsigned i = 1; i <= c.spec().e(); ++i)
        for (long k = 0; k < c.factor(i).degree(); ++k)
            span.radix.push_back(c.spec().gamma_power(c.spec().e() - i + 1));
    return span;
}

// Shifts of F_0 mod p span the torsion code over F_p.
Span residue_span(const CyclicCode& c) {
    const FqPoly g = c.factor(0).reduce();
    const std::uint64_t p = c.spec().p();
    Span span{p, c.n(), {}, {}};
    const std::size_t dim = c.n() - static_cast<std::size_t>(g.degree());
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<std::uint64_t> row(c.n(), 0);
        for (std::size_t t = 0; t < g.coeffs().size(); ++t) row[t + k] = g.coeffs()[t];
        span.rows.push_back(to_sparse(row));
        span.radix.push_back(p);
    }
    return span;
}

}  // namespace

const char* to_string(WeightStrategy s) noexcept {
    switch (s) {
        case WeightStrategy::automatic: return "auto";
        case WeightStrategy::direct: return "direct";
        case WeightStrategy::residue: return "residue";
        case WeightStrategy::both: return "both";
    }
    return "auto";
}

WeightStrategy parse_weight_strategy(const std::string& s) {
    if (s == "auto") return WeightStrategy::automatic;
    if (s == "direct") return WeightStrategy::direct;
    if (s == "residue") return WeightStrategy::residue;
    if (s == "both") return WeightStrategy::both;
    throw Error(Errc::invalid_argument, "unknown weight strategy '" + s + "'");
}

std::uint64_t hamming_weight(std::span<const std::uint64_t> word) noexcept {
    return static_cast<std::uint64_t>(std::count_if(word.begin(), word.end(), [](std::uint64_t v) { return v != 0; }));
}

WeightReport min_hamming_weight(const CyclicCode& c, const WeightOptions& options) {
    if (c.is_zero()) throw Error(Errc::zero_code, "the zero code has no nonzero codewords");

    auto run_direct = [&]() {
        const auto r = min_weight_of_span(direct_span(c), false, options.budget, options.threads, "direct");
        return WeightReport{r.best, WeightStrategy::direct, r.visited};
    };
    auto run_residue = [&]() {
        const auto r =
            min_weight_of_span(residue_span(c), true, options.residue_budget, options.threads, "residue");
        return WeightReport{r.best, WeightStrategy::residue, r.visited};
    };

    switch (options.strategy) {
        case WeightStrategy::direct: return run_direct();
        case WeightStrategy::residue: return run_residue();
        case WeightStrategy::both: {
            const WeightReport d = run_direct();
            const WeightReport r = run_residue();
            if (d.weight != r.weight)
                throw Error(Errc::invalid_argument, "direct (" + std::to_string(d.weight) + ") and residue (" +
                                                        std::to_string(r.weight) + ") minimum weights disagree");
            return {d.weight, WeightStrategy::both, d.enumerated + r.enumerated};
        }
        case WeightStrategy::automatic: break;
    }
    const std::uint64_t direct_count = saturating_pow(c.spec().p(), cardinality_log(c));
    if (direct_count <= options.budget) return run_direct();
    return run_residue();
}

}  // namespace isodual
