#pragma once

// Every cyclic code of length n over Z_{p^e}, indexed by the gamma level
// (0..e, e meaning absent) of each irreducible component of x^n - 1.

#include <functional>
#include <vector>

#include "isodual/cyclic_code.hpp"

namespace families {

struct Components {
    isodual::RingSpec spec;
    std::uint64_t n;
    std::vector<isodual::RPoly> lifted;  // basic irreducible factors of x^n - 1
    std::vector<isodual::RPoly> hats;    // (x^n - 1) / factor

    Components(const isodual::RingSpec& s, std::uint64_t len) : spec(s), n(len) {
        lifted = isodual::hensel_lift_factorization(isodual::factor_xn_minus_1(n, s.p()), n, s);
        const auto whole = isodual::xn_minus_1(n, s);
        for (auto& f : lifted) hats.push_back(isodual::r_exact_div(whole, f));
    }

    isodual::CyclicCode code(const std::vector<unsigned>& levels) const {
        std::vector<isodual::GammaGenerator> gens;
        for (std::size_t i = 0; i < levels.size(); ++i)
            if (levels[i] < spec.e()) gens.push_back({levels[i], hats[i]});
        if (gens.empty()) return isodual::zero_code(spec, n);
        return isodual::from_generators(spec, n, gens);
    }

    void for_each_levels(const std::function<void(const std::vector<unsigned>&)>& visit) const {
        std::vector<unsigned> levels(lifted.size(), 0);
        while (true) {
            visit(levels);
            std::size_t i = 0;
            while (i < levels.size() && ++levels[i] > spec.e()) levels[i++] = 0;
            if (i == levels.size()) return;
        }
    }

    void for_each_code(const std::function<void(const isodual::CyclicCode&)>& visit) const {
        for_each_levels([&](const std::vector<unsigned>& l) { visit(code(l)); });
    }
};

}  // namespace families
