#pragma once

#include "prym5/poly.hpp"
#include "prym5/random.hpp"

namespace prym5::testing {

// Random form with every monomial present independently with probability 1/2.
inline PolyF random_form(Rng& rng, const GF& F, int n, int d, bool dense = false) {
    std::vector<PolyF::Term> ts;
    for (auto& m : monomials(n, d))
        if (dense || rng.below(2)) ts.push_back({m, rng.element(F)});
    return PolyF::from_terms(F, n, d, ts);
}

inline std::vector<Fq> random_vector(Rng& rng, const GF& F, std::size_t n) {
    std::vector<Fq> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rng.element(F));
    return v;
}

}  // namespace prym5::testing
