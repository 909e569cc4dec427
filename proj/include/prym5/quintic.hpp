#pragma once

#include "prym5/algebra.hpp"
#include "prym5/net.hpp"
#include "prym5/projective.hpp"

#include <optional>
#include <string>
#include <vector>

namespace prym5 {

// Points of P2(E) where the curve and its gradient vanish.
std::vector<SingularPoint> singular_points(const PolyF& curve, const GF& E, std::uint64_t budget = kDefaultBudget);

// Linear forms over E dividing the curve, normalized with leading coefficient 1.
std::vector<PolyF> lines_in_curve(const PolyF& curve, const GF& E, std::uint64_t budget = kDefaultBudget);

template <class S>
struct ConicCubic {
    HomogPoly<S> conic;
    HomogPoly<S> cubic;
};

// First conic over F_p (prime field of the curve) dividing the quintic, in
// ascending order of normalized coefficient vectors. Throws BudgetExceeded
// for p > 13.
std::optional<ConicCubic<Fq>> conic_cubic_split(const PolyF& quintic);

// Split against a caller-supplied conic (works over the rationals too).
template <class S>
std::optional<ConicCubic<S>> conic_cubic_split_with(const HomogPoly<S>& quintic, const HomogPoly<S>& conic) {
    if (quintic.nvars() != 3 || quintic.degree() != 5) throw std::invalid_argument("expected a ternary quintic");
    if (conic.degree() != 2) throw std::invalid_argument("candidate must be a conic");
    auto r = exact_divide(quintic, conic);
    if (!r) return std::nullopt;
    return ConicCubic<S>{conic, *r};
}

enum class SplitVerdict { split, no_split, undetermined };
std::string to_string(SplitVerdict v);

struct SplitReport {
    std::optional<ConicCubic<Fq>> base;
    SplitVerdict base_verdict = SplitVerdict::no_split;
    // Over the quadratic extension. A split there that is not defined over
    // F_p is Frobenius-stable only as line * C * conj(C), so without an
    // F_p-rational line factor no such split exists.
    SplitVerdict quadratic_verdict = SplitVerdict::undetermined;
};

SplitReport split_report(const PolyF& quintic);

}  // namespace prym5
