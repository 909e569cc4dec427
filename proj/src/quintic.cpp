#include "prym5/quintic.hpp"

#include <array>

namespace prym5 {

std::vector<SingularPoint> singular_points(const PolyF& curve, const GF& E, std::uint64_t budget) {
    if (curve.nvars() != 3 || curve.is_zero()) throw std::invalid_argument("singular_points expects a nonzero ternary form");
    std::uint64_t q = E.order();
    if (q * q > budget) throw BudgetExceeded("singular_points: field too large for the budget");
    return singular_locus(curve, E);
}

std::vector<PolyF> lines_in_curve(const PolyF& curve, const GF& E, std::uint64_t budget) {
    if (curve.nvars() != 3 || curve.is_zero()) throw std::invalid_argument("lines_in_curve expects a nonzero ternary form");
    if (projective_count(E.order(), 2) > budget) throw BudgetExceeded("lines_in_curve: too many lines");
    PolyF f = lift(curve, E);
    std::vector<PolyF> out;
    for_each_point(E, 2, [&](const std::vector<Fq>& c) {
        PolyF l = PolyF::linear(E, c);
        if (exact_divide(f, l)) out.push_back(l.monic());
        return true;
    });
    return out;
}

namespace {

// Dense ternary form over F_p with coefficients indexed by (a, b), the
// exponents of x0 and x1.
struct Dense {
    int d;
    std::array<std::array<int, 6>, 6> c{};
};

Dense to_dense(const PolyF& f) {
    Dense D{f.degree(), {}};
    for (auto& [m, c] : f.terms()) D.c[m.e[0]][m.e[1]] = static_cast<int>(c.index());
    return D;
}

// Exact division test of a quintic by a conic over F_p.
bool divides(const Dense& P, const Dense& Q, int p, const std::vector<int>& inv) {
    // Leading monomial of Q: largest a, then largest b.
    int qa = -1, qb = -1;
    for (int a = 2; a >= 0 && qa < 0; --a)
        for (int b = 2 - a; b >= 0; --b)
            if (Q.c[a][b]) {
                qa = a;
                qb = b;
                break;
            }
    int lc_inv = inv[Q.c[qa][qb]];
    int qz = 2 - qa - qb;
    auto r = P.c;
    int d = P.d;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) {
            int c = r[a][b];
            if (!c) continue;
            int z = d - a - b;
            if (a < qa || b < qb || z < qz) return false;
            int t = c * lc_inv % p;
            int sa = a - qa, sb = b - qb;
            for (int i = 0; i <= 2; ++i)
                for (int j = 0; i + j <= 2; ++j) {
                    int qc = Q.c[i][j];
                    if (!qc) continue;
                    int& slot = r[sa + i][sb + j];
                    slot = (slot + (p - t) * qc) % p;
                }
        }
    return true;
}

}  // namespace

std::optional<ConicCubic<Fq>> conic_cubic_split(const PolyF& quintic) {
    if (quintic.nvars() != 3 || quintic.degree() != 5 || quintic.is_zero())
        throw std::invalid_argument("conic_cubic_split expects a nonzero ternary quintic");
    GF F = quintic.domain();
    if (F.degree() != 1) throw std::invalid_argument("conic scan runs over a prime field");
    int p = static_cast<int>(F.characteristic());
    if (p > 13) throw BudgetExceeded("conic_cubic_split: scan limited to p <= 13");
    std::vector<int> inv(p, 0);
    for (int i = 1; i < p; ++i)
        for (int j = 1; j < p; ++j)
            if (i * j % p == 1) inv[i] = j;
    Dense P = to_dense(quintic);
    auto mons = monomials(3, 2);
    std::optional<ConicCubic<Fq>> found;
    for_each_point(F, 5, [&](const std::vector<Fq>& c) {
        Dense Q{2, {}};
        for (std::size_t i = 0; i < 6; ++i) Q.c[mons[i].e[0]][mons[i].e[1]] = static_cast<int>(c[i].index());
        if (!divides(P, Q, p, inv)) return true;
        PolyF conic = form_from_coeffs<Fq>(F, 3, mons, c);
        auto r = exact_divide(quintic, conic);
        if (!r) throw std::logic_error("dense division disagrees with exact_divide");
        found = ConicCubic<Fq>{conic, *r};
        return false;
    });
    return found;
}

std::string to_string(SplitVerdict v) {
    switch (v) {
        case SplitVerdict::split: return "split";
        case SplitVerdict::no_split: return "no_split";
        case SplitVerdict::undetermined: return "undetermined";
    }
    return "unknown";
}

SplitReport split_report(const PolyF& quintic) {
    SplitReport rep;
    rep.base = conic_cubic_split(quintic);
    if (rep.base) {
        rep.base_verdict = SplitVerdict::split;
        rep.quadratic_verdict = SplitVerdict::split;
        return rep;
    }
    rep.base_verdict = SplitVerdict::no_split;
    bool rational_line = !lines_in_curve(quintic, quintic.domain()).empty();
    rep.quadratic_verdict = rational_line ? SplitVerdict::undetermined : SplitVerdict::no_split;
    return rep;
}

}  // namespace prym5
