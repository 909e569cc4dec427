#include "prym5/spacecurve.hpp"

#include <algorithm>
#include <set>

namespace prym5 {

namespace {

MatF dual_basis(const MatF& span) {
    auto ns = span.nullspace();
    return MatF::from_rows(span.domain(), ns);
}

Fq dot(const std::vector<Fq>& a, const std::vector<Fq>& b) {
    Fq s = b[0].domain().zero();
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_rational_point(const PointF& P) {
    unsigned p = P.domain().characteristic();
    return std::all_of(P.x.begin(), P.x.end(), [p](const Fq& c) { return c.index() < p; });
}

// Visit every line of P3(F) in reduced echelon form.
template <class Visit>
void for_each_line(const GF& F, Visit&& visit) {
    std::uint64_t q = F.order();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            // Free entries: row 0 at columns k > i, k != j; row 1 at columns k > j.
            std::vector<std::pair<int, int>> slots;
            for (int k = i + 1; k < 4; ++k)
                if (k != j) slots.push_back({0, k});
            for (int k = j + 1; k < 4; ++k) slots.push_back({1, k});
            std::vector<std::uint64_t> idx(slots.size(), 0);
            while (true) {
                MatF L(F, 2, 4);
                L(0, i) = F.one();
                L(1, j) = F.one();
                for (std::size_t s = 0; s < slots.size(); ++s) L(slots[s].first, slots[s].second) = F.element(idx[s]);
                visit(L);
                std::size_t s = 0;
                while (s < idx.size() && ++idx[s] == q) idx[s++] = 0;
                if (s == idx.size()) break;
            }
        }
}

// Points u + s v (s = 0..n-2) and v on a line: n distinct points, n <= q + 1.
std::vector<std::vector<Fq>> points_on_line(const ProjLine& L, std::size_t n, const GF& E) {
    GF F = L.span.domain();
    if (n > F.order() + 1) throw std::invalid_argument("line has too few rational points");
    auto u = lift(L.span.row(0), E), v = lift(L.span.row(1), E);
    std::vector<std::vector<Fq>> out;
    for (std::size_t s = 0; s + 1 < n; ++s) {
        Fq c = E.embed(F.element(s));
        std::vector<Fq> w(4);
        for (int i = 0; i < 4; ++i) w[i] = u[i] + c * v[i];
        out.push_back(w);
    }
    out.push_back(v);
    return out;
}

GF sample_field(const SpaceCurveSample& C) { return C.points.empty() ? C.base : C.points.front().domain(); }

std::vector<Fq> derivative_row(const std::vector<Monomial>& mons, const std::vector<Fq>& x, int var) {
    GF E = x[0].domain();
    std::vector<Fq> row;
    row.reserve(mons.size());
    for (auto& m : mons) {
        if (!m.e[var]) {
            row.push_back(E.zero());
            continue;
        }
        Fq t = E.of(m.e[var]);
        for (int i = 0; i < 4; ++i) {
            int e = m.e[i] - (i == var);
            if (e) t *= x[i].pow(e);
        }
        row.push_back(t);
    }
    return row;
}

MatF double_conditions(const SpaceCurveSample& C, int d) {
    GF E = sample_field(C);
    auto mons = monomials(4, d);
    MatF M(E, 0, mons.size());
    auto add = [&](const std::vector<Fq>& x) {
        M.append_row(monomial_row(mons, x));
        for (int v = 0; v < 4; ++v) M.append_row(derivative_row(mons, x, v));
    };
    for (auto& P : C.points) add(lift(P.x, E));
    for (auto& L : C.lines)
        for (auto& x : points_on_line(L, d + 1, E)) add(x);
    return M;
}

long long floor_div(long long a, long long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

}  // namespace

ProjLine ProjLine::through(const std::vector<Fq>& a, const std::vector<Fq>& b) {
    MatF L = MatF::from_rows(a[0].domain(), {a, b});
    L.rref();
    if (L.rank() != 2) throw std::invalid_argument("a line needs two distinct points");
    return {L};
}

MatF ProjLine::equations() const { return dual_basis(span); }

bool ProjLine::contains(const std::vector<Fq>& x) const {
    MatF eq = lift(equations(), x[0].domain());
    return dot(eq.row(0), x).is_zero() && dot(eq.row(1), x).is_zero();
}

std::vector<Fq> ProjLine::key() const {
    auto k = span.row(0);
    auto r = span.row(1);
    k.insert(k.end(), r.begin(), r.end());
    return k;
}

Projection project_from_point(const std::vector<PointF>& curve, const PointF& centre,
                              const std::vector<PolyF>& equations, const GF& base) {
    if (centre.size() != 5) throw std::invalid_argument("projection centre must lie in P4");
    for (auto& f : equations)
        if (!f.evaluate(centre.x).is_zero()) throw std::invalid_argument("projection centre is not on the curve");
    MatF H = hyperplane_basis(centre.x);
    Projection out;
    out.matrix = H.transpose();
    out.image.base = base;
    GF E = curve.empty() ? base : curve.front().domain();
    MatF PE = lift(out.matrix, E);
    PointF cE(lift(centre.x, E));
    std::vector<PointF> imgs;
    for (auto& P : curve) {
        auto x = lift(P.x, E);
        if (PointF(x) == cE) continue;
        imgs.emplace_back(PE.apply(x));
    }
    MatF J(base, equations.size(), 5);
    for (std::size_t i = 0; i < equations.size(); ++i)
        for (int j = 0; j < 5; ++j) J(i, j) = equations[i].derivative(j).evaluate(centre.x);
    auto ker = J.nullspace();
    if (ker.size() != 2) throw std::invalid_argument("curve is not smooth at the projection centre");
    const auto& t = PointF(ker[0]) == centre ? ker[1] : ker[0];
    out.tangent_image = PointF(lift(out.matrix.apply(t), E));
    imgs.push_back(out.tangent_image);
    std::size_t n = imgs.size();
    out.image.points = sorted_unique(imgs);
    out.collisions = n - out.image.points.size();
    return out;
}

std::uint64_t SecantCensus::at_least(int k) const {
    std::uint64_t s = 0;
    for (auto& [m, c] : by_incidence)
        if (m >= k) s += c;
    return s;
}

SecantCensus secant_census(const SpaceCurveSample& C, std::uint64_t budget) {
    GF F = C.base;
    std::uint64_t q = F.order();
    std::uint64_t total = (q * q + 1) * (q * q + q + 1);
    if (total > budget) throw BudgetExceeded("secant_census: " + std::to_string(total) + " lines exceed the budget");
    GF E = sample_field(C);
    std::vector<std::vector<Fq>> pts;
    for (auto& P : C.points) pts.push_back(lift(P.x, E));
    std::vector<MatF> comp_eqs;
    for (auto& L : C.lines) comp_eqs.push_back(L.equations());

    SecantCensus out;
    for_each_line(F, [&](const MatF& span) {
        ++out.lines_scanned;
        ProjLine line{span};
        MatF eq = dual_basis(span);
        auto a = lift(eq.row(0), E), b = lift(eq.row(1), E);
        std::vector<std::size_t> on;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (dot(a, pts[i]).is_zero() && dot(b, pts[i]).is_zero()) on.push_back(i);
        int count = static_cast<int>(on.size());
        for (std::size_t c = 0; c < C.lines.size(); ++c) {
            if (C.lines[c] == line) {
                count = -1;
                break;
            }
            MatF stack = MatF::from_rows(F, {eq.row(0), eq.row(1), comp_eqs[c].row(0), comp_eqs[c].row(1)});
            auto meet = stack.nullspace();
            if (meet.size() != 1) continue;
            PointF y(lift(meet[0], E));
            bool known = std::any_of(on.begin(), on.end(), [&](std::size_t i) { return PointF(pts[i]) == y; });
            if (!known) ++count;
        }
        if (count >= 2) ++out.by_incidence[count];
        if (count >= 4) out.rich.push_back({line, count});
    });
    return out;
}

int max_quadrisecants_through_rational_point(const SpaceCurveSample& C, const SecantCensus& census) {
    int best = 0;
    for (auto& P : C.points) {
        if (!is_rational_point(P)) continue;
        int n = 0;
        for (auto& [L, k] : census.rich)
            if (L.contains(P.x)) ++n;
        best = std::max(best, n);
    }
    return best;
}

std::size_t forms_through(const SpaceCurveSample& C, int d) {
    GF E = sample_field(C);
    auto mons = monomials(4, d);
    MatF M(E, 0, mons.size());
    for (auto& P : C.points) M.append_row(monomial_row(mons, lift(P.x, E)));
    for (auto& L : C.lines)
        for (auto& x : points_on_line(L, d + 1, E)) M.append_row(monomial_row(mons, x));
    return mons.size() - M.rank();
}

std::size_t double_ideal_dimension(const SpaceCurveSample& C, int d) {
    return monomials(4, d).size() - double_conditions(C, d).rank();
}

std::vector<PolyF> double_ideal_basis(const SpaceCurveSample& C, int d) {
    GF E = sample_field(C);
    auto mons = monomials(4, d);
    std::vector<PolyF> out;
    for (auto& v : double_conditions(C, d).nullspace()) out.push_back(form_from_coeffs<Fq>(E, 4, mons, v));
    return out;
}

// --- numerology --------------------------------------------------------------

long long segre_genus(long long k, long long degC, long long degS, long long sigma) {
    return (k - 1) * (2 * degC - k * degS) + k * (2 * sigma - 2);
}

Quadratic segre_quadratic(long long twice_g_minus_2, long long degC, long long degS, long long sigma) {
    if (degS <= 0) throw std::invalid_argument("surface degree must be positive");
    return {degS, -(2 * degC + degS + 2 * sigma - 2), 2 * degC + twice_g_minus_2};
}

std::vector<long long> Quadratic::integer_roots() const {
    std::vector<long long> out;
    long long disc = b * b - 4 * a * c;
    if (disc < 0) return out;
    long long s = 0;
    while ((s + 1) * (s + 1) <= disc) ++s;
    if (s * s != disc) return out;
    for (long long num : {-b - s, -b + s})
        if (num % (2 * a) == 0) out.push_back(num / (2 * a));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RuledNumerology ruled_numerology(long long n, long long p) {
    // (n - 5)(n + 2p - 2) is always even: both factors have the parity of n + 1 and n.
    return {(n - 5) * (n + 2 * p - 2) / 2 + 1, (n - 1) * (n - 2) / 2 - p};
}

long long castelnuovo_bound(long long n) {
    if (n < 3) throw std::invalid_argument("nondegenerate curves in P3 have degree >= 3");
    long long m = floor_div(n - 1, 2);
    long long eps = n - 1 - 2 * m;
    return m * (m - 1) + m * eps;
}

// --- cone liaison ------------------------------------------------------------

LiaisonReport cone_liaison(const PolyF& g1, const PolyF& g2) {
    GF F = g1.domain();
    if (g2.domain() != F) throw std::invalid_argument("cones must share one field");
    if (g1.nvars() != 3 || g2.nvars() != 3 || g1.degree() != 3 || g2.degree() != 3)
        throw std::invalid_argument("cones are given by ternary cubics");
    Monomial cube;
    cube.e[0] = 3;
    if (!g1.coeff(cube).is_zero() || !g2.coeff(cube).is_zero())
        throw std::invalid_argument("cones must contain the line z = t = 0");
    auto var = [&](int i) { return PolyF::variable(F, 4, i); };
    LiaisonReport rep;
    rep.cones = {g1.substitute({var(1), var(2), var(3)}), g2.substitute({var(0), var(2), var(3)})};
    for (int d = 4; d <= 7; ++d) rep.complete_intersection_hf[d] = hilbert_function<Fq>(F, 4, rep.cones, d);
    if (rep.complete_intersection_hf[6] != 45) throw std::invalid_argument("cones share a surface component");

    GF E(F.characteristic(), 2 * F.degree());
    for (auto& P : common_zeros(rep.cones, E))
        if (!P[2].is_zero() || !P[3].is_zero()) rep.residual_points.push_back(P);

    std::map<int, std::vector<PolyF>> ideal;
    for (int d = 2; d <= 5; ++d) {
        auto mons = monomials(4, d);
        MatF M(E, 0, mons.size());
        for (auto& P : rep.residual_points) M.append_row(monomial_row(mons, P.x));
        rep.residual_hf[d] = static_cast<long long>(M.rank());
        for (auto& v : M.nullspace()) ideal[d].push_back(form_from_coeffs<Fq>(E, 4, mons, v));
    }
    rep.residual_degree = rep.residual_hf[5] - rep.residual_hf[4];

    for (int v = 0; v < 2; ++v) {
        std::vector<Fq> x(4, E.zero());
        x[v] = E.one();
        rep.vertices.emplace_back(x);
        const auto& I = ideal[5];
        bool on = std::all_of(I.begin(), I.end(), [&](const PolyF& f) { return f.evaluate(x).is_zero(); });
        rep.vertex_on_curve.push_back(on);
        rep.vertex_singular.push_back(on && jacobian_rank(I, x) < 2);
    }
    return rep;
}

}  // namespace prym5
