#include "prym5/genus2.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace prym5 {

namespace {

using Uni = Univariate<Fq>;

Fq to_base(const Fq& x, const GF& base) {
    if (x.domain() == base) return x;
    if (x.index() >= base.characteristic())
        throw std::logic_error("value expected in the prime field is not");
    return base.element(x.index());
}

Uni powmod(Uni b, std::uint64_t e, const Uni& m) {
    Uni r = Uni::constant(m.domain(), m.domain().one()) % m;
    b = b % m;
    while (e) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

// Products of the irreducible factors of each degree; index k-1 for degree k.
std::vector<Uni> distinct_degree(Uni g) {
    GF F = g.domain();
    std::vector<Uni> out;
    g = g.monic();
    Uni h = Uni::x(F);
    for (int k = 1; g.degree() >= 2 * k; ++k) {
        h = powmod(h, F.order(), g);
        Uni d = gcd(g, h - Uni::x(F));
        out.push_back(d);
        if (d.degree() > 0) {
            g = g / d;
            h = h % g;
        }
    }
    if (g.degree() > 0) {
        out.resize(g.degree(), Uni::constant(F, F.one()));
        out[g.degree() - 1] = g;
    }
    return out;
}

// Coefficients of p(a + t) in t.
std::vector<Fq> taylor_shift(std::vector<Fq> c, const Fq& a) {
    int n = static_cast<int>(c.size());
    for (int i = 0; i < n; ++i)
        for (int j = n - 2; j >= i; --j) c[j] += a * c[j + 1];
    return c;
}

int root_multiplicity(Uni u, const Fq& r) {
    if (u.is_zero()) throw std::logic_error("multiplicity of a root of the zero polynomial");
    Uni lin(u.domain(), {-r, u.domain().one()});
    int m = 0;
    while (u.degree() > 0) {
        auto [q, rem] = u.divmod(lin);
        if (!rem.is_zero()) break;
        u = q;
        ++m;
    }
    return m;
}

// Order of vanishing at t = 0 of a(t) + h4 w(t), where w^2 = f(t) and
// w(0) = w0 != 0; coefficients low to high.
int series_order(const std::vector<Fq>& f, const std::vector<Fq>& a, const Fq& h4, const Fq& w0) {
    GF E = w0.domain();
    const int N = 7;
    std::vector<Fq> w(N, E.zero());
    w[0] = w0;
    Fq inv2w = w0.times(2).inv();
    for (int n = 1; n < N; ++n) {
        Fq s = n < static_cast<int>(f.size()) ? f[n] : E.zero();
        for (int i = 1; i < n; ++i) s -= w[i] * w[n - i];
        w[n] = s * inv2w;
    }
    for (int n = 0; n < N; ++n) {
        Fq an = n < static_cast<int>(a.size()) ? a[n] : E.zero();
        if (!(an + h4 * w[n]).is_zero()) return n;
    }
    throw std::logic_error("hyperplane section vanishes to order > 6");
}

// Hyperplane h restricted to a 3K-embedded Y: a(x) + h4 y with
// a = h0 + h1 x + h2 x^2 + h3 x^3.
struct Section {
    std::vector<Fq> a;  // low to high
    Fq h4;
    std::vector<Fq> f;  // sextic over the same field
    Uni norm;           // h4^2 f - a^2, the norm to the x-line

    int norm_mult_infinity() const { return 6 - norm.degree(); }

    int order_at(const CurvePoint& P) const {
        GF E = h4.domain();
        if (P.infinite) {
            std::vector<Fq> frev(f.rbegin(), f.rend());
            std::vector<Fq> arev(a.rbegin(), a.rend());
            return series_order(frev, arev, h4, E.embed(P.y));
        }
        Fq x = E.embed(P.x);
        if (P.y.is_zero()) return root_multiplicity(norm, x);
        return series_order(taylor_shift(f, x), taylor_shift(a, x), h4, E.embed(P.y));
    }
};

Section make_section(const Genus2Curve& Y, const std::vector<Fq>& h) {
    GF E = h[0].domain();
    Section s;
    s.a = {h[0], h[1], h[2], h[3]};
    s.h4 = h[4];
    for (auto& c : Y.f) s.f.push_back(E.embed(c));
    Uni A(E, s.a), Fx(E, s.f);
    s.norm = Fx.scaled(s.h4 * s.h4) - A * A;
    if (s.norm.is_zero()) throw std::logic_error("hyperplane contains the curve");
    return s;
}

Fq bilinear(const MatF& M, const std::vector<Fq>& u, const std::vector<Fq>& v) {
    auto Mv = M.apply(v);
    Fq s = u[0].domain().zero();
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * Mv[i];
    return s;
}

GF quadratic_extension(const GF& F) { return GF(F.characteristic(), 2 * F.degree()); }

}  // namespace

// --- curve -----------------------------------------------------------------

Fq Genus2Curve::eval(const Fq& x) const {
    GF E = x.domain();
    Fq r = E.zero();
    for (int i = 6; i >= 0; --i) r = r * x + E.embed(f[i]);
    return r;
}

Uni Genus2Curve::poly(const GF& E) const {
    std::vector<Fq> c;
    for (auto& a : f) c.push_back(E.embed(a));
    return Uni(E, c);
}

Genus2Curve make_genus2(const GF& F, const std::vector<Fq>& coeffs) {
    if (F.degree() != 1) throw std::invalid_argument("genus-2 curves are supported over prime fields");
    if (F.characteristic() == 2) throw std::invalid_argument("y^2 = f(x) needs odd characteristic");
    if (coeffs.size() != 7) throw std::invalid_argument("a sextic has seven coefficients");
    Genus2Curve Y;
    Y.field = F;
    for (int i = 0; i < 7; ++i) Y.f[i] = F.embed(coeffs[i]);
    if (Y.f[6].is_zero()) throw std::invalid_argument("f must have degree 6");
    Uni f = Y.poly(F);
    if (gcd(f, f.derivative()).degree() > 0) throw std::invalid_argument("f is not squarefree: Y is singular");
    auto dd = distinct_degree(f);
    unsigned k = 1;
    for (std::size_t i = 0; i < dd.size(); ++i)
        if (dd[i].degree() > 0) k = std::lcm(k, static_cast<unsigned>(i + 1));
    if (k <= 4) {
        Y.splitting = GF(F.characteristic(), k);
        Uni fs = Y.poly(Y.splitting);
        Y.weierstrass_x = roots_in(Y.splitting, fs.coeffs());
    }
    return Y;
}

std::string CurvePoint::str() const {
    if (infinite) return "(inf," + y.str() + ")";
    return "(" + x.str() + "," + y.str() + ")";
}

std::vector<CurvePoint> curve_points(const Genus2Curve& Y, const GF& E) {
    std::vector<CurvePoint> out;
    for (std::uint64_t i = 0; i < E.order(); ++i) {
        Fq x = E.element(i);
        Fq v = Y.eval(x);
        if (v.is_zero()) {
            out.push_back({false, x, E.zero()});
            continue;
        }
        if (auto r = sqrt(v)) {
            Fq a = *r, b = -*r;
            if (b < a) std::swap(a, b);
            out.push_back({false, x, a});
            out.push_back({false, x, b});
        }
    }
    if (auto s = sqrt(E.embed(Y.f[6]))) {
        Fq a = *s, b = -*s;
        if (b < a) std::swap(a, b);
        out.push_back({true, E.zero(), a});
        out.push_back({true, E.zero(), b});
    }
    return out;
}

bool is_rational(const CurvePoint& P) {
    unsigned p = P.domain().characteristic();
    return P.x.index() < p && P.y.index() < p;
}

// --- embedding -------------------------------------------------------------

Genus2Embedding::Genus2Embedding(Genus2Curve Y, DivisorClassDeg6 L) : Y_(std::move(Y)), L_(std::move(L)) {
    if (three_k()) return;
    GF F = Y_.field;
    auto& [P1, P2] = L_.D;
    for (auto* P : {&P1, &P2}) {
        if (P->infinite) throw std::invalid_argument("D must consist of affine points");
        P->x = to_base(P->x, F);
        P->y = to_base(P->y, F);
        if (Y_.eval(P->x) != P->y * P->y) throw std::invalid_argument("D is not on Y");
        if (P->y.is_zero()) throw std::invalid_argument("D contains a Weierstrass point; move D");
    }
    if (P1.x == P2.x && P1.y != P2.y) throw std::invalid_argument("D must not be a fibre of x (that is L = 3K)");
    // l interpolates D: the chord through P1, P2 or the tangent when D = 2 P1.
    l1_ = P1.x == P2.x ? Y_.poly(F).derivative().evaluate(P1.x) / P1.y.times(2) : (P2.y - P1.y) / (P2.x - P1.x);
    l0_ = P1.y - l1_ * P1.x;
}

std::vector<Fq> Genus2Embedding::map(const CurvePoint& P) const {
    GF E = P.domain();
    Fq zero = E.zero(), one = E.one();
    if (three_k()) {
        if (P.infinite) return {zero, zero, zero, one, P.y};
        Fq x = P.x;
        return {one, x, x * x, x * x * x, P.y};
    }
    if (P.infinite) return {zero, zero, one, zero, P.y};
    Fq x = P.x, y = P.y;
    Fq l = E.embed(l0_) + E.embed(l1_) * x;
    Fq x1 = E.embed(L_.D[0].x), x2 = E.embed(L_.D[1].x);
    Fq g;
    if (x == x1 || x == x2) {
        Fq yi = E.embed(x == x1 ? L_.D[0].y : L_.D[1].y);
        if (y == yi) return {zero, zero, zero, one, x};
        // g = (f - l^2) / ((x - x1)(x - x2) (y - l)), the quotient taken
        // before evaluation.
        Uni f = Y_.poly(E);
        Uni lin(E, {E.embed(l0_), E.embed(l1_)});
        Uni den = Uni(E, {-x1, one}) * Uni(E, {-x2, one});
        auto [h, r] = (f - lin * lin).divmod(den);
        if (!r.is_zero()) throw std::logic_error("interpolant does not pass through D");
        g = h.evaluate(x) / (y - l);
    } else {
        g = (y + l) / ((x - x1) * (x - x2));
    }
    return {one, x, x * x, g, x * g};
}

std::vector<Fq> Genus2Embedding::tangent(const CurvePoint& P) const {
    if (!three_k()) throw std::invalid_argument("tangent directions are implemented for L = 3K");
    GF E = P.domain();
    Fq zero = E.zero(), one = E.one();
    if (P.infinite) return {zero, zero, one, zero, E.embed(Y_.f[5]) / P.y.times(2)};
    if (P.y.is_zero()) return {zero, zero, zero, zero, one};
    Fq x = P.x;
    Fq df = Y_.poly(E).derivative().evaluate(x);
    return {zero, one, x.times(2), x.times(3) * x, df / P.y.times(2)};
}

std::vector<std::string> Genus2Embedding::basis() const {
    if (three_k()) return {"1", "x", "x^2", "x^3", "y"};
    return {"1", "x", "x^2", "g", "x*g"};
}

std::vector<PointF> embedded_sample(const Genus2Embedding& emb) {
    GF E = quadratic_extension(emb.curve().field);
    std::vector<PointF> pts;
    for (auto& P : curve_points(emb.curve(), E)) pts.push_back(emb.image(P));
    return sorted_unique(pts);
}

// --- web -------------------------------------------------------------------

MatF SymWeb::at(const std::vector<Fq>& t) const {
    if (t.size() != 4) throw std::invalid_argument("web parameter must have 4 coordinates");
    GF E = t[0].domain();
    MatF M(E, 5, 5);
    for (int k = 0; k < 4; ++k)
        if (!t[k].is_zero()) M = M + lift(coeff[k], E).scaled(t[k]);
    return M;
}

PolyMatrix<Fq> SymWeb::matrix() const {
    std::vector<std::vector<PolyF>> e(5, std::vector<PolyF>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            e[i][j] = PolyF::linear(field, {coeff[0](i, j), coeff[1](i, j), coeff[2](i, j), coeff[3](i, j)});
    return PolyMatrix<Fq>(e);
}

SymWeb quadric_web(const std::vector<PointF>& pts, const GF& base) {
    if (pts.size() < 15) throw std::invalid_argument("quadric_web needs at least 15 points");
    GF E = pts.front().domain();
    auto mons = monomials(5, 2);
    MatF M(E, 0, mons.size());
    for (auto& P : pts) M.append_row(monomial_row(mons, lift(P.x, E)));
    auto ns = M.nullspace();
    if (ns.size() != 4)
        throw std::runtime_error("quadric web has dimension " + std::to_string(ns.size()) + ", expected 4");
    SymWeb web{base, {}};
    Fq half = base.of(2).inv();
    for (int k = 0; k < 4; ++k) {
        MatF Q(base, 5, 5);
        for (std::size_t m = 0; m < mons.size(); ++m) {
            Fq c = to_base(ns[k][m], base);
            int i = -1, j = -1;
            for (int v = 0; v < 5; ++v)
                for (int r = 0; r < mons[m].e[v]; ++r) (i < 0 ? i : j) = v;
            if (i == j) {
                Q(i, i) = c;
            } else {
                Q(i, j) = Q(j, i) = c * half;
            }
        }
        web.coeff[k] = Q;
    }
    return web;
}

WebDiscriminant web_discriminant(const SymWeb& web) {
    GF F = web.field;
    if (F.characteristic() > 13 || F.degree() != 1)
        throw BudgetExceeded("web_discriminant: linear factor scan limited to prime fields p <= 13");
    WebDiscriminant out;
    out.det = determinant(web.matrix());
    if (out.det.is_zero()) throw std::runtime_error("web determinant vanishes identically");
    bool found = false;
    for_each_point(F, 3, [&](const std::vector<Fq>& c) {
        PolyF l = PolyF::linear(F, c);
        if (auto r = exact_divide(out.det, l)) {
            out.plane = l;
            out.quartic = *r;
            found = true;
            return false;
        }
        return true;
    });
    if (!found) throw std::runtime_error("web determinant has no linear factor: inadmissible instance");
    return out;
}

bool trisecant_absence(const std::vector<PointF>& pts) {
    std::map<std::vector<Fq>, std::set<std::size_t>> lines;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i] == pts[j]) continue;
            MatF L = MatF::from_rows(pts[i].domain(), {pts[i].x, pts[j].x});
            L.rref();
            auto key = L.row(0);
            auto r1 = L.row(1);
            key.insert(key.end(), r1.begin(), r1.end());
            auto& s = lines[key];
            s.insert(i);
            s.insert(j);
            if (s.size() >= 3) return false;
        }
    return true;
}

// --- bisecant curve --------------------------------------------------------

PairDivisor make_pair(const CurvePoint& P, const CurvePoint& Q) {
    PairDivisor d{P, Q, false};
    if (Q < P) std::swap(d.a, d.b);
    d.conjugate = !is_rational(P);
    return d;
}

bool line_on_quadric(const MatF& M, const std::vector<Fq>& u, const std::vector<Fq>& v) {
    MatF ME = lift(M, u[0].domain());
    return bilinear(ME, u, u).is_zero() && bilinear(ME, u, v).is_zero() && bilinear(ME, v, v).is_zero();
}

std::vector<PairDivisor> bisecant_curve(const Genus2Embedding& emb, const MatF& Q) {
    GF E = quadratic_extension(emb.curve().field);
    unsigned p = E.characteristic();
    auto pts = curve_points(emb.curve(), E);
    MatF QE = lift(Q, E);
    std::vector<CurvePoint> rational;
    for (auto& P : pts)
        if (is_rational(P)) rational.push_back(P);
    std::vector<PairDivisor> out;
    for (std::size_t i = 0; i < rational.size(); ++i) {
        auto u = emb.map(rational[i]);
        if (emb.three_k() && line_on_quadric(QE, u, emb.tangent(rational[i])))
            out.push_back(make_pair(rational[i], rational[i]));
        for (std::size_t j = i + 1; j < rational.size(); ++j)
            if (line_on_quadric(QE, u, emb.map(rational[j]))) out.push_back(make_pair(rational[i], rational[j]));
    }
    for (auto& P : pts) {
        if (is_rational(P)) continue;
        CurvePoint C = P.conjugate(p);
        if (!(P < C)) continue;
        if (line_on_quadric(QE, emb.map(P), emb.map(C))) out.push_back(make_pair(P, C));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TwoTorsionLabel> two_torsion_labels() {
    std::vector<TwoTorsionLabel> out;
    for (unsigned s = 0; s < 32; ++s)
        if (std::popcount(s) % 2 == 0) out.push_back(s);
    return out;
}

Admissibility admissible_quadric(const Genus2Embedding& emb, const MatF& Q) {
    if (!emb.three_k()) throw std::invalid_argument("admissible_quadric is implemented for L = 3K");
    const auto& Y = emb.curve();
    if (!Y.splitting.valid())
        throw std::runtime_error("Weierstrass points need an extension of degree > 4");
    Admissibility a;
    a.rank = Q.rank();
    a.rank_four_branch = a.rank == 4;
    if (a.rank < 4) return a;
    GF S = Y.splitting;
    std::vector<std::vector<Fq>> W;
    for (auto& x : Y.weierstrass_x) W.push_back(emb.map({false, x, S.zero()}));
    MatF QS = lift(Q, S);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (line_on_quadric(QS, W[i], W[j])) a.weierstrass_lines.push_back({i, j});
    // Lines P + iota(P) of the canonical pencil join (1, x, x^2, x^3, 0) to e4.
    GF F = Y.field;
    std::vector<Fq> e4(5, F.zero());
    e4[4] = F.one();
    for (int s = 0; s < 3; ++s) {
        Fq x = F.of(s);
        if (line_on_quadric(Q, {F.one(), x, x * x, x * x * x, F.zero()}, e4)) ++a.pencil_lines;
    }
    a.admissible = a.weierstrass_lines.empty() && a.pencil_lines == 0;
    return a;
}

ResidualDivisor residual_divisor(const Genus2Embedding& emb, const MatF& Q, const CurvePoint& p) {
    if (!emb.three_k()) throw std::invalid_argument("residual_divisor is implemented for L = 3K");
    const auto& Y = emb.curve();
    GF K = p.domain();
    auto h = lift(Q, K).apply(emb.map(p));
    bool zero = std::all_of(h.begin(), h.end(), [](const Fq& c) { return c.is_zero(); });
    if (zero) throw std::invalid_argument("p lies in the vertex of Q");
    Section sec = make_section(Y, h);

    ResidualDivisor out;
    out.multiplicity_at_p = sec.order_at(p);

    // N(x, z) as a binary sextic, then divided by the square of p's linear form.
    std::vector<PolyF::Term> ts;
    for (int i = 0; i <= 6; ++i) {
        Monomial m;
        m.e[0] = i;
        m.e[1] = 6 - i;
        ts.push_back({m, sec.norm[i]});
    }
    PolyF N = PolyF::from_terms(K, 2, 6, ts);
    PolyF lp = p.infinite ? PolyF::variable(K, 2, 1) : PolyF::linear(K, {K.one(), -p.x});
    auto R = exact_divide(N, lp * lp);
    if (!R) throw std::logic_error("section is not tangent at p");
    out.quartic = *R;

    std::vector<Fq> rc(5, K.zero());
    for (auto& [m, c] : R->terms()) rc[m.e[0]] = c;
    Uni r(K, rc);
    if (r.degree() > 0) out.factors = distinct_degree(r);

    // Residual points over F_{q^2}, with the degree bookkeeping done per fibre
    // of x: the orders over the points of a fibre add up to the root
    // multiplicity of N there.
    GF E = quadratic_extension(Y.field);
    if (K.degree() > E.degree()) E = K;
    Section secE = make_section(Y, lift(h, E));
    CurvePoint pE{p.infinite, E.embed(p.x), E.embed(p.y)};
    std::map<std::pair<bool, Fq>, int> fibre_orders;
    for (auto& P : curve_points(Y, E)) {
        auto v = emb.map(P);
        Fq s = E.zero();
        for (int i = 0; i < 5; ++i) s += E.embed(h[i]) * v[i];
        if (!s.is_zero()) continue;
        int ord = secE.order_at(P);
        fibre_orders[{P.infinite, P.x}] += ord;
        if (P == pE) {
            if (ord > 2) out.support.push_back({P, ord - 2});
        } else {
            out.support.push_back({P, ord});
        }
    }
    int seen = 0, degree = 0;
    for (std::uint64_t i = 0; i < E.order(); ++i) {
        Fq x = E.element(i);
        int m = root_multiplicity(secE.norm, x);
        if (!m) continue;
        seen += m;
        auto it = fibre_orders.find({false, x});
        degree += it == fibre_orders.end() ? m : it->second;
    }
    int minf = secE.norm_mult_infinity();
    if (minf) {
        seen += minf;
        auto it = fibre_orders.find({true, E.zero()});
        degree += it == fibre_orders.end() ? minf : it->second;
    }
    out.section_degree = degree + (6 - seen);
    return out;
}

PairDivisor involution_partner(const Genus2Embedding& emb, const PairDivisor& xi) {
    if (!emb.three_k()) throw std::invalid_argument("involution_partner is implemented for L = 3K");
    const auto& [a, b] = std::pair{xi.a, xi.b};
    PairDivisor expected = make_pair(a.involution(), b.involution());
    if (a.infinite || b.infinite || a.x == b.x) return expected;
    // Hyperplane through the pair and both points at infinity; it meets Y in
    // the fibres over x_a and x_b.
    GF E = a.domain();
    std::vector<Fq> e3(5, E.zero()), e4(5, E.zero());
    e3[3] = e4[4] = E.one();
    MatF M = MatF::from_rows(E, {emb.map(a), emb.map(b), e3, e4});
    auto ns = M.nullspace();
    if (ns.size() != 1) throw std::logic_error("pair and points at infinity are not independent");
    const auto& h = ns[0];
    auto xs = roots_in(E, {h[0], h[1], h[2]});
    std::vector<CurvePoint> residual;
    for (auto& x : xs) {
        Fq y = x == a.x ? a.y : b.y;
        residual.push_back({false, x, -y});
    }
    if (residual.size() != 2) throw std::logic_error("residual of the hyperplane is not a pair");
    PairDivisor got = make_pair(residual[0], residual[1]);
    if (!(got == expected)) throw std::logic_error("residual pair disagrees with the hyperelliptic involution");
    return got;
}

// --- tropes and the polar map ----------------------------------------------

std::optional<Trope> trope_on_plane(const PolyF& quartic, const std::vector<Fq>& plane) {
    MatF B = hyperplane_basis(plane);
    PolyF r = pull_back(quartic, B);
    if (r.is_zero()) return std::nullopt;
    auto c = poly_square_root(r);
    if (!c) return std::nullopt;
    return Trope{plane, B, *c};
}

std::vector<Trope> trope_planes(const PolyF& quartic) {
    GF F = quartic.domain();
    if (F.order() > 7) throw BudgetExceeded("trope_planes: full plane scan limited to q <= 7");
    std::vector<Trope> out;
    for_each_point(F, 3, [&](const std::vector<Fq>& h) {
        if (auto t = trope_on_plane(quartic, h)) out.push_back(*t);
        return true;
    });
    return out;
}

PolarMap polar_cubic_map(const PolyF& quartic, const Trope& trope) {
    GF F = quartic.domain();
    PolarMap pm{trope, MatF(F, 4, 4), {}, {}, {}, {}, 0};
    std::size_t j = 0;
    while (trope.plane[j].is_zero()) ++j;
    MatF Ainv(F, 4, 4);
    Ainv(j, 0) = trope.plane[j].inv();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 3; ++c) Ainv(r, c + 1) = trope.basis(r, c);
    auto A = Ainv.inverse();
    if (!A) throw std::runtime_error("adapted coordinate change is singular");
    pm.to_adapted = *A;
    pm.adapted = pull_back(quartic, Ainv);

    std::vector<PolyF::Term> t3, t4;
    for (auto& [m, c] : pm.adapted.terms()) {
        if (m.e[0] > 1) continue;
        Monomial r;
        for (int i = 0; i < 3; ++i) r.e[i] = m.e[i + 1];
        (m.e[0] == 1 ? t3 : t4).push_back({r, c});
    }
    pm.F3 = PolyF::from_terms(F, 3, 3, t3);
    PolyF F4 = PolyF::from_terms(F, 3, 4, t4);
    auto c2 = poly_square_root(F4);
    if (!c2) throw std::invalid_argument("plane is not a trope of the quartic");
    pm.C2 = *c2;

    pm.images[0] = pm.F3;
    for (int i = 0; i < 3; ++i) pm.images[i + 1] = F4.derivative(i);
    auto mons = monomials(3, 3);
    MatF rows(F, 4, mons.size());
    for (int k = 0; k < 4; ++k)
        for (std::size_t m = 0; m < mons.size(); ++m) rows(k, m) = pm.images[k].coeff(mons[m]);
    pm.rank = rows.rank();
    return pm;
}

PolyF polar_cubic_adapted(const PolarMap& pm, const std::vector<Fq>& xa) {
    GF E = xa[0].domain();
    PolyF c(E, 3, 3);
    for (int k = 0; k < 4; ++k)
        if (!xa[k].is_zero()) c = c + lift(pm.images[k], E).scaled(xa[k]);
    return c;
}

PolyF polar_cubic(const PolarMap& pm, const std::vector<Fq>& x) {
    return polar_cubic_adapted(pm, lift(pm.to_adapted, x[0].domain()).apply(x));
}

}  // namespace prym5
