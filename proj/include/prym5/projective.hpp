#pragma once

#include "prym5/linalg.hpp"
#include "prym5/poly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace prym5 {

// Point of projective space, normalized so the first nonzero coordinate is 1.
template <class S>
struct ProjPoint {
    std::vector<S> x;

    ProjPoint() = default;
    explicit ProjPoint(std::vector<S> coords) : x(std::move(coords)) { normalize(); }

    std::size_t size() const { return x.size(); }
    const S& operator[](std::size_t i) const { return x[i]; }
    auto domain() const { return x.front().domain(); }

    void normalize() {
        auto it = std::find_if(x.begin(), x.end(), [](const S& s) { return !s.is_zero(); });
        if (it == x.end()) throw std::invalid_argument("projective point with all coordinates zero");
        S inv = it->inv();
        for (auto& c : x) c = c * inv;
    }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.x == b.x; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return a.x != b.x; }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.x < b.x; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ":" : "") + x[i].str();
        return s + ")";
    }
};

using PointF = ProjPoint<Fq>;

// Coordinates scaled so the first nonzero one is 1; returns false for the zero vector.
template <class S>
bool normalize_in_place(std::vector<S>& v) {
    for (auto& c : v)
        if (!c.is_zero()) {
            S inv = c.inv();
            for (auto& d : v) d = d * inv;
            return true;
        }
    return false;
}

inline std::uint64_t projective_count(std::uint64_t q, int n) {
    std::uint64_t s = 0, t = 1;
    for (int i = 0; i <= n; ++i) {
        s += t;
        t *= q;
    }
    return s;
}

// Visit every point of P^n(F) in ascending order of normalized index vectors.
// The visitor may return false to stop early.
template <class Visit>
void for_each_point(const GF& F, int n, Visit&& visit) {
    std::uint64_t q = F.order();
    std::vector<std::uint64_t> idx(n + 1, 0);
    std::vector<Fq> x(n + 1, F.zero());
    for (int pivot = n; pivot >= 0; --pivot) {
        std::fill(idx.begin(), idx.end(), 0);
        std::fill(x.begin(), x.end(), F.zero());
        x[pivot] = F.one();
        while (true) {
            if (!visit(static_cast<const std::vector<Fq>&>(x))) return;
            int i = n;
            while (i > pivot) {
                if (++idx[i] < q) {
                    x[i] = F.element(idx[i]);
                    break;
                }
                idx[i] = 0;
                x[i] = F.zero();
                --i;
            }
            if (i == pivot) break;
        }
    }
}

template <class S>
std::vector<ProjPoint<S>> sorted_unique(std::vector<ProjPoint<S>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Common zeros in P^{n-1}(F) of forms in n variables. Each chart fixes a
// leading 1, enumerates all later coordinates except the last and solves the
// first form for the last coordinate; the remaining forms are checked at the
// candidates. Cost is about q^{n-2} univariate solves.
std::vector<PointF> common_zeros(const std::vector<PolyF>& forms, const GF& F);

// Common zeros in P^{n-1}(F) of quadrics x^T M x given by symmetric n x n
// matrices (entries in F or a subfield). Same chart scheme as common_zeros,
// with the second-to-last coordinate swept incrementally.
std::vector<PointF> quadric_zeros(const std::vector<MatF>& quadrics, const GF& F);

// Ordinary double point test at a singular point: the Hessian of the
// dehomogenization in the chart of the first nonzero coordinate is
// nondegenerate.
bool is_ordinary_double_point(const PolyF& form, const PointF& pt);

struct SingularPoint {
    PointF point;
    bool node = false;
};

// Points of P^{n-1}(E) where the form and all its partials vanish.
std::vector<SingularPoint> singular_locus(const PolyF& form, const GF& E);

// Basis of the hyperplane sum h_i x_i = 0 as the columns of an n x (n-1)
// matrix, from the reduced echelon nullspace.
MatF hyperplane_basis(const std::vector<Fq>& h);

// The form pulled back along x = P u.
PolyF pull_back(const PolyF& form, const MatF& P);

// Roots in F of a univariate polynomial given by coefficients low to high.
// A zero polynomial has every element as a root.
std::vector<Fq> roots_in(const GF& F, const std::vector<Fq>& coeffs);

// Rank of the Jacobian of forms at a point.
template <class S>
std::size_t jacobian_rank(const std::vector<HomogPoly<S>>& forms, const std::vector<S>& pt) {
    auto dom = pt.front().domain();
    std::size_t n = pt.size();
    Matrix<S> J(dom, forms.size(), n);
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) J(i, j) = forms[i].derivative(static_cast<int>(j)).evaluate(pt);
    return J.rank();
}

// Lift a form over F_p (or a subfield given by embed) into the field E.
inline PolyF lift(const PolyF& f, const GF& E) {
    if (f.domain() == E) return f;
    return f.map_coeffs(E, [&](const Fq& c) { return E.embed(c); });
}

inline std::vector<Fq> lift(const std::vector<Fq>& v, const GF& E) {
    std::vector<Fq> r;
    r.reserve(v.size());
    for (auto& c : v) r.push_back(E.embed(c));
    return r;
}

inline MatF lift(const MatF& M, const GF& E) {
    if (M.domain() == E) return M;
    MatF L(E, M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) L(i, j) = E.embed(M(i, j));
    return L;
}

// Frobenius x -> x^p applied coordinatewise.
inline std::vector<Fq> frobenius(const std::vector<Fq>& v, unsigned p) {
    std::vector<Fq> r;
    r.reserve(v.size());
    for (auto& c : v) r.push_back(c.pow(p));
    return r;
}

// Monomial evaluation row: values of the given monomials at a point.
template <class S>
std::vector<S> monomial_row(const std::vector<Monomial>& mons, const std::vector<S>& pt) {
    auto dom = pt.front().domain();
    int n = static_cast<int>(pt.size());
    int d = mons.empty() ? 0 : mons.front().degree();
    std::vector<std::vector<S>> pw(n, std::vector<S>(d + 1, dom.one()));
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= d; ++j) pw[i][j] = pw[i][j - 1] * pt[i];
    std::vector<S> row;
    row.reserve(mons.size());
    for (auto& m : mons) {
        S t = dom.one();
        for (int i = 0; i < n; ++i)
            if (m.e[i]) t = t * pw[i][m.e[i]];
        row.push_back(t);
    }
    return row;
}

// Form with the given coefficient vector against the monomial list.
template <class S>
HomogPoly<S> form_from_coeffs(typename S::Domain dom, int nvars, const std::vector<Monomial>& mons,
                              const std::vector<S>& c) {
    std::vector<typename HomogPoly<S>::Term> ts;
    for (std::size_t i = 0; i < mons.size(); ++i) ts.push_back({mons[i], c[i]});
    return HomogPoly<S>::from_terms(dom, nvars, mons.empty() ? 0 : mons.front().degree(), ts);
}

}  // namespace prym5
