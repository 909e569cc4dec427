#pragma once

#include "prym5/linalg.hpp"
#include "prym5/poly.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace prym5 {

// --- exact division --------------------------------------------------------

// Returns r with p = q*r, or nothing when q does not divide p.
template <class S>
std::optional<HomogPoly<S>> exact_divide(const HomogPoly<S>& p, const HomogPoly<S>& q) {
    if (q.is_zero()) throw std::invalid_argument("exact_divide by zero");
    if (p.nvars() != q.nvars()) throw std::invalid_argument("variable count mismatch");
    if (p.degree() < q.degree()) {
        if (p.is_zero()) return HomogPoly<S>(p.domain(), p.nvars(), 0);
        return std::nullopt;
    }
    auto dom = p.domain().valid_or(q.domain());
    int n = p.nvars();
    HomogPoly<S> rem = p;
    std::vector<typename HomogPoly<S>::Term> quot;
    const auto& [lm, lc] = q.leading();
    S lc_inv = lc.inv();
    while (!rem.is_zero()) {
        const auto& [m, c] = rem.leading();
        if (!lm.divides(m)) return std::nullopt;
        Monomial t = m / lm;
        S tc = c * lc_inv;
        quot.push_back({t, tc});
        rem -= q * HomogPoly<S>::monomial(dom, n, t, tc);
    }
    return HomogPoly<S>::from_terms(dom, n, p.degree() - q.degree(), std::move(quot));
}

// --- matrices of forms -----------------------------------------------------

template <class S>
class PolyMatrix {
public:
    using Poly = HomogPoly<S>;

    PolyMatrix() = default;
    explicit PolyMatrix(std::vector<std::vector<Poly>> entries) : e_(std::move(entries)) {
        std::size_t m = e_.size();
        if (m == 0 || m > 5) throw std::invalid_argument("PolyMatrix dimension must be 1..5");
        for (auto& row : e_)
            if (row.size() != m) throw std::invalid_argument("PolyMatrix must be square");
    }

    std::size_t size() const { return e_.size(); }
    const Poly& operator()(std::size_t i, std::size_t j) const { return e_[i][j]; }
    bool is_symmetric() const {
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j)
                if (e_[i][j] != e_[j][i]) return false;
        return true;
    }

    template <class V>
    Matrix<S> evaluate(const V& x) const {
        auto dom = e_[0][0].domain();
        Matrix<S> m(dom, size(), size());
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j) m(i, j) = e_[i][j].evaluate(x);
        return m;
    }

private:
    std::vector<std::vector<Poly>> e_;
};

// Cofactor expansion along successive rows; minors are memoized by the set of
// columns still in play.
template <class S>
HomogPoly<S> determinant(const PolyMatrix<S>& M) {
    using Poly = HomogPoly<S>;
    std::size_t m = M.size();
    auto dom = M(0, 0).domain();
    int n = M(0, 0).nvars();
    int ed = M(0, 0).degree();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) dom = dom.valid_or(M(i, j).domain());
    std::map<unsigned, Poly> memo;
    auto rec = [&](auto&& self, std::size_t row, unsigned cols) -> Poly {
        if (row == m) return Poly::constant(dom, n, dom.one());
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        Poly acc(dom, n, static_cast<int>((m - row) * ed));
        int sign = 1;
        for (std::size_t j = 0; j < m; ++j) {
            if (!(cols & (1u << j))) continue;
            const Poly& a = M(row, j);
            if (!a.is_zero()) {
                Poly minor = self(self, row + 1, cols & ~(1u << j));
                if (!minor.is_zero()) {
                    Poly t = a * minor;
                    acc = sign > 0 ? acc + t : acc - t;
                }
            }
            sign = -sign;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return rec(rec, 0, (1u << m) - 1);
}

// --- Hilbert function ------------------------------------------------------

// Dimension of the degree-d part of k[x_0..x_{n-1}]/(gens).
template <class S>
long long hilbert_function(typename S::Domain dom, int nvars, const std::vector<HomogPoly<S>>& gens, int d) {
    auto cols = monomials(nvars, d);
    long long total = static_cast<long long>(cols.size());
    if (gens.empty()) return total;
    std::map<Monomial, std::size_t, GrlexGreater> index;
    for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = i;
    Matrix<S> M(dom, 0, cols.size());
    for (auto& g : gens) {
        if (g.nvars() != nvars) throw std::invalid_argument("generator variable count mismatch");
        if (g.degree() > d) throw std::invalid_argument("hilbert_function: d below generator degree");
        for (auto& mult : monomials(nvars, d - g.degree())) {
            std::vector<S> row(cols.size(), dom.zero());
            for (auto& [m, c] : g.terms()) row[index.at(m * mult)] = c;
            M.append_row(row);
        }
    }
    return total - static_cast<long long>(M.rank());
}

// --- univariate helpers ----------------------------------------------------

// Dense univariate polynomial, coefficients from the constant term upwards.
template <class S>
class Univariate {
public:
    using Domain = typename S::Domain;

    Univariate() = default;
    explicit Univariate(Domain dom) : dom_(dom) {}
    Univariate(Domain dom, std::vector<S> c) : dom_(dom), c_(std::move(c)) { trim(); }

    static Univariate constant(Domain dom, const S& s) { return Univariate(dom, {s}); }
    static Univariate x(Domain dom) { return Univariate(dom, {dom.zero(), dom.one()}); }

    Domain domain() const { return dom_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<S>& coeffs() const { return c_; }
    S operator[](std::size_t i) const { return i < c_.size() ? c_[i] : dom_.zero(); }
    S lead() const { return c_.empty() ? dom_.zero() : c_.back(); }

    Univariate operator+(const Univariate& o) const {
        std::vector<S> r(std::max(c_.size(), o.c_.size()), dom_.zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] + o[i];
        return Univariate(dom_, r);
    }
    Univariate operator-(const Univariate& o) const {
        std::vector<S> r(std::max(c_.size(), o.c_.size()), dom_.zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] - o[i];
        return Univariate(dom_, r);
    }
    Univariate operator*(const Univariate& o) const {
        if (is_zero() || o.is_zero()) return Univariate(dom_);
        std::vector<S> r(c_.size() + o.c_.size() - 1, dom_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Univariate(dom_, r);
    }
    Univariate scaled(const S& s) const {
        std::vector<S> r = c_;
        for (auto& x : r) x = x * s;
        return Univariate(dom_, r);
    }
    // Quotient and remainder by a nonzero divisor.
    std::pair<Univariate, Univariate> divmod(const Univariate& d) const {
        if (d.is_zero()) throw std::domain_error("univariate division by zero");
        std::vector<S> r = c_;
        if (degree() < d.degree()) return {Univariate(dom_), *this};
        std::vector<S> q(degree() - d.degree() + 1, dom_.zero());
        S inv = d.lead().inv();
        for (int i = degree(); i >= d.degree(); --i) {
            S c = r[i] * inv;
            q[i - d.degree()] = c;
            if (c.is_zero()) continue;
            for (int j = 0; j <= d.degree(); ++j) r[i - d.degree() + j] -= c * d.c_[j];
        }
        r.resize(d.degree() > 0 ? d.degree() : 0);
        return {Univariate(dom_, q), Univariate(dom_, r)};
    }
    Univariate operator%(const Univariate& d) const { return divmod(d).second; }
    Univariate operator/(const Univariate& d) const { return divmod(d).first; }

    Univariate derivative() const {
        std::vector<S> r;
        for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i].times(static_cast<long long>(i)));
        return Univariate(dom_, r);
    }
    Univariate monic() const { return is_zero() ? *this : scaled(lead().inv()); }

    S evaluate(const S& x) const {
        S r = dom_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    friend bool operator==(const Univariate& a, const Univariate& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Univariate& a, const Univariate& b) { return a.c_ != b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    Domain dom_{};
    std::vector<S> c_;
};

template <class S>
Univariate<S> gcd(Univariate<S> a, Univariate<S> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// --- bivariate gcd over a field (primitive remainder sequence) -------------

namespace detail {

// f in K[y][x]: f[i] is the coefficient of x^i.
template <class S>
using Bivariate = std::vector<Univariate<S>>;

template <class S>
void trim(Bivariate<S>& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

template <class S>
Univariate<S> content(const Bivariate<S>& f, typename S::Domain dom) {
    Univariate<S> g(dom);
    for (auto& c : f) g = gcd(g, c);
    return g;
}

template <class S>
Bivariate<S> divide_content(const Bivariate<S>& f, const Univariate<S>& c) {
    Bivariate<S> r;
    for (auto& a : f) r.push_back(a / c);
    trim(r);
    return r;
}

template <class S>
Bivariate<S> pseudo_remainder(Bivariate<S> a, const Bivariate<S>& b) {
    int db = static_cast<int>(b.size()) - 1;
    const auto& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        auto la = a.back();
        for (auto& c : a) c = c * lb;
        for (int j = 0; j <= db; ++j) a[da - db + j] = a[da - db + j] - la * b[j];
        trim(a);
    }
    return a;
}

template <class S>
Bivariate<S> primitive_gcd(Bivariate<S> a, Bivariate<S> b, typename S::Domain dom) {
    trim(a);
    trim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    auto ca = content(a, dom), cb = content(b, dom);
    auto c = gcd(ca, cb);
    a = divide_content(a, ca);
    b = divide_content(b, cb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty() && b.size() > 1) {
        auto r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.empty()) {
            b.clear();
            break;
        }
        b = divide_content(r, content(r, dom));
    }
    if (!b.empty()) return {c};  // b is a nonzero constant in x
    for (auto& x : a) x = x * c;
    return a;
}

template <class S>
bool is_constant(const Bivariate<S>& f) {
    return f.size() <= 1 && (f.empty() || f[0].degree() <= 0);
}

// Dehomogenize a ternary form at x_chart = 1; the first remaining variable
// becomes x, the second y.
template <class S>
Bivariate<S> dehomogenize(const HomogPoly<S>& F, int chart) {
    int vx = chart == 0 ? 1 : 0;
    int vy = chart == 2 ? 1 : 2;
    auto dom = F.domain();
    std::map<int, std::map<int, S>> acc;
    for (auto& [m, c] : F.terms()) acc[m.e[vx]][m.e[vy]] = c;
    int maxx = acc.empty() ? -1 : acc.rbegin()->first;
    Bivariate<S> f(maxx + 1, Univariate<S>(dom));
    for (auto& [i, row] : acc) {
        int maxy = row.rbegin()->first;
        std::vector<S> c(maxy + 1, dom.zero());
        for (auto& [j, v] : row) c[j] = v;
        f[i] = Univariate<S>(dom, c);
    }
    trim(f);
    return f;
}

template <class S>
Bivariate<S> d_dx(const Bivariate<S>& f) {
    Bivariate<S> r;
    for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i].scaled(f[i].domain().of(static_cast<long long>(i))));
    trim(r);
    return r;
}

template <class S>
Bivariate<S> d_dy(const Bivariate<S>& f) {
    Bivariate<S> r;
    for (auto& c : f) r.push_back(c.derivative());
    trim(r);
    return r;
}

}  // namespace detail

// True iff the ternary form has no repeated factor. Works in the charts
// x2 = 1 and x0 = 1 so that a multiple component supported on a coordinate
// line is not missed.
template <class S>
bool squarefree_test(const HomogPoly<S>& F) {
    if (F.nvars() != 3) throw std::invalid_argument("squarefree_test expects a ternary form");
    if (F.is_zero()) return false;
    if (F.degree() <= 1) return true;
    auto dom = F.domain();
    for (int chart : {2, 0}) {
        auto f = detail::dehomogenize(F, chart);
        auto g = detail::primitive_gcd(f, detail::d_dx(f), dom);
        g = detail::primitive_gcd(g, detail::d_dy(f), dom);
        if (!detail::is_constant(g)) return false;
    }
    return true;
}

// --- square roots ----------------------------------------------------------

// q with q*q == p, when one exists over the coefficient field.
template <class S>
std::optional<HomogPoly<S>> poly_square_root(const HomogPoly<S>& p) {
    using Poly = HomogPoly<S>;
    if (p.degree() % 2) throw std::invalid_argument("poly_square_root expects even degree");
    auto dom = p.domain();
    int n = p.nvars(), h = p.degree() / 2;
    if (p.is_zero()) return Poly(dom, n, h);
    if (dom.characteristic() == 2) {
        std::vector<typename Poly::Term> ts;
        for (auto& [m, c] : p.terms()) {
            Monomial r;
            for (int i = 0; i < kMaxVars; ++i) {
                if (m.e[i] % 2) return std::nullopt;
                r.e[i] = m.e[i] / 2;
            }
            auto s = sqrt(c);
            if (!s) return std::nullopt;
            ts.push_back({r, *s});
        }
        return Poly::from_terms(dom, n, h, ts);
    }
    const auto& [lm, lc] = p.leading();
    Monomial root_m;
    for (int i = 0; i < kMaxVars; ++i) {
        if (lm.e[i] % 2) return std::nullopt;
        root_m.e[i] = lm.e[i] / 2;
    }
    auto s = sqrt(lc);
    if (!s) return std::nullopt;
    Poly q = Poly::monomial(dom, n, root_m, *s);
    S two_lead_inv = s->times(2).inv();
    std::size_t limit = static_cast<std::size_t>(binomial(h + n - 1, n - 1)) + 1;
    for (std::size_t it = 0; it < limit; ++it) {
        Poly r = p - q * q;
        if (r.is_zero()) return q;
        const auto& [m, c] = r.leading();
        if (!root_m.divides(m)) return std::nullopt;
        Monomial t = m / root_m;
        if (!grlex_less(t, root_m)) return std::nullopt;
        q += Poly::monomial(dom, n, t, c * two_lead_inv);
    }
    return std::nullopt;
}

}  // namespace prym5
