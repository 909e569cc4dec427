#pragma once

#include "prym5/field.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prym5 {

inline constexpr int kMaxVars = 5;

struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] + o.e[i]);
        return r;
    }
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
        return r;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

// Graded lexicographic order with x0 > x1 > ... ; returns true when a < b.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
}

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

// All monomials of degree d in n variables, in descending graded-lex order.
inline std::vector<Monomial> monomials(int n, int d) {
    std::vector<Monomial> out;
    Monomial m;
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == n - 1) {
            m.e[i] = static_cast<std::uint8_t>(left);
            out.push_back(m);
            m.e[i] = 0;
            return;
        }
        for (int a = left; a >= 0; --a) {
            m.e[i] = static_cast<std::uint8_t>(a);
            self(self, i + 1, left - a);
        }
        m.e[i] = 0;
    };
    if (n == 0) {
        if (d == 0) out.push_back(m);
        return out;
    }
    rec(rec, 0, d);
    return out;
}

inline long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Sparse homogeneous polynomial. Terms are kept sorted in descending
// graded-lex order with no zero coefficients, so equal polynomials have equal
// term lists.
template <class S>
class HomogPoly {
public:
    using Scalar = S;
    using Domain = typename S::Domain;
    using Term = std::pair<Monomial, S>;

    HomogPoly() = default;
    HomogPoly(Domain dom, int nvars, int degree) : dom_(dom), n_(nvars), d_(degree) {
        if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("variable count must be 1..5");
        if (degree < 0) throw std::invalid_argument("negative degree");
    }

    static HomogPoly constant(Domain dom, int nvars, const S& c) {
        HomogPoly p(dom, nvars, 0);
        if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
        return p;
    }
    static HomogPoly variable(Domain dom, int nvars, int i) {
        HomogPoly p(dom, nvars, 1);
        Monomial m;
        m.e[i] = 1;
        p.terms_.push_back({m, dom.one()});
        return p;
    }
    static HomogPoly monomial(Domain dom, int nvars, const Monomial& m, const S& c) {
        HomogPoly p(dom, nvars, m.degree());
        if (!c.is_zero()) p.terms_.push_back({m, c});
        return p;
    }
    // Linear form sum c_i x_i.
    static HomogPoly linear(Domain dom, const std::vector<S>& c) {
        HomogPoly p(dom, static_cast<int>(c.size()), 1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            Monomial m;
            m.e[i] = 1;
            p.terms_.push_back({m, c[i]});
        }
        p.normalize();
        return p;
    }
    static HomogPoly from_terms(Domain dom, int nvars, int degree, std::vector<Term> terms) {
        HomogPoly p(dom, nvars, degree);
        for (auto& t : terms)
            if (t.first.degree() != degree) throw std::invalid_argument("term degree mismatch");
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    Domain domain() const { return dom_; }
    int nvars() const { return n_; }
    int degree() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    S coeff(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& x) { return grlex_less(x, t.first); });
        if (it != terms_.end() && it->first == m) return it->second;
        return dom_.zero();
    }
    const Term& leading() const { return terms_.front(); }

    HomogPoly operator+(const HomogPoly& o) const { return combine(o, false); }
    HomogPoly operator-(const HomogPoly& o) const { return combine(o, true); }
    HomogPoly operator-() const {
        HomogPoly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    HomogPoly operator*(const HomogPoly& o) const {
        check_vars(o);
        std::map<Monomial, S, GrlexGreater> acc;
        for (auto& a : terms_)
            for (auto& b : o.terms_) {
                auto m = a.first * b.first;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(m, a.second * b.second);
                else
                    it->second += a.second * b.second;
            }
        HomogPoly r(dom_, n_, d_ + o.d_);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.push_back({m, c});
        return r;
    }
    HomogPoly scaled(const S& c) const {
        HomogPoly r(dom_, n_, d_);
        if (c.is_zero()) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.second = t.second * c;
        return r;
    }
    HomogPoly& operator+=(const HomogPoly& o) { return *this = *this + o; }
    HomogPoly& operator-=(const HomogPoly& o) { return *this = *this - o; }
    HomogPoly& operator*=(const HomogPoly& o) { return *this = *this * o; }

    HomogPoly pow(int e) const {
        HomogPoly r = constant(dom_, n_, dom_.one());
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    template <class V>
    S evaluate(const V& x) const {
        if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("point dimension mismatch");
        std::array<std::vector<S>, kMaxVars> pw;
        for (int i = 0; i < n_; ++i) {
            pw[i].resize(d_ + 1);
            pw[i][0] = dom_.one();
            for (int j = 1; j <= d_; ++j) pw[i][j] = pw[i][j - 1] * x[i];
        }
        S s = dom_.zero();
        for (auto& [m, c] : terms_) {
            S t = c;
            for (int i = 0; i < n_; ++i)
                if (m.e[i]) t = t * pw[i][m.e[i]];
            s += t;
        }
        return s;
    }

    HomogPoly derivative(int var) const {
        if (var < 0 || var >= n_) throw std::out_of_range("derivative variable out of range");
        HomogPoly r(dom_, n_, d_ > 0 ? d_ - 1 : 0);
        for (auto& [m, c] : terms_) {
            if (m.e[var] == 0) continue;
            S nc = c.times(m.e[var]);
            if (nc.is_zero()) continue;
            Monomial mm = m;
            --mm.e[var];
            r.terms_.push_back({mm, nc});
        }
        return r;
    }

    // Substitute x_i -> forms[i]; all forms share a variable count and degree.
    HomogPoly substitute(const std::vector<HomogPoly>& forms) const {
        if (static_cast<int>(forms.size()) != n_) throw std::invalid_argument("substitution arity mismatch");
        int m = forms.front().nvars();
        int e = forms.front().degree();
        std::array<std::vector<HomogPoly>, kMaxVars> pw;
        for (int i = 0; i < n_; ++i) {
            pw[i].push_back(constant(dom_, m, dom_.one()));
            for (int j = 1; j <= d_; ++j) pw[i].push_back(pw[i].back() * forms[i]);
        }
        HomogPoly r(dom_, m, d_ * e);
        for (auto& [mono, c] : terms_) {
            HomogPoly t = constant(dom_, m, c);
            for (int i = 0; i < n_; ++i)
                if (mono.e[i]) t = t * pw[i][mono.e[i]];
            r += t;
        }
        return r;
    }

    // Map coefficients into another domain (e.g. a prime field into an extension).
    template <class Dom2, class F>
    auto map_coeffs(Dom2 dom2, F f) const {
        using S2 = decltype(f(std::declval<S>()));
        HomogPoly<S2> r(dom2, n_, d_);
        std::vector<typename HomogPoly<S2>::Term> ts;
        for (auto& [m, c] : terms_) ts.push_back({m, f(c)});
        return HomogPoly<S2>::from_terms(dom2, n_, d_, std::move(ts));
    }

    // Scale so the leading coefficient is 1 (zero stays zero).
    HomogPoly monic() const {
        if (is_zero()) return *this;
        return scaled(leading().second.inv());
    }

    friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HomogPoly& a, const HomogPoly& b) { return !(a == b); }

    // Text form: coeff*x0^a*x1^b terms joined by '+'.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, c] : terms_) {
            if (!first) os << "+";
            first = false;
            os << c.str();
            for (int i = 0; i < n_; ++i) {
                if (!m.e[i]) continue;
                os << "*x" << i;
                if (m.e[i] > 1) os << "^" << int(m.e[i]);
            }
        }
        return os.str();
    }

private:
    void check_vars(const HomogPoly& o) const {
        if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    }
    HomogPoly combine(const HomogPoly& o, bool sub) const {
        check_vars(o);
        if (d_ != o.d_ && !is_zero() && !o.is_zero()) throw std::invalid_argument("degree mismatch in addition");
        int d = is_zero() ? o.d_ : d_;
        HomogPoly r(dom_.valid_or(o.dom_), n_, d);
        auto i = terms_.begin();
        auto j = o.terms_.begin();
        while (i != terms_.end() || j != o.terms_.end()) {
            if (j == o.terms_.end() || (i != terms_.end() && grlex_less(j->first, i->first))) {
                r.terms_.push_back(*i++);
            } else if (i == terms_.end() || grlex_less(i->first, j->first)) {
                r.terms_.push_back({j->first, sub ? -j->second : j->second});
                ++j;
            } else {
                S c = sub ? i->second - j->second : i->second + j->second;
                if (!c.is_zero()) r.terms_.push_back({i->first, c});
                ++i;
                ++j;
            }
        }
        return r;
    }
    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return grlex_less(b.first, a.first); });
        std::vector<Term> out;
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second += t.second;
            else
                out.push_back(t);
        }
        out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.second.is_zero(); }),
                  out.end());
        terms_ = std::move(out);
    }

    Domain dom_{};
    int n_ = 1;
    int d_ = 0;
    std::vector<Term> terms_;

    template <class>
    friend class HomogPoly;
};

using PolyF = HomogPoly<Fq>;
using PolyQ = HomogPoly<Rational>;

// --- text format -----------------------------------------------------------

// "GF(p)", "GF(p^k)" or "QQ"
struct FieldTag {
    bool rational = false;
    unsigned p = 0;
    unsigned k = 1;
    std::string str() const;
};

FieldTag parse_field_tag(const std::string& s);

// Parse "coeff*x0^a*x1+..." over the given domain. The degree is taken from
// the terms; a lone "0" needs the degree supplied explicitly.
PolyF parse_poly(const GF& F, int nvars, const std::string& text, int degree_if_zero = 0);
PolyQ parse_poly(QQ, int nvars, const std::string& text, int degree_if_zero = 0);

// Tagged form "GF(11):..." / "QQ:...".
std::string tagged(const PolyF& p);
std::string tagged(const PolyQ& p);

}  // namespace prym5
