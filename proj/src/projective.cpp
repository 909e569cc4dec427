#include "prym5/projective.hpp"

namespace prym5 {

std::vector<Fq> roots_in(const GF& F, const std::vector<Fq>& coeffs) {
    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg >= 0 && coeffs[deg].is_zero()) --deg;
    std::vector<Fq> out;
    std::uint64_t q = F.order();
    if (deg < 0) {
        for (std::uint64_t i = 0; i < q; ++i) out.push_back(F.element(i));
        return out;
    }
    if (deg == 0) return out;
    if (deg == 1) {
        out.push_back(-coeffs[0] / coeffs[1]);
        return out;
    }
    if (deg == 2 && F.characteristic() != 2) {
        const Fq &a = coeffs[2], &b = coeffs[1], &c = coeffs[0];
        Fq disc = b * b - (a * c).times(4);
        auto s = sqrt(disc);
        if (!s) return out;
        Fq inv2a = a.times(2).inv();
        Fq r1 = (-b + *s) * inv2a, r2 = (-b - *s) * inv2a;
        out.push_back(r1);
        if (r2 != r1) out.push_back(r2);
        if (out.size() == 2 && out[1] < out[0]) std::swap(out[0], out[1]);
        return out;
    }
    for (std::uint64_t i = 0; i < q; ++i) {
        Fq x = F.element(i);
        Fq v = coeffs[deg];
        for (int j = deg - 1; j >= 0; --j) v = v * x + coeffs[j];
        if (v.is_zero()) out.push_back(x);
    }
    return out;
}

std::vector<PointF> common_zeros(const std::vector<PolyF>& input, const GF& F) {
    if (input.empty()) throw std::invalid_argument("common_zeros needs at least one form");
    int n = input.front().nvars();
    std::vector<PolyF> forms;
    for (auto& f : input) {
        if (f.nvars() != n) throw std::invalid_argument("forms with different variable counts");
        if (!f.is_zero()) forms.push_back(lift(f, F));
    }
    std::vector<PointF> out;
    if (forms.empty()) {
        for_each_point(F, n - 1, [&](const std::vector<Fq>& x) {
            out.emplace_back(x);
            return true;
        });
        return out;
    }
    std::stable_sort(forms.begin(), forms.end(), [](const PolyF& a, const PolyF& b) { return a.degree() < b.degree(); });
    const PolyF& solver = forms.front();
    int d = solver.degree();
    int last = n - 1;

    auto all_vanish = [&](const std::vector<Fq>& x, std::size_t from) {
        for (std::size_t i = from; i < forms.size(); ++i)
            if (!forms[i].evaluate(x).is_zero()) return false;
        return true;
    };

    std::uint64_t q = F.order();
    std::vector<Fq> x(n, F.zero());
    std::vector<std::vector<Fq>> pw(n, std::vector<Fq>(d + 1, F.one()));
    std::vector<Fq> uni(d + 1, F.zero());

    // The point (0:...:0:1).
    x[last] = F.one();
    if (all_vanish(x, 0)) out.emplace_back(x);

    for (int pivot = last - 1; pivot >= 0; --pivot) {
        std::vector<std::uint64_t> idx(n, 0);
        std::fill(x.begin(), x.end(), F.zero());
        x[pivot] = F.one();
        while (true) {
            for (int i = 0; i < last; ++i)
                for (int j = 1; j <= d; ++j) pw[i][j] = pw[i][j - 1] * x[i];
            std::fill(uni.begin(), uni.end(), F.zero());
            for (auto& [m, c] : solver.terms()) {
                Fq t = c;
                for (int i = 0; i < last; ++i)
                    if (m.e[i]) t = t * pw[i][m.e[i]];
                uni[m.e[last]] += t;
            }
            for (auto& r : roots_in(F, uni)) {
                x[last] = r;
                if (all_vanish(x, 1)) out.emplace_back(x);
            }
            x[last] = F.zero();
            int i = last - 1;
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
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

MatF lift_matrix(const MatF& M, const GF& F) {
    if (M.domain() == F) return M;
    MatF L(F, M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) L(i, j) = F.embed(M(i, j));
    return L;
}

Fq quadric_value(const MatF& M, const std::vector<Fq>& x) {
    Fq s = x[0].domain().zero();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        Fq r = M(i, i) * x[i];
        for (std::size_t j = i + 1; j < x.size(); ++j) r += (M(i, j) + M(i, j)) * x[j];
        s += r * x[i];
    }
    return s;
}

// Restriction of a quadric to the affine line x + s e_k: a0 + a1 s + a2 s^2,
// and the coefficient of t in the further direction e_last: b0 + b1 s.
struct Sweep {
    Fq a0, a1, a2, b0, b1, c;
};

Sweep sweep(const MatF& M, const std::vector<Fq>& x, int k, int last) {
    int n = static_cast<int>(x.size());
    Sweep w;
    w.a0 = quadric_value(M, x);
    Fq mk = x[0].domain().zero(), ml = mk;
    for (int j = 0; j < n; ++j) {
        if (x[j].is_zero()) continue;
        if (k >= 0) mk += M(k, j) * x[j];
        ml += M(last, j) * x[j];
    }
    w.a1 = mk + mk;
    w.a2 = k >= 0 ? M(k, k) : x[0].domain().zero();
    w.b0 = ml + ml;
    w.b1 = k >= 0 ? M(last, k) + M(last, k) : x[0].domain().zero();
    w.c = M(last, last);
    return w;
}

}  // namespace

std::vector<PointF> quadric_zeros(const std::vector<MatF>& input, const GF& F) {
    if (input.empty()) throw std::invalid_argument("quadric_zeros needs at least one quadric");
    int n = static_cast<int>(input.front().rows());
    std::vector<MatF> Ms;
    for (auto& M : input) {
        if (static_cast<int>(M.rows()) != n || !M.is_symmetric()) throw std::invalid_argument("quadrics must be symmetric and of equal size");
        if (!M.is_zero()) Ms.push_back(lift_matrix(M, F));
    }
    std::vector<PointF> out;
    if (Ms.empty()) {
        for_each_point(F, n - 1, [&](const std::vector<Fq>& x) {
            out.emplace_back(x);
            return true;
        });
        return out;
    }
    if (F.characteristic() == 2) {
        std::vector<PolyF> forms;
        for (auto& M : Ms) {
            PolyF f(F, n, 2);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    Fq c = i == j ? M(i, i) : M(i, j) + M(j, i);
                    f += PolyF::variable(F, n, i) * PolyF::variable(F, n, j).scaled(c);
                }
            forms.push_back(f);
        }
        return common_zeros(forms, F);
    }
    int last = n - 1;
    std::uint64_t q = F.order();
    std::vector<Fq> x(n, F.zero());
    auto rest_vanish = [&](const std::vector<Fq>& y) {
        for (std::size_t i = 1; i < Ms.size(); ++i)
            if (!quadric_value(Ms[i], y).is_zero()) return false;
        return true;
    };
    x[last] = F.one();
    if (quadric_value(Ms[0], x).is_zero() && rest_vanish(x)) out.emplace_back(x);

    std::vector<Fq> field_elems;
    for (std::uint64_t i = 0; i < q; ++i) field_elems.push_back(F.element(i));
    Fq two = F.of(2), four = F.of(4);

    for (int pivot = last - 1; pivot >= 0; --pivot) {
        // Coordinates pivot+1 .. last-2 come from the odometer; last-1 is swept.
        int k = last - 1 > pivot ? last - 1 : -1;
        std::vector<std::uint64_t> idx(n, 0);
        std::fill(x.begin(), x.end(), F.zero());
        x[pivot] = F.one();
        while (true) {
            std::vector<Sweep> ws;
            for (auto& M : Ms) ws.push_back(sweep(M, x, k, last));
            std::uint64_t sweep_count = k >= 0 ? q : 1;
            for (std::uint64_t si = 0; si < sweep_count; ++si) {
                const Fq& s = field_elems[si];
                const Sweep& w = ws[0];
                Fq c0 = w.a0 + s * (w.a1 + s * w.a2);
                Fq c1 = w.b0 + s * w.b1;
                auto check = [&](const Fq& t) {
                    for (std::size_t i = 1; i < ws.size(); ++i) {
                        const Sweep& v = ws[i];
                        Fq val = v.a0 + s * (v.a1 + s * v.a2) + t * (v.b0 + s * v.b1 + t * v.c);
                        if (!val.is_zero()) return;
                    }
                    std::vector<Fq> y = x;
                    if (k >= 0) y[k] = s;
                    y[last] = t;
                    out.emplace_back(y);
                };
                if (w.c.is_zero()) {
                    if (c1.is_zero()) {
                        if (c0.is_zero())
                            for (auto& t : field_elems) check(t);
                    } else {
                        check(-c0 / c1);
                    }
                    continue;
                }
                Fq disc = c1 * c1 - four * w.c * c0;
                auto r = sqrt(disc);
                if (!r) continue;
                Fq inv = (two * w.c).inv();
                Fq t1 = (-c1 + *r) * inv;
                check(t1);
                if (!r->is_zero()) check((-c1 - *r) * inv);
            }
            int i = k >= 0 ? k - 1 : pivot;
            while (i > pivot) {
                if (++idx[i] < q) {
                    x[i] = field_elems[idx[i]];
                    break;
                }
                idx[i] = 0;
                x[i] = F.zero();
                --i;
            }
            if (i == pivot) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace prym5

namespace prym5 {

bool is_ordinary_double_point(const PolyF& form, const PointF& pt) {
    int n = form.nvars();
    int chart = 0;
    while (pt[chart].is_zero()) ++chart;
    GF E = pt.domain();
    PolyF f = lift(form, E);
    std::vector<int> vars;
    for (int i = 0; i < n; ++i)
        if (i != chart) vars.push_back(i);
    MatF H(E, n - 1, n - 1);
    for (int a = 0; a < n - 1; ++a) {
        PolyF da = f.derivative(vars[a]);
        for (int b = 0; b < n - 1; ++b) H(a, b) = da.derivative(vars[b]).evaluate(pt.x);
    }
    return !H.determinant().is_zero();
}

std::vector<SingularPoint> singular_locus(const PolyF& form, const GF& E) {
    std::vector<PolyF> forms{form};
    for (int i = 0; i < form.nvars(); ++i) forms.push_back(form.derivative(i));
    std::vector<SingularPoint> out;
    for (auto& p : common_zeros(forms, E)) out.push_back({p, is_ordinary_double_point(form, p)});
    return out;
}

MatF hyperplane_basis(const std::vector<Fq>& h) {
    GF F = h.front().domain();
    MatF row(F, 1, h.size());
    for (std::size_t i = 0; i < h.size(); ++i) row(0, i) = h[i];
    auto ns = row.nullspace();
    if (ns.size() != h.size() - 1) throw std::invalid_argument("hyperplane with zero coefficients");
    MatF P(F, h.size(), ns.size());
    for (std::size_t j = 0; j < ns.size(); ++j)
        for (std::size_t i = 0; i < h.size(); ++i) P(i, j) = ns[j][i];
    return P;
}

PolyF pull_back(const PolyF& form, const MatF& P) {
    GF F = P.domain();
    std::vector<PolyF> subs;
    for (std::size_t i = 0; i < P.rows(); ++i) subs.push_back(PolyF::linear(F, P.row(i)));
    return lift(form, F).substitute(subs);
}

}  // namespace prym5
