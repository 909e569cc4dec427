#include "prym5/net.hpp"

#include <sstream>

namespace prym5 {

namespace {

MatF random_symmetric(Rng& rng, const GF& F, std::size_t n) {
    MatF M(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) M(i, j) = M(j, i) = rng.element(F);
    return M;
}

PolyF block_det(const std::array<MatF, 3>& C) {
    std::size_t n = C[0].rows();
    GF F = C[0].domain();
    std::vector<std::vector<PolyF>> e(n, std::vector<PolyF>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e[i][j] = PolyF::linear(F, {C[0](i, j), C[1](i, j), C[2](i, j)});
    return determinant(PolyMatrix<Fq>(e));
}

void require_growth(std::uint64_t cost, std::uint64_t budget, const char* what) {
    if (cost > budget)
        throw BudgetExceeded(std::string(what) + ": " + std::to_string(cost) + " steps exceeds budget " +
                             std::to_string(budget));
}

std::uint64_t cube(std::uint64_t q) { return q * q * q; }

}  // namespace

MatF SymNet::at(const std::vector<Fq>& t) const {
    if (t.size() != 3) throw std::invalid_argument("net parameter must have 3 coordinates");
    GF E = t[0].domain();
    MatF M(E, 5, 5);
    for (int k = 0; k < 3; ++k) {
        if (t[k].is_zero()) continue;
        M = M + lift(coeff[k], E).scaled(t[k]);
    }
    return M;
}

PolyMatrix<Fq> SymNet::matrix() const {
    std::vector<std::vector<PolyF>> e(5, std::vector<PolyF>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) e[i][j] = PolyF::linear(field, {coeff[0](i, j), coeff[1](i, j), coeff[2](i, j)});
    return PolyMatrix<Fq>(e);
}

PolyF quadric_form(const MatF& M) {
    GF F = M.domain();
    int n = static_cast<int>(M.rows());
    std::vector<PolyF::Term> ts;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Monomial m;
            ++m.e[i];
            ++m.e[j];
            ts.push_back({m, i == j ? M(i, i) : M(i, j) + M(j, i)});
        }
    return PolyF::from_terms(F, n, 2, ts);
}

std::vector<PolyF> SymNet::quadrics() const {
    return {quadric_form(coeff[0]), quadric_form(coeff[1]), quadric_form(coeff[2])};
}

bool coefficients_independent(const SymNet& net) {
    MatF M(net.field, 3, 25);
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) M(k, i * 5 + j) = net.coeff[k](i, j);
    return M.rank() == 3;
}

SymNet make_block_net(const BlockPair& blocks) {
    const MatF& g = blocks.g;
    GF F = g.domain();
    if (g.rows() != 5 || g.cols() != 5 || g.determinant().is_zero()) throw std::invalid_argument("change of basis g is singular");
    for (int k = 0; k < 3; ++k) {
        if (!blocks.A[k].is_symmetric() || blocks.A[k].rows() != 2) throw std::invalid_argument("A must be 2x2 symmetric");
        if (!blocks.B[k].is_symmetric() || blocks.B[k].rows() != 3) throw std::invalid_argument("B must be 3x3 symmetric");
    }
    if (block_det(blocks.A).is_zero()) throw std::invalid_argument("det A vanishes identically");
    if (block_det(blocks.B).is_zero()) throw std::invalid_argument("det B vanishes identically");
    SymNet net;
    net.field = F;
    MatF gt = g.transpose();
    for (int k = 0; k < 3; ++k) {
        MatF D(F, 5, 5);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) D(i, j) = blocks.A[k](i, j);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) D(2 + i, 2 + j) = blocks.B[k](i, j);
        net.coeff[k] = gt * D * g;
    }
    net.witness = blocks;
    return net;
}

BlockPair random_block_pair(Rng& rng, const GF& F) {
    while (true) {
        BlockPair b;
        for (int k = 0; k < 3; ++k) {
            b.A[k] = random_symmetric(rng, F, 2);
            b.B[k] = random_symmetric(rng, F, 3);
        }
        b.g = MatF(F, 5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) b.g(i, j) = rng.element(F);
        if (b.g.determinant().is_zero()) continue;
        if (block_det(b.A).is_zero() || block_det(b.B).is_zero()) continue;
        return b;
    }
}

SymNet random_net(Rng& rng, const GF& F) {
    while (true) {
        SymNet net;
        net.field = F;
        for (auto& c : net.coeff) c = random_symmetric(rng, F, 5);
        if (!coefficients_independent(net)) continue;
        if (determinant(net.matrix()).is_zero()) continue;
        return net;
    }
}

Discriminant discriminant_quintic(const SymNet& net) {
    Discriminant d;
    d.gamma = determinant(net.matrix());
    d.trigonal = d.gamma.is_zero();
    return d;
}

std::vector<PointF> base_locus(const SymNet& net, const GF& E, std::uint64_t budget) {
    require_growth(cube(E.order()), budget, "base_locus");
    return quadric_zeros(net.quadric_matrices(), E);
}

bool smoothness_check(const SymNet& net, const std::vector<PointF>& pts) {
    auto qs = net.quadrics();
    for (auto& p : pts) {
        GF E = p.domain();
        std::vector<PolyF> lifted_qs;
        for (auto& q : qs) lifted_qs.push_back(lift(q, E));
        if (jacobian_rank(lifted_qs, p.x) < 3) return false;
    }
    return true;
}

std::string to_string(InvolutionStatus s) {
    switch (s) {
        case InvolutionStatus::found: return "found";
        case InvolutionStatus::absent: return "absent";
        case InvolutionStatus::field_too_small: return "field_too_small";
        case InvolutionStatus::commutant_too_large: return "commutant_too_large";
    }
    return "unknown";
}

std::pair<std::size_t, std::size_t> eigensignature(const MatF& sigma) {
    GF F = sigma.domain();
    auto I = MatF::identity(F, sigma.rows());
    std::size_t n = sigma.rows();
    return {n - (sigma + I).rank(), n - (sigma - I).rank()};
}

namespace {

MatF from_vector(const GF& F, const std::vector<Fq>& v) {
    MatF M(F, 5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) M(i, j) = v[i * 5 + j];
    return M;
}

bool preserves(const SymNet& net, const MatF& s) {
    MatF st = s.transpose();
    for (auto& c : net.coeff)
        if (st * c * s != c) return false;
    return true;
}

bool valid_involution(const SymNet& net, const MatF& s) {
    GF F = net.field;
    if (s * s != MatF::identity(F, 5)) return false;
    if (eigensignature(s) != std::pair<std::size_t, std::size_t>{2, 3}) return false;
    return preserves(net, s);
}

}  // namespace

InvolutionResult recover_involution(const SymNet& net) {
    GF F = net.field;
    InvolutionResult res;
    std::optional<MatF> q0inv;
    MatF q0;
    for_each_point(F, 2, [&](const std::vector<Fq>& t) {
        MatF M = net.at(t);
        auto inv = M.inverse();
        if (!inv) return true;
        res.t0 = t;
        q0 = M;
        q0inv = inv;
        return false;
    });
    if (!q0inv) throw std::invalid_argument("recover_involution: discriminant vanishes on all of P2(F)");

    // Linear conditions on the 25 entries of sigma.
    MatF sys(F, 0, 25);
    auto idx = [](int a, int b) { return static_cast<std::size_t>(a * 5 + b); };
    for (auto& c : net.coeff) {
        MatF psi = *q0inv * c;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                std::vector<Fq> row(25, F.zero());
                for (int k = 0; k < 5; ++k) {
                    row[idx(i, k)] += psi(k, j);
                    row[idx(k, j)] -= psi(i, k);
                }
                sys.append_row(row);
            }
    }
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            std::vector<Fq> row(25, F.zero());
            for (int k = 0; k < 5; ++k) {
                row[idx(k, i)] += q0(k, j);
                row[idx(k, j)] -= q0(i, k);
            }
            sys.append_row(row);
        }
    auto basis = sys.nullspace();
    res.commutant_dim = basis.size();
    MatF I = MatF::identity(F, 5);

    if (basis.size() <= 1) return res;
    if (basis.size() == 2 && F.characteristic() != 2) {
        MatF S = from_vector(F, basis[0]);
        // Pick a basis element not proportional to the identity.
        bool prop = true;
        for (int i = 0; i < 5 && prop; ++i)
            for (int j = 0; j < 5 && prop; ++j)
                if ((i != j && !S(i, j).is_zero()) || (i == j && S(i, i) != S(0, 0))) prop = false;
        if (prop) S = from_vector(F, basis[1]);
        // S^2 = a I + b S.
        MatF S2 = S * S;
        MatF lin(F, 25, 3);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                lin(idx(i, j), 0) = I(i, j);
                lin(idx(i, j), 1) = S(i, j);
                lin(idx(i, j), 2) = -S2(i, j);
            }
        auto rel = lin.nullspace();
        if (rel.size() != 1 || rel[0][2].is_zero()) return res;
        Fq a = rel[0][0] / rel[0][2], b = rel[0][1] / rel[0][2];
        Fq denom = b * b + a.times(4);
        if (denom.is_zero()) return res;
        auto beta = sqrt(F.of(4) / denom);
        if (!beta) {
            res.status = InvolutionStatus::field_too_small;
            return res;
        }
        for (Fq bt : {*beta, -*beta}) {
            Fq alpha = -(b * bt) / F.of(2);
            MatF sigma = I.scaled(alpha) + S.scaled(bt);
            if (valid_involution(net, sigma)) {
                res.status = InvolutionStatus::found;
                res.sigma = sigma;
                return res;
            }
        }
        return res;
    }
    if (basis.size() > 4) {
        res.status = InvolutionStatus::commutant_too_large;
        return res;
    }
    // Small commutant: enumerate it.
    std::uint64_t q = F.order(), total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) total *= q;
    std::vector<MatF> B;
    for (auto& v : basis) B.push_back(from_vector(F, v));
    for (std::uint64_t n = 1; n < total; ++n) {
        MatF sigma(F, 5, 5);
        std::uint64_t m = n;
        for (std::size_t i = basis.size(); i-- > 0;) {
            Fq c = F.element(m % q);
            m /= q;
            if (!c.is_zero()) sigma = sigma + B[i].scaled(c);
        }
        if (valid_involution(net, sigma)) {
            res.status = InvolutionStatus::found;
            res.sigma = sigma;
            return res;
        }
    }
    return res;
}

FixedPointReport fixed_point_check(const SymNet& net, const MatF& sigma, const GF& E, std::uint64_t budget) {
    GF F = net.field;
    MatF I = MatF::identity(F, 5);
    if (sigma == I || sigma == I.scaled(F.of(-1)) || sigma * sigma != I)
        throw std::invalid_argument("fixed_point_check needs a nontrivial involution");
    if (!preserves(net, sigma)) throw std::invalid_argument("sigma does not preserve the net");
    require_growth(E.order() * E.order(), budget, "fixed_point_check");
    FixedPointReport rep;
    auto restrict_to = [&](const MatF& eig) {
        auto basis = eig.nullspace();
        std::size_t d = basis.size();
        MatF P(F, 5, d);
        for (std::size_t j = 0; j < d; ++j)
            for (int i = 0; i < 5; ++i) P(i, j) = basis[j][i];
        std::vector<MatF> restricted;
        for (auto& c : net.coeff) restricted.push_back(P.transpose() * c * P);
        std::vector<PointF> pts;
        if (d == 0) return pts;
        MatF PE = lift(P, E);
        for (auto& z : quadric_zeros(restricted, E)) pts.emplace_back(PE.apply(z.x));
        return pts;
    };
    auto minus = restrict_to(sigma + I);
    auto plus = restrict_to(sigma - I);
    rep.minus_line_empty = minus.empty();
    rep.plus_plane_empty = plus.empty();
    rep.fixed_points = minus;
    rep.fixed_points.insert(rep.fixed_points.end(), plus.begin(), plus.end());
    rep.fixed_points = sorted_unique(rep.fixed_points);
    rep.fixed_point_free = rep.fixed_points.empty();
    return rep;
}

RankCensus rank_profile(const SymNet& net, const GF& E, std::uint64_t budget) {
    require_growth(projective_count(E.order(), 2), budget, "rank_profile");
    RankCensus census;
    for_each_point(E, 2, [&](const std::vector<Fq>& t) {
        census[static_cast<int>(net.at(t).rank())].emplace_back(t);
        return true;
    });
    return census;
}

bool no_plane_pair_members(const SymNet& net, const std::vector<GF>& fields) {
    if (!coefficients_independent(net)) return false;
    for (auto& E : fields) {
        bool ok = true;
        for_each_point(E, 2, [&](const std::vector<Fq>& t) {
            if (net.at(t).rank() <= 2) ok = false;
            return ok;
        });
        if (!ok) return false;
    }
    return true;
}

SymNet parse_net(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        lines.push_back(line);
    }
    if (lines.size() != 16) throw std::invalid_argument("net fixture needs a field tag and 15 linear forms, got " +
                                                         std::to_string(lines.size()) + " lines");
    FieldTag tag = parse_field_tag(lines[0]);
    if (tag.rational) throw std::invalid_argument("net fixtures must be over a finite field");
    SymNet net;
    net.field = GF(tag.p, tag.k);
    for (auto& c : net.coeff) c = MatF(net.field, 5, 5);
    std::size_t li = 1;
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) {
            auto f = parse_poly(net.field, 3, lines[li++], 1);
            if (f.degree() != 1) throw std::invalid_argument("net entries must be linear forms");
            for (int k = 0; k < 3; ++k) {
                Monomial m;
                m.e[k] = 1;
                net.coeff[k](i, j) = net.coeff[k](j, i) = f.coeff(m);
            }
        }
    if (!coefficients_independent(net)) throw std::invalid_argument("net coefficient matrices are dependent");
    return net;
}

std::string format_net(const SymNet& net) {
    std::ostringstream os;
    os << net.field.tag() << "\n";
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j)
            os << PolyF::linear(net.field, {net.coeff[0](i, j), net.coeff[1](i, j), net.coeff[2](i, j)}).str() << "\n";
    return os.str();
}

}  // namespace prym5
