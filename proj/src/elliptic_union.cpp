#include "prym5/genus2.hpp"

namespace prym5 {

namespace {

// Invertible 3x3 matrix sending p to (1:0:0).
MatF send_to_origin(const PointF& p) {
    GF F = p.domain();
    MatF B(F, 3, 3);
    for (int i = 0; i < 3; ++i) B(i, 0) = p[i];
    // Complete p with two unit vectors to a basis.
    int col = 1;
    for (int u = 0; u < 3 && col < 3; ++u) {
        MatF T = B;
        T(u, col) = F.one();
        MatF S(F, 3, col + 1);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j <= col; ++j) S(i, j) = T(i, j);
        if (S.rank() == static_cast<std::size_t>(col + 1)) B = T, ++col;
    }
    return *B.inverse();
}

void require_smooth_cubic(const PolyF& E, const PointF& p, const GF& ext) {
    if (E.nvars() != 3 || E.degree() != 3) throw std::invalid_argument("expected a ternary cubic");
    if (!E.evaluate(p.x).is_zero()) throw std::invalid_argument("marked point is not on its cubic");
    if (!singular_locus(E, ext).empty()) throw std::invalid_argument("cubic is singular");
}

}  // namespace

EllipticUnion elliptic_union_web(const PolyF& E1, const PointF& p1, const PolyF& E2, const PointF& p2) {
    GF F = E1.domain();
    if (E2.domain() != F || p1.domain() != F || p2.domain() != F)
        throw std::invalid_argument("elliptic union data must share one field");
    GF ext(F.characteristic(), 2 * F.degree());
    require_smooth_cubic(E1, p1, ext);
    require_smooth_cubic(E2, p2, ext);
    EllipticUnion U;
    U.field = F;
    U.E1 = E1;
    U.E2 = E2;
    std::vector<Fq> e0(5, F.zero());
    e0[0] = F.one();
    U.P = PointF(e0);
    MatF T1 = lift(send_to_origin(p1), ext), T2 = lift(send_to_origin(p2), ext);
    Fq z = ext.zero();
    for (auto& q : common_zeros({E1}, ext)) {
        auto v = T1.apply(q.x);
        U.points.emplace_back(std::vector<Fq>{v[0], v[1], v[2], z, z});
    }
    for (auto& q : common_zeros({E2}, ext)) {
        auto v = T2.apply(q.x);
        U.points.emplace_back(std::vector<Fq>{v[0], z, z, v[1], v[2]});
    }
    U.points = sorted_unique(U.points);
    U.web = quadric_web(U.points, F);
    return U;
}

}  // namespace prym5
