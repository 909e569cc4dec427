#pragma once

#include "prym5/spacecurve.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

// Brute-force counterparts of library routines, shared by the unit and
// acceptance tests.
namespace prym5::testing {

inline std::string slurp_fixture(const std::string& name) {
    std::ifstream in(std::string(PRYM5_FIXTURE_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline bool collinear(const std::vector<Fq>& a, const std::vector<Fq>& b, const std::vector<Fq>& c) {
    return MatF::from_rows(a[0].domain(), {a, b, c}).rank() <= 2;
}

// Incidence counts from the lines spanned by pairs of sample points and by a
// sample point with a point of a component line.
inline std::map<int, std::uint64_t> pairwise_census(const SpaceCurveSample& C) {
    GF F = C.base;
    std::vector<std::vector<Fq>> pts;
    for (auto& P : C.points) pts.push_back(P.x);
    std::vector<std::vector<Fq>> comp_pts;
    for (auto& L : C.lines)
        for_each_point(F, 1, [&](const std::vector<Fq>& st) {
            std::vector<Fq> x(4, F.zero());
            for (int i = 0; i < 4; ++i) x[i] = st[0] * L.span(0, i) + st[1] * L.span(1, i);
            comp_pts.push_back(x);
            return true;
        });
    std::set<std::vector<Fq>> seen;
    std::map<int, std::uint64_t> out;
    auto consider = [&](const std::vector<Fq>& a, const std::vector<Fq>& b) {
        ProjLine M = ProjLine::through(a, b);
        for (auto& L : C.lines)
            if (L == M) return;
        if (!seen.insert(M.key()).second) return;
        const auto& u = M.span;
        int n = 0;
        for (auto& x : pts) n += collinear(u.row(0), u.row(1), x);
        for (auto& L : C.lines) {
            if (MatF::from_rows(F, {u.row(0), u.row(1), L.span.row(0), L.span.row(1)}).rank() != 3) continue;
            bool shared = false;
            for (auto& x : pts) shared = shared || (collinear(u.row(0), u.row(1), x) && L.contains(x));
            if (!shared) ++n;
        }
        if (n >= 2) ++out[n];
    };
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) consider(pts[i], pts[j]);
        for (auto& y : comp_pts)
            if (PointF(y) != PointF(pts[i])) consider(pts[i], y);
    }
    return out;
}

// Rank of the degree-d monomial evaluation matrix at the points.
inline std::size_t interpolation_rank(const std::vector<PointF>& pts, int nvars, int d) {
    auto mons = monomials(nvars, d);
    GF E = pts.front().domain();
    MatF M(E, pts.size(), mons.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto row = monomial_row(mons, pts[i].x);
        for (std::size_t j = 0; j < mons.size(); ++j) M(i, j) = row[j];
    }
    return M.rank();
}

}  // namespace prym5::testing
