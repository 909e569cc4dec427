#pragma once

#include "prym5/algebra.hpp"
#include "prym5/net.hpp"
#include "prym5/projective.hpp"

#include <map>
#include <optional>
#include <vector>

namespace prym5 {

// Line of P3 over the base field, stored as its 2 x 4 reduced echelon basis.
struct ProjLine {
    MatF span;

    static ProjLine through(const std::vector<Fq>& a, const std::vector<Fq>& b);
    // Two linear forms cutting out the line.
    MatF equations() const;
    bool contains(const std::vector<Fq>& x) const;
    std::vector<Fq> key() const;
    friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.span == b.span; }
};

// Points of a curve in P3 over F_q and F_{q^2} (all lifted to one field),
// plus whole line components over F_q.
struct SpaceCurveSample {
    GF base;
    std::vector<PointF> points;
    std::vector<ProjLine> lines;
};

struct Projection {
    SpaceCurveSample image;
    MatF matrix;  // 4 x 5 with kernel the centre
    // Pairs of points identified by the projection (collinear with the centre).
    std::size_t collisions = 0;
    PointF tangent_image;
};

// Projects the points of a curve in P4 from a centre on it. The centre itself
// is replaced by the image of its tangent line, taken from the kernel of the
// Jacobian of the given equations.
Projection project_from_point(const std::vector<PointF>& curve, const PointF& centre,
                              const std::vector<PolyF>& equations, const GF& base);

struct SecantCensus {
    std::uint64_t lines_scanned = 0;
    // Number of lines of P3(F_q) meeting the sample in exactly k points, k >= 2.
    std::map<int, std::uint64_t> by_incidence;
    // Lines meeting the sample in at least four points.
    std::vector<std::pair<ProjLine, int>> rich;

    std::uint64_t at_least(int k) const;
};

// Scans every line of P3 over the base field; line components of the sample
// are excluded as candidates and count as one incidence where they meet.
SecantCensus secant_census(const SpaceCurveSample& C, std::uint64_t budget = 10'000'000);

// Largest number of >= 4-secant lines through one F_q-rational point of the sample.
int max_quadrisecants_through_rational_point(const SpaceCurveSample& C, const SecantCensus& census);

// Dimension of the degree-d forms vanishing on the sample.
std::size_t forms_through(const SpaceCurveSample& C, int d);
inline std::size_t cubic_through(const SpaceCurveSample& C) { return forms_through(C, 3); }

// Degree-d forms vanishing with all first partials on the sample: dimension
// and a basis (over the sample field).
std::size_t double_ideal_dimension(const SpaceCurveSample& C, int d = 7);
std::vector<PolyF> double_ideal_basis(const SpaceCurveSample& C, int d);

// 2g - 2 for a k-sheeted cover, from Segre's count.
long long segre_genus(long long k, long long degC, long long degS, long long sigma);

// a k^2 + b k + c = 0 with a > 0, the condition segre_genus = twice_g_minus_2.
struct Quadratic {
    long long a, b, c;
    std::vector<long long> integer_roots() const;
};
Quadratic segre_quadratic(long long twice_g_minus_2, long long degC, long long degS, long long sigma);

struct RuledNumerology {
    long long P;
    long long nodes;
};
RuledNumerology ruled_numerology(long long n, long long p);

// Maximal arithmetic genus of a nondegenerate degree-n curve in P3.
long long castelnuovo_bound(long long n);

struct LiaisonReport {
    std::vector<PolyF> cones;  // the two cubic cones in (x, y, z, t)
    std::vector<PointF> residual_points;  // over F_{q^2}, off L
    std::map<int, long long> complete_intersection_hf;
    std::map<int, long long> residual_hf;  // rank of the interpolation matrix
    long long residual_degree = 0;  // HF slope of the residual points
    std::vector<PointF> vertices;
    std::vector<bool> vertex_on_curve;
    std::vector<bool> vertex_singular;
};

// Cones over g1(y, z, t) with vertex (1:0:0:0) and g2(x, z, t) with vertex
// (0:1:0:0), both containing L = {z = t = 0}. Residual curve points are
// enumerated over the quadratic extension.
LiaisonReport cone_liaison(const PolyF& g1, const PolyF& g2);

}  // namespace prym5
