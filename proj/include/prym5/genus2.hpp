#pragma once

#include "prym5/algebra.hpp"
#include "prym5/net.hpp"
#include "prym5/projective.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace prym5 {

// y^2 = f(x) with deg f = 6 and f squarefree, over a prime field.
struct Genus2Curve {
    GF field;
    std::array<Fq, 7> f;  // f[i] is the coefficient of x^i
    // Field containing the six Weierstrass x-values (degree <= 4 over the
    // base), or invalid when the splitting field is larger.
    GF splitting;
    std::vector<Fq> weierstrass_x;

    Fq eval(const Fq& x) const;
    Univariate<Fq> poly(const GF& E) const;
};

Genus2Curve make_genus2(const GF& F, const std::vector<Fq>& coeffs);

// Point of Y: affine (x, y), or at infinity with y the leading value of y/x^3.
struct CurvePoint {
    bool infinite = false;
    Fq x, y;

    GF domain() const { return y.domain().valid_or(x.domain()); }
    CurvePoint conjugate(unsigned p) const { return {infinite, x.pow(p), y.pow(p)}; }
    CurvePoint involution() const { return {infinite, x, -y}; }
    bool weierstrass() const { return !infinite && y.is_zero(); }
    std::string str() const;

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        return a.infinite == b.infinite && a.x == b.x && a.y == b.y;
    }
    friend bool operator<(const CurvePoint& a, const CurvePoint& b) {
        if (a.infinite != b.infinite) return b.infinite;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

// All points of Y over E (a field containing the base field), affine points
// ordered by x then y, the points at infinity last.
std::vector<CurvePoint> curve_points(const Genus2Curve& Y, const GF& E);

// Point is defined over the prime field of E.
bool is_rational(const CurvePoint& P);

enum class DivisorKind { three_k, two_k_plus_d };

struct DivisorClassDeg6 {
    DivisorKind kind = DivisorKind::three_k;
    // For 2K+D: two rational affine non-Weierstrass points of Y, equal or
    // with distinct x.
    std::array<CurvePoint, 2> D{};
};

// Y in P4 by |L|. For 3K the sections are (1, x, x^2, x^3, y). For 2K+D with
// D = P1 + P2 they are (1, x, x^2, g, x g) where g = (y + l(x)) / ((x-x1)(x-x2))
// and l is the line through P1 and P2 in the (x, y) plane (the tangent line
// when P1 = P2).
class Genus2Embedding {
public:
    Genus2Embedding(Genus2Curve Y, DivisorClassDeg6 L);

    const Genus2Curve& curve() const { return Y_; }
    const DivisorClassDeg6& divisor() const { return L_; }
    bool three_k() const { return L_.kind == DivisorKind::three_k; }

    std::vector<Fq> map(const CurvePoint& P) const;
    PointF image(const CurvePoint& P) const { return PointF(map(P)); }
    // Tangent direction of the embedded curve at P.
    std::vector<Fq> tangent(const CurvePoint& P) const;
    std::vector<std::string> basis() const;

private:
    Genus2Curve Y_;
    DivisorClassDeg6 L_;
    Fq l0_, l1_;  // l(x) = l0 + l1 x
};

// Images of all points of Y over F_{q^2}; a Galois-closed sample.
std::vector<PointF> embedded_sample(const Genus2Embedding& emb);

// Web of quadrics: phi(t) = sum t_i coeff[i] over the base field.
struct SymWeb {
    GF field;
    std::array<MatF, 4> coeff;

    MatF at(const std::vector<Fq>& t) const;
    PolyMatrix<Fq> matrix() const;
};

// Nullspace of the quadric monomial evaluation matrix on Galois-closed points
// (lifted into one extension field). Throws when its dimension is not 4.
SymWeb quadric_web(const std::vector<PointF>& pts, const GF& base);

struct WebDiscriminant {
    PolyF det;  // quintic in the 4 web parameters
    PolyF plane;
    PolyF quartic;
};

// det of the web factored as plane * quartic; the plane is the first linear
// form over the base field dividing det. Throws when none exists.
WebDiscriminant web_discriminant(const SymWeb& web);

// No line spanned by two of the points contains a third.
bool trisecant_absence(const std::vector<PointF>& pts);

// Pairs of points of Y whose joining line lies on the quadric: pairs of
// rational points, conjugate pairs over F_{q^2}, and rational points whose
// tangent line lies on Q. Each pair is stored with first <= second.
struct PairDivisor {
    CurvePoint a, b;
    bool conjugate = false;
    friend bool operator==(const PairDivisor& u, const PairDivisor& v) { return u.a == v.a && u.b == v.b; }
    friend bool operator<(const PairDivisor& u, const PairDivisor& v) {
        if (!(u.a == v.a)) return u.a < v.a;
        return u.b < v.b;
    }
};

PairDivisor make_pair(const CurvePoint& P, const CurvePoint& Q);

// The line through u and v lies on x^T M x = 0.
bool line_on_quadric(const MatF& M, const std::vector<Fq>& u, const std::vector<Fq>& v);

std::vector<PairDivisor> bisecant_curve(const Genus2Embedding& emb, const MatF& Q);

// Even subsets of the six Weierstrass indices modulo complement, stored as
// the representative not containing index 5. The zero class is 0.
using TwoTorsionLabel = unsigned;
std::vector<TwoTorsionLabel> two_torsion_labels();

struct Admissibility {
    bool admissible = false;
    std::size_t rank = 0;
    bool rank_four_branch = false;
    // Weierstrass index pairs whose line lies on Q.
    std::vector<std::pair<int, int>> weierstrass_lines;
    // Bisecants of the canonical pencil found on Q among the samples.
    int pencil_lines = 0;
};

// For L = 3K. Rank 5 (or rank 4, flagged), none of the 15 Weierstrass-pair
// lines on Q, and three sample lines of the canonical pencil off Q.
Admissibility admissible_quadric(const Genus2Embedding& emb, const MatF& Q);

struct ResidualDivisor {
    // Binary quartic (variables x, z) whose roots are the x-coordinates of the
    // residual points.
    PolyF quartic;
    // Distinct-degree factors over the base field: factors[k-1] is the
    // product of the irreducible factors of degree k.
    std::vector<Univariate<Fq>> factors;
    // Residual points over F_{q^2} with multiplicities (p included if it
    // occurs beyond the forced tangency).
    std::vector<std::pair<CurvePoint, int>> support;
    // Order of vanishing of the hyperplane section at p.
    int multiplicity_at_p = 0;
    int section_degree = 0;
};

// Divisor of the hyperplane B_Q(p, .) on Y minus 2p, for L = 3K.
ResidualDivisor residual_divisor(const Genus2Embedding& emb, const MatF& Q, const CurvePoint& p);

// Residual pair of the hyperplane through the pair and the two points at
// infinity: the image of the pair under the involution of C.
PairDivisor involution_partner(const Genus2Embedding& emb, const PairDivisor& xi);

struct Trope {
    std::vector<Fq> plane;
    MatF basis;  // 4 x 3, columns span the plane
    PolyF conic;  // in the basis coordinates; restriction = conic^2
};

std::optional<Trope> trope_on_plane(const PolyF& quartic, const std::vector<Fq>& plane);
// Full scan of the planes of P3 over the field of the quartic; q <= 7.
std::vector<Trope> trope_planes(const PolyF& quartic);

// Coordinates (X, Y, Z, T) with X the trope plane and (Y, Z, T) the basis
// coordinates of the trope: x = X w + basis (Y, Z, T) with plane(w) = 1.
struct PolarMap {
    Trope trope;
    MatF to_adapted;  // X' = to_adapted x
    PolyF adapted;    // the quartic in adapted coordinates
    PolyF F3;         // coefficient of X^1, a cubic in (Y, Z, T)
    PolyF C2;         // conic with F(0, Y, Z, T) = C2^2
    std::array<PolyF, 4> images;  // cubics for the adapted unit vectors
    std::size_t rank = 0;
};

PolarMap polar_cubic_map(const PolyF& quartic, const Trope& trope);
// Image cubic of a point given in original coordinates.
PolyF polar_cubic(const PolarMap& pm, const std::vector<Fq>& x);
PolyF polar_cubic_adapted(const PolarMap& pm, const std::vector<Fq>& xa);

// E1 in the plane x3 = x4 = 0 with coordinates (x0, x1, x2), E2 in the plane
// x1 = x2 = 0 with coordinates (x0, x3, x4), the marked points both sent to
// e0 = (1:0:0:0:0).
struct EllipticUnion {
    GF field;
    PolyF E1, E2;
    PointF P;  // common point of the two planes
    std::vector<PointF> points;
    SymWeb web;
};

EllipticUnion elliptic_union_web(const PolyF& E1, const PointF& p1, const PolyF& E2, const PointF& p2);

// Fixture text: field tag line, seven coefficients f0..f6, and optionally
// "3K" or "2K+D x1 y1 x2 y2".
struct Genus2Fixture {
    Genus2Curve curve;
    DivisorClassDeg6 divisor;
};
Genus2Fixture parse_genus2(const std::string& text);

// E1 cubic, marked point, E2 cubic, marked point, one per line after the tag.
EllipticUnion parse_elliptic_union(const std::string& text);

}  // namespace prym5
