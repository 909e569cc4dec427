#pragma once

#include "prym5/algebra.hpp"
#include "prym5/projective.hpp"
#include "prym5/random.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prym5 {

// Raised when an enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Block data of a net in adapted coordinates: a 2x2 and a 3x3 symmetric
// matrix of linear forms, each given by its three coefficient matrices, and
// the change of basis g.
struct BlockPair {
    std::array<MatF, 3> A;
    std::array<MatF, 3> B;
    MatF g;
};

// Net of quadrics in P4: phi(t) = t0*coeff[0] + t1*coeff[1] + t2*coeff[2].
struct SymNet {
    GF field;
    std::array<MatF, 3> coeff;
    std::optional<BlockPair> witness;

    // phi at a parameter point, in the field of the point.
    MatF at(const std::vector<Fq>& t) const;
    PolyMatrix<Fq> matrix() const;
    // The three quadrics x^T coeff[i] x in x0..x4.
    std::vector<PolyF> quadrics() const;
    std::vector<MatF> quadric_matrices() const { return {coeff.begin(), coeff.end()}; }
};

PolyF quadric_form(const MatF& M);

// g^T diag(A, B) g; throws when g is singular or a block has zero determinant.
SymNet make_block_net(const BlockPair& blocks);
BlockPair random_block_pair(Rng& rng, const GF& F);
// Net whose coefficient matrices are independent and whose determinant is not
// identically zero. Conditions on the base locus are left to the caller.
SymNet random_net(Rng& rng, const GF& F);

bool coefficients_independent(const SymNet& net);

struct Discriminant {
    PolyF gamma;
    // Every member singular: det(phi) vanishes identically.
    bool trigonal = false;
};

Discriminant discriminant_quintic(const SymNet& net);

// Points of P4(E) on all three quadrics. Cost is about |E|^3 chart solves.
std::vector<PointF> base_locus(const SymNet& net, const GF& E, std::uint64_t budget = kDefaultBudget);

// Jacobian of the three quadrics has rank 3 at every given point.
bool smoothness_check(const SymNet& net, const std::vector<PointF>& pts);

enum class InvolutionStatus { found, absent, field_too_small, commutant_too_large };
std::string to_string(InvolutionStatus s);

struct InvolutionResult {
    InvolutionStatus status = InvolutionStatus::absent;
    std::optional<MatF> sigma;
    std::size_t commutant_dim = 0;
    std::vector<Fq> t0;
};

// sigma with sigma^T phi sigma = phi, sigma^2 = 1 and a (-1)-eigenspace of
// dimension 2, found in the commutant of q0^{-1} phi_i intersected with
// {sigma : q0 sigma symmetric}.
InvolutionResult recover_involution(const SymNet& net);

// Dimensions of the (-1) and (+1) eigenspaces of an involution.
std::pair<std::size_t, std::size_t> eigensignature(const MatF& sigma);

struct FixedPointReport {
    bool fixed_point_free = true;
    // Base locus of the net restricted to P(V-) (a line) and P(V+) (a plane).
    bool minus_line_empty = true;
    bool plus_plane_empty = true;
    std::vector<PointF> fixed_points;
};

// Base points over E fixed by sigma. They lie on P(V-) or P(V+), so the net
// is restricted to each eigenspace and solved there.
FixedPointReport fixed_point_check(const SymNet& net, const MatF& sigma, const GF& E,
                                   std::uint64_t budget = kDefaultBudget);

// Rank of phi at every point of P2(E).
using RankCensus = std::map<int, std::vector<PointF>>;
RankCensus rank_profile(const SymNet& net, const GF& E, std::uint64_t budget = kDefaultBudget);

// Condition (i) plus a rank census over the fields given: no member of rank <= 2.
bool no_plane_pair_members(const SymNet& net, const std::vector<GF>& fields);

// Net fixture text: a field tag line then 15 linear forms in x0,x1,x2 for
// the upper triangle, row by row. Blank lines and '#' comments are ignored.
SymNet parse_net(const std::string& text);
std::string format_net(const SymNet& net);

}  // namespace prym5
