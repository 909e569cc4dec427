#pragma once

#include "prym5/genus2.hpp"
#include "prym5/net.hpp"
#include "prym5/quintic.hpp"
#include "prym5/spacecurve.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace prym5 {

// HF(d) of the ideal of three quadrics in P4 for d = 2..6.
std::map<int, long long> hilbert_signature(const SymNet& net);
bool hilbert_signature_holds(const std::map<int, long long>& hf);

// A net is admissible when its coefficients are independent, no member over
// F or F_{q^2} has rank <= 2, det(phi) is not identically zero and the base
// locus is smooth at its points over F and F_{q^2}.
struct Admission {
    std::string failure;  // empty when admissible
    std::vector<PointF> base_F, base_E;
    bool ok() const { return failure.empty(); }
};
Admission check_admissible(const SymNet& net, std::uint64_t budget = kDefaultBudget);

struct NetAnalysis {
    Admission admission;
    Discriminant disc;
    bool squarefree = false;
    SplitReport split;
    bool smooth = false;
    InvolutionResult involution;
    std::pair<std::size_t, std::size_t> signature{0, 0};
    bool fixed_point_free_F = false;
    bool fixed_point_free_E = false;
    std::map<int, long long> hilbert;
};

NetAnalysis analyze_net(const SymNet& net, std::uint64_t budget = kDefaultBudget);

struct DrawStats {
    int drawn = 0;
    std::map<std::string, int> rejected;
};

// Block nets from the stream until one is admissible (and, if asked, has a
// rational base point). Gives up after max_draws.
std::optional<std::pair<SymNet, Admission>> draw_admissible_block_net(Rng& rng, const GF& F, DrawStats& stats,
                                                                      bool need_rational_point = false,
                                                                      int max_draws = 200,
                                                                      std::uint64_t budget = kDefaultBudget);

// Block net with a singular base point over F, found by drawing from the stream.
std::optional<SymNet> draw_singular_block_net(Rng& rng, const GF& F, int max_draws = 500,
                                              std::uint64_t budget = kDefaultBudget);

struct Window {
    double lo = 0, hi = 0;
    bool contains(double x) const { return lo <= x && x <= hi; }
};
// Hasse-Weil window for a genus-g curve over F_q widened by slack.
Window hasse_weil_window(std::uint64_t q, int genus, double slack);

struct Pipeline316 {
    std::uint64_t seed = 0;
    DrawStats draws;
    std::optional<SymNet> net;
    bool smooth = false;
    bool involution_found = false;
    bool fixed_point_free = false;
    std::size_t curve_points_F = 0, curve_points_E = 0;
    PointF centre;
    std::size_t collisions = 0;
    std::size_t meets_line = 0;  // sample points on the exceptional line
    SecantCensus census;
    std::size_t cubics = 0;
    std::size_t double_ideal7 = 0;
    int max_quadrisecants_per_point = 0;
    Window window;

    std::uint64_t quadrisecants() const { return census.at_least(4); }
    bool no_quintisecant() const { return census.at_least(5) == 0; }
    bool passed() const;
};

// Block net -> canonical curve in P4 -> projection from a rational point ->
// census of the projected curve together with the image of P(V-).
Pipeline316 run_pipeline_3_16(const GF& F, std::uint64_t seed, bool singular = false,
                              std::uint64_t budget_points = kDefaultBudget, std::uint64_t budget_lines = 10'000'000);

struct PolarChecks {
    std::size_t rank = 0;
    bool unit_point_gives_F3 = false;
    bool plane_points_divisible = false;
    bool nodes_on_images = false;
    std::size_t nodes_on_trope = 0;
    bool passed() const { return rank == 4 && unit_point_gives_F3 && plane_points_divisible && nodes_on_images; }
};

// Polar map checks on a trope with `samples` random points: rank, the image of
// the adapted unit point, images of points of the trope plane divisible by
// C2, and images vanishing at the nodes of the quartic on the trope plane.
PolarChecks check_polar(const PolyF& quartic, const Trope& trope, const std::vector<SingularPoint>& nodes, Rng& rng,
                        int samples = 20);

struct Genus2Run {
    Genus2Fixture fixture;
    std::size_t sample_points = 0;
    bool trisecant_free = false;
    SymWeb web;
    WebDiscriminant disc;
    std::vector<SingularPoint> quartic_singular;
    PolyF section;
    std::vector<SingularPoint> section_singular;
    bool tropes_scanned = false;
    std::vector<Trope> tropes;
    std::vector<PolarChecks> polar;
    // Optional quadric of the web.
    std::optional<std::vector<Fq>> quadric;
    std::optional<Admissibility> admissibility;
    std::vector<PairDivisor> bisecants;
    Window bisecant_window;

    bool all_nodes() const;
};

Genus2Run run_genus2(const Genus2Fixture& fx, std::optional<std::vector<Fq>> quadric, std::uint64_t seed);

struct LiaisonRun {
    std::uint64_t seed = 0;
    LiaisonReport report;
    bool passed() const;
};

// Random cubic cones over F sharing L = {z = t = 0}.
LiaisonRun run_liaison(const GF& F, std::uint64_t seed);

}  // namespace prym5
