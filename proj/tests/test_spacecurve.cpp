#include "doctest.h"
#include "prym5/pipeline.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <map>
#include <set>

using namespace prym5;
using prym5::testing::pairwise_census;
using prym5::testing::random_form;
using prym5::testing::random_vector;

namespace {

std::vector<Fq> random_point(Rng& rng, const GF& F) {
    while (true) {
        auto v = random_vector(rng, F, 4);
        if (normalize_in_place(v)) return v;
    }
}

SpaceCurveSample sample(const GF& F, std::vector<std::vector<Fq>> pts) {
    SpaceCurveSample C{F, {}, {}};
    for (auto& x : pts) C.points.push_back(PointF(x));
    C.points = sorted_unique(C.points);
    return C;
}

}  // namespace

TEST_CASE("secant census agrees with the pairwise oracle") {
    GF F(5);
    Rng rng(17);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<std::vector<Fq>> pts;
        for (int i = 0; i < 30; ++i) pts.push_back(random_point(rng, F));
        // Force some rich lines.
        auto a = random_point(rng, F), b = random_point(rng, F);
        for (int s = 0; s < 4; ++s) {
            std::vector<Fq> x(4);
            for (int i = 0; i < 4; ++i) x[i] = a[i] + F.of(s) * b[i];
            if (normalize_in_place(x)) pts.push_back(x);
        }
        SpaceCurveSample C = sample(F, pts);
        REQUIRE(C.points.size() <= 50);
        if (trial % 2) C.lines.push_back(ProjLine::through(random_point(rng, F), random_point(rng, F)));
        CAPTURE(trial);
        auto census = secant_census(C);
        CHECK(census.lines_scanned == 806);
        CHECK(census.by_incidence == pairwise_census(C));
    }
}

TEST_CASE("census budget") {
    SpaceCurveSample C{GF(11), {}, {}};
    CHECK_THROWS_AS(secant_census(C, 1000), BudgetExceeded);
}

TEST_CASE("forms through constructed samples") {
    GF F(11);
    Rng rng(3);
    std::vector<std::vector<Fq>> general;
    for (int i = 0; i < 15; ++i) general.push_back(random_point(rng, F));
    auto eight = sample(F, {general.begin(), general.begin() + 8});
    CHECK(forms_through(eight, 2) == 2);
    CHECK(cubic_through(eight) == 12);
    CHECK(forms_through(sample(F, general), 2) == 0);

    // Twisted cubic: three quadrics, ten cubics.
    std::vector<std::vector<Fq>> tc;
    for (std::uint64_t t = 0; t < 11; ++t) {
        Fq s = F.element(t);
        tc.push_back({F.one(), s, s * s, s * s * s});
    }
    tc.push_back({F.zero(), F.zero(), F.zero(), F.one()});
    auto twisted = sample(F, tc);
    CHECK(forms_through(twisted, 2) == 3);
    CHECK(cubic_through(twisted) == 10);

    // Points on a cubic surface.
    PolyF S = random_form(rng, F, 4, 3, true);
    std::vector<std::vector<Fq>> on;
    for_each_point(F, 3, [&](const std::vector<Fq>& x) {
        if (S.evaluate(x).is_zero()) on.push_back(x);
        return true;
    });
    CHECK(cubic_through(sample(F, on)) == 1);
}

TEST_CASE("projected pipeline curve") {
    GF F(11), E(11, 2);
    Rng rng(1);
    DrawStats stats;
    auto drawn = draw_admissible_block_net(rng, F, stats, true);
    REQUIRE(drawn);
    auto& [net, adm] = *drawn;
    PointF c = adm.base_F.front();
    auto pr = project_from_point(adm.base_E, c, net.quadrics(), F);
    CHECK(pr.collisions == 0);
    CHECK(pr.image.points.size() == adm.base_E.size());
    auto ker = pr.matrix.nullspace();
    REQUIRE(ker.size() == 1);
    CHECK(PointF(ker[0]) == c);

    auto inv = recover_involution(net);
    REQUIRE(inv.sigma);
    auto vminus = (*inv.sigma + MatF::identity(F, 5)).nullspace();
    ProjLine L = ProjLine::through(pr.matrix.apply(vminus[0]), pr.matrix.apply(vminus[1]));
    SpaceCurveSample C = pr.image;
    C.lines.push_back(L);
    CHECK(double_ideal_dimension(C, 7) == 4);
    CHECK(cubic_through(C) == 0);

    // Holdout: the forms found without the last ten points still vanish
    // doubly there.
    SpaceCurveSample held = C;
    std::vector<PointF> out(held.points.end() - 10, held.points.end());
    held.points.resize(held.points.size() - 10);
    auto basis = double_ideal_basis(held, 7);
    CHECK(basis.size() == 4);
    for (auto& f : basis)
        for (auto& P : out) {
            auto x = lift(P.x, f.domain());
            CHECK(f.evaluate(x).is_zero());
            for (int v = 0; v < 4; ++v) CHECK(f.derivative(v).evaluate(x).is_zero());
        }
}

TEST_CASE("pipeline seeds have no quintisecant and few quadrisecants per point") {
    GF F(11);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        CAPTURE(seed);
        auto r = run_pipeline_3_16(F, seed);
        CHECK(r.passed());
        CHECK(r.no_quintisecant());
        CHECK(r.max_quadrisecants_per_point <= 2);
        CHECK(r.meets_line == 1);
    }
}

TEST_CASE("numerology") {
    auto q = segre_quadratic(8, 8, 3, 0);
    CHECK((q.a == 3 && q.b == -17 && q.c == 24));
    CHECK(q.integer_roots() == std::vector<long long>{3});
    CHECK(segre_genus(3, 8, 3, 0) == 8);
    auto q1 = segre_quadratic(8, 8, 3, 1);
    CHECK((q1.a == 3 && q1.b == -19 && q1.c == 24));
    auto q7 = segre_quadratic(8, 7, 3, 0);
    CHECK((q7.a == 3 && q7.b == -15 && q7.c == 22));
    CHECK(q7.integer_roots().empty());
    auto q71 = segre_quadratic(8, 7, 3, 1);
    CHECK((q71.a == 3 && q71.b == -17 && q71.c == 22));
    CHECK(q71.integer_roots() == std::vector<long long>{2});
    CHECK(ruled_numerology(6, 2).P == 5);
    CHECK(ruled_numerology(6, 3).P == 6);
    CHECK(ruled_numerology(6, 2).nodes == 8);
    std::vector<long long> cast;
    for (int n = 4; n <= 7; ++n) cast.push_back(castelnuovo_bound(n));
    CHECK(cast == std::vector<long long>{1, 2, 4, 6});
    CHECK(castelnuovo_bound(8) == 9);
}

TEST_CASE("cone liaison") {
    GF F(11);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        CAPTURE(seed);
        auto run = run_liaison(F, seed);
        CHECK(run.passed());
        for (int d = 4; d <= 7; ++d) CHECK(run.report.complete_intersection_hf.at(d) == 9 * d - 9);
        for (int d = 2; d <= 5; ++d) CHECK(run.report.residual_hf.at(d) == 8 * d - 6);
    }
    // A cone over a cubic with a y^3 term does not contain z = t = 0.
    PolyF g = parse_poly(F, 3, "x0^3+x1^3+x2^3");
    CHECK_THROWS_AS(cone_liaison(g, parse_poly(F, 3, "x1^3+x0*x2^2")), std::invalid_argument);
}
