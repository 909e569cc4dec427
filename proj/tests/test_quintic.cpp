#include "doctest.h"
#include "prym5/pipeline.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace prym5;
using prym5::testing::slurp_fixture;
using prym5::testing::random_form;
using prym5::testing::random_vector;

namespace {

// Singular points by evaluating the form and its gradient everywhere.
std::vector<PointF> brute_force_singular(const PolyF& f, const GF& E) {
    PolyF fe = lift(f, E);
    std::vector<PolyF> grad;
    for (int i = 0; i < 3; ++i) grad.push_back(fe.derivative(i));
    std::vector<PointF> out;
    for_each_point(E, 2, [&](const std::vector<Fq>& x) {
        bool sing = fe.evaluate(x).is_zero();
        for (auto& g : grad) sing = sing && g.evaluate(x).is_zero();
        if (sing) out.push_back(PointF(x));
        return true;
    });
    return sorted_unique(out);
}

}  // namespace

TEST_CASE("discriminant of the golden net is frozen") {
    SymNet net = parse_net(slurp_fixture("net_block_f11.txt"));
    PolyF gamma = discriminant_quintic(net).gamma;
    // Frozen after checking against det(phi(t)) at 100 points (test_net).
    CHECK(gamma.size() == 20);
    CHECK(gamma.degree() == 5);
    auto sr = split_report(gamma);
    REQUIRE(sr.base_verdict == SplitVerdict::split);
    CHECK(sr.base->conic * sr.base->cubic == gamma);
    CHECK(sr.base->conic.str() == "1*x0^2+5*x0*x1+3*x0*x2+3*x1^2+1*x1*x2+7*x2^2");
}

TEST_CASE("singular points agree with brute force") {
    GF F(7), E(7, 2);
    Rng rng(21);
    for (int trial = 0; trial < 3; ++trial) {
        PolyF c = random_form(rng, F, 3, 2, true), k = random_form(rng, F, 3, 3, true);
        PolyF f = c * k;
        std::vector<PointF> got;
        for (auto& s : singular_points(f, E)) got.push_back(s.point);
        CHECK(sorted_unique(got) == brute_force_singular(f, E));
    }
}

TEST_CASE("conic-cubic split of a constructed product") {
    GF F(11);
    Rng rng(4);
    PolyF c = random_form(rng, F, 3, 2, true), k = random_form(rng, F, 3, 3, true);
    auto split = conic_cubic_split(c * k);
    REQUIRE(split);
    CHECK(split->conic * split->cubic == c * k);
    auto with = conic_cubic_split_with(c * k, c);
    REQUIRE(with);
    CHECK(with->cubic * c == c * k);
}

TEST_CASE("random nets do not split") {
    SymNet net = parse_net(slurp_fixture("net_random_f7.txt"));
    auto sr = split_report(discriminant_quintic(net).gamma);
    CHECK(sr.base_verdict == SplitVerdict::no_split);
    CHECK(recover_involution(net).status == InvolutionStatus::absent);
}

TEST_CASE("lines in a curve") {
    GF F(7), E(7, 2);
    Rng rng(2);
    PolyF line = PolyF::linear(F, {F.one(), F.of(3), F.of(5)});
    PolyF q = random_form(rng, F, 3, 4, true);
    auto lines = lines_in_curve(line * q, F);
    CHECK(std::find(lines.begin(), lines.end(), line) != lines.end());
    for (auto& l : lines) CHECK(exact_divide(line * q, l).has_value());
}

TEST_CASE("split verdict over the quadratic extension") {
    GF F(11);
    Rng rng(6);
    SymNet net = make_block_net(random_block_pair(rng, F));
    auto sr = split_report(discriminant_quintic(net).gamma);
    CHECK(sr.base_verdict == SplitVerdict::split);
    CHECK(sr.quadratic_verdict == SplitVerdict::split);
}

TEST_CASE("conic search is budgeted above p = 13") {
    GF F(17);
    Rng rng(1);
    PolyF f = random_form(rng, F, 3, 2, true) * random_form(rng, F, 3, 3, true);
    CHECK_THROWS_AS(conic_cubic_split(f), BudgetExceeded);
}
