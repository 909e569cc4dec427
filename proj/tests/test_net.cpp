#include "doctest.h"
#include "prym5/pipeline.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace prym5;
using prym5::testing::slurp_fixture;
using prym5::testing::random_vector;

namespace {

Fq quadric_value(const MatF& M, const std::vector<Fq>& x) {
    auto Mx = lift(M, x[0].domain()).apply(x);
    Fq s = x[0].domain().zero();
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * Mx[i];
    return s;
}

// Every point of P^{n-1}(F) checked against every quadric.
std::vector<PointF> brute_force_zeros(const std::vector<MatF>& qs, const GF& F, int n) {
    std::vector<PointF> out;
    for_each_point(F, n - 1, [&](const std::vector<Fq>& x) {
        bool all = true;
        for (auto& M : qs) all = all && quadric_value(M, x).is_zero();
        if (all) out.push_back(PointF(x));
        return true;
    });
    return sorted_unique(out);
}

MatF symmetric(const GF& F, std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<Fq>> r;
    for (auto& row : rows) {
        r.emplace_back();
        for (auto v : row) r.back().push_back(F.of(v));
    }
    return MatF::from_rows(F, r);
}

}  // namespace

TEST_CASE("base locus agrees with brute-force enumeration") {
    for (unsigned p : {5u, 7u}) {
        GF F(p);
        Rng rng(p);
        for (int trial = 0; trial < 3; ++trial) {
            SymNet net = make_block_net(random_block_pair(rng, F));
            auto got = sorted_unique(base_locus(net, F));
            CHECK(got == brute_force_zeros(net.quadric_matrices(), F, 5));
        }
    }
}

TEST_CASE("quadric zeros over an extension agree with brute force") {
    GF F(3), E(3, 2);
    Rng rng(11);
    SymNet net = random_net(rng, F);
    std::vector<MatF> two{net.coeff[0], net.coeff[1]};
    CHECK(sorted_unique(quadric_zeros(two, E)) == brute_force_zeros(two, E, 5));
}

TEST_CASE("fixed points of the involution agree with brute force") {
    GF F(7);
    Rng rng(3);
    // A block vanishing at (1, 0) for every parameter puts a point of P(V-)
    // on the base locus.
    BlockPair b = random_block_pair(rng, F);
    for (int k = 0; k < 3; ++k) {
        Fq a = rng.nonzero(F), c = rng.element(F);
        b.A[k] = symmetric(F, {{0, 0}, {0, 0}});
        b.A[k](0, 1) = b.A[k](1, 0) = a;
        b.A[k](1, 1) = c;
    }
    SymNet net = make_block_net(b);
    auto inv = recover_involution(net);
    REQUIRE(inv.status == InvolutionStatus::found);
    const MatF& s = *inv.sigma;
    auto report = fixed_point_check(net, s, F);
    std::vector<PointF> expected;
    for (auto& P : base_locus(net, F))
        if (PointF(s.apply(P.x)) == P) expected.push_back(P);
    CHECK_FALSE(report.fixed_point_free);
    CHECK_FALSE(report.minus_line_empty);
    CHECK(sorted_unique(report.fixed_points) == sorted_unique(expected));
    CHECK(!expected.empty());
}

TEST_CASE("admissible block nets have free involutions of signature (2,3)") {
    GF F(11);
    Rng rng(5);
    DrawStats stats;
    for (int i = 0; i < 3; ++i) {
        auto drawn = draw_admissible_block_net(rng, F, stats);
        REQUIRE(drawn);
        auto a = analyze_net(drawn->first);
        CHECK(a.split.base_verdict == SplitVerdict::split);
        CHECK(a.signature == std::pair<std::size_t, std::size_t>{2, 3});
        CHECK(a.fixed_point_free_F);
        CHECK(a.fixed_point_free_E);
    }
}

TEST_CASE("net text round trip") {
    GF F(11);
    Rng rng(8);
    SymNet net = random_net(rng, F);
    SymNet back = parse_net(format_net(net));
    for (int k = 0; k < 3; ++k) CHECK(back.coeff[k] == net.coeff[k]);
    std::string text = slurp_fixture("net_block_f11.txt");
    CHECK(format_net(parse_net(text)) == text.substr(text.find('\n') + 1));
    CHECK_THROWS_AS(parse_net(slurp_fixture("malformed_net.txt")), std::invalid_argument);
}

TEST_CASE("discriminant agrees with evaluation at 100 points") {
    for (auto name : {"net_block_f11.txt", "net_block_f7.txt", "net_random_f7.txt"}) {
        SymNet net = parse_net(slurp_fixture(name));
        GF E(net.field.characteristic(), 2);
        PolyF gamma = discriminant_quintic(net).gamma;
        Rng rng(100);
        for (int i = 0; i < 100; ++i) {
            auto t = random_vector(rng, E, 3);
            CHECK(lift(gamma, E).evaluate(t) == net.at(t).determinant());
        }
    }
}

TEST_CASE("Hilbert function agrees with the interpolation rank on the base locus") {
    SymNet net = parse_net(slurp_fixture("net_block_f11.txt"));
    GF E(11, 2);
    auto pts = base_locus(net, E);
    // 8d - 4 <= 44 conditions for d <= 6; the guard keeps the rank meaningful.
    REQUIRE(pts.size() > 48);
    auto gens = net.quadrics();
    for (int d = 2; d <= 6; ++d)
        CHECK(hilbert_function<Fq>(net.field, 5, gens, d) ==
              static_cast<long long>(testing::interpolation_rank(pts, 5, d)));
}

TEST_CASE("admissibility rejects plane-pair members and singular base loci") {
    GF F(11);
    Rng rng(9);
    SymNet net = random_net(rng, F);
    // x0*x1 has rank 2.
    net.coeff[0] = MatF(F, 5, 5);
    net.coeff[0](0, 1) = net.coeff[0](1, 0) = F.one();
    CHECK(check_admissible(net).failure == "rank_le_2_member");

    Rng srng(1);
    auto singular = draw_singular_block_net(srng, F);
    REQUIRE(singular);
    CHECK_FALSE(check_admissible(*singular).ok());
}

TEST_CASE("Hilbert signature of smooth fixtures") {
    for (auto name : {"net_block_f11.txt", "net_block_f7.txt", "net_random_f7.txt"}) {
        SymNet net = parse_net(slurp_fixture(name));
        CHECK(check_admissible(net).ok());
        CHECK(hilbert_signature_holds(hilbert_signature(net)));
    }
}
