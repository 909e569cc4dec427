#include "doctest.h"
#include "prym5/poly.hpp"
#include "support.hpp"

#include <map>

using namespace prym5;
using prym5::testing::random_form;

namespace {

// Term-by-term product without the sorted-merge machinery.
std::map<std::array<std::uint8_t, kMaxVars>, std::uint64_t> naive_product(const PolyF& a, const PolyF& b) {
    std::map<std::array<std::uint8_t, kMaxVars>, Fq> acc;
    for (auto& [ma, ca] : a.terms())
        for (auto& [mb, cb] : b.terms()) acc[(ma * mb).e] += ca * cb;
    std::map<std::array<std::uint8_t, kMaxVars>, std::uint64_t> out;
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out[m] = c.index();
    return out;
}

}  // namespace

TEST_CASE("difference of squares and identity") {
    GF F(7);
    auto x = PolyF::variable(F, 3, 0), y = PolyF::variable(F, 3, 1);
    CHECK(((x + y) * (x - y)) == (x * x - y * y));
    auto p = parse_poly(F, 3, "3*x0^2*x2+x1^3");
    CHECK((p * PolyF::constant(F, 3, F.one())) == p);
}

TEST_CASE("product matches a naive multiplier") {
    GF F(11);
    Rng rng(1);
    for (int t = 0; t < 50; ++t) {
        auto a = random_form(rng, F, 3, 2), b = random_form(rng, F, 3, 3);
        auto prod = a * b;
        CHECK(prod.degree() == 5);
        std::map<std::array<std::uint8_t, kMaxVars>, std::uint64_t> got;
        for (auto& [m, c] : prod.terms()) got[m.e] = c.index();
        CHECK(got == naive_product(a, b));
    }
}

TEST_CASE("canonical order is descending grlex") {
    GF F(5);
    auto p = parse_poly(F, 3, "x2^2+x0*x1+x0^2+x1^2");
    std::vector<std::string> order;
    for (auto& [m, c] : p.terms()) order.push_back(PolyF::monomial(F, 3, m, c).str());
    CHECK(order == std::vector<std::string>{"1*x0^2", "1*x0*x1", "1*x1^2", "1*x2^2"});
}

TEST_CASE("addition errors on mismatch") {
    GF F(7);
    auto a = parse_poly(F, 3, "x0^2"), b = parse_poly(F, 3, "x0");
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    auto c = parse_poly(F, 4, "x0^2");
    CHECK_THROWS_AS(a + c, std::invalid_argument);
}

TEST_CASE("ring axioms on random triples") {
    GF F(13);
    Rng rng(2);
    for (int t = 0; t < 1000; ++t) {
        auto p = random_form(rng, F, 3, 2), q = random_form(rng, F, 3, 2), r = random_form(rng, F, 3, 2);
        CHECK(((p + q) + r) == (p + (q + r)));
        CHECK((p * (q + r)) == (p * q + p * r));
    }
}

TEST_CASE("evaluation scales by lambda^deg") {
    GF F(11);
    Rng rng(3);
    auto p = random_form(rng, F, 4, 3, true);
    std::vector<Fq> x{F.of(1), F.of(2), F.of(3), F.of(4)};
    Fq lam = F.of(5);
    std::vector<Fq> y;
    for (auto& c : x) y.push_back(c * lam);
    CHECK(p.evaluate(y) == p.evaluate(x) * lam.pow(3));
    auto s = parse_poly(F, 3, "x0^2+x1^2");
    CHECK(s.evaluate(std::vector<Fq>{F.one(), F.zero(), F.zero()}).is_one());
}

TEST_CASE("partial derivatives") {
    GF F(7);
    auto X4 = parse_poly(F, 4, "x0^4");
    CHECK(X4.derivative(0) == parse_poly(F, 4, "4*x0^3"));
    auto C2 = parse_poly(F, 4, "x1*x2+x3^2+2*x1^2");
    CHECK((C2 * C2).derivative(1) == (C2 * C2.derivative(1)).scaled(F.of(2)));
    // Euler identity on random forms.
    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
        int d = 1 + static_cast<int>(rng.below(5));
        auto p = random_form(rng, F, 4, d);
        PolyF acc(F, 4, d);
        for (int i = 0; i < 4; ++i) acc += PolyF::variable(F, 4, i) * p.derivative(i);
        CHECK(acc == p.scaled(F.of(d)));
    }
    // Derivative may vanish in positive characteristic.
    CHECK(parse_poly(F, 3, "x0^7").derivative(0).is_zero());
}

TEST_CASE("text round trip") {
    GF F(11);
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        auto p = random_form(rng, F, 5, 3);
        if (p.is_zero()) continue;
        CHECK(parse_poly(F, 5, p.str()) == p);
    }
    GF E(7, 2);
    auto e = parse_poly(E, 3, "(2+3*a)*x0^2-a*x1*x2+x2^2");
    CHECK(parse_poly(E, 3, e.str()) == e);
    auto r = parse_poly(QQ{}, 3, "1/2*x0-3/4*x1+x2");
    CHECK(r.str() == "1/2*x0+-3/4*x1+1*x2");
    CHECK(parse_poly(QQ{}, 3, r.str()) == r);
    CHECK(tagged(e).rfind("GF(7^2):", 0) == 0);
}

TEST_CASE("parse errors") {
    GF F(7);
    CHECK_THROWS_AS(parse_poly(F, 3, "x0^2+x1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(F, 3, "x5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(F, 3, "x0+(x1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(F, 3, "a*x0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(F, 3, ""), std::invalid_argument);
    CHECK(parse_poly(F, 3, "0", 2).is_zero());
}
