#include "doctest.h"
#include "prym5/field.hpp"
#include "prym5/poly.hpp"

using namespace prym5;

TEST_CASE("prime field arithmetic") {
    GF F(11);
    CHECK(F.order() == 11);
    CHECK((F.of(7) + F.of(5)) == F.of(1));
    CHECK((F.of(3) - F.of(5)) == F.of(9));
    CHECK(F.of(-1) == F.of(10));
    for (std::uint64_t i = 1; i < 11; ++i) CHECK((F.element(i) * F.element(i).inv()).is_one());
    CHECK_THROWS_AS(F.zero().inv(), std::domain_error);
}

TEST_CASE("extension fields use the smallest irreducible modulus") {
    GF F(7, 2);
    CHECK(F.order() == 49);
    // x^2 + 1 is irreducible mod 7 and nothing smaller is.
    CHECK(F.modulus() == std::vector<unsigned>{1, 0, 1});
    Fq a = F.gen();
    CHECK((a * a) == F.of(-1));
    GF G(2, 3);
    CHECK(G.modulus() == std::vector<unsigned>{1, 1, 0, 1});
    for (std::uint64_t i = 1; i < 49; ++i) CHECK((F.element(i) * F.element(i).inv()).is_one());
}

TEST_CASE("table-free arithmetic agrees with tables") {
    GF F(257, 3);  // above the table limit
    Fq x = F.element(123456), y = F.element(987654 % F.order());
    CHECK(((x * y) / y) == x);
    CHECK((x.pow(F.order() - 1)).is_one());
}

TEST_CASE("field interning") {
    CHECK(GF(13) == GF(13));
    CHECK(GF(13) != GF(13, 2));
    CHECK_THROWS(GF(12));
    CHECK_THROWS(GF(7, 5));
    CHECK_THROWS(GF(263));
}

TEST_CASE("prime subfield embeds into extensions") {
    GF F(11), E(11, 2);
    CHECK(E.embed(F.of(4)) == E.of(4));
    CHECK_THROWS(F.embed(E.gen()));
}

TEST_CASE("square roots") {
    for (auto [p, k] : {std::pair{7u, 1u}, {13u, 1u}, {17u, 1u}, {11u, 2u}, {2u, 3u}, {7u, 3u}}) {
        GF F(p, k);
        int squares = 0;
        for (std::uint64_t i = 0; i < F.order(); ++i) {
            Fq x = F.element(i);
            auto r = sqrt(x);
            CHECK(r.has_value() == is_square(x));
            if (r) {
                CHECK((*r * *r) == x);
                ++squares;
            }
        }
        if (p == 2)
            CHECK(squares == static_cast<int>(F.order()));
        else
            CHECK(squares == static_cast<int>((F.order() + 1) / 2));
    }
}

TEST_CASE("rationals") {
    Rational a(BigInt(3), BigInt(4)), b(BigInt(-5), BigInt(6));
    CHECK((a + b) == Rational(BigInt(-1), BigInt(12)));
    CHECK((a * b).str() == "-5/8");
    CHECK((a / b) == Rational(BigInt(-9), BigInt(10)));
    CHECK(sqrt(Rational(BigInt(9), BigInt(4))) == Rational(BigInt(3), BigInt(2)));
    CHECK_FALSE(sqrt(Rational(2)).has_value());
    CHECK_FALSE(sqrt(Rational(-4)).has_value());
    CHECK_THROWS(Rational(0).inv());
}

TEST_CASE("field tags") {
    CHECK(parse_field_tag("GF(11)").p == 11);
    CHECK(parse_field_tag("GF(7^2)").k == 2);
    CHECK(parse_field_tag("QQ").rational);
    CHECK_THROWS(parse_field_tag("GF(10)"));
    CHECK_THROWS(parse_field_tag("F7"));
    CHECK(GF(7, 2).tag() == "GF(7^2)");
}
