#include <catch2/catch_amalgamated.hpp>

#include "qsh/scalar.hpp"
#include "test_util.hpp"

using namespace qsh;
using qsh::testing::Lcg;

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK((Rational(3) / Rational(-6)).str() == "-1/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DivisionByZero);
}

TEST_CASE("polynomial gcd cancellation") {
    Polynomial q = Polynomial::q();
    Polynomial num = q * q - Polynomial(1);           // q^2 - 1
    Polynomial den = q + Polynomial(1);               // q + 1
    RationalFunction f(num, den);
    CHECK(f.is_polynomial());
    CHECK(f.num() == q - Polynomial(1));
    CHECK(f.str() == "q - 1");
}

TEST_CASE("q times its inverse is 1") {
    Scalar q = Scalar::q();
    Scalar qinv = scalar_parse("1/q", Field::Qq);
    CHECK(scalar_arith(q, qinv, '*') == Scalar::one(Field::Qq));
}

TEST_CASE("scalar parsing") {
    CHECK(scalar_parse("3/4", Field::Q) == Scalar(Rational(3, 4)));
    CHECK(scalar_parse("q^2-1", Field::Qq) ==
          Scalar(RationalFunction(Polynomial::q() * Polynomial::q() - Polynomial(1))));
    Scalar f = scalar_parse("1/(q+1)", Field::Qq);
    CHECK(f.fun().den() == Polynomial::q() + Polynomial(1));
    CHECK(f.fun().num() == Polynomial(1));

    CHECK(scalar_parse("-2^3", Field::Q) == Scalar(Rational(-8)));
    CHECK(scalar_parse("q^-2", Field::Qq) == scalar_parse("1/q^2", Field::Qq));
    CHECK(scalar_parse("(q-1)*(q+1)", Field::Qq) == scalar_parse("q^2-1", Field::Qq));

    CHECK_THROWS_AS(scalar_parse("q", Field::Q), ParseError);
    CHECK_THROWS_AS(scalar_parse("3+", Field::Q), ParseError);
    CHECK_THROWS_AS(scalar_parse("1/0", Field::Q), DivisionByZero);
    try {
        scalar_parse("2*)", Field::Q);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
    }
}

TEST_CASE("mixing fields is rejected") {
    CHECK_THROWS_AS(Scalar(Rational(1)) + Scalar::q(), FieldMismatch);
}

TEST_CASE("denominators stay monic") {
    // (q) / (2q + 2) -> (1/2) / (q + 1)
    RationalFunction f(Polynomial::q(),
                       Polynomial::monomial(Rational(2), 1) + Polynomial(Rational(2)));
    CHECK(f.den() == Polynomial::q() + Polynomial(1));
    CHECK(f.num() == Polynomial::monomial(Rational(1, 2), 1));
    CHECK(f.str() == "1/2*q/(q + 1)");
}

TEST_CASE("field axioms hold on randomized triples") {
    for (Field field : {Field::Q, Field::Qq}) {
        Lcg g(field == Field::Q ? 11 : 12);
        for (int trial = 0; trial < 60; ++trial) {
            Scalar a = qsh::testing::random_scalar(g, field);
            Scalar b = qsh::testing::random_scalar(g, field);
            Scalar c = qsh::testing::random_scalar(g, field);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Scalar::zero(field));
            CHECK(a * b == b * a);
            Scalar nz = qsh::testing::random_nonzero_scalar(g, field);
            CHECK(nz * nz.inverse() == Scalar::one(field));
        }
    }
}

TEST_CASE("parse of print is the identity") {
    for (Field field : {Field::Q, Field::Qq}) {
        Lcg g(field == Field::Q ? 21 : 22);
        for (int trial = 0; trial < 120; ++trial) {
            Scalar s = qsh::testing::random_scalar(g, field);
            CHECK(scalar_parse(scalar_print(s), field) == s);
        }
    }
}
