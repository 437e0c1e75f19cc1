#include <doctest.h>

#include "qbps/rational_function.hpp"
#include "test_util.hpp"

using namespace qbps;

namespace {

// q as an anonymous degree-1 variable: these identities are generic in the
// variable, so the test reads naturally.
LaurentPoly q_pow(long e) { return LaurentPoly::var(e); }

LaurentPoly q_minus(long c) {
    LaurentPoly p = LaurentPoly::var(1);
    p.add_term(0, Rational(-c));
    return p;
}

}  // namespace

TEST_CASE("rational scalar parsing and gcd") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational("x"), input_error);

    CHECK(rational_gcd(Rational(1, 2), Rational(1, 3)) == Rational(1, 6));
    CHECK(rational_gcd(Rational(2), Rational(3)) == Rational(1));
    CHECK(rational_gcd(Rational(3, 4), Rational(5, 6)) == Rational(1, 12));
    CHECK(rational_gcd(Rational(0), Rational(-5, 3)) == Rational(5, 3));
    CHECK_THROWS_AS(rational_gcd(Rational(0), Rational(0)), math_error);
}

TEST_CASE("rational function arithmetic fixtures") {
    RationalFunction one_over_qm1(LaurentPoly(1), q_minus(1));

    SUBCASE("like terms add") {
        RationalFunction sum = one_over_qm1 + one_over_qm1;
        CHECK(sum == RationalFunction(LaurentPoly(2), q_minus(1)));
    }

    SUBCASE("factor cancellation") {
        LaurentPoly q2m1 = q_pow(2);
        q2m1.add_term(0, Rational(-1));
        RationalFunction f(q2m1, q_minus(1));
        LaurentPoly qp1 = q_pow(1);
        qp1.add_term(0, Rational(1));
        CHECK(f.is_laurent());
        CHECK(f.as_laurent() == qp1);
    }

    SUBCASE("hand cancellation of q^4 / (q(q-1)(q^2-1))") {
        LaurentPoly q2m1 = q_pow(2);
        q2m1.add_term(0, Rational(-1));
        RationalFunction denom = RationalFunction(q_pow(1)) * RationalFunction(q_minus(1)) *
                                 RationalFunction(q2m1);
        RationalFunction f = RationalFunction(q_pow(4)) / denom;
        RationalFunction expected(q_pow(3), q_minus(1) * q2m1);
        CHECK(f == expected);
    }

    SUBCASE("division by zero is an error") {
        CHECK_THROWS_AS(one_over_qm1 / RationalFunction(), math_error);
    }
}

TEST_CASE("canonical form: denominator trailing coefficient 1, min exponent 0") {
    // -v^{-1}/(1-v^{-2}) normalizes to v/(1-v^2).
    LaurentPoly num = LaurentPoly::monomial(Rational(-1), -1);
    LaurentPoly den(Rational(1));
    den.add_term(-2, Rational(-1));
    RationalFunction f(num, den);
    CHECK(f.den().min_exp() == 0);
    CHECK(f.den().trailing_coeff() == 1);
    LaurentPoly expected_den(Rational(1));
    expected_den.add_term(2, Rational(-1));
    CHECK(f.den() == expected_den);
    CHECK(f.num() == LaurentPoly::var(1));
}

TEST_CASE("ring axioms hold exactly on random triples") {
    testing::Rng rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        LaurentPoly a = testing::random_laurent(rng);
        LaurentPoly b = testing::random_laurent(rng);
        LaurentPoly c = testing::random_laurent(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
    for (int trial = 0; trial < 25; ++trial) {
        RationalFunction a = testing::random_rational_function(rng);
        RationalFunction b = testing::random_rational_function(rng);
        RationalFunction c = testing::random_rational_function(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        if (!c.is_zero()) {
            CHECK((a / c) + (b / c) == (a + b) / c);
        }
    }
}

TEST_CASE("laurent rendering and parsing") {
    LaurentPoly p;
    p.add_term(-1, Rational(-1));
    p.add_term(0, Rational(2));
    p.add_term(3, Rational(1));
    CHECK(p.to_string() == "-v^-1 + 2 + v^3");
    CHECK(LaurentPoly::parse("-v^-1 + 2 + v^3") == p);
    CHECK(LaurentPoly::parse("-v^-1+2+v^3") == p);

    LaurentPoly r;
    r.add_term(2, Rational(3, 2));
    r.add_term(1, Rational(-1));
    CHECK(r.to_string() == "-v + 3/2*v^2");
    CHECK(LaurentPoly::parse(r.to_string()) == r);

    CHECK(LaurentPoly().to_string() == "0");
    CHECK(LaurentPoly::parse("0") == LaurentPoly());
    LaurentPoly ell;
    ell.add_term(-1, Rational(1));
    ell.add_term(0, Rational(1));
    ell.add_term(1, Rational(1));
    CHECK(LaurentPoly::parse("y^-1+1+y", "y") == ell);
    CHECK_THROWS_AS(LaurentPoly::parse("", "v"), input_error);
    CHECK_THROWS_AS(LaurentPoly::parse("v^x"), input_error);

    testing::Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly random = testing::random_laurent(rng);
        CHECK(LaurentPoly::parse(random.to_string()) == random);
    }
}

TEST_CASE("substitution and evaluation") {
    // psi_2 on coefficients: v -> v^2.
    LaurentPoly p = LaurentPoly::parse("v^-1 + v^3");
    CHECK(p.substituted(2) == LaurentPoly::parse("v^-2 + v^6"));
    CHECK(p.substituted(-1) == LaurentPoly::parse("v + v^-3"));
    CHECK(p.eval(Rational(2)) == Rational(1, 2) + Rational(8));

    RationalFunction f(LaurentPoly::parse("v"), LaurentPoly::parse("1 - v^2"));
    RationalFunction g = f.substituted(2);
    CHECK(g == RationalFunction(LaurentPoly::parse("v^2"), LaurentPoly::parse("1 - v^4")));
}

TEST_CASE("q-rendering of even functions") {
    // q/(q-1) canonicalizes to -q/(1-q) internally, displays as q/(-1 + q).
    RationalFunction f(LaurentPoly::parse("v^2"), LaurentPoly::parse("-1 + v^2"));
    CHECK(f.to_q_string() == "q/(-1 + q)");
    CHECK(f.den() == LaurentPoly::parse("1 - v^2"));
    CHECK(f.num() == LaurentPoly::parse("-v^2"));
    RationalFunction odd(LaurentPoly::parse("v"), LaurentPoly::parse("1 - v^2"));
    CHECK_THROWS_AS(odd.to_q_string(), convention_violation);
}
