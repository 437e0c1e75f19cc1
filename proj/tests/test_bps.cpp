#include <doctest.h>

#include "qbps/bps.hpp"
#include "test_util.hpp"

using namespace qbps;

namespace {

Quiver loops(int g) {
    std::vector<Edge> edges;
    for (int i = 0; i < g; ++i) edges.push_back(Edge{0, 0});
    return Quiver(1, std::move(edges));
}

const Quiver kA1 = loops(0);
const Quiver kJordan = loops(1);
const Quiver kQbar(2, {Edge{0, 1}, Edge{1, 0}});

StabilityXi xi_generic2() {
    return StabilityXi({ExactComplex(Rational(-1), Rational(1)),
                        ExactComplex(Rational(0), Rational(1))});
}

RationalFunction rf(const std::string& num, const std::string& den) {
    return RationalFunction(LaurentPoly::parse(num), LaurentPoly::parse(den));
}

LaurentPoly minus_v_pow(int g) {
    return LaurentPoly::monomial(g % 2 == 0 ? Rational(1) : Rational(-1), g);
}

}  // namespace

TEST_CASE("virtual factor and its downward expansion") {
    RationalFunction p = virtual_factor();
    CHECK(p == rf("v", "1 - v^2"));
    // P * (1 - v^{-2}) = -v^{-1}
    LaurentPoly one_minus(Rational(1));
    one_minus.add_term(-2, Rational(-1));
    CHECK(p * RationalFunction(one_minus) == RationalFunction(LaurentPoly::monomial(Rational(-1), -1)));
    // Partial sums: sum_{k<K} -v^{-2k-1} = P * (1 - v^{-2K}).
    LaurentPoly partial;
    for (int k = 0; k < 5; ++k) {
        partial.add_term(-2 * k - 1, Rational(-1));
        LaurentPoly window(Rational(1));
        window.add_term(-2 * (k + 1), Rational(-1));
        CHECK(RationalFunction(partial) == p * RationalFunction(window));
    }
}

TEST_CASE("normalized stack series coefficients") {
    SUBCASE("A1 coefficient at 1 equals the virtual factor") {
        TruncatedSeries s = normalized_stack_series(kA1, 3);
        CHECK(s.coefficient(DimVector{0}) == RationalFunction(Rational(1)));
        CHECK(s.coefficient(DimVector{1}) == rf("v", "1 - v^2"));
    }
    SUBCASE("Jordan coefficients are Pochhammer products") {
        TruncatedSeries s = normalized_stack_series(kJordan, 4);
        for (int m = 1; m <= 4; ++m) {
            RationalFunction expected(Rational(1));
            for (int j = 1; j <= m; ++j) {
                LaurentPoly factor(Rational(1));
                factor.add_term(-2 * j, Rational(-1));
                expected /= RationalFunction(factor);
            }
            CHECK(s.coefficient(DimVector{m}) == expected);
        }
    }
    SUBCASE("Qbar coefficient at (1,1)") {
        TruncatedSeries s = normalized_stack_series(kQbar, 2);
        RationalFunction base = rf("1", "1 - v^-2");
        CHECK(s.coefficient(DimVector{1, 1}) == base * base);
    }
    SUBCASE("non-symmetric quivers are rejected") {
        Quiver kronecker(2, {Edge{0, 1}, Edge{0, 1}});
        CHECK_THROWS_AS(normalized_stack_series(kronecker, 2), input_error);
        CHECK_THROWS_AS(bps_trivial(kronecker, 2), input_error);
    }
}

TEST_CASE("closed-form BPS tables") {
    SUBCASE("A1: omega_1 = 1, rest zero") {
        BpsTable t = bps_trivial(kA1, 6);
        CHECK(t.entry(DimVector{1}) == LaurentPoly(1));
        for (int m = 2; m <= 6; ++m) CHECK(t.entry(DimVector{m}).is_zero());
    }
    SUBCASE("Jordan: omega_1 = -v, rest zero") {
        BpsTable t = bps_trivial(kJordan, 6);
        CHECK(t.entry(DimVector{1}) == LaurentPoly::parse("-v"));
        for (int m = 2; m <= 6; ++m) CHECK(t.entry(DimVector{m}).is_zero());
    }
    SUBCASE("g loops: omega_1 = (-v)^g") {
        for (int g = 0; g <= 5; ++g) {
            BpsTable t = bps_trivial(loops(g), 2);
            CHECK(t.entry(DimVector{1}) == minus_v_pow(g));
        }
    }
}

TEST_CASE("round trip: Exp(P*Omega) reproduces the stack series") {
    for (const Quiver& q : {kJordan, kQbar, loops(2)}) {
        const int trunc = 4;
        BpsTable t = bps_trivial(q, trunc);
        TruncatedSeries scaled(q.num_vertices(), trunc);
        for (const auto& [m, poly] : t.omega) {
            scaled.set_coefficient(m, virtual_factor() * RationalFunction(poly));
        }
        CHECK(plethystic_exp(scaled) == normalized_stack_series(q, trunc));
    }
}

TEST_CASE("xi-refined BPS tables") {
    SUBCASE("Qbar slope slice at (1,1)") {
        BpsTable t = bps_xi(kQbar, xi_generic2(), 4);
        CHECK(t.entry(DimVector{1, 1}) == LaurentPoly::parse("-v"));
        CHECK(t.entry(DimVector{1, 0}) == LaurentPoly(1));
        CHECK(t.entry(DimVector{0, 1}) == LaurentPoly(1));
    }
    SUBCASE("single vertex: refined table equals the plain one") {
        StabilityXi xi({ExactComplex(Rational(2), Rational(3))});
        BpsTable plain = bps_trivial(kJordan, 4);
        BpsTable refined = bps_xi(kJordan, xi, 4);
        CHECK(plain.omega == refined.omega);
    }
}

TEST_CASE("wall-crossing invariance") {
    SUBCASE("Qbar, both orderings of the generic parameter") {
        std::vector<StabilityXi> xis = {
            xi_generic2(),
            StabilityXi({ExactComplex(Rational(0), Rational(1)),
                         ExactComplex(Rational(-1), Rational(1))})};
        InvarianceReport report = invariance_check(kQbar, xis, 3);
        CHECK(report.invariant);
        CHECK(report.discrepancies.empty());
        CHECK(report.trivial.entry(DimVector{1, 1}) == LaurentPoly::parse("-v"));
        for (const BpsTable& t : report.tables) {
            CHECK(t.entry(DimVector{1, 1}) == LaurentPoly::parse("-v"));
        }
    }
    SUBCASE("three loops: single vertex is trivially invariant") {
        InvarianceReport report =
            invariance_check(loops(3), {StabilityXi({ExactComplex(Rational(5), Rational(7))})}, 3);
        CHECK(report.invariant);
    }
    SUBCASE("two-vertex symmetric quiver with a loop, random parameters") {
        Quiver q(2, {Edge{0, 0}, Edge{0, 1}, Edge{1, 0}});
        testing::Rng rng(987);
        std::vector<StabilityXi> xis;
        std::uniform_int_distribution<int> re(-5, 5);
        std::uniform_int_distribution<int> im(1, 4);
        while (xis.size() < 5) {
            StabilityXi xi({ExactComplex(Rational(re(rng)), Rational(im(rng))),
                            ExactComplex(Rational(re(rng)), Rational(im(rng)))});
            xis.push_back(xi);
        }
        InvarianceReport report = invariance_check(q, xis, 4);
        CHECK(report.invariant);
        CHECK(report.discrepancies.empty());
    }
}

TEST_CASE("euler specialization") {
    BpsTable jordan = bps_trivial(kJordan, 3);
    auto values = euler_specialize(jordan);
    CHECK(values.at(DimVector{1}) == Integer(-1));

    BpsTable a1 = bps_trivial(kA1, 3);
    CHECK(euler_specialize(a1).at(DimVector{1}) == Integer(1));

    for (int g = 0; g <= 3; ++g) {
        BpsTable t = bps_trivial(loops(g), 2);
        CHECK(euler_specialize(t).at(DimVector{1}) == Integer(g % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("polynomiality and single-sign coefficients for loop quivers") {
    for (int g = 0; g <= 3; ++g) {
        BpsTable t = bps_trivial(loops(g), 4);
        for (const auto& [m, poly] : t.omega) {
            (void)m;
            bool positive = false, negative = false;
            for (const auto& [e, c] : poly.terms()) {
                (void)e;
                CHECK(is_integer(c));
                if (c > 0) positive = true;
                if (c < 0) negative = true;
            }
            CHECK_FALSE((positive && negative));
        }
    }
}
