#include <doctest.h>

#include "qbps/stability.hpp"
#include "test_util.hpp"

using namespace qbps;

namespace {

const Quiver kQbar(2, {Edge{0, 1}, Edge{1, 0}});
const Quiver kA1(1, {});

StabilityXi xi_i() { return StabilityXi({ExactComplex(Rational(0), Rational(1))}); }

StabilityXi xi_generic2() {
    return StabilityXi({ExactComplex(Rational(-1), Rational(1)),
                        ExactComplex(Rational(0), Rational(1))});
}

StabilityXi xi_trivial2() {
    return StabilityXi({ExactComplex(Rational(0), Rational(1)),
                        ExactComplex(Rational(0), Rational(1))});
}

StabilityXi random_xi(testing::Rng& rng, int rank) {
    std::vector<ExactComplex> entries;
    std::uniform_int_distribution<int> re(-6, 6);
    std::uniform_int_distribution<int> im(1, 5);
    for (int i = 0; i < rank; ++i) {
        entries.emplace_back(Rational(re(rng)), Rational(im(rng)));
    }
    return StabilityXi(std::move(entries));
}

RationalFunction rf(const std::string& num, const std::string& den) {
    return RationalFunction(LaurentPoly::parse(num), LaurentPoly::parse(den));
}

}  // namespace

TEST_CASE("central charge and slope") {
    CHECK(central_charge_xi(xi_i(), DimVector{3}) == ExactComplex(Rational(0), Rational(3)));
    CHECK(central_charge_xi(xi_generic2(), DimVector{1, 1}) ==
          ExactComplex(Rational(-1), Rational(2)));
    CHECK(central_charge_xi(xi_generic2(), DimVector{0, 0}) == ExactComplex());

    CHECK(slope_xi(xi_i(), DimVector{2}) == Rational(0));
    CHECK(slope_xi(StabilityXi({ExactComplex(Rational(-1), Rational(1))}), DimVector{3}) ==
          Rational(1));
    CHECK(slope_xi(xi_generic2(), DimVector{1, 1}) == Rational(1, 2));
    CHECK_THROWS_AS(slope_xi(xi_i(), DimVector{0}), input_error);
    CHECK_THROWS_AS(StabilityXi({ExactComplex(Rational(1), Rational(0))}), input_error);
}

TEST_CASE("genericity detection") {
    CHECK_FALSE(is_generic(xi_trivial2(), DimVector{1, 1}));
    CHECK(is_generic(xi_generic2(), DimVector{2, 2}));
    CHECK(is_generic(xi_i(), DimVector{4}));
}

TEST_CASE("HN strata fixtures") {
    SUBCASE("Qbar generic") {
        auto strata = hn_strata(xi_generic2(), DimVector{1, 1});
        REQUIRE(strata.size() == 2);
        CHECK(strata[0] == HNType{DimVector{1, 0}, DimVector{0, 1}});
        CHECK(strata[1] == HNType{DimVector{1, 1}});
    }
    SUBCASE("unit vector has only the trivial stratum") {
        auto strata = hn_strata(xi_generic2(), DimVector{1, 0});
        REQUIRE(strata.size() == 1);
        CHECK(strata[0] == HNType{DimVector{1, 0}});
    }
    SUBCASE("equal slopes forbid refinement") {
        auto strata = hn_strata(xi_trivial2(), DimVector{1, 1});
        REQUIRE(strata.size() == 1);
        CHECK(strata[0] == HNType{DimVector{1, 1}});
    }
    CHECK_THROWS_AS(hn_strata(xi_i(), DimVector{0}), input_error);
}

TEST_CASE("semistable count fixtures") {
    SUBCASE("Qbar (1,1) generic: q/(q-1)") {
        CHECK(semistable_count(kQbar, xi_generic2(), DimVector{1, 1}) == rf("v^2", "-1 + v^2"));
    }
    SUBCASE("simple root: stack count") {
        CHECK(semistable_count(kA1, xi_i(), DimVector{1}) == rf("1", "-1 + v^2"));
        CHECK(semistable_count(kQbar, xi_generic2(), DimVector{1, 0}) == rf("1", "-1 + v^2"));
    }
    SUBCASE("single vertex: every count is the stack count") {
        Quiver jordan(1, {Edge{0, 0}});
        StabilityXi xi = StabilityXi({ExactComplex(Rational(-3), Rational(2))});
        for (int m = 1; m <= 4; ++m) {
            CHECK(semistable_count(jordan, xi, DimVector{m}) == stack_count(jordan, DimVector{m}));
        }
    }
}

TEST_CASE("HN sum identity on random quivers") {
    testing::Rng rng(20250808);
    int checked = 0;
    while (checked < 12) {
        Quiver q = testing::random_quiver(rng, 3, 6);
        StabilityXi xi = random_xi(rng, q.num_vertices());
        std::uniform_int_distribution<int> entry(0, 4);
        DimVector m(static_cast<std::size_t>(q.num_vertices()));
        for (int i = 0; i < q.num_vertices(); ++i) m[static_cast<std::size_t>(i)] = entry(rng);
        if (m.is_zero() || m.total() > 4) continue;
        SemistableCounter counter(q, xi);
        RationalFunction total;
        for (const HNType& type : hn_strata(xi, m)) {
            total += counter.stratum_contribution(type);
        }
        CHECK(total == stack_count(q, m));
        ++checked;
    }
}

TEST_CASE("slope scaling invariance") {
    testing::Rng rng(4711);
    for (int trial = 0; trial < 8; ++trial) {
        Quiver q = testing::random_quiver(rng, 2, 4);
        StabilityXi xi = random_xi(rng, q.num_vertices());
        // c * xi for positive rational c.
        Rational c(3, 2);
        std::vector<ExactComplex> scaled;
        for (const ExactComplex& z : xi.entries()) scaled.push_back(c * z);
        StabilityXi xi_scaled{std::move(scaled)};
        std::uniform_int_distribution<int> entry(0, 3);
        DimVector m(static_cast<std::size_t>(q.num_vertices()));
        for (int i = 0; i < q.num_vertices(); ++i) m[static_cast<std::size_t>(i)] = entry(rng);
        if (m.is_zero()) continue;
        CHECK(hn_strata(xi, m) == hn_strata(xi_scaled, m));
        CHECK(semistable_count(q, xi, m) == semistable_count(q, xi_scaled, m));
    }
}

TEST_CASE("brute force oracle fixtures") {
    SUBCASE("Qbar semistable points") {
        CHECK(brute_force_ss_count(kQbar, xi_generic2(), DimVector{1, 1}, 2) == 2);
        CHECK(brute_force_ss_count(kQbar, xi_generic2(), DimVector{1, 1}, 3) == 6);
    }
    SUBCASE("trivial stability counts everything") {
        CHECK(brute_force_ss_count(kQbar, xi_trivial2(), DimVector{1, 1}, 2) == 4);
    }
    SUBCASE("guard rejects huge spaces") {
        Quiver big(1, {Edge{0, 0}, Edge{0, 0}, Edge{0, 0}});
        CHECK_THROWS_AS(brute_force_ss_count(big, xi_i(), DimVector{3}, 4), input_error);
    }
}

TEST_CASE("oracle agreement with the HN recursion") {
    // semistable_count(q0) * |G(F_q0)| must equal the brute-force point count.
    std::vector<Quiver> quivers = {kQbar, Quiver(2, {Edge{0, 0}, Edge{0, 1}, Edge{1, 0}})};
    std::vector<StabilityXi> xis = {xi_generic2(),
                                    StabilityXi({ExactComplex(Rational(0), Rational(1)),
                                                 ExactComplex(Rational(-1), Rational(1))})};
    for (const Quiver& q : quivers) {
        for (const StabilityXi& xi : xis) {
            SemistableCounter counter(q, xi);
            for (int m1 = 0; m1 <= 2; ++m1) {
                for (int m2 = 0; m2 <= 2; ++m2) {
                    DimVector m{m1, m2};
                    if (m.is_zero() || m.total() > 3) continue;
                    for (int p : {2, 3}) {
                        const Rational q0(p);
                        // Evaluate at q = q0 via the even subfield.
                        RationalFunction cnt = counter.count(m);
                        REQUIRE(cnt.is_even());
                        Rational value = cnt.half_exponents().eval(q0);
                        Rational group_order(1);
                        for (std::size_t i = 0; i < m.rank(); ++i) {
                            group_order *= gl_order(m[i]).half_exponents().eval(q0);
                        }
                        Rational expected = value * group_order;
                        CHECK(is_integer(expected));
                        CHECK(expected == Rational(brute_force_ss_count(q, xi, m, p)));
                    }
                }
            }
        }
    }
}
