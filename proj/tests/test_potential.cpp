#include <doctest.h>

#include "qbps/potential.hpp"
#include "test_util.hpp"

using namespace qbps;

namespace {

// One vertex, three loops A=0, B=1, C=2.
const Quiver kQ3(1, {Edge{0, 0}, Edge{0, 0}, Edge{0, 0}});

// W = A[B,C]: the trace at u is tr(A(BC - CB)) in matrix order, which in
// traversal order is the word (A,C,B) minus the word (A,B,C).
SuperPotential w3() {
    return SuperPotential({{CyclicWord(kQ3, {0, 2, 1}), Rational(1)},
                           {CyclicWord(kQ3, {0, 1, 2}), Rational(-1)}});
}

MatrixQ mat2(long a, long b, long c, long d) {
    MatrixQ m(2, 2);
    m << Rational(a), Rational(b), Rational(c), Rational(d);
    return m;
}

MatrixTuple tuple3(const MatrixQ& a, const MatrixQ& b, const MatrixQ& c) {
    MatrixTuple u;
    u.dims = DimVector{static_cast<int>(a.rows())};
    u.mats = {a, b, c};
    return u;
}

MatrixQ random_matrix(testing::Rng& rng, int rows, int cols) {
    MatrixQ m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) m(r, c) = testing::random_rational(rng, 4, 3);
    }
    return m;
}

MatrixQ random_invertible(testing::Rng& rng, int n) {
    while (true) {
        MatrixQ g = random_matrix(rng, n, n);
        try {
            invert(g);
            return g;
        } catch (const math_error&) {
        }
    }
}

}  // namespace

TEST_CASE("cyclic word canonicalization and validation") {
    CyclicWord w1(kQ3, {2, 1, 0});
    CyclicWord w2(kQ3, {1, 0, 2});
    CHECK(w1 == w2);
    CHECK(w1.edges() == std::vector<int>{0, 2, 1});
    CHECK_THROWS_AS(CyclicWord(kQ3, {}), input_error);
    CHECK_THROWS_AS(CyclicWord(kQ3, {5}), input_error);
    Quiver path(2, {Edge{0, 1}});
    CHECK_THROWS_AS(CyclicWord(path, {0}), input_error);
    Quiver cycle(2, {Edge{0, 1}, Edge{1, 0}});
    CHECK(CyclicWord(cycle, {1, 0}).edges() == std::vector<int>{0, 1});
}

TEST_CASE("trace evaluation") {
    SUBCASE("scalars commute: 1x1 tuples vanish") {
        testing::Rng rng(2024);
        for (int trial = 0; trial < 10; ++trial) {
            MatrixQ a(1, 1), b(1, 1), c(1, 1);
            a(0, 0) = testing::random_rational(rng);
            b(0, 0) = testing::random_rational(rng);
            c(0, 0) = testing::random_rational(rng);
            CHECK(eval_tr(w3(), kQ3, tuple3(a, b, c)) == Rational(0));
        }
    }
    SUBCASE("hand fixture: tr(A(BC-CB)) = 1") {
        MatrixQ a = mat2(0, 1, 0, 0);
        MatrixQ b = mat2(0, 0, 1, 0);
        MatrixQ c = mat2(1, 0, 0, 0);
        CHECK(eval_tr(w3(), kQ3, tuple3(a, b, c)) == Rational(1));
    }
    SUBCASE("shape mismatch is rejected") {
        MatrixTuple bad;
        bad.dims = DimVector{2};
        bad.mats = {mat2(0, 1, 0, 0), mat2(0, 0, 1, 0), MatrixQ(1, 1)};
        CHECK_THROWS_AS(eval_tr(w3(), kQ3, bad), input_error);
    }
}

TEST_CASE("cyclic invariance of the trace") {
    // Rotated words construct the same canonical cycle, so the trace cannot
    // depend on the chosen rotation.
    testing::Rng rng(11);
    MatrixTuple u = tuple3(random_matrix(rng, 2, 2), random_matrix(rng, 2, 2),
                           random_matrix(rng, 2, 2));
    SuperPotential w_rot({{CyclicWord(kQ3, {2, 1, 0}), Rational(1)}});
    SuperPotential w_plain({{CyclicWord(kQ3, {0, 2, 1}), Rational(1)}});
    CHECK(eval_tr(w_rot, kQ3, u) == eval_tr(w_plain, kQ3, u));
}

TEST_CASE("gauge transforms") {
    SUBCASE("identity fixes the tuple") {
        testing::Rng rng(5);
        MatrixTuple u = tuple3(random_matrix(rng, 2, 2), random_matrix(rng, 2, 2),
                               random_matrix(rng, 2, 2));
        std::vector<MatrixQ> g = {MatrixQ::Identity(2, 2)};
        MatrixTuple v = gauge_transform(kQ3, u, g);
        for (int e = 0; e < 3; ++e) CHECK(v.mats[e] == u.mats[e]);
    }
    SUBCASE("composition matches the pointwise product") {
        testing::Rng rng(6);
        MatrixTuple u = tuple3(random_matrix(rng, 2, 2), random_matrix(rng, 2, 2),
                               random_matrix(rng, 2, 2));
        MatrixQ g = random_invertible(rng, 2);
        MatrixQ h = random_invertible(rng, 2);
        MatrixTuple two_step = gauge_transform(kQ3, gauge_transform(kQ3, u, {g}), {h});
        MatrixTuple one_step = gauge_transform(kQ3, u, {MatrixQ(g * h)});
        for (int e = 0; e < 3; ++e) CHECK(two_step.mats[e] == one_step.mats[e]);
    }
    SUBCASE("singular gauge matrices are rejected") {
        MatrixTuple u = MatrixTuple::zero(kQ3, DimVector{2});
        std::vector<MatrixQ> g = {mat2(1, 2, 2, 4)};
        CHECK_THROWS_AS(gauge_transform(kQ3, u, g), math_error);
    }
    SUBCASE("trace is gauge invariant on random data") {
        testing::Rng rng(7);
        std::uniform_int_distribution<int> dim(1, 3);
        for (int trial = 0; trial < 30; ++trial) {
            const int n = dim(rng);
            MatrixTuple u = tuple3(random_matrix(rng, n, n), random_matrix(rng, n, n),
                                   random_matrix(rng, n, n));
            u.dims = DimVector{n};
            MatrixQ g = random_invertible(rng, n);
            // Random potential of degree <= 4 on the three loops.
            std::uniform_int_distribution<int> len(1, 4);
            std::uniform_int_distribution<int> loop(0, 2);
            std::vector<std::pair<CyclicWord, Rational>> terms;
            for (int t = 0; t < 3; ++t) {
                std::vector<int> word;
                const int l = len(rng);
                for (int i = 0; i < l; ++i) word.push_back(loop(rng));
                terms.emplace_back(CyclicWord(kQ3, word), testing::random_rational(rng));
            }
            SuperPotential w(terms);
            CHECK(eval_tr(w, kQ3, gauge_transform(kQ3, u, {g})) == eval_tr(w, kQ3, u));
        }
    }
}

TEST_CASE("cyclic derivatives") {
    SUBCASE("d/dA of A[B,C] is the commutator [B,C]") {
        PathSum d = cyclic_derivative(w3(), 0);
        REQUIRE(d.size() == 2);
        // Traversal paths (B,C) with -1 and (C,B) with +1; they evaluate to
        // -CB and +BC respectively.
        CHECK(d[0] == std::make_pair(EdgePath{1, 2}, Rational(-1)));
        CHECK(d[1] == std::make_pair(EdgePath{2, 1}, Rational(1)));
        testing::Rng rng(8);
        MatrixTuple u = tuple3(random_matrix(rng, 2, 2), random_matrix(rng, 2, 2),
                               random_matrix(rng, 2, 2));
        MatrixQ value = eval_path_sum(kQ3, u, d, 2, 2);
        MatrixQ commutator = u.mats[1] * u.mats[2] - u.mats[2] * u.mats[1];
        CHECK(value == commutator);
    }
    SUBCASE("derivative along an absent edge vanishes") {
        SuperPotential w({{CyclicWord(kQ3, {0, 0}), Rational(2)}});
        CHECK(cyclic_derivative(w, 1).empty());
    }
    SUBCASE("finite differences match the exact gradient") {
        // d(trW)/d(u_e)_{ab} = G_{ba} with G the evaluated derivative.
        testing::Rng rng(9);
        MatrixTuple u = tuple3(random_matrix(rng, 2, 2), random_matrix(rng, 2, 2),
                               random_matrix(rng, 2, 2));
        std::vector<Eigen::MatrixXd> base = {to_double(u.mats[0]), to_double(u.mats[1]),
                                             to_double(u.mats[2])};
        const double h = 1e-5;
        for (int e = 0; e < 3; ++e) {
            MatrixQ grad = eval_path_sum(kQ3, u, cyclic_derivative(w3(), e), 2, 2);
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    std::vector<Eigen::MatrixXd> up = base, down = base;
                    up[e](a, b) += h;
                    down[e](a, b) -= h;
                    double numeric =
                        (eval_tr_double(w3(), kQ3, up) - eval_tr_double(w3(), kQ3, down)) /
                        (2 * h);
                    double exact = grad(b, a).get_d();
                    CHECK(std::abs(numeric - exact) <=
                          1e-6 * std::max(1.0, std::abs(exact)));
                }
            }
        }
    }
}

TEST_CASE("critical locus of the three-loop potential") {
    // Over 2x2 matrices with entries in {0,1}: critical exactly when the
    // three matrices pairwise commute.  4096 tuples.
    std::vector<MatrixQ> all;
    for (int mask = 0; mask < 16; ++mask) {
        all.push_back(mat2(mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, (mask >> 3) & 1));
    }
    PathSum da = cyclic_derivative(w3(), 0);
    PathSum db = cyclic_derivative(w3(), 1);
    PathSum dc = cyclic_derivative(w3(), 2);
    int critical = 0;
    for (const MatrixQ& a : all) {
        for (const MatrixQ& b : all) {
            for (const MatrixQ& c : all) {
                MatrixTuple u = tuple3(a, b, c);
                const bool crit = eval_path_sum(kQ3, u, da, 2, 2).isZero(0) &&
                                  eval_path_sum(kQ3, u, db, 2, 2).isZero(0) &&
                                  eval_path_sum(kQ3, u, dc, 2, 2).isZero(0);
                const bool commuting = (b * c == c * b) && (c * a == a * c) && (a * b == b * a);
                REQUIRE(crit == commuting);
                if (crit) ++critical;
            }
        }
    }
    CHECK(critical > 0);
}

TEST_CASE("truncation") {
    SuperPotential w = w3();
    CHECK(truncate(w, 3).terms().size() == 2);
    CHECK(truncate(w, 2).is_zero());
    SuperPotential mixed({{CyclicWord(kQ3, {0, 1, 2}), Rational(1)},
                          {CyclicWord(kQ3, {0, 0, 1, 1, 2}), Rational(1, 3)}});
    SuperPotential cut = truncate(mixed, 4);
    REQUIRE(cut.terms().size() == 1);
    CHECK(cut.terms()[0].first.length() == 3);
}

TEST_CASE("growth constants") {
    CHECK(check_growth(w3()) == Rational(2));
    SuperPotential big({{CyclicWord(kQ3, {0, 1, 2}), Rational(8)}});
    CHECK(check_growth(big) == Rational(4));
    CHECK(check_growth(SuperPotential()) == Rational(1));
    SuperPotential small({{CyclicWord(kQ3, {0, 1, 2}), Rational(1, 32)}});
    CHECK(check_growth(small) == Rational(1, 2));
    // Constructor enforces a declared growth bound.
    CHECK_THROWS_AS(SuperPotential({{CyclicWord(kQ3, {0}), Rational(5)}}, Rational(2)),
                    input_error);
    SuperPotential ok({{CyclicWord(kQ3, {0}), Rational(1)}}, Rational(2));
    CHECK(ok.growth() == Rational(2));
}
