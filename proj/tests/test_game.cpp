#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <variant>

#include "qchoice/classical.hpp"
#include "qchoice/game.hpp"
#include "qchoice/random_source.hpp"

using namespace qchoice;

namespace {

ConditionalStrategy worked_example() {
    return ConditionalStrategy({3.0 / 10, 17.0 / 40, 1.0 / 2, 1.0 / 2, 1.0 / 3, 1.0 / 3});
}

const FrequencyTriple kWorkedQ{{20.0 / 24, 1.0 / 24, 3.0 / 24}};

// Food 0 whenever offered, otherwise food 1.
ConditionalStrategy greedy_zero_then_one() { return ConditionalStrategy({1, 1, 1, 1, 1, 1}); }

FrequencyTriple random_simplex_point(RandomSource& rng) {
    // Sorted-uniform spacings give the flat Dirichlet(1,1,1).
    double a = rng.uniform(), b = rng.uniform();
    if (a > b) std::swap(a, b);
    return FrequencyTriple{{a, b - a, 1.0 - b}};
}

// Gaussian elimination with partial pivoting; independent of the Cramer
// route in the library.
std::array<double, 3> eliminate(std::array<std::array<double, 3>, 3> m, std::array<double, 3> rhs) {
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        std::swap(m[col], m[piv]);
        std::swap(rhs[col], rhs[piv]);
        for (int r = col + 1; r < 3; ++r) {
            const double f = m[r][col] / m[col][col];
            for (int c = col; c < 3; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::array<double, 3> x{};
    for (int r = 2; r >= 0; --r) {
        double acc = rhs[r];
        for (int c = r + 1; c < 3; ++c) acc -= m[r][c] * x[c];
        x[r] = acc / m[r][r];
    }
    return x;
}

}  // namespace

TEST_CASE("strategy stores six free coordinates and derives complements") {
    const ConditionalStrategy s({0.1, 0.2, 0.3, 0.4, 0.5, 0.6});
    CHECK(s.prob(0, 0, 2) == 0.1);
    CHECK(s.prob(0, 1, 2) == doctest::Approx(0.9));
    CHECK(s.prob(0, 0, 1) == 0.2);
    CHECK(s.prob(0, 2, 1) == doctest::Approx(0.8));
    CHECK(s.prob(1, 0, 2) == 0.3);
    CHECK(s.prob(1, 1, 2) == doctest::Approx(0.7));
    CHECK(s.prob(1, 1, 0) == 0.4);
    CHECK(s.prob(1, 2, 0) == doctest::Approx(0.6));
    CHECK(s.prob(2, 0, 1) == 0.5);
    CHECK(s.prob(2, 2, 1) == doctest::Approx(0.5));
    CHECK(s.prob(2, 1, 0) == 0.6);
    CHECK(s.prob(2, 2, 0) == doctest::Approx(0.4));

    CHECK_THROWS_AS(s.prob(0, 0, 0), std::out_of_range);
    CHECK_THROWS_AS(s.prob(1, 2, 2), std::out_of_range);
    CHECK_THROWS_AS(s.prob(3, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(ConditionalStrategy({1.5, 0, 0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(ConditionalStrategy({NAN, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("compute_omega") {
    SUBCASE("worked example is optimal") {
        const OmegaTriple w = compute_omega(worked_example(), kWorkedQ);
        for (double v : w.w) CHECK(std::abs(v - 1.0 / 3) <= 1e-12);
    }
    SUBCASE("uniform strategy with only food 0 drawn") {
        const OmegaTriple w = compute_omega(ConditionalStrategy::uniform(), FrequencyTriple{{1, 0, 0}});
        CHECK(w[0] == 0.5);
        CHECK(w[1] == 0.25);
        CHECK(w[2] == 0.25);
    }
    SUBCASE("deterministic choices under food 1") {
        const ConditionalStrategy s({0.5, 0.5, 1.0, 1.0, 0.5, 0.5});
        const OmegaTriple w = compute_omega(s, FrequencyTriple{{0, 1, 0}});
        CHECK(w[0] == 0.5);
        CHECK(w[1] == 0.5);
        CHECK(w[2] == 0.0);
    }
}

TEST_CASE("build_offer_matrix") {
    SUBCASE("uniform strategy") {
        const OfferMatrix m = build_offer_matrix(ConditionalStrategy::uniform());
        const double expected[3][3] = {{0.5, 0.25, 0.25}, {0.25, 0.5, 0.25}, {0.25, 0.25, 0.5}};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) CHECK(m.b[r][c] == expected[r][c]);
    }
    SUBCASE("worked example is column-stochastic") {
        const OfferMatrix m = build_offer_matrix(worked_example());
        for (int c = 0; c < 3; ++c) CHECK(std::abs(m.b[0][c] + m.b[1][c] + m.b[2][c] - 1.0) <= 1e-14);
    }
    SUBCASE("food 2 never chosen gives a zero row") {
        const OfferMatrix m = build_offer_matrix(greedy_zero_then_one());
        for (int c = 0; c < 3; ++c) CHECK(m.b[2][c] == 0.0);
        CHECK(m.determinant == 0.0);
    }
}

TEST_CASE("solve_optimal_frequencies") {
    SUBCASE("worked example") {
        const SolveResult r = solve_optimal_frequencies(worked_example());
        REQUIRE(std::holds_alternative<FrequencyTriple>(r));
        const auto q = std::get<FrequencyTriple>(r);
        for (int i = 0; i < 3; ++i) CHECK(std::abs(q[i] - kWorkedQ[i]) <= 1e-10);
    }
    SUBCASE("uniform strategy maps to the centroid") {
        const auto q = std::get<FrequencyTriple>(solve_optimal_frequencies(ConditionalStrategy::uniform()));
        for (int i = 0; i < 3; ++i) CHECK(std::abs(q[i] - 1.0 / 3) <= 1e-14);
    }
    SUBCASE("zero row is singular") {
        const SolveResult r = solve_optimal_frequencies(greedy_zero_then_one());
        REQUIRE(std::holds_alternative<NoSolution>(r));
        CHECK(std::get<NoSolution>(r) == NoSolution::SingularSystem);
    }
    SUBCASE("solution outside the simplex") {
        // omega_0 = q0 + 0.45 (q1 + q2) >= 0.45 everywhere on the simplex.
        const ConditionalStrategy s({1, 1, 0.9, 0.1, 0.9, 0.1});
        const SolveResult r = solve_optimal_frequencies(s);
        REQUIRE(std::holds_alternative<NoSolution>(r));
        CHECK(std::get<NoSolution>(r) == NoSolution::OutsideSimplex);
    }
}

TEST_CASE("closed-form frequencies agree with elimination") {
    RandomSource rng(11);
    int compared = 0;
    for (int n = 0; n < 10'000; ++n) {
        const ConditionalStrategy s = sample_uniform_strategy(rng);
        const OfferMatrix m = build_offer_matrix(s);
        if (std::abs(m.determinant) < 1e-3) continue;
        const auto oracle = eliminate(m.b, {1.0 / 3, 1.0 / 3, 1.0 / 3});
        const auto closed = closed_form_frequencies(s);
        for (int i = 0; i < 3; ++i) REQUIRE(std::abs(oracle[i] - closed[i]) <= 1e-9);
        ++compared;
    }
    CHECK(compared > 9'000);
    CHECK(closed_form_disagreements() == 0);
}

TEST_CASE("is_optimal") {
    CHECK(is_optimal(worked_example(), kWorkedQ, 1e-12));
    CHECK_FALSE(is_optimal(ConditionalStrategy::uniform(), FrequencyTriple{{1, 0, 0}}, 1e-12));
    CHECK(is_optimal(ConditionalStrategy::uniform(), FrequencyTriple{{1.0 / 3, 1.0 / 3, 1.0 / 3}}, 1e-12));
}

TEST_CASE("offer matrix and omega properties on random inputs") {
    RandomSource rng(2024);
    for (int n = 0; n < 10'000; ++n) {
        const ConditionalStrategy s = sample_uniform_strategy(rng);
        const FrequencyTriple q = random_simplex_point(rng);
        const OfferMatrix m = build_offer_matrix(s);
        for (int c = 0; c < 3; ++c) REQUIRE(std::abs(m.b[0][c] + m.b[1][c] + m.b[2][c] - 1.0) <= 1e-14);

        const OmegaTriple w = compute_omega(s, q);
        REQUIRE(std::abs(w[0] + w[1] + w[2] - 1.0) <= 1e-12);
        const auto bq = m.apply(q.q);
        for (int k = 0; k < 3; ++k) {
            REQUIRE(w[k] >= 0.0);
            REQUIRE(w[k] <= 1.0);
            REQUIRE(std::abs(w[k] - bq[k]) <= 1e-14);
        }

        const SolveResult r = solve_optimal_frequencies(s);
        if (const auto* found = std::get_if<FrequencyTriple>(&r)) {
            REQUIRE(std::abs(found->sum() - 1.0) <= 1e-10);
            REQUIRE(is_optimal(s, *found, 1e-9));
            REQUIRE(found->valid());
        }
    }
}
