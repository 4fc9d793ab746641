#include "qchoice/game.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>

namespace qchoice {

namespace {

// Free-coordinate slot for context (nature, excluded); -1 marks i == j.
// The slot stores the probability of the lower-numbered food of the pair.
constexpr int kSlot[3][3] = {
    {-1, 1, 0},
    {3, -1, 2},
    {5, 4, -1},
};

constexpr double kRangeSlack = 1e-12;

double det3(const std::array<std::array<double, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::atomic<std::uint64_t> g_disagreements{0};

}  // namespace

ConditionalStrategy::ConditionalStrategy(const Coordinates& free) : free_(free) {
    for (std::size_t i = 0; i < kFree; ++i) {
        double& p = free_[i];
        if (!std::isfinite(p) || p < -kRangeSlack || p > 1.0 + kRangeSlack) {
            throw std::invalid_argument("strategy coordinate " + std::to_string(i) +
                                        " outside [0,1]: " + std::to_string(p));
        }
        p = std::clamp(p, 0.0, 1.0);
    }
}

ConditionalStrategy ConditionalStrategy::uniform() {
    Coordinates half;
    half.fill(0.5);
    return ConditionalStrategy(half);
}

double ConditionalStrategy::prob(Food nature, Food choice, Food excluded) const {
    if (nature < 0 || nature > 2 || excluded < 0 || excluded > 2 || choice < 0 || choice > 2 ||
        nature == excluded || choice == excluded) {
        throw std::out_of_range("no such context");
    }
    const double lower = free_[kSlot[nature][excluded]];
    const Food low_food = excluded == 0 ? 1 : 0;
    return choice == low_food ? lower : 1.0 - lower;
}

bool FrequencyTriple::valid() const noexcept {
    for (double v : q) {
        if (!(v >= 0.0)) return false;
    }
    return std::abs(sum() - 1.0) <= 1e-12;
}

std::array<double, 3> OfferMatrix::apply(const std::array<double, 3>& v) const noexcept {
    std::array<double, 3> out{};
    for (std::size_t r = 0; r < 3; ++r) {
        out[r] = b[r][0] * v[0] + b[r][1] * v[1] + b[r][2] * v[2];
    }
    return out;
}

std::string_view to_string(NoSolution reason) noexcept {
    switch (reason) {
        case NoSolution::SingularSystem: return "singular_system";
        case NoSolution::OutsideSimplex: return "outside_simplex";
    }
    return "unknown";
}

OmegaTriple compute_omega(const ConditionalStrategy& s, const FrequencyTriple& q) {
    // Nature picks food i with frequency q_i, then each of the two pairs
    // containing i with probability 1/2.
    OmegaTriple omega;
    for (Food i = 0; i < 3; ++i) {
        const double weight = 0.5 * q[i];
        for (Food j = 0; j < 3; ++j) {
            if (j == i) continue;
            for (Food k = 0; k < 3; ++k) {
                if (k == j) continue;
                omega.w[k] += s.prob(i, k, j) * weight;
            }
        }
    }
    return omega;
}

OfferMatrix build_offer_matrix(const ConditionalStrategy& s) {
    OfferMatrix m;
    auto& b = m.b;
    b[0][0] = (s.prob(0, 0, 2) + s.prob(0, 0, 1)) / 2;
    b[0][1] = s.prob(1, 0, 2) / 2;
    b[0][2] = s.prob(2, 0, 1) / 2;
    b[1][0] = s.prob(0, 1, 2) / 2;
    b[1][1] = (s.prob(1, 1, 2) + s.prob(1, 1, 0)) / 2;
    b[1][2] = s.prob(2, 1, 0) / 2;
    b[2][0] = s.prob(0, 2, 1) / 2;
    b[2][1] = s.prob(1, 2, 0) / 2;
    b[2][2] = (s.prob(2, 2, 1) + s.prob(2, 2, 0)) / 2;
    m.determinant = det3(b);
    return m;
}

std::array<double, 3> closed_form_frequencies(const ConditionalStrategy& s) {
    const double p0_02 = s.prob(0, 0, 2);
    const double p0_01 = s.prob(0, 0, 1);
    const double p1_02 = s.prob(1, 0, 2);
    const double p1_10 = s.prob(1, 1, 0);
    const double p2_01 = s.prob(2, 0, 1);
    const double p2_10 = s.prob(2, 1, 0);
    const double scale = 12.0 * build_offer_matrix(s).determinant;

    const double n0 = 2 - p2_01 - 2 * p2_10 + 2 * p1_10 + 3 * p1_02 * p2_01 - 3 * p1_10 * p2_01 +
                      3 * p1_02 * p2_10 - 4 * p1_02;
    const double n1 = -2 + p2_01 + 2 * p2_10 + 2 * p0_01 - 3 * p2_10 * p0_02 - 3 * p2_01 * p0_02 -
                      3 * p2_10 * p0_01 + 4 * p0_02;
    const double q0 = n0 / scale;
    const double q1 = n1 / scale;
    return {q0, q1, 1.0 - q0 - q1};
}

std::uint64_t closed_form_disagreements() noexcept { return g_disagreements.load(); }

SolveResult solve_optimal_frequencies(const ConditionalStrategy& s) {
    const OfferMatrix m = build_offer_matrix(s);
    const double det = m.determinant;
    if (!(std::abs(det) >= kSingularityTolerance)) return NoSolution::SingularSystem;

    constexpr double third = 1.0 / 3.0;
    FrequencyTriple out;
    for (std::size_t col = 0; col < 3; ++col) {
        auto replaced = m.b;
        for (std::size_t r = 0; r < 3; ++r) replaced[r][col] = third;
        out.q[col] = det3(replaced) / det;
    }
    for (double& v : out.q) {
        if (v < -kSimplexTolerance) return NoSolution::OutsideSimplex;
        if (v < 0.0) v = 0.0;
    }
    // Column-stochastic B forces sum(q) == 1; larger drift means the solve is
    // too ill-conditioned to trust.
    if (std::abs(out.sum() - 1.0) > 1e-10) return NoSolution::SingularSystem;

    const auto closed = closed_form_frequencies(s);
    double deviation = 0.0;
    for (std::size_t i = 0; i < 3; ++i) deviation = std::max(deviation, std::abs(closed[i] - out.q[i]));
    if (deviation > kClosedFormTolerance) {
        // Only the first few are reported; ill-conditioned systems near the
        // singularity threshold can trip this legitimately.
        if (g_disagreements.fetch_add(1) < 5) {
            std::clog << "qchoice: closed-form frequencies deviate from linear solve by "
                      << deviation << " (det " << det << ")\n";
        }
    }
    return out;
}

bool is_optimal(const ConditionalStrategy& s, const FrequencyTriple& q, double tol) {
    const OmegaTriple omega = compute_omega(s, q);
    for (double w : omega.w) {
        if (std::abs(w - 1.0 / 3.0) > tol) return false;
    }
    return true;
}

}  // namespace qchoice
