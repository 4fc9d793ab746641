#include "qchoice/quantum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qchoice {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

}  // namespace

Tactic::Tactic(const std::array<double, 4>& x) : x_(x) {
    const double norm2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
    if (!(std::abs(norm2 - 1.0) <= 1e-12)) {
        throw std::invalid_argument("tactic is not a unit 4-vector (|x|^2 = " + std::to_string(norm2) + ")");
    }
}

Tactic haar_sample(RandomSource& rng) {
    for (;;) {
        std::array<double, 4> x;
        double norm2 = 0.0;
        for (double& v : x) {
            v = rng.normal();
            norm2 += v * v;
        }
        const double norm = std::sqrt(norm2);
        if (norm < 1e-8) continue;
        for (double& v : x) v /= norm;
        return Tactic(x);
    }
}

TacticMatrix tactic_matrix(const Tactic& t) {
    return {
        {t[0], t[1]},
        {t[2], t[3]},
        {-t[2], t[3]},
        {t[0], -t[1]},
    };
}

QuantumProbabilities measurement_probabilities(const TacticMatrix& h) {
    const auto [a, b, c, d] = h;
    QuantumProbabilities out;
    auto set = [&out](Food nature, Food excluded, Food choice, double value) {
        out.p[nature][excluded][choice] = value;
    };
    // Nature offers food 0: standard basis on the left qubit.
    set(0, 2, 0, std::norm(a));
    set(0, 2, 1, std::norm(b));
    set(0, 1, 0, std::norm(b + d) / 2);
    set(0, 1, 2, std::norm(b - d) / 2);
    // Food 1: the |0'>, |1'> basis.
    set(1, 2, 0, std::norm(a + b) / 2);
    set(1, 2, 1, std::norm(c + d) / 2);
    set(1, 0, 1, std::norm(a - b - kI * c + kI * d) / 4);
    set(1, 0, 2, std::norm(a - b + kI * c - kI * d) / 4);
    // Food 2: the |0''>, |1''> basis.
    set(2, 1, 0, std::norm(a - kI * b + c - kI * d) / 4);
    set(2, 1, 2, std::norm(a - kI * b - c + kI * d) / 4);
    set(2, 0, 1, std::norm(a + kI * b - kI * c + d) / 4);
    set(2, 0, 2, std::norm(a + kI * b + kI * c - d) / 4);
    return out;
}

ConditionalStrategy strategy_from_tactic(const Tactic& t) {
    const QuantumProbabilities qp = measurement_probabilities(tactic_matrix(t));
    return ConditionalStrategy({
        qp.at(0, 0, 2),
        qp.at(0, 0, 1),
        qp.at(1, 0, 2),
        qp.at(1, 1, 0),
        qp.at(2, 0, 1),
        qp.at(2, 1, 0),
    });
}

ConditionalStrategy::Coordinates strategy_from_tactic_reduced(const Tactic& t) {
    const double x1 = t[0], x2 = t[1], x3 = t[2], x4 = t[3];
    auto sq = [](double v) { return v * v; };
    return {
        sq(x1) + sq(x2),
        (sq(x1 + x3) + sq(-x2 + x4)) / 2,
        (sq(x1 + x3) + sq(x2 + x4)) / 2,
        (sq(x1 + x2 - x3 + x4) + sq(x1 + x2 + x3 - x4)) / 4,
        (sq(x1 - x2 - x3 + x4) + sq(-x1 + x2 - x3 + x4)) / 4,
        sq(x1) + sq(x3),
    };
}

SolveResult map_a2(const Tactic& t) { return solve_optimal_frequencies(strategy_from_tactic(t)); }

}  // namespace qchoice
