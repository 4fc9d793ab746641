#pragma once

#include <array>
#include <complex>

#include "qchoice/game.hpp"
#include "qchoice/random_source.hpp"

namespace qchoice {

/// Point (x1, x2, x3, x4) of the unit three-sphere parametrising the
/// selecting player's SU(2) tactic.
class Tactic {
public:
    /// Throws std::invalid_argument unless |x|^2 = 1 within 1e-12.
    explicit Tactic(const std::array<double, 4>& x);

    const std::array<double, 4>& coords() const noexcept { return x_; }
    double operator[](std::size_t i) const noexcept { return x_[i]; }

private:
    std::array<double, 4> x_;
};

/// H = [[a, b], [c, d]] with a = x1 + i x2, b = x3 + i x4, c = -conj(b),
/// d = conj(a).
struct TacticMatrix {
    std::complex<double> a, b, c, d;
};

/// Four standard normals normalised to unit length (Haar measure on SU(2)).
Tactic haar_sample(RandomSource& rng);

TacticMatrix tactic_matrix(const Tactic& t);

/// All twelve choice probabilities from measuring the tactic-rotated half of
/// the EPR pair in the three mutually unbiased bases.
struct QuantumProbabilities {
    // Indexed as [nature][excluded][choice]; entries with nature == excluded
    // or choice == excluded are zero.
    std::array<std::array<std::array<double, 3>, 3>, 3> p{};

    double at(Food nature, Food choice, Food excluded) const { return p[nature][excluded][choice]; }
};

QuantumProbabilities measurement_probabilities(const TacticMatrix& h);

ConditionalStrategy strategy_from_tactic(const Tactic& t);

/// The six free coordinates as real quadratic forms in x1..x4. Independent
/// derivation kept for cross-checking strategy_from_tactic.
ConditionalStrategy::Coordinates strategy_from_tactic_reduced(const Tactic& t);

/// Frequencies at which the tactic's induced strategy is optimal.
SolveResult map_a2(const Tactic& t);

}  // namespace qchoice
