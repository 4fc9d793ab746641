#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "qchoice/game.hpp"
#include "qchoice/preference.hpp"
#include "qchoice/random_source.hpp"

namespace qchoice {

/// Parameters of the inverse construction. alpha and gamma scale with q1,
/// beta and delta with q2.
struct ParamVector {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
};

class BoundaryFrequency : public std::domain_error {
public:
    BoundaryFrequency() : std::domain_error("frequency triple has a zero component") {}
};

class InfeasibleParameters : public std::domain_error {
public:
    InfeasibleParameters() : std::domain_error("parameters violate the feasibility constraints") {}
};

/// Closed box and slab constraints that keep every constructed probability
/// inside [0,1]. Throws BoundaryFrequency unless q is interior.
bool params_feasible(const FrequencyTriple& q, const ParamVector& p);

/// A strategy that is optimal at q, built from the feasible parameters p.
/// Throws BoundaryFrequency or InfeasibleParameters.
ConditionalStrategy optimal_strategy_from_params(const FrequencyTriple& q, const ParamVector& p);

/// Six free coordinates i.i.d. uniform on [0,1].
ConditionalStrategy sample_uniform_strategy(RandomSource& rng);

/// Rejection-samples parameters uniformly from [0,q1]^2 x [0,q2]^2 until one is
/// feasible and the resulting strategy passes `filter`. Returns nullopt after
/// `max_tries` draws.
std::optional<ConditionalStrategy> sample_optimal_strategy(const FrequencyTriple& q, RandomSource& rng,
                                                           std::uint64_t max_tries,
                                                           ClassFilter filter = ClassFilter::All,
                                                           double epsilon = kDefaultTieTolerance);

}  // namespace qchoice
