#include "qchoice/classical.hpp"

#include <cmath>

namespace qchoice {

namespace {

void require_interior(const FrequencyTriple& q) {
    if (!q.interior()) throw BoundaryFrequency();
}

}  // namespace

bool params_feasible(const FrequencyTriple& q, const ParamVector& p) {
    require_interior(q);
    const double q0 = q[0], q1 = q[1], q2 = q[2];
    auto within = [](double v, double lo, double hi) { return v >= lo && v <= hi; };
    if (!within(p.alpha, 0.0, q1) || !within(p.gamma, 0.0, q1)) return false;
    if (!within(p.beta, 0.0, q2) || !within(p.delta, 0.0, q2)) return false;
    const double slab1 = -p.alpha + p.gamma + p.delta;
    const double slab2 = p.beta + p.gamma + p.delta;
    return within(slab1, 2.0 / 3.0 - q0 - q1, 2.0 / 3.0 - q1) &&
           within(slab2, 1.0 / 3.0 + q2 - q0, 1.0 / 3.0 + q2);
}

ConditionalStrategy optimal_strategy_from_params(const FrequencyTriple& q, const ParamVector& p) {
    if (!params_feasible(q, p)) throw InfeasibleParameters();
    const double q0 = q[0], q1 = q[1], q2 = q[2];
    const auto& [alpha, beta, gamma, delta] = p;
    ConditionalStrategy s({
        (-2.0 + 3.0 * (-alpha + gamma + delta + q0 + q1)) / (3.0 * q0),  // P0(C0|B2)
        (1.0 + 3.0 * (-beta - gamma - delta + q2)) / (3.0 * q0),         // P0(C0|B1)
        alpha / q1,                                                      // P1(C0|B2)
        gamma / q1,                                                      // P1(C1|B0)
        beta / q2,                                                       // P2(C0|B1)
        delta / q2,                                                      // P2(C1|B0)
    });
    if (!is_optimal(s, q, 1e-10)) throw std::logic_error("constructed strategy is not optimal");
    return s;
}

ConditionalStrategy sample_uniform_strategy(RandomSource& rng) {
    ConditionalStrategy::Coordinates free;
    for (double& v : free) v = rng.uniform();
    return ConditionalStrategy(free);
}

std::optional<ConditionalStrategy> sample_optimal_strategy(const FrequencyTriple& q, RandomSource& rng,
                                                           std::uint64_t max_tries, ClassFilter filter,
                                                           double epsilon) {
    require_interior(q);
    for (std::uint64_t attempt = 0; attempt < max_tries; ++attempt) {
        ParamVector p;
        p.alpha = rng.uniform(0.0, q[1]);
        p.gamma = rng.uniform(0.0, q[1]);
        p.beta = rng.uniform(0.0, q[2]);
        p.delta = rng.uniform(0.0, q[2]);
        if (!params_feasible(q, p)) continue;
        ConditionalStrategy s = optimal_strategy_from_params(q, p);
        if (matches(filter, classify(s, epsilon))) return s;
    }
    return std::nullopt;
}

}  // namespace qchoice
