#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <variant>

namespace qchoice {

/// Food index 0, 1 or 2.
using Food = int;

/// Conditional choice probabilities of the selecting player.
///
/// `prob(i, k, j)` is the probability of choosing food k when Nature picked
/// food i and the offered pair excludes food j. Only the six free
/// probabilities are stored, in the canonical order
///
///     P0(C0|B2), P0(C0|B1), P1(C0|B2), P1(C1|B0), P2(C0|B1), P2(C1|B0)
///
/// and the coupled complement of each context is derived on read, so the two
/// choices offered in any context always sum to one.
class ConditionalStrategy {
public:
    static constexpr std::size_t kFree = 6;
    using Coordinates = std::array<double, kFree>;

    /// Throws std::invalid_argument if a coordinate lies outside [0,1] or is
    /// not finite.
    explicit ConditionalStrategy(const Coordinates& free);

    static ConditionalStrategy uniform();

    const Coordinates& free() const noexcept { return free_; }
    double operator[](std::size_t idx) const noexcept { return free_[idx]; }

    /// Throws std::out_of_range when (i, k, j) is not one of the twelve
    /// contexts: j != i and k must belong to the offered pair {0,1,2}\{j}.
    double prob(Food nature, Food choice, Food excluded) const;

    friend bool operator==(const ConditionalStrategy&, const ConditionalStrategy&) = default;

private:
    Coordinates free_;
};

struct FrequencyTriple {
    std::array<double, 3> q{};

    double operator[](std::size_t i) const noexcept { return q[i]; }
    double sum() const noexcept { return q[0] + q[1] + q[2]; }
    bool interior() const noexcept { return q[0] > 0.0 && q[1] > 0.0 && q[2] > 0.0; }
    /// Non-negative and summing to one within 1e-12.
    bool valid() const noexcept;

    friend bool operator==(const FrequencyTriple&, const FrequencyTriple&) = default;
};

struct OmegaTriple {
    std::array<double, 3> w{};
    double operator[](std::size_t i) const noexcept { return w[i]; }
};

/// Matrix B with omega = B q. Column-stochastic by construction.
struct OfferMatrix {
    std::array<std::array<double, 3>, 3> b{};
    double determinant = 0.0;

    std::array<double, 3> apply(const std::array<double, 3>& v) const noexcept;
};

enum class NoSolution : std::uint8_t { SingularSystem, OutsideSimplex };

std::string_view to_string(NoSolution reason) noexcept;

using SolveResult = std::variant<FrequencyTriple, NoSolution>;

inline constexpr double kSingularityTolerance = 1e-10;
inline constexpr double kSimplexTolerance = 1e-12;
inline constexpr double kClosedFormTolerance = 1e-8;

OmegaTriple compute_omega(const ConditionalStrategy& s, const FrequencyTriple& q);

OfferMatrix build_offer_matrix(const ConditionalStrategy& s);

/// Frequencies (q0, q1, q2) at which `s` is optimal, i.e. every food appears
/// in the diet with frequency 1/3. Solved with Cramer's rule on B q = 1/3.
/// Returns SingularSystem if |det B| < 1e-10 and OutsideSimplex if a
/// component is below -1e-12; components in (-1e-12, 0) are clamped to 0.
SolveResult solve_optimal_frequencies(const ConditionalStrategy& s);

/// Closed-form polynomial expressions for (q0, q1, q2). The printed numerators
/// carry the normalisation 12 det B. Used as a cross-check of the linear solve;
/// no simplex or singularity handling.
std::array<double, 3> closed_form_frequencies(const ConditionalStrategy& s);

/// Number of solves whose closed-form cross-check disagreed beyond 1e-8.
std::uint64_t closed_form_disagreements() noexcept;

bool is_optimal(const ConditionalStrategy& s, const FrequencyTriple& q, double tol);

}  // namespace qchoice
