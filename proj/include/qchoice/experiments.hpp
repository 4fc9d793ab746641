#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qchoice/game.hpp"
#include "qchoice/preference.hpp"

namespace qchoice {

enum class Model : std::uint8_t { Classical, Quantum };

std::string_view to_string(Model model) noexcept;
std::optional<Model> parse_model(std::string_view text) noexcept;

/// One Monte Carlo draw.
///
/// `source` holds the six cube coordinates (classical) or the four sphere
/// coordinates (quantum, trailing two entries unused). Exactly one of
/// `frequencies` / `rejection` is set; `classification` is set iff
/// `frequencies` is.
struct SampleRecord {
    Model model = Model::Classical;
    std::uint64_t draw_index = 0;
    std::array<double, 6> source{};
    ConditionalStrategy::Coordinates strategy{};
    std::optional<FrequencyTriple> frequencies;
    std::optional<NoSolution> rejection;
    std::optional<Classification> classification;

    std::size_t source_dims() const noexcept { return model == Model::Classical ? 6 : 4; }

    friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

struct ExperimentConfig {
    Model model = Model::Quantum;
    std::uint64_t n = 10'000;
    std::uint64_t seed = 0;
    ClassFilter filter = ClassFilter::All;
    /// Number of independent workers; each gets a seed derived from (seed, index).
    unsigned partitions = 1;
    double epsilon = kDefaultTieTolerance;
};

struct ExperimentResult {
    std::vector<SampleRecord> records;
    std::uint64_t drawn = 0;
    std::uint64_t singular = 0;
    std::uint64_t outside_simplex = 0;
};

/// Draws cfg.n samples, maps each onto the frequency simplex, classifies
/// survivors and keeps those matching cfg.filter (rejected draws are kept
/// only for ClassFilter::All). Records are ordered by (partition, draw).
/// Output is a pure function of (model, n, seed, filter, partitions, epsilon).
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Maps one draw to its record; exposed for re-verification.
SampleRecord evaluate_classical(std::uint64_t draw_index, const ConditionalStrategy& s, double eps);
SampleRecord evaluate_quantum(std::uint64_t draw_index, const std::array<double, 4>& tactic, double eps);

/// Index of the cell of the depth-k ternary grid containing q. Cells are
/// enumerated row by row along q2, alternating upward and downward triangles.
std::size_t ternary_cell(const FrequencyTriple& q, unsigned k);

struct CoverageReport {
    unsigned depth = 0;
    std::size_t occupied = 0;
    std::size_t total_cells = 0;
    double fraction = 0.0;
    std::vector<std::uint64_t> counts;
};

class EmptyInput : public std::invalid_argument {
public:
    EmptyInput() : std::invalid_argument("no record carries a frequency triple") {}
};

/// Throws EmptyInput if no record has frequencies; std::invalid_argument if k == 0.
CoverageReport coverage(std::span<const SampleRecord> records, unsigned k);

}  // namespace qchoice
