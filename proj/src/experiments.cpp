#include "qchoice/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "qchoice/classical.hpp"
#include "qchoice/quantum.hpp"
#include "qchoice/random_source.hpp"

namespace qchoice {

std::string_view to_string(Model model) noexcept {
    return model == Model::Classical ? "classical" : "quantum";
}

std::optional<Model> parse_model(std::string_view text) noexcept {
    if (text == "classical") return Model::Classical;
    if (text == "quantum") return Model::Quantum;
    return std::nullopt;
}

namespace {

void finish(SampleRecord& rec, const ConditionalStrategy& s, double eps) {
    rec.strategy = s.free();
    const SolveResult solved = solve_optimal_frequencies(s);
    if (const auto* q = std::get_if<FrequencyTriple>(&solved)) {
        rec.frequencies = *q;
        rec.classification = classify(s, eps);
    } else {
        rec.rejection = std::get<NoSolution>(solved);
    }
}

struct Partial {
    std::vector<SampleRecord> records;
    std::uint64_t singular = 0;
    std::uint64_t outside = 0;
};

void run_partition(const ExperimentConfig& cfg, std::uint64_t first, std::uint64_t count, unsigned worker,
                   Partial& out) {
    RandomSource rng(derive_seed(cfg.seed, worker));
    for (std::uint64_t i = 0; i < count; ++i) {
        SampleRecord rec;
        if (cfg.model == Model::Classical) {
            rec = evaluate_classical(first + i, sample_uniform_strategy(rng), cfg.epsilon);
        } else {
            rec = evaluate_quantum(first + i, haar_sample(rng).coords(), cfg.epsilon);
        }
        if (rec.rejection) {
            (*rec.rejection == NoSolution::SingularSystem ? out.singular : out.outside) += 1;
            if (cfg.filter != ClassFilter::All) continue;
        } else if (!matches(cfg.filter, *rec.classification)) {
            continue;
        }
        out.records.push_back(rec);
    }
}

}  // namespace

SampleRecord evaluate_classical(std::uint64_t draw_index, const ConditionalStrategy& s, double eps) {
    SampleRecord rec;
    rec.model = Model::Classical;
    rec.draw_index = draw_index;
    std::copy(s.free().begin(), s.free().end(), rec.source.begin());
    finish(rec, s, eps);
    return rec;
}

SampleRecord evaluate_quantum(std::uint64_t draw_index, const std::array<double, 4>& tactic, double eps) {
    SampleRecord rec;
    rec.model = Model::Quantum;
    rec.draw_index = draw_index;
    std::copy(tactic.begin(), tactic.end(), rec.source.begin());
    finish(rec, strategy_from_tactic(Tactic(tactic)), eps);
    return rec;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    if (cfg.n == 0) throw std::invalid_argument("experiment needs n >= 1");
    const unsigned parts = std::max(1u, cfg.partitions);

    std::vector<Partial> partials(parts);
    std::vector<std::thread> workers;
    std::uint64_t first = 0;
    for (unsigned w = 0; w < parts; ++w) {
        const std::uint64_t count = cfg.n / parts + (w < cfg.n % parts ? 1 : 0);
        if (parts == 1) {
            run_partition(cfg, first, count, w, partials[w]);
        } else {
            workers.emplace_back(run_partition, std::cref(cfg), first, count, w, std::ref(partials[w]));
        }
        first += count;
    }
    for (auto& t : workers) t.join();

    ExperimentResult result;
    result.drawn = cfg.n;
    for (auto& part : partials) {
        result.singular += part.singular;
        result.outside_simplex += part.outside;
        result.records.insert(result.records.end(), part.records.begin(), part.records.end());
    }
    return result;
}

std::size_t ternary_cell(const FrequencyTriple& q, unsigned k) {
    if (k == 0) throw std::invalid_argument("grid depth must be >= 1");
    const double x = k * q[1];
    const double y = k * q[2];
    const long kl = static_cast<long>(k);
    long i = std::clamp(static_cast<long>(std::floor(x)), 0L, kl - 1);
    long j = std::clamp(static_cast<long>(std::floor(y)), 0L, kl - 1);
    // Points on the far edge q1 + q2 = 1 land in the last upward cell of
    // their row.
    while (i + j > kl - 1) {
        if (i > 0) --i;
        else --j;
    }
    const bool upward = (x - i) + (y - j) <= 1.0 || i + j > kl - 2;
    const std::size_t row_start = static_cast<std::size_t>(2 * kl * j - j * j);
    return row_start + static_cast<std::size_t>(2 * i + (upward ? 0 : 1));
}

CoverageReport coverage(std::span<const SampleRecord> records, unsigned k) {
    if (k == 0) throw std::invalid_argument("grid depth must be >= 1");
    CoverageReport report;
    report.depth = k;
    report.total_cells = static_cast<std::size_t>(k) * k;
    report.counts.assign(report.total_cells, 0);
    bool any = false;
    for (const SampleRecord& rec : records) {
        if (!rec.frequencies) continue;
        any = true;
        ++report.counts[ternary_cell(*rec.frequencies, k)];
    }
    if (!any) throw EmptyInput();
    report.occupied = static_cast<std::size_t>(
        std::count_if(report.counts.begin(), report.counts.end(), [](std::uint64_t c) { return c > 0; }));
    report.fraction = static_cast<double>(report.occupied) / static_cast<double>(report.total_cells);
    return report;
}

}  // namespace qchoice
