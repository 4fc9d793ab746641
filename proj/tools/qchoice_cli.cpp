// Command-line front end: worked example check, sampling runs and figure
// reproduction.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "qchoice/classical.hpp"
#include "qchoice/experiments.hpp"
#include "qchoice/game.hpp"
#include "qchoice/report.hpp"

namespace {

using namespace qchoice;

int verify_example() {
    const FrequencyTriple q{{20.0 / 24, 1.0 / 24, 3.0 / 24}};
    const ParamVector params{1.0 / 48, 1.0 / 24, 1.0 / 48, 1.0 / 24};
    const ConditionalStrategy s = optimal_strategy_from_params(q, params);

    std::cout.precision(17);
    std::cout << "strategy (P0(C0|B2), P0(C0|B1), P1(C0|B2), P1(C1|B0), P2(C0|B1), P2(C1|B0)):";
    for (double p : s.free()) std::cout << ' ' << p;
    std::cout << '\n';

    const OmegaTriple omega = compute_omega(s, q);
    std::cout << "omega at q = (20/24, 1/24, 3/24): " << omega[0] << ' ' << omega[1] << ' ' << omega[2] << '\n';

    const SolveResult solved = solve_optimal_frequencies(s);
    if (const auto* found = std::get_if<FrequencyTriple>(&solved)) {
        std::cout << "solved q: " << (*found)[0] << ' ' << (*found)[1] << ' ' << (*found)[2] << '\n';
        bool ok = is_optimal(s, q, 1e-12);
        for (std::size_t i = 0; i < 3; ++i) ok = ok && std::abs((*found)[i] - q[i]) <= 1e-10;
        std::cout << (ok ? "OK" : "MISMATCH") << '\n';
        return ok ? 0 : 1;
    }
    std::cout << "no solution: " << to_string(std::get<NoSolution>(solved)) << '\n';
    return 1;
}

void report_counts(const ExperimentConfig& cfg, const ExperimentResult& result) {
    std::cerr << to_string(cfg.model) << ": drawn " << result.drawn << ", singular " << result.singular
              << ", outside simplex " << result.outside_simplex << ", kept " << result.records.size() << " ("
              << to_string(cfg.filter) << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classical and quantum three-food choice game: optimal strategy coverage"};
    app.require_subcommand(1);


    app.add_subcommand("verify-example", "Check the worked optimal strategy at q = (20/24, 1/24, 3/24)");

    ExperimentConfig sample_cfg;
    std::string csv_path;
    std::string svg_path;
    auto* sample = app.add_subcommand("sample", "Run a Monte Carlo experiment and write CSV (and optionally SVG)");
    std::string model_name;
    std::string filter_name = "all";
    sample->add_option("--model", model_name, "classical or quantum")
        ->required()
        ->check(CLI::IsMember({"classical", "quantum"}));
    sample->add_option("--n", sample_cfg.n, "Number of draws")->check(CLI::PositiveNumber);
    sample->add_option("--seed", sample_cfg.seed, "64-bit RNG seed");
    sample->add_option("--class", filter_name, "Class filter")
        ->check(CLI::IsMember({"all", "intransitive1", "intransitive2", "transitive1", "transitive2"}));
    sample->add_option("--partitions", sample_cfg.partitions, "Worker count (part of the determinism key)")
        ->check(CLI::PositiveNumber);
    sample->add_option("--csv", csv_path, "CSV output path")->required();
    sample->add_option("--svg", svg_path, "SVG output path");

    int figure_number = 1;
    std::string panel = "left";
    std::uint64_t figure_n = 10'000;
    std::uint64_t figure_seed = 0;
    unsigned figure_partitions = 1;
    std::string figure_out;
    std::string figure_csv;
    auto* figure = app.add_subcommand("figure", "Reproduce one panel of the coverage figures as SVG");
    figure->add_option("--number", figure_number, "Figure number 1-4")->required()->check(CLI::Range(1, 4));
    figure->add_option("--panel", panel, "left or right")->required()->check(CLI::IsMember({"left", "right"}));
    figure->add_option("--n", figure_n, "Number of draws")->check(CLI::PositiveNumber);
    figure->add_option("--seed", figure_seed, "64-bit RNG seed")->required();
    figure->add_option("--partitions", figure_partitions, "Worker count")->check(CLI::PositiveNumber);
    figure->add_option("--out", figure_out, "SVG output path")->required();
    figure->add_option("--csv", figure_csv, "Also write the records as CSV");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("verify-example")) return verify_example();

        if (app.got_subcommand("sample")) {
            sample_cfg.model = *parse_model(model_name);
            sample_cfg.filter = *parse_class_filter(filter_name);
            const ExperimentResult result = run_experiment(sample_cfg);
            report_counts(sample_cfg, result);
            emit_csv(result.records, csv_path);
            if (!svg_path.empty()) emit_svg(result.records, svg_path);
            return 0;
        }

        if (app.got_subcommand("figure")) {
            // Figures 1-3: left classical, right quantum with filters all /
            // intransitive1 / intransitive2. Figure 4: quantum transitive,
            // type 1 left and type 2 right.
            static constexpr ClassFilter kFilters[] = {ClassFilter::All, ClassFilter::Intransitive1,
                                                       ClassFilter::Intransitive2};
            static constexpr const char* kTitles[] = {"Optimal strategies", "Optimal intransitive strategies of type 1",
                                                      "Optimal intransitive strategies of type 2",
                                                      "Optimal transitive strategies"};
            const bool left = panel == "left";
            ExperimentConfig cfg;
            cfg.n = figure_n;
            cfg.seed = figure_seed;
            cfg.partitions = figure_partitions;
            SvgOptions options;
            if (figure_number == 4) {
                cfg.model = Model::Quantum;
                cfg.filter = left ? ClassFilter::Transitive1 : ClassFilter::Transitive2;
            } else {
                cfg.model = left ? Model::Classical : Model::Quantum;
                cfg.filter = kFilters[figure_number - 1];
                if (figure_number > 1) options.color_by_type = figure_number - 1;
            }
            options.title = std::string(kTitles[figure_number - 1]) + " (" + std::string(to_string(cfg.model)) +
                            (figure_number == 4 ? (left ? ", type 1" : ", type 2") : "") + ")";
            const ExperimentResult result = run_experiment(cfg);
            report_counts(cfg, result);
            emit_svg(result.records, figure_out, options);
            if (!figure_csv.empty()) emit_csv(result.records, figure_csv);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
