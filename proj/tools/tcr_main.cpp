// tcr: scenario-driven analyzer and simulator for token curated registries.
//
// Subcommands: thresholds, equilibria, sweep, simulate, orderings.
// Exit codes: 0 success, 2 configuration error, 3 runtime error.

#include "tcr/errors.hpp"
#include "tcr/reports.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Options {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string format;  // "json" or "csv"
    int parallel = 1;
};

void add_common(CLI::App* cmd, Options& opts, const std::string& default_format) {
    cmd->add_option("--config", opts.config, "Scenario JSON file")->required();
    cmd->add_option("--seed", opts.seed, "Override the selection policy seed");
    cmd->add_option("--out", opts.out, "Output directory (files instead of stdout)");
    opts.format = default_format;
    cmd->add_option("--format", opts.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--parallel", opts.parallel, "Worker threads for grids and permutations")
        ->check(CLI::Range(1, 256));
}

tcr::ScenarioConfig load(const Options& opts) {
    auto config = tcr::load_scenario(opts.config);
    if (opts.seed) config.policy.seed = *opts.seed;
    return config;
}

void emit(const Options& opts, const std::string& filename, const std::string& body) {
    if (opts.out.empty()) {
        std::cout << body;
        return;
    }
    fs::create_directories(opts.out);
    const fs::path path = fs::path(opts.out) / filename;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw tcr::Error("cannot write '" + path.string() + "'");
    file << body;
    std::cout << path.string() << "\n";
}

int cmd_thresholds(const Options& opts) {
    const auto config = load(opts);
    for (const auto& tokens : config.voter_tokens) {
        if (tokens != config.voter_tokens.front())
            throw tcr::ConfigError("electorate.voters: thresholds need equal holdings");
    }
    const auto thresholds = tcr::compute_thresholds(config.params, config.voter_tokens.front(),
                                                    config.challenger_tokens);
    const std::string body =
        opts.format == "csv"
            ? tcr::render_thresholds_csv(config, thresholds, config.precision)
            : tcr::render_thresholds_json(config, thresholds, config.precision);
    emit(opts, std::string("thresholds.") + opts.format, body);
    return 0;
}

int cmd_equilibria(const Options& opts) {
    const auto config = load(opts);
    const auto scenario = config.game(config.require_valuation());
    const auto report = tcr::find_equilibria(scenario);
    const std::string body =
        opts.format == "csv" ? tcr::render_equilibria_csv(scenario, report, config.precision)
                             : tcr::render_equilibria_json(scenario, report, config.precision);
    emit(opts, std::string("equilibria.") + opts.format, body);
    return 0;
}

int cmd_sweep(const Options& opts) {
    const auto config = load(opts);
    const auto rows = tcr::run_sweep(config, opts.parallel);
    const std::string body = opts.format == "json"
                                 ? tcr::render_sweep_json(rows, config.precision)
                                 : tcr::render_sweep_csv(rows, config.precision);
    emit(opts, std::string("sweep.") + opts.format, body);
    return 0;
}

int cmd_simulate(const Options& opts) {
    const auto config = load(opts);
    if (config.candidates.empty()) throw tcr::ConfigError("candidates: required for simulate");
    if (opts.out.empty()) throw tcr::ConfigError("--out: simulate writes trace files");
    const auto model = tcr::make_valuation_model(config.model);
    const auto trace = tcr::run_sequence(config.candidates, *model, config.policy, config.params,
                                         config.electorate());

    fs::create_directories(opts.out);
    {
        std::ofstream jsonl(fs::path(opts.out) / "trace.jsonl", std::ios::binary);
        jsonl << tcr::render_trace_jsonl(trace, config.precision);
    }
    {
        std::ofstream csv(fs::path(opts.out) / "summary.csv", std::ios::binary);
        csv << tcr::render_trace_csv(trace, config.precision);
    }
    std::cout << "accepted " << trace.final_state.entries.size() << "/" << trace.records.size()
              << ":";
    for (const auto& id : trace.composition()) std::cout << " " << id;
    std::cout << "\n";
    return 0;
}

int cmd_orderings(const Options& opts) {
    const auto config = load(opts);
    if (config.candidates.empty()) throw tcr::ConfigError("candidates: required for orderings");
    const auto model = tcr::make_valuation_model(config.model);
    const auto report = tcr::ordering_experiment(config.candidates, *model, config.policy,
                                                 config.params, config.electorate(), opts.parallel);
    emit(opts, "orderings.json", tcr::render_ordering_json(report, config.precision));
    if (!opts.out.empty()) {
        std::cout << report.compositions.size() << " distinct composition(s) over "
                  << report.permutation_count << " permutations\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Token curated registry analyzer"};
    app.require_subcommand(1);

    Options thresholds_opts, equilibria_opts, sweep_opts, simulate_opts, orderings_opts;
    add_common(app.add_subcommand("thresholds", "Closed-form thresholds for a scenario"),
               thresholds_opts, "json");
    add_common(app.add_subcommand("equilibria", "Brute-force Nash equilibrium report"),
               equilibria_opts, "json");
    add_common(app.add_subcommand("sweep", "Region diagram over a (gamma, delta') grid"),
               sweep_opts, "csv");
    add_common(app.add_subcommand("simulate", "Sequential admission run over the candidate list"),
               simulate_opts, "json");
    add_common(app.add_subcommand("orderings", "Exhaustive permutation order-dependence probe"),
               orderings_opts, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (app.got_subcommand("thresholds")) return cmd_thresholds(thresholds_opts);
        if (app.got_subcommand("equilibria")) return cmd_equilibria(equilibria_opts);
        if (app.got_subcommand("sweep")) return cmd_sweep(sweep_opts);
        if (app.got_subcommand("simulate")) return cmd_simulate(simulate_opts);
        if (app.got_subcommand("orderings")) return cmd_orderings(orderings_opts);
    } catch (const tcr::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
