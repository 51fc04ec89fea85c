#pragma once

#include "tcr/scenario.hpp"

#include <string>
#include <vector>

namespace tcr {

/// One (gamma, delta') grid point of the region diagram. `boundary` flags
/// grid points that sit exactly on a threshold: "", "one_plus_epsilon",
/// "one_plus_delta_prime" or "both".
struct SweepRow {
    Rational gamma;
    Rational delta_prime;
    Rational delta;
    Rational epsilon;
    bool challenged = false;
    RegionLabel region;
    Dominance dominance = Dominance::Tie;
    std::string boundary;
};

/// Evaluates the grid with the closed-form classifiers. Two equal voters at
/// Q = 1/2 take the two-voter map; n >= 3 equal voters at Q = 1/2 the
/// n-voter map. Rows come out in grid order regardless of parallelism.
std::vector<SweepRow> run_sweep(const ScenarioConfig& config, int parallelism = 1);

std::string render_sweep_csv(const std::vector<SweepRow>& rows, int precision);
std::string render_sweep_json(const std::vector<SweepRow>& rows, int precision);

std::string render_thresholds_json(const ScenarioConfig& config, const ThresholdSet& thresholds,
                                   int precision);
std::string render_thresholds_csv(const ScenarioConfig& config, const ThresholdSet& thresholds,
                                  int precision);

std::string render_equilibria_json(const GameScenario& scenario, const EquilibriumReport& report,
                                   int precision);
std::string render_equilibria_csv(const GameScenario& scenario, const EquilibriumReport& report,
                                  int precision);

/// One OutcomeRecord per line.
std::string render_trace_jsonl(const RunTrace& trace, int precision);
std::string render_trace_csv(const RunTrace& trace, int precision);

std::string render_ordering_json(const OrderingReport& report, int precision);

}  // namespace tcr
