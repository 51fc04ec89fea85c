#include "tcr/reports.hpp"

#include "tcr/errors.hpp"

#include "parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace tcr {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string render(const Rational& value, int precision) {
    return decimal_string(value, precision);
}

bool all_equal(const std::vector<Rational>& values) {
    return std::all_of(values.begin(), values.end(),
                       [&](const Rational& v) { return v == values.front(); });
}

ordered params_json(const TcrParams& params, int precision) {
    ordered out;
    out["min_deposit"] = render(params.min_deposit, precision);
    out["dispensation"] = render(params.dispensation, precision);
    out["quorum"] = render(params.quorum, precision);
    out["slash"] = render(params.slash, precision);
    out["challenge_margin"] = render(params.challenge_margin, precision);
    return out;
}

ordered region_json(const RegionLabel& region) {
    ordered out;
    out["scenario"] = to_string(region.scenario);
    out["challenged"] = region.challenged;
    out["equilibrium_set"] = to_string(region.equilibrium_set);
    out["outcome"] = to_string(region.outcome);
    return out;
}

ordered record_json(const OutcomeRecord& record, int precision) {
    ordered out;
    out["candidate"] = record.candidate_id;
    out["v0"] = render(record.v0, precision);
    out["vr"] = render(record.vr, precision);
    out["gamma"] = render(record.gamma, precision);
    out["gamma_exact"] = fraction_string(record.gamma);
    out["challenged"] = record.challenged;
    out["region"] = region_json(record.region);
    if (record.selected) {
        out["selected_equilibrium"] = to_string(*record.selected);
    } else {
        out["selected_equilibrium"] = nullptr;
    }
    out["outcome"] = record.final_outcome == Outcome::Accepted ? "accepted" : "rejected";
    return out;
}

}  // namespace

std::vector<SweepRow> run_sweep(const ScenarioConfig& config, int parallelism) {
    if (config.sweep.gammas.empty()) throw ConfigError("sweep.gamma: empty grid");
    const auto& voters = config.voter_tokens;
    const bool equal = all_equal(voters);
    const bool two_voter = equal && voters.size() == 2 && config.params.quorum == Rational(1, 2);
    const bool n_voter = equal && voters.size() >= 3 && config.params.quorum == Rational(1, 2);
    if (!two_voter && !n_voter)
        throw ConfigError(
            "electorate: sweep regions need equal holdings and Q = 1/2 (2 voters for the "
            "two-voter map, >= 3 for the n-voter map)");

    std::vector<Rational> margins = config.sweep.delta_primes;
    if (margins.empty()) margins.push_back(config.params.challenge_margin);

    std::vector<std::pair<Rational, Rational>> grid;  // (delta', gamma), delta' major
    for (const auto& margin : margins) {
        for (const auto& gamma : config.sweep.gammas) grid.emplace_back(margin, gamma);
    }

    std::vector<SweepRow> rows(grid.size());
    run_indexed_jobs(grid.size(), parallelism, [&](std::size_t job) {
        const auto& [margin, gamma] = grid[job];
        TcrParams params = config.params;
        params.challenge_margin = margin;
        const ThresholdSet thresholds =
            compute_thresholds(params, voters.front(), config.challenger_tokens);
        SweepRow row;
        row.gamma = gamma;
        row.delta_prime = margin;
        row.delta = thresholds.delta;
        row.epsilon = thresholds.epsilon;
        row.region = two_voter ? classify_region_2voter(gamma, thresholds)
                               : classify_region_nvoter(gamma, params);
        row.challenged = row.region.challenged;
        row.dominance = classify_dominance(gamma);
        const bool on_epsilon = two_voter && gamma == 1 + thresholds.epsilon;
        const bool on_margin = gamma == 1 + margin;
        if (on_epsilon && on_margin) {
            row.boundary = "both";
        } else if (on_epsilon) {
            row.boundary = "one_plus_epsilon";
        } else if (on_margin) {
            row.boundary = "one_plus_delta_prime";
        }
        rows[job] = std::move(row);
    });
    return rows;
}

std::string render_sweep_csv(const std::vector<SweepRow>& rows, int precision) {
    std::ostringstream out;
    out << "gamma,delta_prime,delta,epsilon,challenged,scenario,equilibrium_set,outcome,"
           "dominance,boundary\n";
    for (const auto& row : rows) {
        // The two-voter threshold E has no meaning in the n-voter map.
        const bool has_epsilon = row.region.scenario != ScenarioKind::NVoter;
        out << render(row.gamma, precision) << ',' << render(row.delta_prime, precision) << ','
            << render(row.delta, precision) << ','
            << (has_epsilon ? render(row.epsilon, precision) : "") << ','
            << (row.challenged ? "true" : "false") << ',' << to_string(row.region.scenario) << ','
            << to_string(row.region.equilibrium_set) << ',' << to_string(row.region.outcome) << ','
            << to_string(row.dominance) << ',' << row.boundary << '\n';
    }
    return out.str();
}

std::string render_sweep_json(const std::vector<SweepRow>& rows, int precision) {
    ordered out;
    out["precision"] = precision;
    out["rows"] = ordered::array();
    for (const auto& row : rows) {
        ordered item;
        item["gamma"] = render(row.gamma, precision);
        item["delta_prime"] = render(row.delta_prime, precision);
        item["delta"] = render(row.delta, precision);
        if (row.region.scenario != ScenarioKind::NVoter) {
            item["epsilon"] = render(row.epsilon, precision);
        } else {
            item["epsilon"] = nullptr;
        }
        item["challenged"] = row.challenged;
        item["region"] = region_json(row.region);
        item["dominance"] = to_string(row.dominance);
        item["boundary"] = row.boundary;
        out["rows"].push_back(std::move(item));
    }
    return out.dump(2) + "\n";
}

std::string render_thresholds_json(const ScenarioConfig& config, const ThresholdSet& thresholds,
                                   int precision) {
    ordered out;
    out["precision"] = precision;
    out["params"] = params_json(config.params, precision);
    out["delta"] = render(thresholds.delta, precision);
    out["delta_prime"] = render(thresholds.delta_prime, precision);
    if (all_equal(config.voter_tokens) && config.voter_tokens.size() == 2) {
        out["epsilon"] = render(thresholds.epsilon, precision);
        out["one_plus_epsilon"] = render(1 + thresholds.epsilon, precision);
    } else {
        out["epsilon"] = nullptr;
        out["one_plus_epsilon"] = nullptr;
    }
    out["one_plus_delta"] = render(1 + thresholds.delta, precision);
    out["one_plus_delta_prime"] = render(1 + thresholds.delta_prime, precision);
    out["dominance_boundary"] = render(thresholds.dominance_boundary, precision);
    return out.dump(2) + "\n";
}

std::string render_thresholds_csv(const ScenarioConfig& config, const ThresholdSet& thresholds,
                                  int precision) {
    const bool has_epsilon = all_equal(config.voter_tokens) && config.voter_tokens.size() == 2;
    std::ostringstream out;
    out << "delta,delta_prime,epsilon,one_plus_delta,one_plus_delta_prime,one_plus_epsilon,"
           "dominance_boundary\n";
    out << render(thresholds.delta, precision) << ',' << render(thresholds.delta_prime, precision)
        << ',' << (has_epsilon ? render(thresholds.epsilon, precision) : "") << ','
        << render(1 + thresholds.delta, precision) << ','
        << render(1 + thresholds.delta_prime, precision) << ','
        << (has_epsilon ? render(1 + thresholds.epsilon, precision) : "") << ','
        << render(thresholds.dominance_boundary, precision) << '\n';
    return out.str();
}

std::string render_equilibria_json(const GameScenario& scenario, const EquilibriumReport& report,
                                   int precision) {
    ordered out;
    out["precision"] = precision;
    out["params"] = params_json(scenario.params, precision);
    out["voters"] = ordered::array();
    for (const auto& tokens : scenario.voter_tokens)
        out["voters"].push_back(render(tokens, precision));
    out["challenger"] = render(scenario.challenger_tokens, precision);
    out["valuation"] = {{"v0", render(scenario.valuation.v0, precision)},
                        {"vr", render(scenario.valuation.vr, precision)},
                        {"gamma", render(scenario.valuation.gamma(), precision)}};
    out["profiles"] = ordered::array();
    for (const auto& record : report.profiles) {
        ordered item;
        item["votes"] = to_string(record.profile);
        item["outcome"] = record.outcome == Outcome::Accepted ? "accepted" : "rejected";
        item["payoffs"] = ordered::array();
        for (const auto& payoff : record.voter_payoffs)
            item["payoffs"].push_back(render(payoff, precision));
        item["pivotal"] = record.pivotal;
        item["equilibrium"] = record.equilibrium;
        out["profiles"].push_back(std::move(item));
    }
    out["equilibria"] = ordered::array();
    for (const auto& profile : report.equilibria) out["equilibria"].push_back(to_string(profile));
    out["dominant"] = ordered::array();
    for (const auto& profile : report.dominant) out["dominant"].push_back(to_string(profile));
    return out.dump(2) + "\n";
}

std::string render_equilibria_csv(const GameScenario&, const EquilibriumReport& report,
                                  int precision) {
    std::ostringstream out;
    out << "votes,outcome,equilibrium,dominant,pivotal,payoffs\n";
    auto contains = [&](const std::vector<StrategyProfile>& set, const StrategyProfile& profile) {
        return std::find(set.begin(), set.end(), profile) != set.end();
    };
    for (const auto& record : report.profiles) {
        out << to_string(record.profile) << ','
            << (record.outcome == Outcome::Accepted ? "accepted" : "rejected") << ','
            << (record.equilibrium ? "true" : "false") << ','
            << (contains(report.dominant, record.profile) ? "true" : "false") << ',';
        for (bool flag : record.pivotal) out << (flag ? 'P' : '-');
        out << ',';
        for (std::size_t i = 0; i < record.voter_payoffs.size(); ++i) {
            if (i) out << ';';
            out << render(record.voter_payoffs[i], precision);
        }
        out << '\n';
    }
    return out.str();
}

std::string render_trace_jsonl(const RunTrace& trace, int precision) {
    std::ostringstream out;
    for (const auto& record : trace.records) out << record_json(record, precision).dump() << '\n';
    return out.str();
}

std::string render_trace_csv(const RunTrace& trace, int precision) {
    std::ostringstream out;
    out << "step,candidate,v0,vr,gamma,challenged,scenario,equilibrium_set,region_outcome,"
           "selected_equilibrium,outcome\n";
    for (std::size_t i = 0; i < trace.records.size(); ++i) {
        const auto& record = trace.records[i];
        out << i << ',' << record.candidate_id << ',' << render(record.v0, precision) << ','
            << render(record.vr, precision) << ',' << render(record.gamma, precision) << ','
            << (record.challenged ? "true" : "false") << ',' << to_string(record.region.scenario)
            << ',' << to_string(record.region.equilibrium_set) << ','
            << to_string(record.region.outcome) << ','
            << (record.selected ? to_string(*record.selected) : "") << ','
            << (record.final_outcome == Outcome::Accepted ? "accepted" : "rejected") << '\n';
    }
    return out.str();
}

std::string render_ordering_json(const OrderingReport& report, int precision) {
    ordered out;
    out["precision"] = precision;
    out["permutations"] = report.permutation_count;
    out["distinct_compositions"] = report.compositions.size();
    out["compositions"] = ordered::array();
    for (const auto& composition : report.compositions) {
        ordered item;
        item["entries"] = composition.entries;
        item["permutations"] = composition.permutations;
        item["example_order"] = composition.example_order;
        out["compositions"].push_back(std::move(item));
    }
    if (report.witness) {
        ordered witness;
        witness["order_a"] = report.witness->order_a;
        witness["order_b"] = report.witness->order_b;
        witness["composition_a"] = report.witness->composition_a;
        witness["composition_b"] = report.witness->composition_b;
        out["witness"] = std::move(witness);
    } else {
        out["witness"] = nullptr;
    }
    return out.dump(2) + "\n";
}

}  // namespace tcr
