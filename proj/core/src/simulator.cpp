#include "tcr/simulator.hpp"

#include "tcr/errors.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tcr {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rational mean_with(const RegistryState& state, const Rational& rating) {
    Rational sum = rating;
    for (const auto& entry : state.entries) sum += entry.rating;
    return sum / static_cast<int>(state.entries.size() + 1);
}

ScenarioKind scenario_kind(const TcrParams& params, const Electorate& electorate) {
    const auto& voters = electorate.voter_tokens;
    const bool equal = std::all_of(voters.begin(), voters.end(),
                                   [&](const Rational& t) { return t == voters.front(); });
    if (equal && voters.size() == 2 && params.quorum == Rational(1, 2)) {
        const Rational epsilon = epsilon_threshold(params, voters.front());
        return params.challenge_margin <= epsilon ? ScenarioKind::TwoVoterCase1
                                                  : ScenarioKind::TwoVoterCase2;
    }
    return ScenarioKind::NVoter;
}

EquilibriumSet unanimous_set(const EquilibriumReport& report, std::size_t n) {
    const bool all_accept =
        report.is_equilibrium(StrategyProfile(n, Vote::Accept));
    const bool all_reject =
        report.is_equilibrium(StrategyProfile(n, Vote::Reject));
    if (all_accept && all_reject) return EquilibriumSet::Both;
    if (all_accept) return EquilibriumSet::AcceptOnly;
    if (all_reject) return EquilibriumSet::RejectOnly;
    return EquilibriumSet::Neither;
}

}  // namespace

std::string to_string(EquilibriumChoice choice) {
    return choice == EquilibriumChoice::AllAccept ? "all_accept" : "all_reject";
}

Rational RegistryState::mean_rating() const {
    if (entries.empty()) return 0;
    Rational sum = 0;
    for (const auto& entry : entries) sum += entry.rating;
    return sum / static_cast<int>(entries.size());
}

Rational ReferenceValuationModel::v0(const RegistryState& state) const {
    return 1 + state.mean_rating();
}

Rational ReferenceValuationModel::vr(const RegistryState& state, const Rational& rating) const {
    return 1 + mean_with(state, rating);
}

Rational StaticValuationModel::v0(const RegistryState&) const { return 1; }

Rational StaticValuationModel::vr(const RegistryState&, const Rational& rating) const {
    return 1 + rating;
}

std::unique_ptr<ValuationModel> make_valuation_model(const std::string& name) {
    if (name == "reference") return std::make_unique<ReferenceValuationModel>();
    if (name == "static") return std::make_unique<StaticValuationModel>();
    throw ConfigError("model: unknown valuation model '" + name + "'");
}

std::string to_string(SelectionPolicy::Kind kind) {
    switch (kind) {
        case SelectionPolicy::Kind::PayoffDominant: return "payoff_dominant";
        case SelectionPolicy::Kind::AlwaysReject: return "always_reject";
        case SelectionPolicy::Kind::AlwaysAccept: return "always_accept";
        case SelectionPolicy::Kind::SeededRandom: return "seeded_random";
    }
    return "payoff_dominant";
}

SelectionPolicy::Kind policy_kind_from_string(const std::string& text) {
    if (text == "payoff_dominant") return SelectionPolicy::Kind::PayoffDominant;
    if (text == "always_reject") return SelectionPolicy::Kind::AlwaysReject;
    if (text == "always_accept") return SelectionPolicy::Kind::AlwaysAccept;
    if (text == "seeded_random") return SelectionPolicy::Kind::SeededRandom;
    throw ConfigError("policy.kind: unknown selection policy '" + text + "'");
}

EquilibriumChoice SelectionPolicy::resolve(const Rational& gamma, std::size_t step_index) const {
    switch (kind) {
        case Kind::AlwaysReject: return EquilibriumChoice::AllReject;
        case Kind::AlwaysAccept: return EquilibriumChoice::AllAccept;
        case Kind::SeededRandom: {
            const std::uint64_t word = splitmix64(seed ^ splitmix64(step_index));
            return (word & 1u) ? EquilibriumChoice::AllAccept : EquilibriumChoice::AllReject;
        }
        case Kind::PayoffDominant: break;
    }
    switch (classify_dominance(gamma)) {
        case Dominance::AcceptDominant: return EquilibriumChoice::AllAccept;
        case Dominance::RejectDominant: return EquilibriumChoice::AllReject;
        case Dominance::Tie: return tie_break;
    }
    return tie_break;
}

std::pair<RegistryState, OutcomeRecord> step(RegistryState state, const RegistryEntry& candidate,
                                             const ValuationModel& model,
                                             const SelectionPolicy& policy, const TcrParams& params,
                                             const Electorate& electorate) {
    params.validate();
    require_margin_consistency(params, electorate.challenger_tokens);

    OutcomeRecord record;
    record.candidate_id = candidate.id;
    record.v0 = model.v0(state);
    record.vr = model.vr(state, candidate.rating);
    if (record.v0 <= 0 || record.vr <= 0)
        throw ComputeError("model: non-positive valuation for candidate '" + candidate.id + "'");
    record.gamma = record.vr / record.v0;
    record.challenged = challenge_decision(record.gamma, params);

    GameScenario game{params, electorate.voter_tokens, electorate.challenger_tokens,
                      ValuationPair{record.v0, record.vr}};
    const EquilibriumReport report = find_equilibria(game);
    const EquilibriumSet eq_set = unanimous_set(report, electorate.voter_tokens.size());

    record.region.scenario = scenario_kind(params, electorate);
    record.region.challenged = record.challenged;
    record.region.equilibrium_set = eq_set;

    if (!record.challenged) {
        record.region.outcome = RegionOutcome::Accept;
        record.final_outcome = Outcome::Accepted;
    } else {
        switch (eq_set) {
            case EquilibriumSet::RejectOnly:
                record.region.outcome = RegionOutcome::Reject;
                record.final_outcome = Outcome::Rejected;
                break;
            case EquilibriumSet::AcceptOnly:
                record.region.outcome = RegionOutcome::Accept;
                record.final_outcome = Outcome::Accepted;
                break;
            case EquilibriumSet::Both:
            case EquilibriumSet::Neither: {
                // Neither has no stable unanimous profile to point at; the
                // policy decides there as well.
                record.region.outcome = RegionOutcome::SelectionProblem;
                record.selected = policy.resolve(record.gamma, state.step_index);
                record.final_outcome = *record.selected == EquilibriumChoice::AllAccept
                                           ? Outcome::Accepted
                                           : Outcome::Rejected;
                break;
            }
        }
    }

    if (record.final_outcome == Outcome::Accepted) state.entries.push_back(candidate);
    state.step_index += 1;
    state.history.push_back(record);
    return {std::move(state), std::move(record)};
}

std::vector<std::string> RunTrace::composition() const {
    std::vector<std::string> ids;
    ids.reserve(final_state.entries.size());
    for (const auto& entry : final_state.entries) ids.push_back(entry.id);
    return ids;
}

RunTrace run_sequence(std::span<const RegistryEntry> candidates, const ValuationModel& model,
                      const SelectionPolicy& policy, const TcrParams& params,
                      const Electorate& electorate) {
    RunTrace trace;
    for (const auto& candidate : candidates) {
        auto [next, record] = step(std::move(trace.final_state), candidate, model, policy, params,
                                   electorate);
        trace.final_state = std::move(next);
        trace.records.push_back(std::move(record));
    }
    return trace;
}

OrderingReport ordering_experiment(std::span<const RegistryEntry> pool,
                                   const ValuationModel& model, const SelectionPolicy& policy,
                                   const TcrParams& params, const Electorate& electorate,
                                   int parallelism) {
    constexpr std::size_t kMaxPool = 8;
    if (pool.empty()) throw ConfigError("candidates: empty pool");
    if (pool.size() > kMaxPool)
        throw ComputeError("orderings: pool exceeds the factorial bound of 8");
    {
        std::set<std::string> ids;
        for (const auto& entry : pool) {
            if (!ids.insert(entry.id).second)
                throw ConfigError("candidates: duplicate id '" + entry.id + "'");
        }
    }

    std::vector<std::vector<std::size_t>> orders;
    std::vector<std::size_t> indices(pool.size());
    std::iota(indices.begin(), indices.end(), std::size_t{0});
    do {
        orders.push_back(indices);
    } while (std::next_permutation(indices.begin(), indices.end()));

    std::vector<std::vector<std::string>> compositions(orders.size());
    auto run_one = [&](std::size_t job) {
        std::vector<RegistryEntry> sequence;
        sequence.reserve(pool.size());
        for (std::size_t idx : orders[job]) sequence.push_back(pool[idx]);
        auto ids = run_sequence(sequence, model, policy, params, electorate).composition();
        std::sort(ids.begin(), ids.end());
        compositions[job] = std::move(ids);
    };

    run_indexed_jobs(orders.size(), parallelism, run_one);

    OrderingReport report;
    report.permutation_count = orders.size();
    auto order_ids = [&](std::size_t job) {
        std::vector<std::string> ids;
        ids.reserve(orders[job].size());
        for (std::size_t idx : orders[job]) ids.push_back(pool[idx].id);
        return ids;
    };

    std::map<std::vector<std::string>, std::size_t> seen;  // composition -> report index
    for (std::size_t job = 0; job < orders.size(); ++job) {
        auto [it, inserted] = seen.try_emplace(compositions[job], report.compositions.size());
        if (inserted) {
            report.compositions.push_back({compositions[job], 1, order_ids(job)});
        } else {
            report.compositions[it->second].permutations += 1;
        }
        if (!report.witness && compositions[job] != compositions[0]) {
            report.witness = OrderingReport::Witness{order_ids(0), order_ids(job), compositions[0],
                                                     compositions[job]};
        }
    }
    return report;
}

}  // namespace tcr
