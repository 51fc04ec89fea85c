#include "tcr/regions.hpp"

#include "tcr/errors.hpp"

namespace tcr {

std::string to_string(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::TwoVoterCase1: return "two_voter_case1";
        case ScenarioKind::TwoVoterCase2: return "two_voter_case2";
        case ScenarioKind::NVoter: return "n_voter";
    }
    return "n_voter";
}

std::string to_string(EquilibriumSet set) {
    switch (set) {
        case EquilibriumSet::RejectOnly: return "reject_only";
        case EquilibriumSet::Both: return "both";
        case EquilibriumSet::AcceptOnly: return "accept_only";
        case EquilibriumSet::Neither: return "neither";
    }
    return "neither";
}

std::string to_string(RegionOutcome outcome) {
    switch (outcome) {
        case RegionOutcome::Accept: return "accept";
        case RegionOutcome::Reject: return "reject";
        case RegionOutcome::SelectionProblem: return "selection_problem";
    }
    return "reject";
}

bool challenge_necessary_condition(const Rational& gamma, const Rational& delta) {
    return gamma < 1 + delta;
}

bool challenge_decision(const Rational& gamma, const TcrParams& params) {
    params.validate();
    return gamma < 1 + params.challenge_margin;
}

VoteIncentiveReport vote_incentive_report(const TcrParams& params, const Rational& gamma) {
    params.validate();
    VoteIncentiveReport report;
    report.accept_losing_possible = false;  // would need s < 0
    report.reject_losing_bound = 1 / (1 - params.slash);
    report.reject_losing_holds = gamma > report.reject_losing_bound;
    report.winning_dominates_abstention = true;
    return report;
}

RegionLabel classify_region_2voter(const Rational& gamma, const ThresholdSet& thresholds) {
    if (thresholds.delta_prime > thresholds.delta)
        throw ConfigError("thresholds: delta' exceeds delta");
    RegionLabel label;
    label.scenario = thresholds.delta_prime <= thresholds.epsilon ? ScenarioKind::TwoVoterCase1
                                                                  : ScenarioKind::TwoVoterCase2;
    label.challenged = gamma < 1 + thresholds.delta_prime;
    label.equilibrium_set =
        gamma >= 1 + thresholds.epsilon ? EquilibriumSet::Both : EquilibriumSet::RejectOnly;
    if (!label.challenged) {
        label.outcome = RegionOutcome::Accept;
    } else if (label.equilibrium_set == EquilibriumSet::Both) {
        label.outcome = RegionOutcome::SelectionProblem;
    } else {
        label.outcome = RegionOutcome::Reject;
    }
    return label;
}

RegionLabel classify_region_nvoter(const Rational& gamma, const TcrParams& params) {
    params.validate();
    RegionLabel label;
    label.scenario = ScenarioKind::NVoter;
    label.challenged = gamma < 1 + params.challenge_margin;
    label.equilibrium_set = EquilibriumSet::Both;  // unanimity holds for any gamma
    label.outcome = label.challenged ? RegionOutcome::SelectionProblem : RegionOutcome::Accept;
    return label;
}

}  // namespace tcr
