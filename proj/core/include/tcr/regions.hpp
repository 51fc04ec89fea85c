#pragma once

#include "tcr/equilibrium.hpp"
#include "tcr/params.hpp"

#include <string>

namespace tcr {

enum class ScenarioKind { TwoVoterCase1, TwoVoterCase2, NVoter };

/// Which unanimous profiles are equilibria. The closed-form classifiers only
/// produce RejectOnly or Both; AcceptOnly and Neither arise from enumeration
/// in pivotal electorates (one voter, dominant voters, large challengers)
/// where the closed forms do not apply.
enum class EquilibriumSet { RejectOnly, Both, AcceptOnly, Neither };

enum class RegionOutcome { Accept, Reject, SelectionProblem };

/// One band of the gamma axis. An unchallenged candidate always enters the
/// list, so challenged == false implies outcome Accept and the equilibrium
/// set is the hypothetical one had a challenge occurred.
struct RegionLabel {
    ScenarioKind scenario = ScenarioKind::NVoter;
    bool challenged = false;
    EquilibriumSet equilibrium_set = EquilibriumSet::RejectOnly;
    RegionOutcome outcome = RegionOutcome::Accept;
};

std::string to_string(ScenarioKind kind);
std::string to_string(EquilibriumSet set);
std::string to_string(RegionOutcome outcome);

/// Necessary condition for any rational challenge: gamma < 1 + delta.
/// At gamma >= 1 + delta the best challenge payoff is at most the passive
/// t * V(r). The boundary itself belongs to no-challenge.
bool challenge_necessary_condition(const Rational& gamma, const Rational& delta);

/// The axiomatic sufficient condition: challenge iff gamma < 1 + delta'.
/// Monotone nonincreasing in gamma (the challenge region is a down-set).
bool challenge_decision(const Rational& gamma, const TcrParams& params);

/// The voter participation bounds: voting accept can never beat abstention
/// unconditionally (it would need s < 0); a losing reject vote beats
/// abstention iff gamma > 1/(1-s); winning votes always dominate abstention.
struct VoteIncentiveReport {
    bool accept_losing_possible = false;    // requires s < 0
    Rational reject_losing_bound;           // 1/(1-s)
    bool reject_losing_holds = false;       // gamma > bound
    bool winning_dominates_abstention = true;
};

VoteIncentiveReport vote_incentive_report(const TcrParams& params, const Rational& gamma);

/// Region map of the two-equal-voter, Q = 1/2 game. Boundary conventions,
/// applied everywhere: gamma = 1 + delta' is no-challenge; gamma = 1 + E is
/// on the both-equilibria side.
RegionLabel classify_region_2voter(const Rational& gamma, const ThresholdSet& thresholds);

/// Region map for n >= 3 equal voters, Q = 1/2 (no voter pivotal): below
/// 1 + delta' a challenge happens and both unanimous profiles are equilibria;
/// at or above it the candidate enters unchallenged.
RegionLabel classify_region_nvoter(const Rational& gamma, const TcrParams& params);

}  // namespace tcr
