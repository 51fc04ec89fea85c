#include "tcr/resolution.hpp"

#include "tcr/errors.hpp"

#include <vector>

namespace tcr {

RedistributionResult resolve_challenge(const TcrParams& params,
                                       std::span<const ParticipantHolding> voters,
                                       const StrategyProfile& profile,
                                       const ParticipantHolding& challenger,
                                       const ParticipantHolding& candidate) {
    params.validate();
    if (candidate.tokens != params.min_deposit)
        throw ConfigError("candidate: must hold exactly D tokens");
    if (challenger.tokens < params.min_deposit)
        throw ConfigError("challenger: holding must cover the deposit D");

    std::vector<Rational> holdings;
    holdings.reserve(voters.size());
    for (const auto& voter : voters) holdings.push_back(voter.tokens);

    RedistributionResult result;
    result.tally = tally_votes(holdings, profile, challenger.tokens);
    result.outcome = apply_quorum(result.tally, params);

    const Rational& deposit = params.min_deposit;
    const Rational& dispensation = params.dispensation;
    const Rational& slash = params.slash;
    const Tally& tally = result.tally;
    const Rational non_challenger_reject = tally.reject - tally.challenger_tokens;

    // Per-token reward rate of the winning bloc; the challenger's own stake
    // is escrow plus ordinary reject weight, never part of the reward split.
    Rational reward_rate;
    if (result.outcome == Outcome::Accepted) {
        if (tally.accept == 0)
            throw ComputeError("resolve: accepted with no accept tokens (T_A = 0)");
        reward_rate = (deposit * (1 - dispensation) + non_challenger_reject * slash) / tally.accept;
    } else {
        if (non_challenger_reject == 0)
            throw ComputeError("resolve: rejected with no non-challenger reject tokens (T_R - T_C = 0)");
        reward_rate = (deposit * (1 - dispensation) + tally.accept * slash) / non_challenger_reject;
    }

    const Vote winning_vote = result.outcome == Outcome::Accepted ? Vote::Accept : Vote::Reject;
    for (std::size_t i = 0; i < voters.size(); ++i) {
        ParticipantDelta entry{voters[i].id, Role::Voter, {}, {}};
        if (profile[i] == winning_vote) {
            entry.delta = reward_rate * voters[i].tokens;
        } else {
            entry.delta = -slash * voters[i].tokens;
        }
        entry.balance_after = voters[i].tokens + entry.delta;
        result.deltas.push_back(std::move(entry));
    }

    ParticipantDelta challenger_delta{challenger.id, Role::Challenger, {}, {}};
    ParticipantDelta candidate_delta{candidate.id, Role::Candidate, {}, {}};
    if (result.outcome == Outcome::Accepted) {
        challenger_delta.delta = -deposit;
        candidate_delta.delta = deposit * dispensation;
    } else {
        challenger_delta.delta = deposit * dispensation;
        candidate_delta.delta = -deposit;
    }
    challenger_delta.balance_after = challenger.tokens + challenger_delta.delta;
    candidate_delta.balance_after = candidate.tokens + candidate_delta.delta;
    result.deltas.push_back(std::move(challenger_delta));
    result.deltas.push_back(std::move(candidate_delta));
    return result;
}

}  // namespace tcr
