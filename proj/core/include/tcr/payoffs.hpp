#pragma once

#include "tcr/params.hpp"
#include "tcr/tally.hpp"

#include <optional>

namespace tcr {

enum class Actor { Candidate, Challenger, Voter, Bystander };

/// One payoff branch, fully specified. A voter's query must be tally
/// consistent: its holding is part of T_A or T_R - T_C per its vote.
struct PayoffQuery {
    Actor actor = Actor::Voter;
    std::optional<Vote> vote;  // voters only
    Rational tokens;           // holding t (ignored for the candidate)
    Outcome outcome = Outcome::Rejected;
    Tally tally;               // voters only
    ValuationPair valuation;
    TcrParams params;
};

/// Accepted: [D + D*d] * V(r).  Rejected: -D * V(0).
Rational candidate_payoff(const TcrParams& params, Outcome outcome, const ValuationPair& valuation);

/// Accepted: (t - D) * V(r).  Rejected: (t + D*d) * V(0).
/// Throws ConfigError when t < D.
Rational challenger_payoff(const TcrParams& params, const Rational& tokens, Outcome outcome,
                           const ValuationPair& valuation);

/// Token balance of a voter after resolution; the token-count component of
/// voter_payoff, exposed for ledger reconciliation.
Rational voter_tokens_after(const TcrParams& params, const Rational& tokens, Vote vote,
                            Outcome outcome, const Tally& tally);

/// The four-branch voter payoff:
///   Accept+Accepted  {t + [D*(1-d) + (T_R - T_C)*s] * t/T_A} * V(r)
///   Accept+Rejected  t*(1-s) * V(0)
///   Reject+Accepted  t*(1-s) * V(r)
///   Reject+Rejected  {t + [D*(1-d) + T_A*s] * t/(T_R - T_C)} * V(0)
Rational voter_payoff(const PayoffQuery& query);

/// Holding value of a passive token holder under the outcome passivity
/// produces: t * V(r) when no challenge means acceptance, t * V(0) otherwise.
Rational no_action_payoff(const Rational& tokens, const ValuationPair& valuation,
                          Outcome outcome_if_passive);

}  // namespace tcr
