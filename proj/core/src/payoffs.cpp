#include "tcr/payoffs.hpp"

#include "tcr/errors.hpp"

namespace tcr {

Rational candidate_payoff(const TcrParams& params, Outcome outcome, const ValuationPair& valuation) {
    if (outcome == Outcome::Accepted)
        return (params.min_deposit + params.min_deposit * params.dispensation) * valuation.vr;
    return -params.min_deposit * valuation.v0;
}

Rational challenger_payoff(const TcrParams& params, const Rational& tokens, Outcome outcome,
                           const ValuationPair& valuation) {
    if (tokens < params.min_deposit)
        throw ConfigError("challenger: holding must cover the deposit D");
    if (outcome == Outcome::Accepted) return (tokens - params.min_deposit) * valuation.vr;
    return (tokens + params.min_deposit * params.dispensation) * valuation.v0;
}

Rational voter_tokens_after(const TcrParams& params, const Rational& tokens, Vote vote,
                            Outcome outcome, const Tally& tally) {
    if (tokens <= 0) throw ConfigError("voter: holding must be > 0");
    tally.validate();
    const Rational non_challenger_reject = tally.reject - tally.challenger_tokens;
    if (vote == Vote::Accept && tokens > tally.accept)
        throw ConfigError("voter: holding exceeds the accept tally it voted into");
    if (vote == Vote::Reject && tokens > non_challenger_reject)
        throw ConfigError("voter: holding exceeds the non-challenger reject tally");

    const Rational pool_base = params.min_deposit * (1 - params.dispensation);
    if (vote == Vote::Accept && outcome == Outcome::Accepted) {
        if (tally.accept == 0) throw ComputeError("voter payoff: T_A = 0");
        return tokens + (pool_base + non_challenger_reject * params.slash) * tokens / tally.accept;
    }
    if (vote == Vote::Reject && outcome == Outcome::Rejected) {
        if (non_challenger_reject == 0) throw ComputeError("voter payoff: T_R - T_C = 0");
        return tokens + (pool_base + tally.accept * params.slash) * tokens / non_challenger_reject;
    }
    return tokens * (1 - params.slash);  // losing bloc
}

Rational voter_payoff(const PayoffQuery& query) {
    if (query.actor != Actor::Voter || !query.vote)
        throw ConfigError("payoff query: voter_payoff needs a voting voter");
    const Rational balance = voter_tokens_after(query.params, query.tokens, *query.vote,
                                                query.outcome, query.tally);
    return balance * (query.outcome == Outcome::Accepted ? query.valuation.vr : query.valuation.v0);
}

Rational no_action_payoff(const Rational& tokens, const ValuationPair& valuation,
                          Outcome outcome_if_passive) {
    if (tokens < 0) throw ConfigError("holding must be >= 0");
    return tokens * (outcome_if_passive == Outcome::Accepted ? valuation.vr : valuation.v0);
}

}  // namespace tcr
