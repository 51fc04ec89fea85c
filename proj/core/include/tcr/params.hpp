#pragma once

#include "tcr/rational.hpp"

#include <string>

namespace tcr {

/// Registry constants. D is the deposit staked by candidate and challenger,
/// d the dispensation fraction awarded to the winning principal, Q the
/// accept-side quorum ratio, s the losing-bloc slash fraction.
/// challenge_margin is the axiomatic delta': a challenge occurs exactly when
/// gamma < 1 + delta'. Its upper bound delta' <= delta = D*d/t depends on the
/// challenger holding and is checked where a scenario is bound.
struct TcrParams {
    Rational min_deposit;       // D > 0
    Rational dispensation;      // d in [0,1]
    Rational quorum;            // Q in (0,1]
    Rational slash;             // s in [0,1)
    Rational challenge_margin;  // delta' >= 0

    /// Throws ConfigError naming the violated field.
    void validate() const;
};

enum class Role { Candidate, Challenger, Voter };

struct ParticipantHolding {
    std::string id;
    Rational tokens;  // > 0
    Role role = Role::Voter;
};

/// Token values without (v0) and with (vr) the candidate admitted.
struct ValuationPair {
    Rational v0;  // > 0
    Rational vr;  // > 0

    Rational gamma() const { return vr / v0; }
    void validate() const;
};

/// delta' <= delta = D*d/t_challenger. Scenario-binding check; throws
/// ConfigError when the configured margin exceeds the necessary-condition
/// bound for this challenger.
void require_margin_consistency(const TcrParams& params, const Rational& challenger_tokens);

}  // namespace tcr
