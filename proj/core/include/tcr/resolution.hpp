#pragma once

#include "tcr/params.hpp"
#include "tcr/tally.hpp"

#include <span>
#include <vector>

namespace tcr {

struct ParticipantDelta {
    std::string id;
    Role role = Role::Voter;
    Rational delta;          // signed token change
    Rational balance_after;  // never negative
};

/// Post-challenge token bookkeeping. Deltas over candidate, challenger and
/// all voters sum to zero exactly.
struct RedistributionResult {
    Outcome outcome = Outcome::Rejected;
    Tally tally;
    std::vector<ParticipantDelta> deltas;  // voters in input order, then challenger, candidate
};

/// Escrows both deposits, tallies the vote, applies the quorum and settles:
///
///   Accepted: candidate +D*d; accept-voter t gains
///             [D*(1-d) + (T_R - T_C)*s] * t/T_A; challenger -D;
///             reject-voters lose s*t (the challenger's own stake is not slashed).
///   Rejected: challenger +D*d; reject-voter t gains
///             [D*(1-d) + T_A*s] * t/(T_R - T_C); candidate -D;
///             accept-voters lose s*t.
///
/// The challenger never shares the voter pool; its upside is exactly D*d.
/// Throws ComputeError on the division guards (Accepted with T_A = 0,
/// Rejected with T_R - T_C = 0).
RedistributionResult resolve_challenge(const TcrParams& params,
                                       std::span<const ParticipantHolding> voters,
                                       const StrategyProfile& profile,
                                       const ParticipantHolding& challenger,
                                       const ParticipantHolding& candidate);

}  // namespace tcr
