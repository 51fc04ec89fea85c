#pragma once

#include "tcr/params.hpp"
#include "tcr/tally.hpp"

#include <span>
#include <vector>

namespace tcr {

/// A concrete voting game: params, voter holdings, the challenger's stake
/// (counted on the reject side) and the valuation pair driving payoffs.
struct GameScenario {
    TcrParams params;
    std::vector<Rational> voter_tokens;
    Rational challenger_tokens;
    ValuationPair valuation;

    /// Validates all type invariants plus delta' <= delta. ConfigError on failure.
    void validate() const;
};

/// All 2^n profiles exactly once, lexicographic with Accept before Reject:
/// n=2 yields AA, AR, RA, RR. Throws ComputeError outside 1 <= n <= 20.
std::vector<StrategyProfile> enumerate_profiles(int voter_count);

/// True iff no single voter strictly improves its payoff by flipping its own
/// vote. Each deviation recomputes the tally and quorum outcome, so pivotal
/// flips are priced exactly. Ties never break an equilibrium.
bool is_nash(const StrategyProfile& profile, std::span<const Rational> voter_tokens,
             const Rational& challenger_tokens, const TcrParams& params,
             const ValuationPair& valuation);

struct ProfileRecord {
    StrategyProfile profile;
    Outcome outcome = Outcome::Rejected;
    std::vector<Rational> voter_payoffs;
    std::vector<bool> pivotal;  // deviation flips the quorum outcome
    bool equilibrium = false;
};

struct EquilibriumReport {
    std::vector<ProfileRecord> profiles;      // all 2^n, in enumeration order
    std::vector<StrategyProfile> equilibria;  // profiles with no improving deviation
    std::vector<StrategyProfile> dominant;    // Pareto-maximal among equilibria

    const ProfileRecord& record_for(const StrategyProfile& profile) const;
    bool is_equilibrium(const StrategyProfile& profile) const;
};

/// Brute-force enumeration: every profile is scored, deviation-checked and
/// pivotality-mapped; the dominant subset is the exact Pareto frontier of the
/// equilibrium payoff vectors (another equilibrium dominates when every voter
/// gets at least as much and someone strictly more).
EquilibriumReport find_equilibria(const GameScenario& scenario);

/// Two-voter accept threshold, equal holdings t, Q = 1/2:
///   E = [D*(1-d)/2 + t*s] / [t + D*(1-d)/2]
/// (Accept, Accept) is an equilibrium iff gamma >= 1 + E.
Rational epsilon_threshold(const TcrParams& params, const Rational& voter_tokens);

/// Challenge necessary-condition margin delta = D*d/t. Throws ConfigError
/// when the holding is below the deposit.
Rational delta_threshold(const TcrParams& params, const Rational& challenger_tokens);

enum class Dominance { AcceptDominant, RejectDominant, Tie };

/// For a selection problem between the unanimous equilibria:
/// gamma > 1 accept-dominant, gamma < 1 reject-dominant, gamma = 1 a tie
/// (both unanimous payoff vectors coincide up to the common factor).
Dominance classify_dominance(const Rational& gamma);

std::string to_string(Dominance dominance);

/// The closed-form boundaries of one scenario. dominance_boundary is the
/// gamma = 1 payoff-dominance line.
struct ThresholdSet {
    Rational delta;        // D*d / t_challenger
    Rational delta_prime;  // from params
    Rational epsilon;      // two-voter E at the common holding
    Rational dominance_boundary = 1;
};

/// Binds params to a concrete equal-holding electorate and challenger.
/// Enforces delta' <= delta (ConfigError).
ThresholdSet compute_thresholds(const TcrParams& params, const Rational& common_voter_tokens,
                                const Rational& challenger_tokens);

}  // namespace tcr
