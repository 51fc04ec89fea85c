#include "tcr/equilibrium.hpp"

#include "tcr/errors.hpp"
#include "tcr/payoffs.hpp"

#include <sstream>

namespace tcr {

namespace {

constexpr int kMaxVoters = 20;

Tally flip_voter(Tally tally, const Rational& tokens, Vote original_vote) {
    if (original_vote == Vote::Accept) {
        tally.accept -= tokens;
        tally.reject += tokens;
    } else {
        tally.accept += tokens;
        tally.reject -= tokens;
    }
    return tally;
}

Rational voter_value(const TcrParams& params, const ValuationPair& valuation,
                     const Rational& tokens, Vote vote, Outcome outcome, const Tally& tally) {
    const Rational balance = voter_tokens_after(params, tokens, vote, outcome, tally);
    return balance * (outcome == Outcome::Accepted ? valuation.vr : valuation.v0);
}

}  // namespace

void GameScenario::validate() const {
    params.validate();
    if (voter_tokens.empty()) throw ConfigError("electorate: empty voter set");
    for (const auto& tokens : voter_tokens) {
        if (tokens <= 0) throw ConfigError("electorate: voter holdings must be > 0");
    }
    valuation.validate();
    require_margin_consistency(params, challenger_tokens);
}

std::vector<StrategyProfile> enumerate_profiles(int voter_count) {
    if (voter_count < 1 || voter_count > kMaxVoters) {
        std::ostringstream msg;
        msg << "enumeration: voter count " << voter_count << " outside [1," << kMaxVoters << "]";
        throw ComputeError(msg.str());
    }
    std::vector<StrategyProfile> profiles;
    profiles.reserve(std::size_t{1} << voter_count);
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << voter_count); ++bits) {
        StrategyProfile profile(static_cast<std::size_t>(voter_count));
        for (int i = 0; i < voter_count; ++i) {
            const bool reject = (bits >> (voter_count - 1 - i)) & 1u;
            profile[static_cast<std::size_t>(i)] = reject ? Vote::Reject : Vote::Accept;
        }
        profiles.push_back(std::move(profile));
    }
    return profiles;
}

bool is_nash(const StrategyProfile& profile, std::span<const Rational> voter_tokens,
             const Rational& challenger_tokens, const TcrParams& params,
             const ValuationPair& valuation) {
    const Tally tally = tally_votes(voter_tokens, profile, challenger_tokens);
    const Outcome outcome = apply_quorum(tally, params);
    for (std::size_t i = 0; i < profile.size(); ++i) {
        const Rational stay =
            voter_value(params, valuation, voter_tokens[i], profile[i], outcome, tally);
        const Vote flipped = profile[i] == Vote::Accept ? Vote::Reject : Vote::Accept;
        const Tally dev_tally = flip_voter(tally, voter_tokens[i], profile[i]);
        const Outcome dev_outcome = apply_quorum(dev_tally, params);
        const Rational leave =
            voter_value(params, valuation, voter_tokens[i], flipped, dev_outcome, dev_tally);
        if (leave > stay) return false;  // weak inequality: ties keep the equilibrium
    }
    return true;
}

EquilibriumReport find_equilibria(const GameScenario& scenario) {
    scenario.validate();
    const auto& tokens = scenario.voter_tokens;
    const std::size_t n = tokens.size();

    EquilibriumReport report;
    for (auto& profile : enumerate_profiles(static_cast<int>(n))) {
        ProfileRecord record;
        record.profile = std::move(profile);
        const Tally tally = tally_votes(tokens, record.profile, scenario.challenger_tokens);
        record.outcome = apply_quorum(tally, scenario.params);
        record.voter_payoffs.reserve(n);
        record.pivotal.resize(n);
        record.equilibrium = true;

        for (std::size_t i = 0; i < n; ++i) {
            record.voter_payoffs.push_back(voter_value(scenario.params, scenario.valuation,
                                                       tokens[i], record.profile[i],
                                                       record.outcome, tally));
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Vote flipped = record.profile[i] == Vote::Accept ? Vote::Reject : Vote::Accept;
            const Tally dev_tally = flip_voter(tally, tokens[i], record.profile[i]);
            const Outcome dev_outcome = apply_quorum(dev_tally, scenario.params);
            record.pivotal[i] = dev_outcome != record.outcome;
            if (!record.equilibrium) continue;  // pivotal map still wanted for every voter
            const Rational leave = voter_value(scenario.params, scenario.valuation, tokens[i],
                                               flipped, dev_outcome, dev_tally);
            if (leave > record.voter_payoffs[i]) record.equilibrium = false;
        }
        if (record.equilibrium) report.equilibria.push_back(record.profile);
        report.profiles.push_back(std::move(record));
    }

    // Pareto frontier over equilibrium payoff vectors.
    for (const auto& candidate : report.equilibria) {
        const auto& mine = report.record_for(candidate).voter_payoffs;
        bool dominated = false;
        for (const auto& other : report.equilibria) {
            if (&other == &candidate) continue;
            const auto& theirs = report.record_for(other).voter_payoffs;
            bool weakly_better = true;
            bool strictly_somewhere = false;
            for (std::size_t i = 0; i < mine.size(); ++i) {
                if (theirs[i] < mine[i]) {
                    weakly_better = false;
                    break;
                }
                if (theirs[i] > mine[i]) strictly_somewhere = true;
            }
            if (weakly_better && strictly_somewhere) {
                dominated = true;
                break;
            }
        }
        if (!dominated) report.dominant.push_back(candidate);
    }
    return report;
}

const ProfileRecord& EquilibriumReport::record_for(const StrategyProfile& profile) const {
    std::size_t index = 0;
    for (Vote vote : profile) index = (index << 1) | (vote == Vote::Reject ? 1u : 0u);
    if (profile.empty() || index >= profiles.size() || profiles[index].profile.size() != profile.size())
        throw ComputeError("report: profile does not belong to this enumeration");
    return profiles[index];
}

bool EquilibriumReport::is_equilibrium(const StrategyProfile& profile) const {
    return record_for(profile).equilibrium;
}

Rational epsilon_threshold(const TcrParams& params, const Rational& voter_tokens) {
    params.validate();
    if (voter_tokens <= 0) throw ConfigError("electorate: voter holdings must be > 0");
    const Rational half_pool = params.min_deposit * (1 - params.dispensation) / 2;
    return (half_pool + voter_tokens * params.slash) / (voter_tokens + half_pool);
}

Rational delta_threshold(const TcrParams& params, const Rational& challenger_tokens) {
    params.validate();
    if (challenger_tokens < params.min_deposit)
        throw ConfigError("challenger: holding must cover the deposit D");
    return params.min_deposit * params.dispensation / challenger_tokens;
}

Dominance classify_dominance(const Rational& gamma) {
    if (gamma > 1) return Dominance::AcceptDominant;
    if (gamma < 1) return Dominance::RejectDominant;
    return Dominance::Tie;
}

std::string to_string(Dominance dominance) {
    switch (dominance) {
        case Dominance::AcceptDominant: return "accept";
        case Dominance::RejectDominant: return "reject";
        case Dominance::Tie: return "tie";
    }
    return "tie";
}

ThresholdSet compute_thresholds(const TcrParams& params, const Rational& common_voter_tokens,
                                const Rational& challenger_tokens) {
    ThresholdSet thresholds;
    thresholds.delta = delta_threshold(params, challenger_tokens);
    thresholds.delta_prime = params.challenge_margin;
    thresholds.epsilon = epsilon_threshold(params, common_voter_tokens);
    require_margin_consistency(params, challenger_tokens);
    return thresholds;
}

}  // namespace tcr
