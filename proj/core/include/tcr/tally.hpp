#pragma once

#include "tcr/params.hpp"
#include "tcr/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace tcr {

enum class Vote { Accept, Reject };

/// One Accept/Reject choice per non-challenging voter, in voter order.
/// The challenger is not part of the profile; its tokens always count
/// toward the reject side.
using StrategyProfile = std::vector<Vote>;

enum class Outcome { Accepted, Rejected };

std::string to_string(const StrategyProfile& profile);  // "AAR"
StrategyProfile profile_from_string(std::string_view text);

/// Revealed vote-token totals. T_A + T_R = T holds exactly and the
/// challenger's tokens T_C are included in T_R.
struct Tally {
    Rational total;              // T
    Rational accept;             // T_A
    Rational reject;             // T_R = T - T_A
    Rational challenger_tokens;  // T_C <= T_R

    Rational accept_ratio() const { return accept / total; }  // W_A

    /// ConfigError unless T = T_A + T_R, T_C <= T_R, all nonnegative, T > 0.
    void validate() const;
};

/// Sums voter tokens by vote and adds the challenger's holding to the
/// reject side. Throws ConfigError on an empty electorate or when the
/// profile length does not match the voter list.
Tally tally_votes(std::span<const Rational> voter_tokens, const StrategyProfile& profile,
                  const Rational& challenger_tokens);

/// Accepted iff W_A >= Q (weak inequality).
Outcome apply_quorum(const Tally& tally, const TcrParams& params);

}  // namespace tcr
