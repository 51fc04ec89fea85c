#include "tcr/tally.hpp"

#include "tcr/errors.hpp"

#include <sstream>

namespace tcr {

std::string to_string(const StrategyProfile& profile) {
    std::string text;
    text.reserve(profile.size());
    for (Vote vote : profile) text.push_back(vote == Vote::Accept ? 'A' : 'R');
    return text;
}

StrategyProfile profile_from_string(std::string_view text) {
    StrategyProfile profile;
    profile.reserve(text.size());
    for (char c : text) {
        if (c == 'A' || c == 'a') {
            profile.push_back(Vote::Accept);
        } else if (c == 'R' || c == 'r') {
            profile.push_back(Vote::Reject);
        } else {
            throw ConfigError("profile: expected only 'A'/'R', got '" + std::string(text) + "'");
        }
    }
    return profile;
}

void Tally::validate() const {
    if (total <= 0) throw ConfigError("tally: total must be > 0");
    if (accept < 0 || reject < 0 || challenger_tokens < 0)
        throw ConfigError("tally: token totals must be nonnegative");
    if (accept + reject != total) throw ConfigError("tally: T_A + T_R must equal T");
    if (challenger_tokens > reject)
        throw ConfigError("tally: challenger tokens exceed the reject side");
}

Tally tally_votes(std::span<const Rational> voter_tokens, const StrategyProfile& profile,
                  const Rational& challenger_tokens) {
    if (voter_tokens.empty()) throw ConfigError("electorate: empty voter set");
    if (profile.size() != voter_tokens.size()) {
        std::ostringstream msg;
        msg << "profile: " << profile.size() << " votes for " << voter_tokens.size() << " voters";
        throw ConfigError(msg.str());
    }
    if (challenger_tokens <= 0) throw ConfigError("challenger: holding must be > 0");

    Tally tally;
    tally.challenger_tokens = challenger_tokens;
    tally.reject = challenger_tokens;
    for (std::size_t i = 0; i < voter_tokens.size(); ++i) {
        if (voter_tokens[i] <= 0) throw ConfigError("electorate: voter holdings must be > 0");
        if (profile[i] == Vote::Accept) {
            tally.accept += voter_tokens[i];
        } else {
            tally.reject += voter_tokens[i];
        }
    }
    tally.total = tally.accept + tally.reject;
    return tally;
}

Outcome apply_quorum(const Tally& tally, const TcrParams& params) {
    return tally.accept_ratio() >= params.quorum ? Outcome::Accepted : Outcome::Rejected;
}

}  // namespace tcr
