#include "tcr/params.hpp"

#include "tcr/errors.hpp"
#include "tcr/rational.hpp"

namespace tcr {

void TcrParams::validate() const {
    if (min_deposit <= 0) throw ConfigError("params.min_deposit: D must be > 0");
    if (dispensation < 0 || dispensation > 1)
        throw ConfigError("params.dispensation: d must be in [0,1]");
    if (quorum <= 0 || quorum > 1) throw ConfigError("params.quorum: Q must be in (0,1]");
    if (slash < 0 || slash >= 1) throw ConfigError("params.slash: s must be in [0,1)");
    if (challenge_margin < 0)
        throw ConfigError("params.challenge_margin: delta' must be >= 0");
}

void ValuationPair::validate() const {
    if (v0 <= 0) throw ConfigError("valuation.v0: must be > 0");
    if (vr <= 0) throw ConfigError("valuation.vr: must be > 0");
}

void require_margin_consistency(const TcrParams& params, const Rational& challenger_tokens) {
    if (challenger_tokens < params.min_deposit)
        throw ConfigError("challenger: holding must cover the deposit D");
    const Rational delta = params.min_deposit * params.dispensation / challenger_tokens;
    if (params.challenge_margin > delta)
        throw ConfigError("params.challenge_margin: delta' exceeds delta = D*d/t for this challenger");
}

}  // namespace tcr
