// Deterministic generators for randomized property tests. Everything draws
// small exact rationals so threshold equalities stay sharp.
#pragma once

#include "tcr/equilibrium.hpp"
#include "tcr/params.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace tcrtest {

using tcr::Rational;

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::int64_t int_between(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
    }

    /// Uniform over {lo + k/den} within [lo, hi], denominator <= max_den.
    Rational rational_between(std::int64_t lo, std::int64_t hi, std::int64_t max_den = 16) {
        const std::int64_t den = int_between(1, max_den);
        const std::int64_t num = int_between(lo * den, hi * den);
        return Rational(num, den);
    }

    /// Strictly inside (lo, hi).
    Rational rational_inside(std::int64_t lo, std::int64_t hi, std::int64_t max_den = 16) {
        const std::int64_t den = int_between(2, max_den);
        const std::int64_t num = int_between(lo * den + 1, hi * den - 1);
        return Rational(num, den);
    }

    bool coin() { return int_between(0, 1) == 1; }

  private:
    std::mt19937_64 engine_;
};

/// Random valid params. Dispensation stays below 1 (the mixed-profile
/// exclusion argument needs a nonempty reward pool); slash may be 0.
inline tcr::TcrParams random_params(Rng& rng) {
    tcr::TcrParams params;
    params.min_deposit = rng.rational_inside(0, 200, 8);
    params.dispensation = Rational(rng.int_between(0, 99), 100);
    params.quorum = Rational(rng.int_between(1, 100), 100);
    params.slash = Rational(rng.int_between(0, 99), 100);
    params.challenge_margin = 0;
    return params;
}

inline tcr::ValuationPair random_valuation(Rng& rng) {
    return {rng.rational_inside(0, 8, 12), rng.rational_inside(0, 8, 12)};
}

/// Equal-holding game with Q = 1/2 and the challenger matching the voters,
/// gamma supplied by the caller.
inline tcr::GameScenario equal_game(const tcr::TcrParams& params, int voters,
                                    const Rational& tokens, const Rational& gamma) {
    tcr::GameScenario scenario;
    scenario.params = params;
    scenario.params.quorum = Rational(1, 2);
    scenario.voter_tokens.assign(static_cast<std::size_t>(voters), tokens);
    scenario.challenger_tokens = tokens;
    scenario.valuation = {1, gamma};
    return scenario;
}

inline tcr::StrategyProfile unanimous(int voters, tcr::Vote vote) {
    return tcr::StrategyProfile(static_cast<std::size_t>(voters), vote);
}

}  // namespace tcrtest
