#pragma once

#include "tcr/equilibrium.hpp"
#include "tcr/simulator.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace tcr {

/// Sweep grid over candidate quality and the challenge margin.
struct SweepGrid {
    std::vector<Rational> gammas;
    std::vector<Rational> delta_primes;  // empty: use params.challenge_margin
};

/// Everything a command needs, loaded from one JSON file. Numeric fields
/// accept integers or strings ("1.28", "7/25"), parsed exactly; bare JSON
/// floats are converted from their binary value and are only exact when the
/// double is. Unknown fields are rejected.
struct ScenarioConfig {
    TcrParams params;  // challenge_margin defaults to delta = D*d/t_challenger
    std::vector<Rational> voter_tokens;
    Rational challenger_tokens;

    std::optional<ValuationPair> valuation;  // explicit v0/vr (or gamma with v0 = 1)
    std::string model = "reference";
    std::vector<RegistryEntry> candidates;
    SelectionPolicy policy;
    SweepGrid sweep;
    int precision = 6;

    bool margin_was_defaulted = false;

    GameScenario game(const ValuationPair& v) const;
    Electorate electorate() const;
    /// Explicit valuation required (equilibria command). ConfigError otherwise.
    ValuationPair require_valuation() const;
};

/// Parses and fully validates; errors carry the offending field path.
ScenarioConfig parse_scenario(const std::string& json_text);
ScenarioConfig load_scenario(const std::filesystem::path& path);

}  // namespace tcr
