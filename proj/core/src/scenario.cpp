#include "tcr/scenario.hpp"

#include "tcr/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace tcr {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError(path + ": " + what);
}

void reject_unknown(const json& object, const std::string& path,
                    const std::set<std::string>& known) {
    for (const auto& [key, value] : object.items()) {
        if (!known.contains(key)) fail(path + "." + key, "unknown field");
    }
}

const json* find(const json& object, const std::string& key) {
    auto it = object.find(key);
    return it == object.end() ? nullptr : &*it;
}

Rational number_at(const json& value, const std::string& path) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_unsigned()) return Rational(value.get<std::uint64_t>());
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
    // Bare JSON floats convert from their binary value; exact decimals
    // should be written as strings.
    if (value.is_number_float()) return Rational(value.get<double>());
    fail(path, "expected a number or numeric string");
}

Rational require_number(const json& object, const std::string& key, const std::string& path,
                        const char* symbol) {
    const json* value = find(object, key);
    if (!value) fail(path + "." + key, std::string("(") + symbol + ") required field missing");
    return number_at(*value, path + "." + key);
}

}  // namespace

GameScenario ScenarioConfig::game(const ValuationPair& v) const {
    return GameScenario{params, voter_tokens, challenger_tokens, v};
}

Electorate ScenarioConfig::electorate() const { return {voter_tokens, challenger_tokens}; }

ValuationPair ScenarioConfig::require_valuation() const {
    if (!valuation) throw ConfigError("valuation: required for this command (v0/vr or gamma)");
    return *valuation;
}

ScenarioConfig parse_scenario(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& err) {
        throw ConfigError(std::string("config: ") + err.what());
    }
    if (!root.is_object()) throw ConfigError("config: top level must be a JSON object");
    reject_unknown(root, "config",
                   {"params", "electorate", "valuation", "model", "candidates", "policy", "sweep",
                    "precision"});

    ScenarioConfig config;

    const json* params = find(root, "params");
    if (!params) throw ConfigError("params: required section missing");
    if (!params->is_object()) fail("params", "must be an object");
    reject_unknown(*params, "params",
                   {"min_deposit", "dispensation", "quorum", "slash", "challenge_margin"});
    config.params.min_deposit = require_number(*params, "min_deposit", "params", "D");
    config.params.dispensation = require_number(*params, "dispensation", "params", "d");
    config.params.quorum = require_number(*params, "quorum", "params", "Q");
    config.params.slash = require_number(*params, "slash", "params", "s");

    const json* electorate = find(root, "electorate");
    if (!electorate) throw ConfigError("electorate: required section missing");
    if (!electorate->is_object()) fail("electorate", "must be an object");
    reject_unknown(*electorate, "electorate", {"voters", "challenger"});
    const json* voters = find(*electorate, "voters");
    if (!voters || !voters->is_array() || voters->empty())
        fail("electorate.voters", "required non-empty array");
    for (std::size_t i = 0; i < voters->size(); ++i) {
        std::ostringstream path;
        path << "electorate.voters[" << i << "]";
        const Rational tokens = number_at((*voters)[i], path.str());
        if (tokens <= 0) fail(path.str(), "voter holdings must be > 0");
        config.voter_tokens.push_back(tokens);
    }
    const json* challenger = find(*electorate, "challenger");
    if (!challenger) fail("electorate.challenger", "required field missing");
    config.challenger_tokens = number_at(*challenger, "electorate.challenger");
    if (config.challenger_tokens <= 0) fail("electorate.challenger", "holding must be > 0");

    if (const json* margin = find(*params, "challenge_margin")) {
        config.params.challenge_margin = number_at(*margin, "params.challenge_margin");
    } else {
        // The most challenge-eager margin the necessary condition permits.
        config.params.challenge_margin =
            config.params.min_deposit * config.params.dispensation / config.challenger_tokens;
        config.margin_was_defaulted = true;
    }
    config.params.validate();
    require_margin_consistency(config.params, config.challenger_tokens);

    if (const json* valuation = find(root, "valuation")) {
        if (!valuation->is_object()) fail("valuation", "must be an object");
        reject_unknown(*valuation, "valuation", {"v0", "vr", "gamma"});
        const json* gamma = find(*valuation, "gamma");
        const json* v0 = find(*valuation, "v0");
        const json* vr = find(*valuation, "vr");
        ValuationPair pair;
        if (gamma) {
            if (v0 || vr) fail("valuation", "give either gamma or v0/vr, not both");
            pair.v0 = 1;
            pair.vr = number_at(*gamma, "valuation.gamma");
        } else {
            if (!v0) fail("valuation.v0", "required field missing");
            if (!vr) fail("valuation.vr", "required field missing");
            pair.v0 = number_at(*v0, "valuation.v0");
            pair.vr = number_at(*vr, "valuation.vr");
        }
        pair.validate();
        config.valuation = pair;
    }

    if (const json* model = find(root, "model")) {
        if (!model->is_string()) fail("model", "must be a string");
        config.model = model->get<std::string>();
        make_valuation_model(config.model);  // name check
    }

    if (const json* candidates = find(root, "candidates")) {
        if (!candidates->is_array()) fail("candidates", "must be an array");
        for (std::size_t i = 0; i < candidates->size(); ++i) {
            std::ostringstream path;
            path << "candidates[" << i << "]";
            const json& item = (*candidates)[i];
            if (!item.is_object()) fail(path.str(), "must be an object");
            reject_unknown(item, path.str(), {"id", "rating"});
            const json* id = find(item, "id");
            if (!id || !id->is_string()) fail(path.str() + ".id", "required string");
            const std::string id_text = id->get<std::string>();
            if (id_text.empty() || id_text.find_first_of(",\"\n\r") != std::string::npos)
                fail(path.str() + ".id", "must be non-empty and free of commas, quotes, newlines");
            const json* rating = find(item, "rating");
            if (!rating) fail(path.str() + ".rating", "required field missing");
            RegistryEntry entry{id_text, number_at(*rating, path.str() + ".rating")};
            if (entry.rating <= -1 || entry.rating > 1)
                fail(path.str() + ".rating", "must be in (-1, 1]");
            config.candidates.push_back(std::move(entry));
        }
    }

    if (const json* policy = find(root, "policy")) {
        if (!policy->is_object()) fail("policy", "must be an object");
        reject_unknown(*policy, "policy", {"kind", "seed", "tie_break"});
        if (const json* kind = find(*policy, "kind")) {
            if (!kind->is_string()) fail("policy.kind", "must be a string");
            config.policy.kind = policy_kind_from_string(kind->get<std::string>());
        }
        if (const json* seed = find(*policy, "seed")) {
            if (!seed->is_number_unsigned() && !seed->is_number_integer())
                fail("policy.seed", "must be a nonnegative integer");
            config.policy.seed = seed->get<std::uint64_t>();
        }
        if (const json* tie = find(*policy, "tie_break")) {
            if (!tie->is_string()) fail("policy.tie_break", "must be 'accept' or 'reject'");
            const std::string text = tie->get<std::string>();
            if (text == "accept") {
                config.policy.tie_break = EquilibriumChoice::AllAccept;
            } else if (text == "reject") {
                config.policy.tie_break = EquilibriumChoice::AllReject;
            } else {
                fail("policy.tie_break", "must be 'accept' or 'reject'");
            }
        }
    }

    if (const json* sweep = find(root, "sweep")) {
        if (!sweep->is_object()) fail("sweep", "must be an object");
        reject_unknown(*sweep, "sweep", {"gamma", "delta_prime"});
        if (const json* gammas = find(*sweep, "gamma")) {
            if (!gammas->is_array()) fail("sweep.gamma", "must be an array");
            for (std::size_t i = 0; i < gammas->size(); ++i) {
                std::ostringstream path;
                path << "sweep.gamma[" << i << "]";
                const Rational gamma = number_at((*gammas)[i], path.str());
                if (gamma <= 0) fail(path.str(), "must be > 0");
                config.sweep.gammas.push_back(gamma);
            }
        }
        if (const json* margins = find(*sweep, "delta_prime")) {
            if (!margins->is_array()) fail("sweep.delta_prime", "must be an array");
            const Rational delta =
                config.params.min_deposit * config.params.dispensation / config.challenger_tokens;
            for (std::size_t i = 0; i < margins->size(); ++i) {
                std::ostringstream path;
                path << "sweep.delta_prime[" << i << "]";
                const Rational margin = number_at((*margins)[i], path.str());
                if (margin < 0) fail(path.str(), "must be >= 0");
                if (margin > delta) fail(path.str(), "exceeds delta = D*d/t for this challenger");
                config.sweep.delta_primes.push_back(margin);
            }
        }
    }

    if (const json* precision = find(root, "precision")) {
        if (!precision->is_number_integer() && !precision->is_number_unsigned())
            fail("precision", "must be an integer");
        const auto value = precision->get<std::int64_t>();
        if (value < 0 || value > 50) fail("precision", "must be in [0, 50]");
        config.precision = static_cast<int>(value);
    }

    return config;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
    std::ifstream input(path);
    if (!input) throw ConfigError("config: cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << input.rdbuf();
    return parse_scenario(buffer.str());
}

}  // namespace tcr
