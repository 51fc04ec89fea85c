#include "tcr/scenario.hpp"

#include "tcr/errors.hpp"

#include <doctest.h>

#include <string>

using tcr::Rational;

namespace {

const std::string kMinimal = R"({
  "params": {"min_deposit": "100", "dispensation": "0.5", "quorum": "0.5", "slash": "0.1"},
  "electorate": {"voters": ["100", "100"], "challenger": "100"}
})";

std::string with_slash(const std::string& slash) {
    return R"({
      "params": {"min_deposit": "100", "dispensation": "0.5", "quorum": "0.5", "slash": ")" +
           slash + R"("},
      "electorate": {"voters": ["100"], "challenger": "100"}
    })";
}

}  // namespace

TEST_CASE("minimal config loads and defaults the challenge margin to delta") {
    const auto config = tcr::parse_scenario(kMinimal);
    CHECK(config.voter_tokens.size() == 2);
    CHECK(config.challenger_tokens == 100);
    CHECK(config.margin_was_defaulted);
    CHECK(config.params.challenge_margin == Rational(1, 2));  // D*d/t = 0.5
    CHECK(config.precision == 6);
    CHECK(config.model == "reference");
}

TEST_CASE("shipped fixtures parse") {
    for (const char* name : {"two_voter.json", "three_voter.json", "sweep_case1.json",
                             "sweep_case2.json", "ordering_witness.json",
                             "ordering_control.json"}) {
        CAPTURE(name);
        CHECK_NOTHROW(tcr::load_scenario(std::string(TCR_FIXTURE_DIR) + "/" + name));
    }
}

TEST_CASE("constraint violations name the offending field") {
    CHECK_THROWS_WITH_AS(tcr::parse_scenario(with_slash("1.0")), doctest::Contains("slash"),
                         tcr::ConfigError);

    const std::string missing_quorum = R"({
      "params": {"min_deposit": "100", "dispensation": "0.5", "slash": "0.1"},
      "electorate": {"voters": ["100"], "challenger": "100"}
    })";
    CHECK_THROWS_WITH_AS(tcr::parse_scenario(missing_quorum), doctest::Contains("quorum"),
                         tcr::ConfigError);

    const std::string big_margin = R"({
      "params": {"min_deposit": "100", "dispensation": "0.5", "quorum": "0.5", "slash": "0.1",
                 "challenge_margin": "0.6"},
      "electorate": {"voters": ["100"], "challenger": "100"}
    })";
    CHECK_THROWS_WITH_AS(tcr::parse_scenario(big_margin), doctest::Contains("challenge_margin"),
                         tcr::ConfigError);
}

TEST_CASE("unknown fields are rejected with their path") {
    const std::string stray = R"({
      "params": {"min_deposit": "100", "dispensation": "0.5", "quorum": "0.5", "slash": "0.1",
                 "bogus": 1},
      "electorate": {"voters": ["100"], "challenger": "100"}
    })";
    CHECK_THROWS_WITH_AS(tcr::parse_scenario(stray), doctest::Contains("params.bogus"),
                         tcr::ConfigError);

    const std::string top = R"({
      "params": {"min_deposit": "100", "dispensation": "0.5", "quorum": "0.5", "slash": "0.1"},
      "electorate": {"voters": ["100"], "challenger": "100"},
      "extra": {}
    })";
    CHECK_THROWS_WITH_AS(tcr::parse_scenario(top), doctest::Contains("extra"), tcr::ConfigError);
}

TEST_CASE("valuation accepts gamma or an explicit pair, never both") {
    const std::string gamma_form = R"({
      "params": {"min_deposit": "100", "dispensation": "0.5", "quorum": "0.5", "slash": "0.1"},
      "electorate": {"voters": ["100"], "challenger": "100"},
      "valuation": {"gamma": "1.28"}
    })";
    const auto config = tcr::parse_scenario(gamma_form);
    REQUIRE(config.valuation.has_value());
    CHECK(config.valuation->gamma() == Rational(32, 25));

    const std::string both = R"({
      "params": {"min_deposit": "100", "dispensation": "0.5", "quorum": "0.5", "slash": "0.1"},
      "electorate": {"voters": ["100"], "challenger": "100"},
      "valuation": {"gamma": "1.28", "v0": "1"}
    })";
    CHECK_THROWS_AS(tcr::parse_scenario(both), tcr::ConfigError);

    CHECK_THROWS_AS(tcr::parse_scenario(kMinimal).require_valuation(), tcr::ConfigError);
}

TEST_CASE("numeric fields take integers, exact strings, and plain floats") {
    const std::string mixed = R"({
      "params": {"min_deposit": 100, "dispensation": 0.5, "quorum": "1/2", "slash": "0.1"},
      "electorate": {"voters": [100], "challenger": 100}
    })";
    const auto config = tcr::parse_scenario(mixed);
    CHECK(config.params.min_deposit == 100);
    CHECK(config.params.dispensation == Rational(1, 2));  // 0.5 is exact as a double
    CHECK(config.params.quorum == Rational(1, 2));
}

TEST_CASE("candidate ratings must sit in (-1, 1]") {
    const std::string bad = R"({
      "params": {"min_deposit": "100", "dispensation": "0.5", "quorum": "0.5", "slash": "0.1"},
      "electorate": {"voters": ["100"], "challenger": "100"},
      "candidates": [{"id": "x", "rating": "-1"}]
    })";
    CHECK_THROWS_WITH_AS(tcr::parse_scenario(bad), doctest::Contains("rating"), tcr::ConfigError);

    const std::string bad_id = R"({
      "params": {"min_deposit": "100", "dispensation": "0.5", "quorum": "0.5", "slash": "0.1"},
      "electorate": {"voters": ["100"], "challenger": "100"},
      "candidates": [{"id": "a,b", "rating": "0.5"}]
    })";
    CHECK_THROWS_WITH_AS(tcr::parse_scenario(bad_id), doctest::Contains("id"), tcr::ConfigError);
}

TEST_CASE("sweep grids are validated at load") {
    const std::string bad_gamma = R"({
      "params": {"min_deposit": "100", "dispensation": "0.5", "quorum": "0.5", "slash": "0.1"},
      "electorate": {"voters": ["100", "100"], "challenger": "100"},
      "sweep": {"gamma": ["0"]}
    })";
    CHECK_THROWS_WITH_AS(tcr::parse_scenario(bad_gamma), doctest::Contains("sweep.gamma[0]"),
                         tcr::ConfigError);

    const std::string big_margin = R"({
      "params": {"min_deposit": "100", "dispensation": "0.5", "quorum": "0.5", "slash": "0.1"},
      "electorate": {"voters": ["100", "100"], "challenger": "100"},
      "sweep": {"gamma": ["1.2"], "delta_prime": ["0.6"]}
    })";
    CHECK_THROWS_WITH_AS(tcr::parse_scenario(big_margin),
                         doctest::Contains("sweep.delta_prime[0]"), tcr::ConfigError);
}

TEST_CASE("malformed JSON and missing files are config errors") {
    CHECK_THROWS_AS(tcr::parse_scenario("{"), tcr::ConfigError);
    CHECK_THROWS_AS(tcr::parse_scenario("[]"), tcr::ConfigError);
    CHECK_THROWS_AS(tcr::load_scenario("/nonexistent/scenario.json"), tcr::ConfigError);
}

TEST_CASE("policy parsing") {
    const std::string with_policy = R"({
      "params": {"min_deposit": "100", "dispensation": "0.5", "quorum": "0.5", "slash": "0.1"},
      "electorate": {"voters": ["100"], "challenger": "100"},
      "policy": {"kind": "seeded_random", "seed": 99, "tie_break": "accept"}
    })";
    const auto config = tcr::parse_scenario(with_policy);
    CHECK(config.policy.kind == tcr::SelectionPolicy::Kind::SeededRandom);
    CHECK(config.policy.seed == 99);
    CHECK(config.policy.tie_break == tcr::EquilibriumChoice::AllAccept);

    const std::string bad_kind = R"({
      "params": {"min_deposit": "100", "dispensation": "0.5", "quorum": "0.5", "slash": "0.1"},
      "electorate": {"voters": ["100"], "challenger": "100"},
      "policy": {"kind": "coin_flip"}
    })";
    CHECK_THROWS_AS(tcr::parse_scenario(bad_kind), tcr::ConfigError);
}
