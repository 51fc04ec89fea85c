#include "tcr/simulator.hpp"

#include "tcr/errors.hpp"
#include "tcr/reports.hpp"
#include "support.hpp"

#include <doctest.h>

using tcr::Electorate;
using tcr::EquilibriumChoice;
using tcr::Outcome;
using tcr::Rational;
using tcr::RegionOutcome;
using tcr::RegistryEntry;
using tcr::RegistryState;
using tcr::SelectionPolicy;

namespace {

tcr::TcrParams params_with_margin(Rational margin) {
    return {Rational(100), Rational(1, 2), Rational(1, 2), Rational(1, 10), margin};
}

Electorate three_voters() { return {{100, 100, 100}, 100}; }
Electorate two_voters() { return {{100, 100}, 100}; }

SelectionPolicy policy_of(SelectionPolicy::Kind kind, std::uint64_t seed = 0) {
    SelectionPolicy policy;
    policy.kind = kind;
    policy.seed = seed;
    return policy;
}

}  // namespace

TEST_CASE("reference model averages ratings, static model ignores state") {
    const tcr::ReferenceValuationModel reference;
    const tcr::StaticValuationModel fixed;
    RegistryState state;
    CHECK(reference.v0(state) == 1);
    CHECK(reference.vr(state, Rational(4, 5)) == Rational(9, 5));
    CHECK(fixed.v0(state) == 1);
    CHECK(fixed.vr(state, Rational(4, 5)) == Rational(9, 5));

    state.entries.push_back({"a", Rational(1, 2)});
    state.entries.push_back({"b", Rational(1, 4)});
    CHECK(state.mean_rating() == Rational(3, 8));
    CHECK(reference.v0(state) == Rational(11, 8));
    CHECK(reference.vr(state, Rational(3, 4)) == 1 + Rational(3, 2) / 3);
    CHECK(fixed.v0(state) == 1);  // unchanged by state

    CHECK_THROWS_AS(tcr::make_valuation_model("nope"), tcr::ConfigError);
}

TEST_CASE("vr is nondecreasing in the rating at fixed state") {
    const tcr::ReferenceValuationModel reference;
    const tcr::StaticValuationModel fixed;
    RegistryState state;
    state.entries.push_back({"a", Rational(1, 3)});
    state.entries.push_back({"b", Rational(-1, 4)});
    for (int i = -9; i < 10; ++i) {
        CHECK(reference.vr(state, Rational(i, 10)) <= reference.vr(state, Rational(i + 1, 10)));
        CHECK(fixed.vr(state, Rational(i, 10)) <= fixed.vr(state, Rational(i + 1, 10)));
    }
}

TEST_CASE("a model emitting non-positive values is a compute error") {
    struct BrokenModel final : tcr::ValuationModel {
        Rational v0(const RegistryState&) const override { return 0; }
        Rational vr(const RegistryState&, const Rational&) const override { return 1; }
        std::string name() const override { return "broken"; }
    };
    const auto params = params_with_margin(0);
    CHECK_THROWS_AS(tcr::step(RegistryState{}, {"x", Rational(1, 2)}, BrokenModel{},
                              policy_of(SelectionPolicy::Kind::PayoffDominant), params,
                              two_voters()),
                    tcr::ComputeError);
}

TEST_CASE("appending at or above the mean never lowers v0") {
    const tcr::ReferenceValuationModel model;
    tcrtest::Rng rng(67);
    RegistryState state;
    for (int i = 0; i < 60; ++i) {
        const Rational before = model.v0(state);
        Rational rating = rng.rational_between(-9, 10, 10) / 10;
        if (rating <= -1 || rating > 1) rating = Rational(1, 2);
        if (rating < state.mean_rating()) rating = state.mean_rating();
        state.entries.push_back({"e" + std::to_string(i), rating});
        CHECK(model.v0(state) >= before);
    }
}

TEST_CASE("high-rated candidate on an empty registry enters unchallenged") {
    const auto params = params_with_margin(0);  // delta' = 0: challenges only below gamma 1
    const tcr::ReferenceValuationModel model;
    const auto [state, record] =
        tcr::step(RegistryState{}, {"good", Rational(4, 5)}, model,
                  policy_of(SelectionPolicy::Kind::PayoffDominant), params, two_voters());
    CHECK(record.gamma == Rational(9, 5));
    CHECK_FALSE(record.challenged);
    CHECK(record.final_outcome == Outcome::Accepted);
    CHECK(state.entries.size() == 1);
    CHECK(state.history.size() == 1);
}

TEST_CASE("neutral candidate hits the gamma = 1 tie and the tie rule rejects") {
    const auto params = params_with_margin(Rational(1, 10));
    const tcr::ReferenceValuationModel model;
    // Empty registry, rating 0: vr = v0 = 1.
    const auto [state, record] =
        tcr::step(RegistryState{}, {"neutral", Rational(0)}, model,
                  policy_of(SelectionPolicy::Kind::PayoffDominant), params, three_voters());
    CHECK(record.gamma == 1);
    CHECK(record.challenged);
    CHECK(record.region.outcome == RegionOutcome::SelectionProblem);
    REQUIRE(record.selected.has_value());
    CHECK(*record.selected == EquilibriumChoice::AllReject);
    CHECK(record.final_outcome == Outcome::Rejected);
    CHECK(state.entries.empty());

    // The tie rule is configurable.
    auto accept_ties = policy_of(SelectionPolicy::Kind::PayoffDominant);
    accept_ties.tie_break = EquilibriumChoice::AllAccept;
    const auto [state2, record2] = tcr::step(RegistryState{}, {"neutral", Rational(0)}, model,
                                             accept_ties, params, three_voters());
    CHECK(record2.final_outcome == Outcome::Accepted);
}

TEST_CASE("always-reject policy rejects every selection problem") {
    const auto params = params_with_margin(Rational(1, 2));
    const tcr::StaticValuationModel model;
    // gamma = 1.3 < 1.5: challenged; three equal voters put it in Both.
    const auto [state, record] =
        tcr::step(RegistryState{}, {"mid", Rational(3, 10)}, model,
                  policy_of(SelectionPolicy::Kind::AlwaysReject), params, three_voters());
    CHECK(record.challenged);
    CHECK(record.region.outcome == RegionOutcome::SelectionProblem);
    CHECK(record.final_outcome == Outcome::Rejected);
}

TEST_CASE("payoff-dominant acceptance in the non-pivotal regime is exactly gamma > 1") {
    const auto params = params_with_margin(Rational(1, 5));
    const tcr::ReferenceValuationModel model;
    const auto policy = policy_of(SelectionPolicy::Kind::PayoffDominant);
    for (int tenths = -9; tenths <= 10; ++tenths) {
        const RegistryEntry candidate{"c", Rational(tenths, 10)};
        const auto [state, record] =
            tcr::step(RegistryState{}, candidate, model, policy, params, three_voters());
        const bool accepted = record.final_outcome == Outcome::Accepted;
        CHECK(accepted == (record.gamma > 1));
    }
}

TEST_CASE("two-voter steps agree with the closed-form region classifier") {
    const auto params = params_with_margin(Rational(2, 5));
    const tcr::StaticValuationModel model;
    const auto thresholds = tcr::compute_thresholds(params, 100, 100);
    const auto policy = policy_of(SelectionPolicy::Kind::PayoffDominant);
    for (int i = -9; i <= 10; ++i) {
        const RegistryEntry candidate{"c", Rational(i, 10)};
        const auto [state, record] =
            tcr::step(RegistryState{}, candidate, model, policy, params, two_voters());
        const auto label = tcr::classify_region_2voter(record.gamma, thresholds);
        CHECK(record.region.scenario == label.scenario);
        CHECK(record.region.challenged == label.challenged);
        CHECK(record.region.equilibrium_set == label.equilibrium_set);
        CHECK(record.region.outcome == label.outcome);
    }
}

TEST_CASE("run_sequence folds steps and keeps the trace aligned") {
    const auto params = params_with_margin(Rational(1, 5));
    const tcr::ReferenceValuationModel model;
    const auto policy = policy_of(SelectionPolicy::Kind::PayoffDominant);

    auto trace = tcr::run_sequence({}, model, policy, params, three_voters());
    CHECK(trace.records.empty());
    CHECK(trace.final_state.entries.empty());

    const std::vector<RegistryEntry> one{{"solo", Rational(1, 2)}};
    trace = tcr::run_sequence(one, model, policy, params, three_voters());
    CHECK(trace.records.size() == 1);
    CHECK(trace.final_state.step_index == 1);
}

TEST_CASE("always-accept with a non-pivotal electorate admits everything") {
    const auto params = params_with_margin(Rational(1, 5));
    const tcr::ReferenceValuationModel model;
    const std::vector<RegistryEntry> pool{
        {"a", Rational(-1, 2)}, {"b", Rational(0)}, {"c", Rational(9, 10)}};
    const auto trace = tcr::run_sequence(pool, model,
                                         policy_of(SelectionPolicy::Kind::AlwaysAccept), params,
                                         three_voters());
    CHECK(trace.final_state.entries.size() == 3);
}

TEST_CASE("delta' = 0 with positive ratings never triggers a challenge") {
    const auto params = params_with_margin(0);
    const tcr::StaticValuationModel model;  // gamma = 1 + rating > 1
    const std::vector<RegistryEntry> pool{
        {"a", Rational(1, 10)}, {"b", Rational(1, 2)}, {"c", Rational(1)}};
    // Policy never gets a say: everything enters through the no-challenge path.
    const auto trace = tcr::run_sequence(pool, model,
                                         policy_of(SelectionPolicy::Kind::AlwaysReject), params,
                                         two_voters());
    CHECK(trace.final_state.entries.size() == 3);
    for (const auto& record : trace.records) CHECK_FALSE(record.challenged);
}

TEST_CASE("identical runs produce identical traces") {
    const auto params = params_with_margin(Rational(1, 2));
    const tcr::ReferenceValuationModel model;
    const std::vector<RegistryEntry> pool{
        {"a", Rational(3, 10)}, {"b", Rational(9, 10)}, {"c", Rational(-2, 10)}};
    const auto policy = policy_of(SelectionPolicy::Kind::SeededRandom, 424242);
    const auto first = tcr::run_sequence(pool, model, policy, params, two_voters());
    const auto second = tcr::run_sequence(pool, model, policy, params, two_voters());
    CHECK(tcr::render_trace_jsonl(first, 6) == tcr::render_trace_jsonl(second, 6));

    // A different seed may legitimately differ, but must itself be stable.
    const auto other = policy_of(SelectionPolicy::Kind::SeededRandom, 7);
    CHECK(tcr::render_trace_jsonl(tcr::run_sequence(pool, model, other, params, two_voters()), 6) ==
          tcr::render_trace_jsonl(tcr::run_sequence(pool, model, other, params, two_voters()), 6));
}

TEST_CASE("ordering experiment bounds and degenerate pools") {
    const auto params = params_with_margin(Rational(1, 5));
    const tcr::ReferenceValuationModel model;
    const auto policy = policy_of(SelectionPolicy::Kind::PayoffDominant);

    const std::vector<RegistryEntry> single{{"only", Rational(1, 2)}};
    const auto report = tcr::ordering_experiment(single, model, policy, params, three_voters());
    CHECK(report.permutation_count == 1);
    CHECK(report.compositions.size() == 1);
    CHECK_FALSE(report.witness.has_value());

    std::vector<RegistryEntry> big;
    for (int i = 0; i < 9; ++i) big.push_back({"c" + std::to_string(i), Rational(1, 2)});
    CHECK_THROWS_AS(tcr::ordering_experiment(big, model, policy, params, three_voters()),
                    tcr::ComputeError);

    const std::vector<RegistryEntry> dupes{{"x", Rational(1, 2)}, {"x", Rational(1, 4)}};
    CHECK_THROWS_AS(tcr::ordering_experiment(dupes, model, policy, params, three_voters()),
                    tcr::ConfigError);
}

TEST_CASE("state-independent gamma makes composition order-invariant") {
    const auto params = params_with_margin(Rational(1, 2));
    const tcr::StaticValuationModel model;
    const std::vector<RegistryEntry> pool{{"a", Rational(3, 10)},
                                          {"b", Rational(9, 10)},
                                          {"c", Rational(-2, 10)},
                                          {"d", Rational(6, 10)}};
    const auto report = tcr::ordering_experiment(
        pool, model, policy_of(SelectionPolicy::Kind::PayoffDominant), params, two_voters(), 4);
    CHECK(report.permutation_count == 24);
    CHECK(report.compositions.size() == 1);
    CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("reference model with a reject-biased policy diverges across orders") {
    // d = 0.9, s = 0 keeps E = 1/21 small; delta' = 0.3 <= delta = 0.9.
    const tcr::TcrParams params{Rational(100), Rational(9, 10), Rational(1, 2), Rational(0),
                                Rational(3, 10)};
    const tcr::ReferenceValuationModel model;
    const std::vector<RegistryEntry> pool{{"high", Rational(9, 10)}, {"low", Rational(3, 10)}};
    const auto report = tcr::ordering_experiment(
        pool, model, policy_of(SelectionPolicy::Kind::AlwaysReject), params, two_voters());
    CHECK(report.permutation_count == 2);
    CHECK(report.compositions.size() == 2);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->composition_a != report.witness->composition_b);

    // Parallel evaluation reports the same distinct compositions.
    const auto parallel = tcr::ordering_experiment(
        pool, model, policy_of(SelectionPolicy::Kind::AlwaysReject), params, two_voters(), 4);
    CHECK(parallel.compositions.size() == report.compositions.size());
    REQUIRE(parallel.witness.has_value());
    CHECK(parallel.witness->composition_a == report.witness->composition_a);
}

TEST_CASE("seeded random selection is deterministic per seed and step") {
    const auto policy = policy_of(SelectionPolicy::Kind::SeededRandom, 99);
    const auto choice = policy.resolve(Rational(6, 5), 3);
    CHECK(policy.resolve(Rational(6, 5), 3) == choice);
    CHECK(policy.resolve(Rational(1, 2), 3) == choice);  // gamma plays no role
}
