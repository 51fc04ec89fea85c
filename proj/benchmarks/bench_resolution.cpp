#include "tcr/resolution.hpp"
#include "tcr/simulator.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_ResolveChallenge(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const tcr::TcrParams params{tcr::Rational(100), tcr::Rational(1, 2), tcr::Rational(1, 2),
                                tcr::Rational(1, 10), tcr::Rational(0)};
    std::vector<tcr::ParticipantHolding> voters;
    tcr::StrategyProfile profile;
    for (int i = 0; i < n; ++i) {
        voters.push_back({"v" + std::to_string(i), tcr::Rational(100 + i), tcr::Role::Voter});
        profile.push_back(i % 2 ? tcr::Vote::Accept : tcr::Vote::Reject);
    }
    const tcr::ParticipantHolding challenger{"chal", tcr::Rational(150), tcr::Role::Challenger};
    const tcr::ParticipantHolding candidate{"cand", tcr::Rational(100), tcr::Role::Candidate};
    for (auto _ : state) {
        auto result = tcr::resolve_challenge(params, voters, profile, challenger, candidate);
        benchmark::DoNotOptimize(result);
    }
}

void BM_OrderingExperiment(benchmark::State& state) {
    const tcr::TcrParams params{tcr::Rational(100), tcr::Rational(9, 10), tcr::Rational(1, 2),
                                tcr::Rational(0), tcr::Rational(3, 10)};
    const tcr::ReferenceValuationModel model;
    tcr::SelectionPolicy policy;
    policy.kind = tcr::SelectionPolicy::Kind::AlwaysReject;
    const tcr::Electorate electorate{{tcr::Rational(100), tcr::Rational(100)}, tcr::Rational(100)};
    std::vector<tcr::RegistryEntry> pool;
    for (int i = 0; i < static_cast<int>(state.range(0)); ++i) {
        pool.push_back({"c" + std::to_string(i), tcr::Rational(2 * i + 1, 10)});
    }
    for (auto _ : state) {
        auto report = tcr::ordering_experiment(pool, model, policy, params, electorate);
        benchmark::DoNotOptimize(report);
    }
}

}  // namespace

BENCHMARK(BM_ResolveChallenge)->RangeMultiplier(4)->Range(2, 128);
BENCHMARK(BM_OrderingExperiment)->DenseRange(2, 5);

BENCHMARK_MAIN();
