#include "tcr/equilibrium.hpp"

#include <benchmark/benchmark.h>

namespace {

tcr::GameScenario scenario_for(int voters) {
    tcr::GameScenario scenario;
    scenario.params = {tcr::Rational(100), tcr::Rational(1, 2), tcr::Rational(1, 2),
                       tcr::Rational(1, 10), tcr::Rational(0)};
    scenario.voter_tokens.assign(static_cast<std::size_t>(voters), tcr::Rational(100));
    scenario.challenger_tokens = 100;
    scenario.valuation = {1, tcr::Rational(7, 5)};
    return scenario;
}

void BM_FindEquilibria(benchmark::State& state) {
    const auto scenario = scenario_for(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto report = tcr::find_equilibria(scenario);
        benchmark::DoNotOptimize(report);
    }
    state.SetComplexityN(state.range(0));
}

void BM_IsNashUnanimous(benchmark::State& state) {
    const auto scenario = scenario_for(static_cast<int>(state.range(0)));
    const tcr::StrategyProfile profile(scenario.voter_tokens.size(), tcr::Vote::Accept);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tcr::is_nash(profile, scenario.voter_tokens,
                                              scenario.challenger_tokens, scenario.params,
                                              scenario.valuation));
    }
}

}  // namespace

BENCHMARK(BM_FindEquilibria)->DenseRange(2, 12, 2)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_IsNashUnanimous)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
