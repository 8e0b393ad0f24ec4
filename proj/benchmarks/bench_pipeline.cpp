#include <benchmark/benchmark.h>

#include <random>

#include "regdet/dfa.hpp"
#include "regdet/random_regex.hpp"
#include "regdet/regex.hpp"
#include "regdet/unary.hpp"
#include "regdet/witness.hpp"

namespace {

using namespace regdet;

WitnessSpec spec_for(std::int64_t k) {
  static const std::vector<unsigned> primes{3, 5, 7, 11};
  return WitnessSpec(std::vector<unsigned>(primes.begin(), primes.begin() + k));
}

void BM_DeterminizeWitness(benchmark::State& state) {
  const Nfa nfa = witness_nfa(spec_for(state.range(0)));
  std::size_t subsets = 0;
  for (auto _ : state) {
    Determinization d = determinize(nfa);
    subsets = d.stats.total;
    benchmark::DoNotOptimize(d);
  }
  state.counters["subsets"] = double(subsets);
}
BENCHMARK(BM_DeterminizeWitness)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_MinimizeWitness(benchmark::State& state) {
  const Dfa dfa = determinize(witness_nfa(spec_for(state.range(0)))).dfa;
  for (auto _ : state) benchmark::DoNotOptimize(minimize(dfa));
  state.counters["states"] = double(dfa.state_count());
}
BENCHMARK(BM_MinimizeWitness)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_BuildNfa(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Alphabet ab = Alphabet::parse("ab");
  const Regex e = random_regex(rng, 2, std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_nfa(e, ab));
}
BENCHMARK(BM_BuildNfa)->RangeMultiplier(4)->Range(8, 512);

void BM_Matches(benchmark::State& state) {
  const Alphabet ab = witness_alphabet();
  const Regex e = witness_regex(WitnessSpec({3, 5, 7}));
  std::mt19937_64 rng(2);
  Word w(std::size_t(state.range(0)));
  for (auto& s : w) s = Symbol(rng() % 2);
  for (auto _ : state) benchmark::DoNotOptimize(matches(e, w));
}
BENCHMARK(BM_Matches)->RangeMultiplier(2)->Range(4, 32);

void BM_LandauTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(landau(std::size_t(state.range(0))));
}
BENCHMARK(BM_LandauTable)->Arg(20)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
