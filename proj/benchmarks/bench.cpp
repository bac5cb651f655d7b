#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qorbit/closure.hpp"
#include "qorbit/gates.hpp"
#include "qorbit/orbits.hpp"

namespace {

using namespace qorbit;

std::vector<ExactState> sample_states(int n) {
  std::mt19937 rng(1);
  const GeneratorSet gens = generator_set(GeneratorSetName::FULL_C);
  std::uniform_int_distribution<std::size_t> pick(0, gens.gates.size() - 1);
  std::vector<ExactState> out;
  ExactState s = zero_state();
  for (int i = 0; i < n; ++i) {
    for (int step = 0; step < 8; ++step) s = apply_gate(s, gens.gates[pick(rng)]);
    out.push_back(s);
  }
  return out;
}

void BM_ApplyGate(benchmark::State& state) {
  const auto states = sample_states(64);
  const Gate h = make_h(2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_gate(states[i % states.size()], h));
    ++i;
  }
}
BENCHMARK(BM_ApplyGate);

void BM_ApplyCnot(benchmark::State& state) {
  const auto states = sample_states(64);
  const Gate g = make_cnot(1, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_gate(states[i % states.size()], g));
    ++i;
  }
}
BENCHMARK(BM_ApplyCnot);

void BM_Canonicalize(benchmark::State& state) {
  auto states = sample_states(64);
  for (auto& s : states) {
    for (auto& z : s.amps) {
      z.re *= 2;
      z.im *= 2;
    }
    s.k += 2;
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonicalize(states[i % states.size()]));
    ++i;
  }
}
BENCHMARK(BM_Canonicalize);

void BM_Encode(benchmark::State& state) {
  const auto states = sample_states(64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode(states[i % states.size()]));
    ++i;
  }
}
BENCHMARK(BM_Encode);

void BM_SchmidtRank(benchmark::State& state) {
  const auto states = sample_states(64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(schmidt_rank(states[i % states.size()], {0b0101}));
    ++i;
  }
}
BENCHMARK(BM_SchmidtRank);

void BM_RealClosure(benchmark::State& state) {
  for (auto _ : state) {
    const StateSet set =
        closure({zero_state()}, generator_set(GeneratorSetName::FULL_R));
    benchmark::DoNotOptimize(set.size());
  }
}
BENCHMARK(BM_RealClosure)->Unit(benchmark::kMillisecond);

void BM_LocalClosure(benchmark::State& state) {
  for (auto _ : state) {
    const StateSet set =
        closure({zero_state()}, generator_set(GeneratorSetName::LOCAL_R));
    benchmark::DoNotOptimize(set.size());
  }
}
BENCHMARK(BM_LocalClosure)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
