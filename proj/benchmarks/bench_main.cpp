#include <benchmark/benchmark.h>

#include "bnelim/dynamics.hpp"
#include "bnelim/igraph.hpp"
#include "bnelim/reduction.hpp"
#include "bnelim/verify.hpp"

using namespace bnelim;

namespace {

// Networks are generated outside the timed loop; the seed is fixed per size.
BooleanNetwork network(benchmark::State& state) {
  return random_network(static_cast<unsigned>(state.range(0)), 17, {}, 3);
}

void BM_BuildStg(benchmark::State& state) {
  const auto net = network(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_stg(net));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(net.state_count()));
}
BENCHMARK(BM_BuildStg)->DenseRange(8, 18, 2);

void BM_Attractors(benchmark::State& state) {
  const auto net = network(state);
  const TransitionGraph stg(net);
  for (auto _ : state) {
    benchmark::DoNotOptimize(attractors(stg));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(net.state_count()));
}
BENCHMARK(BM_Attractors)->DenseRange(8, 18, 2);

void BM_Eliminate(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const auto net = random_network(n, 17, RandomConstraint::no_positive_loop_at(0), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eliminate(net, 0u));
  }
}
BENCHMARK(BM_Eliminate)->DenseRange(8, 18, 2);

void BM_GlobalInteractionGraph(benchmark::State& state) {
  const auto net = network(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(global_interaction_graph(net));
  }
}
BENCHMARK(BM_GlobalInteractionGraph)->DenseRange(8, 18, 2);

void BM_MinimumPfvs(benchmark::State& state) {
  const auto g = global_interaction_graph(random_network(static_cast<unsigned>(state.range(0)), 17, {}, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimum_pfvs(g));
  }
}
BENCHMARK(BM_MinimumPfvs)->DenseRange(6, 12, 2);

}  // namespace

BENCHMARK_MAIN();
