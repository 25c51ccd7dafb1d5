#include <benchmark/benchmark.h>

#include <random>

#include "crlab/canonical.hpp"
#include "crlab/covers.hpp"
#include "crlab/deck.hpp"
#include "crlab/enumerate.hpp"
#include "crlab/refine.hpp"
#include "crlab/wl2.hpp"

using namespace crlab;

namespace {

Graph random_graph(int n, unsigned seed) {
  std::mt19937 rng(seed);
  Graph g(n);
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++)
      if (rng() % 2) g.add_edge(i, j);
  return g;
}

void BM_RefineToStable(benchmark::State& state) {
  auto g = random_graph(int(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(refine_to_stable(g));
}
BENCHMARK(BM_RefineToStable)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_CrInvariant(benchmark::State& state) {
  auto g = random_graph(int(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(cr_invariant(g));
}
BENCHMARK(BM_CrInvariant)->Arg(8)->Arg(16)->Arg(32);

void BM_ExactJointRefine(benchmark::State& state) {
  auto g = random_graph(int(state.range(0)), 13);
  auto h = random_graph(int(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(exact_joint_refine(g, h));
}
BENCHMARK(BM_ExactJointRefine)->Arg(8)->Arg(16)->Arg(32);

void BM_CanonicalForm(benchmark::State& state) {
  auto g = random_graph(int(state.range(0)), 19);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(8)->Arg(10);

void BM_CanonicalFormRegular(benchmark::State& state) {
  // cycles keep refinement coarse, stressing the canonical search
  auto g = Graph::cycle(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormRegular)->Arg(6)->Arg(8)->Arg(10);

void BM_DcrInvariant(benchmark::State& state) {
  auto g = random_graph(int(state.range(0)), 23);
  for (auto _ : state) benchmark::DoNotOptimize(dcr_invariant(g));
}
BENCHMARK(BM_DcrInvariant)->Arg(8)->Arg(16);

void BM_Wl2Invariant(benchmark::State& state) {
  auto g = random_graph(int(state.range(0)), 29);
  for (auto _ : state) benchmark::DoNotOptimize(wl2_invariant(g));
}
BENCHMARK(BM_Wl2Invariant)->Arg(6)->Arg(8);

void BM_Unfold(benchmark::State& state) {
  auto g = random_graph(8, 31);
  for (auto _ : state) benchmark::DoNotOptimize(unfold(g, 0, int(state.range(0))));
}
BENCHMARK(BM_Unfold)->Arg(2)->Arg(4);

void BM_Deck(benchmark::State& state) {
  auto g = random_graph(int(state.range(0)), 37);
  for (auto _ : state) benchmark::DoNotOptimize(deck(g));
}
BENCHMARK(BM_Deck)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
