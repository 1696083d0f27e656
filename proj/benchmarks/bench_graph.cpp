#include <benchmark/benchmark.h>

#include "ddc/families.hpp"
#include "ddc/graph.hpp"

using namespace ddc;

namespace {

CirculantGraph family_graph(Int d, Int k) {
  FamilyOptions fo;
  fo.verify = false;
  return make_graph(construct_family(d, k, fo).front().gens);
}

void BM_Diameter(benchmark::State& state) {
  auto g = family_graph(8, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(diameter(g));
  state.SetItemsProcessed(state.iterations() * g.order());
}

void BM_DiameterAtMost(benchmark::State& state) {
  // The hot shape inside exhaustive searches: one scratch, many checks.
  auto g = family_graph(8, state.range(0));
  Int k = state.range(0);
  BfsScratch scratch;
  for (auto _ : state)
    benchmark::DoNotOptimize(scratch.diameter_at_most(g.order(), g.connection, k));
  state.SetItemsProcessed(state.iterations() * g.order());
}

void BM_DistanceProfile(benchmark::State& state) {
  auto g = family_graph(8, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(distance_profile(g));
}

}  // namespace

BENCHMARK(BM_Diameter)->Arg(4)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(BM_DiameterAtMost)->Arg(4)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(BM_DistanceProfile)->Arg(8)->Arg(16);
