#include <benchmark/benchmark.h>

#include "ddc/families.hpp"
#include "ddc/graph.hpp"
#include "ddc/spectra.hpp"

using namespace ddc;

namespace {

void BM_Spectrum(benchmark::State& state) {
  FamilyOptions fo;
  fo.verify = false;
  auto g = make_graph(construct_family(9, state.range(0), fo).front().gens);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(g));
  state.SetComplexityN(g.order());
}

void BM_Inertia(benchmark::State& state) {
  FamilyOptions fo;
  fo.verify = false;
  auto g = make_graph(construct_family(9, 5, fo).front().gens);
  Spectrum s = spectrum(g);
  for (auto _ : state) benchmark::DoNotOptimize(inertia(s));
}

}  // namespace

BENCHMARK(BM_Spectrum)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_Inertia);
