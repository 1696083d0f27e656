#include <benchmark/benchmark.h>

#include <vector>

#include "ddc/graph.hpp"
#include "ddc/search.hpp"

using namespace ddc;

namespace {

void BM_EnumerateSets(benchmark::State& state) {
  Int n = state.range(0);
  for (auto _ : state) {
    std::uint64_t count = 0;
    for_each_generator_set(n, 3, {}, [&](const GeneratorSet&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}

void BM_CanonicalForm(benchmark::State& state) {
  auto s = make_generator_set(501, std::vector<Int>{3, 77, 150, 238});
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(s));
}

void BM_SearchExtremal(benchmark::State& state) {
  Int d = state.range(0);
  SearchConfig cfg;
  cfg.threads = 1;
  for (auto _ : state) {
    auto r = search_extremal(d, 2, cfg);
    benchmark::DoNotOptimize(r.extremal_order);
    state.counters["sets"] = static_cast<double>(r.sets_tested);
  }
}

}  // namespace

BENCHMARK(BM_EnumerateSets)->Arg(64)->Arg(96);
BENCHMARK(BM_CanonicalForm);
BENCHMARK(BM_SearchExtremal)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
