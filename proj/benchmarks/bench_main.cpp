#include <benchmark/benchmark.h>

#include <cmath>
#include <map>

#include "abeldim/chi_opt.hpp"
#include "abeldim/examples.hpp"
#include "abeldim/generic_invariants.hpp"
#include "abeldim/pattern_engine.hpp"
#include "abeldim/superisolated.hpp"

using namespace abeldim;

namespace {

const BuiltinExample& twin(std::int64_t b) {
  static std::map<std::int64_t, BuiltinExample> cache;
  auto it = cache.find(b);
  if (it == cache.end()) it = cache.emplace(b, twin_gamma(b)).first;
  return it->second;
}

void BM_Laufer(benchmark::State& state) {
  const auto& G = twin(state.range(0)).graph;
  for (auto _ : state) benchmark::DoNotOptimize(laufer_fundamental_cycle(G));
}
BENCHMARK(BM_Laufer)->Arg(20)->Arg(30)->Arg(40);

void BM_MinChiBoxCut(benchmark::State& state) {
  const auto& G = twin(30).graph;
  const auto cap = default_cap(G);
  Cycle hi(G.size());
  for (std::size_t v = 0; v < G.size(); ++v) hi[v] = cap[v] * state.range(0);
  const Box box{Cycle(G.size()), hi};
  const QCycle shift(G.size());
  for (auto _ : state) benchmark::DoNotOptimize(min_chi_box(G, shift, box));
  double log_volume = 0;
  for (std::size_t v = 0; v < G.size(); ++v) log_volume += std::log10(static_cast<double>(hi[v] + 1));
  state.counters["box_log10_volume"] = log_volume;
}
BENCHMARK(BM_MinChiBoxCut)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_MinChiBoxBrute(benchmark::State& state) {
  const auto G = build_graph(GraphSpec{{{"c", -1}, {"x", -2}, {"y", -3}, {"z", -7}},
                                       {{"c", "x"}, {"c", "y"}, {"c", "z"}}});
  const auto n = state.range(0);
  const Box box{Cycle(G.size()), Cycle(std::vector<std::int64_t>{2 * n, n, n, n})};
  const QCycle shift(G.size());
  for (auto _ : state) benchmark::DoNotOptimize(brute_min_chi_box(G, shift, box));
}
BENCHMARK(BM_MinChiBoxBrute)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_H1Generic(benchmark::State& state) {
  const auto& G = twin(30).graph;
  const auto Z = default_cap(G);
  for (auto _ : state) benchmark::DoNotOptimize(h1_generic(G, Z));
}
BENCHMARK(BM_H1Generic)->Unit(benchmark::kMillisecond);

void BM_CodimSupportEnumeration(benchmark::State& state) {
  const auto& ex = twin(state.range(0));
  const auto Z = default_cap(ex.graph);
  for (auto _ : state) benchmark::DoNotOptimize(codim_generic(ex.graph, Z, ex.lprime));
}
BENCHMARK(BM_CodimSupportEnumeration)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_FirstAlgorithm(benchmark::State& state) {
  const auto& ex = twin(30);
  const auto Z = default_cap(ex.graph);
  for (auto _ : state) {
    const auto tau = test_first(ex.graph, Z, ex.lprime);
    benchmark::DoNotOptimize(run_pattern_induction(tau));
  }
}
BENCHMARK(BM_FirstAlgorithm)->Unit(benchmark::kMillisecond);

void BM_SecondAlgorithm(benchmark::State& state) {
  const auto& ex = twin(30);
  const auto Z = default_cap(ex.graph);
  for (auto _ : state) {
    const auto tau = test_second(ex.graph, Z, ex.lprime);
    benchmark::DoNotOptimize(run_pattern_induction(tau));
  }
}
BENCHMARK(BM_SecondAlgorithm)->Unit(benchmark::kMillisecond);

void BM_SuperisolatedEngine(benchmark::State& state) {
  const auto d = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(si::engine_dim(d, si::binomial(d - 1, 2) / 2, 2));
}
BENCHMARK(BM_SuperisolatedEngine)->Arg(6)->Arg(12)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
