#include <benchmark/benchmark.h>

#include "qtchar/kl.hpp"
#include "qtchar/restrict.hpp"

using namespace qtchar;

namespace {

void BM_FmExpand(benchmark::State& state, const char* name, int node) {
  const auto d = DynkinDiagram::parse(name);
  const auto p = YMonomial::Y(node, {0, 0});
  for (auto _ : state) benchmark::DoNotOptimize(fm_expand(d, p));
}
BENCHMARK_CAPTURE(BM_FmExpand, D4_node2, "D4", 2);
BENCHMARK_CAPTURE(BM_FmExpand, D5_node3, "D5", 3);
BENCHMARK_CAPTURE(BM_FmExpand, E6_node1, "E6", 1);
BENCHMARK_CAPTURE(BM_FmExpand, E6_node4, "E6", 4)->Unit(benchmark::kMillisecond);

void BM_StandardQchar(benchmark::State& state, const char* name, const char* p) {
  const auto d = DynkinDiagram::parse(name);
  const auto m = YMonomial::parse(p);
  FundamentalCache cache;
  for (auto _ : state) benchmark::DoNotOptimize(standard_qchar(d, m, cache));
}
BENCHMARK_CAPTURE(BM_StandardQchar, A2_mixed, "A2", "Y[1,0] Y[2,1]^2");
BENCHMARK_CAPTURE(BM_StandardQchar, D4_pair, "D4", "Y[2,0] Y[2,2]");
BENCHMARK_CAPTURE(BM_StandardQchar, A3_three, "A3", "Y[1,0] Y[2,1] Y[3,2]");

void BM_KlTables(benchmark::State& state, const char* name, const char* p) {
  const auto d = DynkinDiagram::parse(name);
  const auto m = YMonomial::parse(p);
  FundamentalCache cache;
  for (auto _ : state) benchmark::DoNotOptimize(kl_tables(d, m, cache));
}
BENCHMARK_CAPTURE(BM_KlTables, A1_string, "A1", "Y[1,0] Y[1,2] Y[1,4]");
BENCHMARK_CAPTURE(BM_KlTables, A2_mixed, "A2", "Y[1,0] Y[2,1]^2");
BENCHMARK_CAPTURE(BM_KlTables, D4_pair, "D4", "Y[2,0] Y[2,2]");

void BM_Branching(benchmark::State& state, const char* name, std::vector<int> w) {
  const auto d = DynkinDiagram::parse(name);
  const auto h = heights(d, Orientation::ascending(d));
  FundamentalCache cache;
  for (auto _ : state) benchmark::DoNotOptimize(branching(d, w, h, cache));
}
BENCHMARK_CAPTURE(BM_Branching, D4_L2, "D4", std::vector<int>{0, 1, 0, 0});
BENCHMARK_CAPTURE(BM_Branching, A3_L1_L3, "A3", std::vector<int>{1, 0, 1});

}  // namespace

BENCHMARK_MAIN();
