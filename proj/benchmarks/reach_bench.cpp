#include <benchmark/benchmark.h>

#include "cfx/reach.hpp"
#include "cfx/syntax.hpp"

namespace {

// (x+y)^n . x* : descendants grow linearly with n.
std::string bounded_prefix(int n) {
  std::string r;
  for (int i = 0; i < n; ++i) r += "(x+y).";
  return r + "x*";
}

void BM_ReachTableDyck(benchmark::State& state) {
  cfx::Cfe e = cfx::parse_cfe("mu a. x.(a.(y.a))+1");
  cfx::Regex r = cfx::parse_regex(bounded_prefix(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    cfx::ReachTable table = cfx::reach_table(e, r);
    benchmark::DoNotOptimize(table.reach(e, r));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ReachTableDyck)->RangeMultiplier(2)->Range(1, 32)->Complexity();

void BM_ContainsAnBn(benchmark::State& state) {
  cfx::Cfe e = cfx::parse_cfe("mu a. x.(a.y)+1");
  cfx::Regex r = cfx::parse_regex("x*.y*");
  for (auto _ : state) benchmark::DoNotOptimize(cfx::contains(e, r));
}
BENCHMARK(BM_ContainsAnBn);

}  // namespace
