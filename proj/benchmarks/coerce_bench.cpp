#include <benchmark/benchmark.h>

#include "cfx/coerce.hpp"
#include "cfx/syntax.hpp"

namespace {

const char* kDyck = "mu a. x.(a.(y.a))+1";

void BM_SynthesizeDowncast(benchmark::State& state) {
  cfx::Cfe e = cfx::parse_cfe(kDyck);
  cfx::Regex r = cfx::parse_regex("(x+y)*");
  for (auto _ : state) benchmark::DoNotOptimize(cfx::cfe_downcast(e, r).term);
}
BENCHMARK(BM_SynthesizeDowncast);

void BM_SynthesizeUpcast(benchmark::State& state) {
  cfx::Cfe e = cfx::parse_cfe("mu a. x.(a.y)+1");
  cfx::Regex r = cfx::parse_regex("x*.y*");
  for (auto _ : state) benchmark::DoNotOptimize(cfx::cfe_upcast(e, r).term);
}
BENCHMARK(BM_SynthesizeUpcast);

// Nested balanced word x^n y^n.
void BM_PredictiveParse(benchmark::State& state) {
  cfx::PredictiveParser parser(cfx::parse_cfe(kDyck));
  auto n = static_cast<std::size_t>(state.range(0));
  std::string w = std::string(n, 'x') + std::string(n, 'y');
  for (auto _ : state) benchmark::DoNotOptimize(parser.parse(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PredictiveParse)->RangeMultiplier(2)->Range(4, 64)->Complexity();

}  // namespace
