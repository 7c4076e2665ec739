#include <benchmark/benchmark.h>

#include "fwps/classify.hpp"
#include "fwps/lattice.hpp"
#include "fwps/wps.hpp"

using namespace fwps;

namespace {

const FanoSimplex& fake_p3() {
  static const FanoSimplex p({{1, 0, 0}, {0, 1, 0}, {1, -3, 5}, {-2, 2, -5}});
  return p;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto m = IntegerMatrix::from_rows(fake_p3().vertices());
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm);

void BM_LatticePoints(benchmark::State& state) {
  const auto p = wps_simplex(WeightSystem{1, 1, 1, static_cast<long>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(p.lattice_points());
}
BENCHMARK(BM_LatticePoints)->Arg(1)->Arg(3)->Arg(7);

void BM_NormalForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(fake_p3()));
}
BENCHMARK(BM_NormalForm);

void BM_EnumerateTerminalP3(benchmark::State& state) {
  EnumerationOptions o;
  o.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_fake_wps(WeightSystem{1, 1, 1, 1}, EnumerationClass::kTerminal, o));
  }
}
BENCHMARK(BM_EnumerateTerminalP3)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SearchCanonicalWeights(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_weights(2, Integer(state.range(0)), SingularityClass::kCanonical));
}
BENCHMARK(BM_SearchCanonicalWeights)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
