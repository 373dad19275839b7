#include <benchmark/benchmark.h>

#include "cho/kummer.hpp"
#include "cho/oscillator.hpp"
#include "cho/root_solver.hpp"
#include "cho/series_shooting.hpp"

namespace {

cho::PrecisionConfig config_for(int digits) {
  cho::PrecisionConfig cfg;
  cfg.target_digits = digits;
  return cfg;
}

void BM_Kummer1F1(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  const long z = state.range(1);
  cho::BigReal a = cho::BigReal::from_string("-25.3", digits);
  cho::BigReal zb(z, digits);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cho::kummer_1f1(a, cho::make_rational(3, 2), zb, digits));
  }
}
BENCHMARK(BM_Kummer1F1)->ArgsProduct({{50, 100, 200}, {1, 25, 121}});

void BM_EigenHypergeometric(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  auto cfg = config_for(digits);
  auto problem = cho::make_problem({3, 0, 0}, "2.5", cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cho::eigenvalue_hypergeometric(problem, cfg));
  }
}
BENCHMARK(BM_EigenHypergeometric)->Arg(50)->Arg(100);

void BM_EigenSeries(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  auto cfg = config_for(digits);
  auto problem = cho::make_problem({3, 0, 0}, "2.5", cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cho::eigenvalue_series(problem, cfg));
  }
}
BENCHMARK(BM_EigenSeries)->Arg(50)->Arg(100);

void BM_WideBox(benchmark::State& state) {
  auto cfg = config_for(50);
  auto problem = cho::make_problem({1, 0, 0}, "11.0", cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cho::eigenvalue_hypergeometric(problem, cfg));
  }
}
BENCHMARK(BM_WideBox);

}  // namespace

BENCHMARK_MAIN();
