#include "realab/fourier.hpp"

#include <benchmark/benchmark.h>

using namespace realab;

namespace {

RealTorus split_power(std::size_t g) { return RealTorus::elliptic_product(std::vector<bool>(g, true)); }

void BM_FourierMatrix(benchmark::State& state) {
  const auto g = static_cast<std::size_t>(state.range(0));
  const RealTorus a = split_power(g);
  for (auto _ : state)
    for (std::size_t i = 0; i <= 2 * g; ++i) benchmark::DoNotOptimize(fourier_matrix(a, i));
}
BENCHMARK(BM_FourierMatrix)->DenseRange(1, 3);

void BM_FourierTheta(benchmark::State& state) {
  const auto g = static_cast<std::size_t>(state.range(0));
  const RealTorus a = split_power(g);
  const ExteriorElement theta = theta_class(standard_symplectic(g));
  for (auto _ : state) benchmark::DoNotOptimize(fourier(a, theta));
}
BENCHMARK(BM_FourierTheta)->DenseRange(1, 3);

}  // namespace
