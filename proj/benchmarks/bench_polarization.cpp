#include "realab/moduli.hpp"
#include "realab/polarization.hpp"

#include <benchmark/benchmark.h>

using namespace realab;

namespace {

void BM_PrincipalizeScaled(benchmark::State& state) {
  const auto g = static_cast<std::size_t>(state.range(0));
  const IntMatrix sigma = block_diagonal(IntMatrix::identity(g), -IntMatrix::identity(g));
  const PolarizedLattice pl(GLattice(sigma), mpz_class(36) * standard_symplectic(g));
  for (auto _ : state) benchmark::DoNotOptimize(principalize(pl));
}
BENCHMARK(BM_PrincipalizeScaled)->DenseRange(1, 4);

void BM_MinimalClass(benchmark::State& state) {
  const auto g = static_cast<std::size_t>(state.range(0));
  const IntMatrix sigma = block_diagonal(IntMatrix::identity(g), -IntMatrix::identity(g));
  const PolarizedLattice pl(GLattice(sigma), standard_symplectic(g));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_class(pl));
}
BENCHMARK(BM_MinimalClass)->DenseRange(1, 4);

void BM_ClassifyType(benchmark::State& state) {
  const IntMatrix m{{2, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 4, 1}, {1, 0, 1, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(classify_type(m));
}
BENCHMARK(BM_ClassifyType);

}  // namespace
