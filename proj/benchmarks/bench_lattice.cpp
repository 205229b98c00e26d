#include "realab/cohomology.hpp"
#include "realab/glattice.hpp"
#include "realab/smith.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace realab;

namespace {

IntMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-20, 20);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = coef(rng);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(4, 16, 4);

void BM_TateExteriorPower(benchmark::State& state) {
  // the split threefold H^1 has rank 6; its exterior powers reach rank 20
  const GLattice h1 = RealTorus::elliptic_product({true, false, true}).h1();
  const auto q = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tate_cohomology(exterior_power(h1, q)));
}
BENCHMARK(BM_TateExteriorPower)->DenseRange(1, 6);

void BM_ThreefoldBudget(benchmark::State& state) {
  const RealTorus t = RealTorus::elliptic_product({true, true, false});
  for (auto _ : state) benchmark::DoNotOptimize(hdg0_torsion_budget(t));
}
BENCHMARK(BM_ThreefoldBudget);

}  // namespace
