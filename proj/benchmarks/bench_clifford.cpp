#include <benchmark/benchmark.h>

#include <vector>

#include "bigyro/clifford.hpp"
#include "bigyro/rng.hpp"

using namespace bigyro;

namespace {

void BM_GeometricProduct(benchmark::State& state) {
  const CliffordAlgebra alg(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  auto rng = trial_engine(5, 0);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(alg.blades()), y(alg.blades());
  for (double& v : x) v = u(rng);
  for (double& v : y) v = u(rng);
  const Multivector a(alg, x), b(alg, y);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_GeometricProduct)->Args({1, 1})->Args({2, 2})->Args({3, 3});

void BM_LiftToSpin(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0)), n = static_cast<std::size_t>(state.range(1));
  auto rng = trial_engine(6, 0);
  const Mat g = mul(mul(embed_rho(random_rotation(rng, m), n).matrix(), beta(random_matrix(rng, n, m)).matrix),
                    embed_lambda(m, random_rotation(rng, n)).matrix());
  const PseudoOrthElem e(g, {m, n});
  for (auto _ : state) benchmark::DoNotOptimize(lift_to_spin(e));
}
BENCHMARK(BM_LiftToSpin)->Args({1, 1})->Args({2, 2});

}  // namespace
