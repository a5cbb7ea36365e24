#include <benchmark/benchmark.h>

#include "bigyro/bigyro_matrix.hpp"
#include "bigyro/pseudo_orth.hpp"
#include "bigyro/rng.hpp"

using namespace bigyro;

namespace {

void BM_SpdSqrt(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto rng = trial_engine(1, 0);
  const Mat a = random_matrix(rng, n, n);
  const Mat s = add(Mat::identity(n), mul(transpose(a), a));
  for (auto _ : state) benchmark::DoNotOptimize(spd_sqrt(s));
}
BENCHMARK(BM_SpdSqrt)->Arg(2)->Arg(4)->Arg(8);

void BM_BgAdd(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0)), n = static_cast<std::size_t>(state.range(1));
  auto rng = trial_engine(2, 0);
  const Mat a = random_matrix(rng, n, m), b = random_matrix(rng, n, m);
  const BgParams p(m, n);
  for (auto _ : state) benchmark::DoNotOptimize(bg_add(a, b, p));
}
BENCHMARK(BM_BgAdd)->Args({1, 1})->Args({2, 2})->Args({4, 4});

void BM_Gyrations(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0)), n = static_cast<std::size_t>(state.range(1));
  auto rng = trial_engine(3, 0);
  const Mat a = random_matrix(rng, n, m), b = random_matrix(rng, n, m);
  const BgParams p(m, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(left_gyr(a, b, p));
    benchmark::DoNotOptimize(right_gyr(a, b, p));
  }
}
BENCHMARK(BM_Gyrations)->Args({2, 2})->Args({4, 4});

void BM_Factor(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0)), n = static_cast<std::size_t>(state.range(1));
  auto rng = trial_engine(4, 0);
  const Factorization f{random_rotation(rng, m), random_matrix(rng, n, m), random_rotation(rng, n)};
  const PseudoOrthElem g(compose_factors(f), {m, n});
  for (auto _ : state) benchmark::DoNotOptimize(factor(g));
}
BENCHMARK(BM_Factor)->Args({1, 1})->Args({2, 2})->Args({4, 4});

void BM_CheckAxioms(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(BgParams(2, 2), 10, 42));
}
BENCHMARK(BM_CheckAxioms)->Unit(benchmark::kMillisecond);

}  // namespace
