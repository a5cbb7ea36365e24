#include <benchmark/benchmark.h>

#include "bigyro/finite_engine.hpp"

using namespace bigyro;

namespace {

void BM_SearchDihedral(benchmark::State& state) {
  const FiniteGroup g = dihedral_group(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(search_decompositions(g));
}
BENCHMARK(BM_SearchDihedral)->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_TheoremsOnTrivialDecomposition(benchmark::State& state) {
  auto g = std::make_shared<const FiniteGroup>(dihedral_group(static_cast<std::size_t>(state.range(0))));
  Subset all(g->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const GyrTables t = build_bigyrogroup(build_tables(verify_bitransversal(g, {g->identity()}, all, {g->identity()})));
  for (auto _ : state) benchmark::DoNotOptimize(check_all_theorems(t));
}
BENCHMARK(BM_TheoremsOnTrivialDecomposition)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
