#include <benchmark/benchmark.h>

#include "posetfano/catalog.hpp"
#include "posetfano/constructions.hpp"
#include "posetfano/ehrhart.hpp"
#include "posetfano/reflexive.hpp"
#include "posetfano/toric.hpp"

using namespace posetfano;

namespace {

Poset fence(int d) {
  // Zigzag poset: 1 < 2 > 3 < 4 > ...
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i < d; ++i)
    covers.push_back(i % 2 ? std::pair{i, i + 1} : std::pair{i + 1, i});
  return Poset::from_cover_relations(d, covers);
}

void bm_hull_omega(benchmark::State& state) {
  Poset p = catalog::six_element_poset();
  for (auto _ : state)
    benchmark::DoNotOptimize(build_pair(PairKind::OmegaCC, p, p));
}
BENCHMARK(bm_hull_omega);

void bm_lattice_count(benchmark::State& state) {
  LatticePolytope om =
      build_pair(PairKind::OmegaCC, catalog::six_element_poset(),
                 catalog::six_element_poset());
  long long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(om.lattice_point_count(n));
}
BENCHMARK(bm_lattice_count)->Arg(2)->Arg(4)->Arg(6);

void bm_linear_extensions(benchmark::State& state) {
  Poset p = fence((int)state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(p.linear_extension_count());
}
BENCHMARK(bm_linear_extensions)->Arg(8)->Arg(12)->Arg(16);

void bm_volume_formula(benchmark::State& state) {
  Poset p = fence((int)state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(volume_omega_formula(p, p));
}
BENCHMARK(bm_volume_formula)->Arg(4)->Arg(6);

void bm_census_2d(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_reflexive_2d());
}
BENCHMARK(bm_census_2d);

void bm_groebner_verify(benchmark::State& state) {
  Poset p = fence(3);
  BinomialSystem sys(Family::CC, p, p);
  for (auto _ : state) benchmark::DoNotOptimize(sys.spair_reduce_verify());
}
BENCHMARK(bm_groebner_verify);

}  // namespace

BENCHMARK_MAIN();
