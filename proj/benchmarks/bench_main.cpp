#include <benchmark/benchmark.h>

#include "holgal/cli/sweep.hpp"
#include "holgal/criteria.hpp"

using namespace holgal;

namespace {

HolPtr hol_for(Residue p, int e) { return Holomorph::create(GroupContext(p, e)); }

void BM_AllSubgroups(benchmark::State& state) {
  const HolPtr hol = hol_for(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_subgroups(hol).size());
}
BENCHMARK(BM_AllSubgroups)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ElementOrder(benchmark::State& state) {
  const GroupContext ctx(2, 5);
  for (auto _ : state) {
    std::uint64_t total = 0;
    for (Residue u = 0; u < ctx.n(); ++u) {
      for (Residue a : ctx.units()) total += element_order({u, a}, ctx);
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ElementOrder);

void BM_FindIsomorphism(benchmark::State& state) {
  const auto lattice = SubgroupLattice::build(hol_for(2, static_cast<int>(state.range(0))));
  std::vector<AbstractGroup> groups;
  for (std::size_t i : lattice->transitive()) groups.push_back(abstract_with_stabilizer((*lattice)[i]));
  for (auto _ : state) {
    std::size_t found = 0;
    for (const auto& a : groups) {
      for (const auto& b : groups) {
        if (a.size() == b.size() && find_isomorphism(a, b)) ++found;
      }
    }
    benchmark::DoNotOptimize(found);
  }
}
BENCHMARK(BM_FindIsomorphism)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const auto lattice = SubgroupLattice::build(hol_for(2, static_cast<int>(state.range(0))));
  const Oracle oracle(lattice);
  const auto jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cli::classify_all(*lattice, &oracle, jobs).size());
}
BENCHMARK(BM_Classify)->Args({3, 1})->Args({4, 1})->Args({4, 4})->Unit(benchmark::kMillisecond);

void BM_CriteriaOnly(benchmark::State& state) {
  const auto lattice = SubgroupLattice::build(hol_for(2, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(cli::classify_all(*lattice, nullptr, 1).size());
}
BENCHMARK(BM_CriteriaOnly)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
