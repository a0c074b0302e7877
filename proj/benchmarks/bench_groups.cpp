#include <benchmark/benchmark.h>

#include "rigidspace/arrow_perm.hpp"
#include "rigidspace/quotient.hpp"
#include "rigidspace/topo_aut.hpp"

using namespace rigidspace;

static void BM_ClosureFull(benchmark::State &state)
{
  int const n = static_cast<int>(state.range(0));
  auto const gens = standard_generators(GeneratorKind::full, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(closure(gens, 100000).order());
}
BENCHMARK(BM_ClosureFull)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

static void BM_ClosureEven(benchmark::State &state)
{
  int const n = static_cast<int>(state.range(0));
  auto const gens = standard_generators(GeneratorKind::even, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(closure(gens, 100000).order());
}
BENCHMARK(BM_ClosureEven)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

static void BM_AllArrowPermutations(benchmark::State &state)
{
  int const n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(all_arrow_permutations(n).size());
}
BENCHMARK(BM_AllArrowPermutations)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

static void BM_Compose(benchmark::State &state)
{
  ArrowPermutation const a{3, -1, 4, -2, 6, 5}, b{-6, 2, 1, -5, 3, 4};
  for (auto _ : state)
    benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_Compose);

static void BM_AutGroupOne(benchmark::State &state)
{
  auto const g = FactorizedGraph::one(GraphKind::double_, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(aut_group(g, 100000).order());
}
BENCHMARK(BM_AutGroupOne)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

static void BM_Syndrome(benchmark::State &state)
{
  int const n = static_cast<int>(state.range(0));
  std::vector<int> sizes(static_cast<std::size_t>(n / 2), 2);
  if (n % 2)
    sizes.push_back(1);
  auto const h = EvenSubgroup::blockwise(IntervalPartition(sizes));
  auto const vectors = all_bit_vectors(n);
  for (auto _ : state)
    for (auto const &v : vectors)
      benchmark::DoNotOptimize(syndrome(v, h));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(vectors.size()));
}
BENCHMARK(BM_Syndrome)->Arg(6)->Arg(10)->Arg(14);
