#include <benchmark/benchmark.h>

#include "rigidspace/matrix_groups.hpp"

using namespace rigidspace;

static void BM_Givens(benchmark::State &state)
{
  int const n = static_cast<int>(state.range(0));
  RealMatrix const m = random_so(n, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(givens_decompose(m, 1e-9).size());
}
BENCHMARK(BM_Givens)->DenseRange(2, 8, 2)->Arg(16);

static void BM_SignatureWord(benchmark::State &state)
{
  IntervalPartition const part({2, 2});
  SeededRng rng(5);
  auto const word = random_signature_word(part, 50, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(word_product(word, 4));
}
BENCHMARK(BM_SignatureWord);

static void BM_Realify(benchmark::State &state)
{
  int const n = static_cast<int>(state.range(0));
  ComplexMatrix const u = random_su(n, 9);
  for (auto _ : state)
    benchmark::DoNotOptimize(realify(u));
}
BENCHMARK(BM_Realify)->Arg(2)->Arg(5)->Arg(10);

static void BM_QuatClosure(benchmark::State &state)
{
  int const n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(quat_group_closure(n).order());
}
BENCHMARK(BM_QuatClosure)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
