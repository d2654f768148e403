#include <random>

#include <benchmark/benchmark.h>

#include "effhull/efficiency.hpp"
#include "effhull/experiments.hpp"
#include "effhull/generators.hpp"
#include "effhull/matrix.hpp"
#include "effhull/perturbed.hpp"

using namespace effhull;

namespace {

ReciprocalMatrix random_matrix(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-2.1972245773362196, 2.1972245773362196);  // ln 9
  return ReciprocalMatrix::from_upper(n, [&](int, int) { return std::exp(dist(rng)); });
}

void BM_EfficiencyVerdict(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ReciprocalMatrix A = random_matrix(n, 17);
  std::mt19937_64 rng(18);
  PositiveVector w = convex_combination(A, sample_simplex(n, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(efficient_verdict(A, w));
  }
}
BENCHMARK(BM_EfficiencyVerdict)->Arg(8)->Arg(100);

void BM_PerronVector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ReciprocalMatrix A = random_matrix(n, 19);
  for (auto _ : state) {
    benchmark::DoNotOptimize(perron_vector(A).vector);
  }
}
BENCHMARK(BM_PerronVector)->Arg(8)->Arg(100);

void BM_Witness3Block(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(witness_3block(4.0, 8.2, 2.0));
  }
}
BENCHMARK(BM_Witness3Block);

void BM_WitnessTriangular(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(witness_triangular(5.0, 4.0, 2.0));
  }
}
BENCHMARK(BM_WitnessTriangular);

void BM_InefficiencyCount(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(inefficiency_count(8, 4.0, 2.0, {50.0}, 200, 7));
  }
}
BENCHMARK(BM_InefficiencyCount);

void BM_ClassifyBlockStructure(benchmark::State& state) {
  ReciprocalMatrix A = three_block_matrix(8, 4.0, 3.0, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(detect_block_structure(A));
  }
}
BENCHMARK(BM_ClassifyBlockStructure);

}  // namespace

BENCHMARK_MAIN();
