#include "effhull/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>
#include <utility>

#include "effhull/efficiency.hpp"

namespace effhull {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return mix64(seed ^ mix64(trial + 1));
}

double uniform01(std::mt19937_64& rng) {
  // 53 random bits, offset by half a step: values lie strictly inside (0, 1).
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

WeightVector sample_simplex(int n, std::mt19937_64& rng) {
  if (n < 1) throw DimensionTooSmallError("simplex dimension must be at least 1");
  std::vector<double> draws(static_cast<std::size_t>(n));
  for (double& v : draws) v = uniform01(rng);
  return WeightVector(std::move(draws));
}

double divergence(const ReciprocalMatrix& A, const PositiveVector& w) {
  const int n = A.size();
  if (w.size() != n) throw DimensionMismatchError("weight vector dimension does not match matrix");
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double d = w[i] / w[j] - A(i, j);
      acc += d * d;
    }
  }
  return std::sqrt(acc);
}

ComparisonReport compare_run(const ReciprocalMatrix& A, long trials, std::uint64_t seed,
                             const ToleranceConfig& cfg, std::string matrix_descriptor) {
  cfg.validate();
  if (trials < 0) throw PreconditionError("trials must be nonnegative");
  const int n = A.size();
  ComparisonReport report;
  report.matrix_descriptor = matrix_descriptor.empty() ? ("n=" + std::to_string(n)) : std::move(matrix_descriptor);
  report.seed = seed;
  report.trials = trials;
  report.records.reserve(static_cast<std::size_t>(trials));
  for (long t = 0; t < trials; ++t) {
    std::mt19937_64 rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
    WeightVector alpha = sample_simplex(n, rng);
    PositiveVector convex = convex_combination(A, alpha);
    PositiveVector geometric = weighted_geometric_mean(A, alpha);
    if (!efficient_verdict(A, geometric, cfg)) {
      throw Error("internal invariant failed: weighted geometric mean not efficient");
    }
    report.records.push_back(TrialRecord{t, alpha, divergence(A, convex), divergence(A, geometric)});
  }
  report.reference.geometric_mean = divergence(A, mean_columns(A, MeanKind::Geometric));
  report.reference.perron = divergence(A, perron_vector(A, cfg).vector);
  report.reference.singular = divergence(A, singular_vector(A, cfg));
  report.reference.arithmetic_mean = divergence(A, mean_columns(A, MeanKind::Arithmetic));
  return report;
}

namespace {

long count_inefficient(const ReciprocalMatrix& A, long trials, std::uint64_t seed,
                       const ToleranceConfig& cfg) {
  const int n = A.size();
  auto worker = [&](long lo, long hi) {
    long count = 0;
    for (long t = lo; t < hi; ++t) {
      std::mt19937_64 rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
      WeightVector alpha = sample_simplex(n, rng);
      PositiveVector w = convex_combination(A, alpha);
      if (!efficient_verdict(A, w, cfg)) ++count;
    }
    return count;
  };
  unsigned hw = std::thread::hardware_concurrency();
  long chunks = std::clamp<long>(static_cast<long>(hw), 1, std::max<long>(trials / 256, 1));
  if (chunks <= 1) return worker(0, trials);
  std::vector<std::future<long>> futures;
  futures.reserve(static_cast<std::size_t>(chunks));
  long per = trials / chunks, extra = trials % chunks, lo = 0;
  for (long c = 0; c < chunks; ++c) {
    long hi = lo + per + (c < extra ? 1 : 0);
    futures.push_back(std::async(std::launch::async, worker, lo, hi));
    lo = hi;
  }
  long total = 0;
  for (auto& f : futures) total += f.get();
  return total;
}

}  // namespace

CountReport inefficiency_count(int n, double a12, double a23, const std::vector<double>& a13_list,
                               long trials, std::uint64_t seed, const ToleranceConfig& cfg) {
  cfg.validate();
  if (trials < 0) throw PreconditionError("trials must be nonnegative");
  CountReport report;
  report.n = n;
  report.a12 = a12;
  report.a23 = a23;
  report.seed = seed;
  report.entries.reserve(a13_list.size());
  for (double a13 : a13_list) {
    ReciprocalMatrix A = three_block_matrix(n, a12, a13, a23);
    CountEntry entry;
    entry.a13 = a13;
    entry.trials = trials;
    entry.inefficient_count = count_inefficient(A, trials, seed, cfg);
    entry.perron_efficient = efficient_verdict(A, perron_vector(A, cfg).vector, cfg);
    entry.singular_efficient = efficient_verdict(A, singular_vector(A, cfg), cfg);
    entry.arith_mean_efficient = efficient_verdict(A, mean_columns(A, MeanKind::Arithmetic), cfg);
    report.entries.push_back(entry);
  }
  return report;
}

std::vector<CountReport> perron_efficiency_grid(const std::vector<int>& n_list, double a12,
                                                 double a23, const std::vector<double>& a13_list,
                                                 const ToleranceConfig& cfg) {
  cfg.validate();
  std::vector<CountReport> out;
  out.reserve(n_list.size());
  for (int n : n_list) {
    CountReport report;
    report.n = n;
    report.a12 = a12;
    report.a23 = a23;
    report.seed = 0;
    report.entries.reserve(a13_list.size());
    for (double a13 : a13_list) {
      ReciprocalMatrix A = three_block_matrix(n, a12, a13, a23);
      CountEntry entry;
      entry.a13 = a13;
      entry.trials = 0;
      entry.inefficient_count = 0;
      entry.perron_efficient = efficient_verdict(A, perron_vector(A, cfg).vector, cfg);
      entry.singular_efficient = efficient_verdict(A, singular_vector(A, cfg), cfg);
      entry.arith_mean_efficient = efficient_verdict(A, mean_columns(A, MeanKind::Arithmetic), cfg);
      report.entries.push_back(entry);
    }
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace effhull
