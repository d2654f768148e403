#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "effhull/generators.hpp"
#include "effhull/matrix.hpp"
#include "effhull/perturbed.hpp"
#include "effhull/tolerance.hpp"
#include "effhull/types.hpp"

namespace effhull {

// Deterministic per-trial substream seed: a splitmix64-style mix of the run
// seed and the trial index. Trials are independent of execution order, so
// parallel chunking cannot change results.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

// Uniform double in the open interval (0, 1).
double uniform01(std::mt19937_64& rng);

// n independent uniform(0,1) draws renormalized to unit sum.
WeightVector sample_simplex(int n, std::mt19937_64& rng);

// Frobenius norm of [w_i / w_j - a_ij]; zero exactly when A is the consistent
// matrix of w. Scale-invariant in w.
double divergence(const ReciprocalMatrix& A, const PositiveVector& w);

struct TrialRecord {
  long trial;
  WeightVector alpha;
  double divergence_convex;
  double divergence_geometric;
};

struct ReferenceDivergences {
  double geometric_mean = 0.0;
  double perron = 0.0;
  double singular = 0.0;
  double arithmetic_mean = 0.0;
};

struct ComparisonReport {
  std::string matrix_descriptor;
  std::uint64_t seed = 0;
  long trials = 0;
  std::vector<TrialRecord> records;
  ReferenceDivergences reference;
};

// For each trial draw alpha on the simplex (shared between both generators),
// record the divergence of the convex combination and of the weighted
// geometric mean, and assert the geometric mean is efficient. Reference
// divergences cover the four unweighted generators.
ComparisonReport compare_run(const ReciprocalMatrix& A, long trials, std::uint64_t seed,
                             const ToleranceConfig& cfg = {}, std::string matrix_descriptor = {});

struct CountEntry {
  double a13 = 0.0;
  long trials = 0;
  long inefficient_count = 0;
  bool perron_efficient = false;
  bool singular_efficient = false;
  bool arith_mean_efficient = false;
};

struct CountReport {
  int n = 0;
  double a12 = 0.0;
  double a23 = 0.0;
  std::uint64_t seed = 0;
  std::vector<CountEntry> entries;
};

// For each a13 build the three-block matrix, draw `trials` simplex points,
// and count inefficient convex combinations; also records whether the three
// unweighted generators are efficient for that matrix. Deterministic in seed.
CountReport inefficiency_count(int n, double a12, double a23, const std::vector<double>& a13_list,
                               long trials, std::uint64_t seed, const ToleranceConfig& cfg = {});

// Efficiency of the Perron / singular / arithmetic-mean vectors across a
// (n, a13) grid of three-block matrices; no sampling involved.
std::vector<CountReport> perron_efficiency_grid(const std::vector<int>& n_list, double a12,
                                                double a23, const std::vector<double>& a13_list,
                                                const ToleranceConfig& cfg = {});

}  // namespace effhull
