#include <cmath>
#include <vector>

#include "doctest.h"
#include "effhull/efficiency.hpp"
#include "effhull/experiments.hpp"
#include "effhull/matrix.hpp"
#include "effhull/perturbed.hpp"
#include "support.hpp"

using namespace effhull;
using testsupport::rel_close;

TEST_SUITE("experiments") {

TEST_CASE("simplex sampling basics") {
  std::mt19937_64 rng(trial_seed(9, 0));
  WeightVector one = sample_simplex(1, rng);
  CHECK(one[0] == 1.0);

  for (int t = 0; t < 50; ++t) {
    WeightVector v = sample_simplex(6, rng);
    double sum = 0.0;
    for (int i = 0; i < 6; ++i) {
      CHECK(v[i] > 0.0);
      sum += v[i];
    }
    CHECK(rel_close(sum, 1.0, 1e-12));
  }
}

TEST_CASE("simplex coordinates average to one over the dimension") {
  const int n = 5, draws = 100000;
  double sum0 = 0.0;
  for (int t = 0; t < draws; ++t) {
    std::mt19937_64 rng(trial_seed(123, static_cast<std::uint64_t>(t)));
    sum0 += sample_simplex(n, rng)[0];
  }
  double mean = sum0 / draws;
  // coordinate variance of a uniform simplex point is (n-1)/(n^2 (n+1))
  double sigma = std::sqrt((n - 1.0) / (static_cast<double>(n) * n * (n + 1.0)) / draws);
  CHECK(std::fabs(mean - 1.0 / n) <= 3.0 * sigma);
}

TEST_CASE("per-trial substreams are deterministic and distinct") {
  CHECK(trial_seed(7, 3) == trial_seed(7, 3));
  CHECK(trial_seed(7, 3) != trial_seed(7, 4));
  CHECK(trial_seed(7, 3) != trial_seed(8, 3));
}

TEST_CASE("divergence of an exact fit is zero and scaling changes nothing") {
  std::mt19937_64 rng(51);
  PositiveVector w = testsupport::random_positive(4, rng);
  ReciprocalMatrix A = consistent_from_weights(w);
  CHECK(divergence(A, w) <= 1e-12);

  ReciprocalMatrix B = testsupport::random_reciprocal(4, rng);
  PositiveVector v = testsupport::random_positive(4, rng);
  std::vector<double> scaled = v.entries();
  for (double& x : scaled) x *= 41.5;
  CHECK(rel_close(divergence(B, v), divergence(B, PositiveVector(scaled)), 1e-12));
}

TEST_CASE("divergence of a hand example") {
  ReciprocalMatrix A = validate_reciprocal({{1, 2}, {0.5, 1}});
  CHECK(rel_close(divergence(A, PositiveVector({1, 1})), std::sqrt(1.25), 1e-12));
}

TEST_CASE("comparison runs are reproducible and structurally sound") {
  ReciprocalMatrix A = three_block_matrix(8, 4.0, 3.0, 2.0);
  ComparisonReport r1 = compare_run(A, 40, 2024);
  ComparisonReport r2 = compare_run(A, 40, 2024);
  REQUIRE(r1.records.size() == 40);
  REQUIRE(r2.records.size() == 40);
  for (std::size_t i = 0; i < r1.records.size(); ++i) {
    CHECK(r1.records[i].trial == r2.records[i].trial);
    CHECK(r1.records[i].divergence_convex == r2.records[i].divergence_convex);
    CHECK(r1.records[i].divergence_geometric == r2.records[i].divergence_geometric);
    for (int k = 0; k < 8; ++k) CHECK(r1.records[i].alpha[k] == r2.records[i].alpha[k]);
    CHECK(r1.records[i].divergence_convex > 0.0);
    CHECK(r1.records[i].divergence_geometric > 0.0);
  }
  CHECK(r1.reference.geometric_mean > 0.0);
  CHECK(r1.reference.perron > 0.0);
  CHECK(r1.reference.singular > 0.0);
  CHECK(r1.reference.arithmetic_mean > 0.0);
}

TEST_CASE("comparison run on a consistent matrix reports zero divergence") {
  ReciprocalMatrix A = consistent_from_weights(PositiveVector({5, 2, 1}));
  ComparisonReport r = compare_run(A, 10, 1);
  for (const TrialRecord& rec : r.records) {
    CHECK(rec.divergence_convex <= 1e-10);
    CHECK(rec.divergence_geometric <= 1e-10);
  }
  CHECK(r.reference.perron <= 1e-6);
  CHECK(r.reference.singular <= 1e-6);
}

TEST_CASE("counting is deterministic and zero at the containment boundary") {
  CountReport r1 = inefficiency_count(4, 4.0, 2.0, {8.0}, 3000, 99);
  CHECK(r1.entries.size() == 1);
  CHECK(r1.entries[0].inefficient_count == 0);

  CountReport r2 = inefficiency_count(4, 4.0, 2.0, {12.0}, 2000, 7);
  CountReport r3 = inefficiency_count(4, 4.0, 2.0, {12.0}, 2000, 7);
  CHECK(r2.entries[0].inefficient_count == r3.entries[0].inefficient_count);
  // reference rate ~0.1098: give the sample six sigmas of room
  double expected = 2000 * 0.1098;
  double sigma = std::sqrt(2000 * 0.1098 * (1 - 0.1098));
  CHECK(std::fabs(r2.entries[0].inefficient_count - expected) <= 6 * sigma);
  CHECK(r2.entries[0].singular_efficient);
  CHECK(r2.entries[0].arith_mean_efficient);
}

TEST_CASE("the verdict grid reads single cells correctly") {
  std::vector<CountReport> g = perron_efficiency_grid({4}, 4.0, 2.0, {12.0, 20.0, 100.0});
  REQUIRE(g.size() == 1);
  REQUIRE(g[0].entries.size() == 3);
  CHECK(g[0].entries[0].perron_efficient);        // a13 = 12
  CHECK_FALSE(g[0].entries[1].perron_efficient);  // a13 = 20
  CHECK(g[0].entries[2].perron_efficient);        // a13 = 100
  for (const CountEntry& e : g[0].entries) {
    CHECK(e.trials == 0);
    CHECK(e.singular_efficient);
    CHECK(e.arith_mean_efficient);
  }
}

}  // TEST_SUITE
