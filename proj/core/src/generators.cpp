#include "effhull/generators.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace effhull {

PositiveVector convex_combination(const ReciprocalMatrix& A, const WeightVector& alpha) {
  if (alpha.size() != A.size()) throw DimensionMismatchError("alpha dimension does not match matrix");
  return PositiveVector(A.multiply(alpha.entries()));
}

PositiveVector weighted_geometric_mean(const ReciprocalMatrix& A, const WeightVector& alpha) {
  const int n = A.size();
  if (alpha.size() != n) throw DimensionMismatchError("alpha dimension does not match matrix");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += alpha[j] * std::log(A(i, j));
    out[static_cast<std::size_t>(i)] = std::exp(acc);
  }
  return PositiveVector(std::move(out));
}

namespace {

// Power iteration on a dense positive matrix (row-major), unit-sum
// renormalization per step. Shared by the reciprocal and A*A^T paths.
PerronResult power_iterate(const std::vector<double>& m, int n, const ToleranceConfig& cfg) {
  cfg.validate();
  std::vector<double> v(static_cast<std::size_t>(n), 1.0 / n);
  std::vector<double> av(static_cast<std::size_t>(n));
  auto matvec = [&](const std::vector<double>& x, std::vector<double>& out) {
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      const double* row = m.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n);
      for (int j = 0; j < n; ++j) acc += row[j] * x[static_cast<std::size_t>(j)];
      out[static_cast<std::size_t>(i)] = acc;
    }
  };
  long iters = 0;
  while (iters < cfg.max_iters) {
    matvec(v, av);
    double sum = 0.0;
    for (double x : av) sum += x;
    double change = 0.0;
    for (int i = 0; i < n; ++i) {
      double next = av[static_cast<std::size_t>(i)] / sum;
      change = std::max(change, std::abs(next - v[static_cast<std::size_t>(i)]) / next);
      v[static_cast<std::size_t>(i)] = next;
    }
    ++iters;
    if (change < cfg.power_tol) {
      // Candidate converged; certify with the eigen-residual of the returned vector.
      matvec(v, av);
      double num = 0.0, den = 0.0;
      for (int i = 0; i < n; ++i) {
        num += v[static_cast<std::size_t>(i)] * av[static_cast<std::size_t>(i)];
        den += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
      }
      double rho = num / den;
      double rmax = 0.0, vmax = 0.0;
      for (int i = 0; i < n; ++i) {
        rmax = std::max(rmax, std::abs(av[static_cast<std::size_t>(i)] - rho * v[static_cast<std::size_t>(i)]));
        vmax = std::max(vmax, v[static_cast<std::size_t>(i)]);
      }
      double residual = rmax / vmax;
      if (residual <= 10.0 * cfg.power_tol * rho) {
        return PerronResult{PositiveVector(std::move(v)), rho, iters, residual};
      }
    }
  }
  throw NoConvergenceError("power iteration did not converge within the iteration budget", iters);
}

}  // namespace

PerronResult perron_vector(const ReciprocalMatrix& A, const ToleranceConfig& cfg) {
  return power_iterate(A.data(), A.size(), cfg);
}

PositiveVector singular_vector(const ReciprocalMatrix& A, const ToleranceConfig& cfg) {
  const int n = A.size();
  std::vector<double> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) acc += A(i, k) * A(j, k);
      m[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = acc;
    }
  }
  return power_iterate(m, n, cfg).vector;
}

PositiveVector mean_columns(const ReciprocalMatrix& A, MeanKind kind) {
  const int n = A.size();
  WeightVector uniform(std::vector<double>(static_cast<std::size_t>(n), 1.0));
  if (kind == MeanKind::Arithmetic) return convex_combination(A, uniform);
  return weighted_geometric_mean(A, uniform);
}

}  // namespace effhull
