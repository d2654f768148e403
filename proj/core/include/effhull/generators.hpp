#pragma once

#include <vector>

#include "effhull/matrix.hpp"
#include "effhull/tolerance.hpp"
#include "effhull/types.hpp"

namespace effhull {

// Convex combination of the columns of A: w = A * alpha.
PositiveVector convex_combination(const ReciprocalMatrix& A, const WeightVector& alpha);

// Entrywise weighted geometric mean of the columns:
// w_i = prod_j a_ij^alpha_j, computed in log space. Always efficient.
PositiveVector weighted_geometric_mean(const ReciprocalMatrix& A, const WeightVector& alpha);

struct PerronResult {
  PositiveVector vector;  // unit-sum principal eigenvector
  double rho = 0.0;       // Rayleigh estimate of the principal eigenvalue
  long iterations = 0;
  // Verified eigen-residual of the returned vector: max_i |(A v - rho v)_i| / max_i v_i.
  double residual = 0.0;
};

// Principal eigenvector by power iteration from the uniform vector, with
// unit-sum renormalization each step. Converged when the relative sup-norm
// change drops below power_tol and the eigen-residual is within
// 10 * power_tol * rho; throws NoConvergenceError after max_iters.
// For reciprocal A, rho >= n with equality exactly on consistent matrices.
PerronResult perron_vector(const ReciprocalMatrix& A, const ToleranceConfig& cfg = {});

// Principal eigenvector of A * A^T (unit sum).
PositiveVector singular_vector(const ReciprocalMatrix& A, const ToleranceConfig& cfg = {});

enum class MeanKind { Arithmetic, Geometric };

// Unweighted column mean: arithmetic = A * (e/n), geometric = row-wise
// geometric mean of entries.
PositiveVector mean_columns(const ReciprocalMatrix& A, MeanKind kind);

}  // namespace effhull
