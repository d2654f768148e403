#pragma once

#include <cmath>

#include "effhull/errors.hpp"

namespace effhull {

// Numeric knobs shared across the library. All comparisons between matrix
// entries and weights are relative; absolute epsilons are never used because
// every quantity in play is strictly positive and scale-free.
struct ToleranceConfig {
  // Relative tolerance for validation and closed-form comparisons.
  double rtol = 1e-9;
  // Slack used when deciding digraph edges: edge i->j iff w_i >= a_ij * w_j * (1 - edge_rtol).
  double edge_rtol = 1e-9;
  // Convergence threshold for power iterations.
  double power_tol = 1e-12;
  // Iteration budget for power iterations.
  long max_iters = 10000;
  // Epsilon schedule for witness searches: start, shrink factor, step budget.
  double eps0 = 0.5;
  double eps_shrink = 0.5;
  int eps_max_steps = 60;

  void validate() const {
    auto bad = [](double v) { return !std::isfinite(v) || v <= 0.0; };
    if (bad(rtol) || rtol >= 1.0) throw InvalidToleranceError("rtol must be in (0, 1)");
    if (bad(edge_rtol) || edge_rtol >= 1.0) throw InvalidToleranceError("edge_rtol must be in (0, 1)");
    if (bad(power_tol) || power_tol >= 1.0) throw InvalidToleranceError("power_tol must be in (0, 1)");
    if (max_iters < 1) throw InvalidToleranceError("max_iters must be at least 1");
    if (bad(eps0)) throw InvalidToleranceError("eps0 must be positive");
    if (bad(eps_shrink) || eps_shrink >= 1.0) throw InvalidToleranceError("eps_shrink must be in (0, 1)");
    if (eps_max_steps < 1) throw InvalidToleranceError("eps_max_steps must be at least 1");
  }
};

}  // namespace effhull
