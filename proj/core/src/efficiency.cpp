#include "effhull/efficiency.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

namespace effhull {

namespace {

// x <= y with multiplicative slack; both sides positive.
bool leq_tol(double x, double y, double tol) { return x <= y * (1.0 + tol); }

bool chain_3x3(double a12, double a13, double a23, double w1, double w2, double w3, double tol) {
  return leq_tol(a23 * w3, w2, tol) && leq_tol(w2, w1 / a12, tol) && leq_tol(w1 / a12, a13 / a12 * w3, tol);
}

}  // namespace

EfficiencyCertificate is_efficient(const ReciprocalMatrix& A, const PositiveVector& w,
                                   const ToleranceConfig& cfg) {
  EfficiencyDigraph g = build_digraph(A, w, cfg);
  EfficiencyCertificate cert;
  cert.method = Method::Digraph;
  if (strongly_connected(g)) {
    cert.verdict = Verdict::Efficient;
    return cert;
  }
  cert.verdict = Verdict::Inefficient;
  // The first Tarjan component has no outgoing edge: multiplying every weight
  // outside it by (1 + delta) for small delta > 0 dominates w strictly.
  cert.witness = strongly_connected_components(g).front();
  return cert;
}

bool efficient_verdict(const ReciprocalMatrix& A, const PositiveVector& w, const ToleranceConfig& cfg) {
  return strongly_connected(build_digraph(A, w, cfg));
}

bool efficient_3x3(const ReciprocalMatrix& A, const PositiveVector& w, const ToleranceConfig& cfg) {
  cfg.validate();
  if (A.size() != 3) throw DimensionMismatchError("efficient_3x3 needs a 3x3 matrix");
  if (w.size() != 3) throw DimensionMismatchError("weight vector dimension does not match matrix");
  const double a12 = A(0, 1), a13 = A(0, 2), a23 = A(1, 2);
  const double t = cfg.edge_rtol;
  // Forward chain, or the same chain after reversing the order of indices
  // (which swaps the roles of each inequality's sides).
  bool fwd = chain_3x3(a12, a13, a23, w[0], w[1], w[2], t);
  bool rev = leq_tol(w[1], a23 * w[2], t) && leq_tol(w[0] / a12, w[1], t) &&
             leq_tol(a13 / a12 * w[2], w[0] / a12, t);
  return fwd || rev;
}

bool efficient_simple_perturbed(double x, const PositiveVector& w, const ToleranceConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(x) || x <= 0.0) throw NonPositiveEntryError("x must be strictly positive and finite");
  const int n = w.size();
  if (n < 3) throw DimensionTooSmallError("simple-perturbed test needs dimension at least 3");
  const double t = cfg.edge_rtol;
  bool fwd = true, rev = true;
  // Efficient iff w2 <= wk <= w1 <= x*w2 for every k >= 3, or fully reversed.
  for (int k = 2; k < n && (fwd || rev); ++k) {
    fwd = fwd && leq_tol(w[1], w[k], t) && leq_tol(w[k], w[0], t);
    rev = rev && leq_tol(w[k], w[1], t) && leq_tol(w[0], w[k], t);
  }
  fwd = fwd && leq_tol(w[0], x * w[1], t);
  rev = rev && leq_tol(x * w[1], w[0], t);
  return fwd || rev;
}

namespace {

struct RecursiveContext {
  const ReciprocalMatrix& A;
  const PositiveVector& w;
  const ToleranceConfig& cfg;
  std::vector<std::int8_t> memo;  // -1 unknown, 0 false, 1 true; indexed by vertex bitmask

  bool eval(std::uint32_t mask) {
    std::int8_t& slot = memo[mask];
    if (slot != -1) return slot == 1;
    bool result;
    if (std::popcount(mask) == 3) {
      int idx[3];
      int k = 0;
      for (int i = 0; i < A.size(); ++i) {
        if (mask & (1u << i)) idx[k++] = i;
      }
      ReciprocalMatrix sub = ReciprocalMatrix::from_upper(3, [&](int i, int j) { return A(idx[i], idx[j]); });
      PositiveVector wsub(std::vector<double>{w[idx[0]], w[idx[1]], w[idx[2]]});
      result = efficient_3x3(sub, wsub, cfg);
    } else {
      // Look for two distinct removals that both stay efficient.
      int good = 0;
      for (int i = 0; i < A.size() && good < 2; ++i) {
        if (!(mask & (1u << i))) continue;
        if (eval(mask & ~(1u << i))) ++good;
      }
      result = good >= 2;
    }
    slot = result ? 1 : 0;
    return result;
  }
};

}  // namespace

bool is_efficient_recursive(const ReciprocalMatrix& A, const PositiveVector& w,
                            const ToleranceConfig& cfg) {
  cfg.validate();
  const int n = A.size();
  if (w.size() != n) throw DimensionMismatchError("weight vector dimension does not match matrix");
  if (n < 3) throw DimensionTooSmallError("recursive test needs dimension at least 3");
  if (n > 12) throw PreconditionError("recursive test is offered for dimension at most 12");
  RecursiveContext ctx{A, w, cfg, std::vector<std::int8_t>(std::size_t{1} << n, -1)};
  return ctx.eval((std::uint32_t{1} << n) - 1);
}

std::pair<ReciprocalMatrix, PositiveVector> reduce_equal_tail(const ReciprocalMatrix& A,
                                                              const PositiveVector& w, int p, int q,
                                                              const ToleranceConfig& cfg) {
  cfg.validate();
  const int n = A.size();
  if (w.size() != n) throw DimensionMismatchError("weight vector dimension does not match matrix");
  if (p < 0 || p >= n || q < 0 || q >= n) throw IndexOutOfRangeError("p and q must be valid indices");
  if (p == q) throw PreconditionError("p and q must differ");
  // Smallest s such that every entry outside the leading s x s block is 1.
  int block = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(A(i, j) - 1.0) > cfg.rtol) block = std::max(block, j + 1);
    }
  }
  if (p < block || q < block) {
    throw PreconditionError("p and q must lie beyond the perturbed leading block (size " +
                            std::to_string(block) + ")");
  }
  if (std::abs(w[p] - w[q]) > cfg.rtol * std::max(w[p], w[q])) {
    throw PreconditionError("w_p and w_q must be equal within rtol");
  }
  std::vector<double> reduced;
  reduced.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 0; i < n; ++i) {
    if (i != p) reduced.push_back(w[i]);
  }
  return {principal_submatrix(A, {p}, SubmatrixMode::Delete), PositiveVector(std::move(reduced))};
}

}  // namespace effhull
