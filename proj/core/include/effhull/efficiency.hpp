#pragma once

#include <utility>
#include <vector>

#include "effhull/digraph.hpp"
#include "effhull/matrix.hpp"
#include "effhull/tolerance.hpp"
#include "effhull/types.hpp"

namespace effhull {

enum class Verdict { Efficient, Inefficient };
enum class Method { Digraph, Recursive, ClosedForm };

// Outcome of an efficiency test. When inefficient, `witness` is a nonempty
// proper subset of 0-based indices forming a strongly connected component of
// the dominance digraph with no edge leaving it (a sink component): raising
// the weights outside the witness produces a strictly dominating vector.
struct EfficiencyCertificate {
  Verdict verdict = Verdict::Efficient;
  Method method = Method::Digraph;
  std::vector<int> witness;

  bool efficient() const { return verdict == Verdict::Efficient; }
};

// Digraph test with certificate. Works for any dimension >= 1.
EfficiencyCertificate is_efficient(const ReciprocalMatrix& A, const PositiveVector& w,
                                   const ToleranceConfig& cfg = {});

// Convenience wrapper: the digraph verdict as a bare bool (no certificate
// work on the inefficient path).
bool efficient_verdict(const ReciprocalMatrix& A, const PositiveVector& w,
                       const ToleranceConfig& cfg = {});

// Inductive test: for n >= 4, w is efficient iff there are two distinct
// indices i, j with w(i) efficient for A(i) and w(j) efficient for A(j);
// at n = 3 the closed-form chain decides. Memoized over subsets; n <= 12.
bool is_efficient_recursive(const ReciprocalMatrix& A, const PositiveVector& w,
                            const ToleranceConfig& cfg = {});

// Closed-form 3x3 test: efficient iff the chain
//   a23*w3 <= w2 <= w1/a12 <= (a13/a12)*w3
// holds forwards or fully reversed (with edge_rtol slack).
bool efficient_3x3(const ReciprocalMatrix& A, const PositiveVector& w,
                   const ToleranceConfig& cfg = {});

// Closed-form test for the matrix that is all ones except a_12 = x: w is
// efficient iff w2 <= wk <= w1 <= x*w2 for every k >= 3, or the reversed
// chain holds. Requires x > 0 and n >= 3.
bool efficient_simple_perturbed(double x, const PositiveVector& w,
                                const ToleranceConfig& cfg = {});

// For a matrix whose entries outside a leading s x s block are all ones and
// two indices p, q beyond that block (0-based) with w_p = w_q within rtol:
// efficiency of w for A is equivalent to efficiency of w-without-p for
// A-without-p. Returns that reduced pair. Throws PreconditionError.
std::pair<ReciprocalMatrix, PositiveVector> reduce_equal_tail(const ReciprocalMatrix& A,
                                                              const PositiveVector& w, int p, int q,
                                                              const ToleranceConfig& cfg = {});

}  // namespace effhull
