#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "effhull/errors.hpp"
#include "effhull/tolerance.hpp"
#include "effhull/types.hpp"

namespace effhull {

// Positive square matrix with unit diagonal and a_ji = 1/a_ij held exactly:
// mutation happens only through upper-triangle writes, and the lower triangle
// is always stored as the literal double 1/a_ij of the stored upper value.
class ReciprocalMatrix {
 public:
  // All-ones matrix of dimension n.
  static ReciprocalMatrix ones(int n) { return ReciprocalMatrix(n); }

  // Build from trusted upper-triangle values: fn(i, j) is called once per
  // 0-based pair i < j and must return a strictly positive finite value.
  template <typename F>
  static ReciprocalMatrix from_upper(int n, F&& fn) {
    ReciprocalMatrix m(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) m.set_pair(i, j, fn(i, j));
    }
    return m;
  }

  int size() const { return n_; }
  double operator()(int i, int j) const { return data_[idx(i, j)]; }

  // j-th column as a positive vector (0-based).
  PositiveVector column(int j) const;

  // Matrix-vector product A * v; v may have zero or negative entries.
  std::vector<double> multiply(const std::vector<double>& v) const;

  // Row-major flat storage, length n*n.
  const std::vector<double>& data() const { return data_; }

 private:
  explicit ReciprocalMatrix(int n);
  // i < j: stores (i,j) = v and (j,i) = 1/v after validating v.
  void set_pair(int i, int j, double v);
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<double> data_;
};

// Validate raw rows as a reciprocal matrix: square, strictly positive, and
// |a_ij * a_ji - 1| <= rtol for every i <= j (diagonal included). The upper
// triangle is trusted; the lower triangle and diagonal are rewritten to exact
// reciprocals and ones.
ReciprocalMatrix validate_reciprocal(const std::vector<std::vector<double>>& raw,
                                     const ToleranceConfig& cfg = {});

// Consistent matrix a_ij = w_i / w_j generated by a positive weight vector.
ReciprocalMatrix consistent_from_weights(const PositiveVector& w);

// True iff a_ij * a_jk stays within rtol of a_ik for every triple (relative).
bool is_consistent(const ReciprocalMatrix& A, const ToleranceConfig& cfg = {});

enum class SubmatrixMode {
  Retain,  // keep exactly the listed indices
  Delete,  // drop the listed indices, keep the rest
};

// Principal submatrix on the given 0-based indices (sorted + deduplicated
// internally). Throws IndexOutOfRangeError / EmptyResultError.
ReciprocalMatrix principal_submatrix(const ReciprocalMatrix& A, const std::vector<int>& indices,
                                     SubmatrixMode mode);

}  // namespace effhull
