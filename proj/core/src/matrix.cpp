#include "effhull/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace effhull {

ReciprocalMatrix::ReciprocalMatrix(int n) : n_(n) {
  if (n < 1) throw DimensionTooSmallError("matrix dimension must be at least 1");
  data_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 1.0);
}

void ReciprocalMatrix::set_pair(int i, int j, double v) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw NonPositiveEntryError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") must be strictly positive and finite");
  }
  data_[idx(i, j)] = v;
  data_[idx(j, i)] = 1.0 / v;
}

PositiveVector ReciprocalMatrix::column(int j) const {
  if (j < 0 || j >= n_) throw IndexOutOfRangeError("column index " + std::to_string(j + 1) + " out of range");
  std::vector<double> col(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) col[static_cast<std::size_t>(i)] = (*this)(i, j);
  return PositiveVector(std::move(col));
}

std::vector<double> ReciprocalMatrix::multiply(const std::vector<double>& v) const {
  if (static_cast<int>(v.size()) != n_) {
    throw DimensionMismatchError("matrix is " + std::to_string(n_) + "-dimensional but vector has " +
                                 std::to_string(v.size()) + " entries");
  }
  std::vector<double> out(static_cast<std::size_t>(n_), 0.0);
  for (int i = 0; i < n_; ++i) {
    double acc = 0.0;
    const double* row = data_.data() + idx(i, 0);
    for (int j = 0; j < n_; ++j) acc += row[j] * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

ReciprocalMatrix validate_reciprocal(const std::vector<std::vector<double>>& raw,
                                     const ToleranceConfig& cfg) {
  cfg.validate();
  const int n = static_cast<int>(raw.size());
  if (n < 1) throw NonSquareError("matrix must have at least one row");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(raw[static_cast<std::size_t>(i)].size()) != n) {
      throw NonSquareError("row " + std::to_string(i + 1) + " has " +
                           std::to_string(raw[static_cast<std::size_t>(i)].size()) + " entries, expected " +
                           std::to_string(n));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double v = raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!std::isfinite(v) || v <= 0.0) {
        throw NonPositiveEntryError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    ") must be strictly positive and finite");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double prod = raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                    raw[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      double residual = std::abs(prod - 1.0);
      if (residual > cfg.rtol) {
        // Report the lower-triangle position as the offender; the upper
        // triangle is the trusted side.
        throw NotReciprocalError(j + 1, i + 1, residual);
      }
    }
  }
  return ReciprocalMatrix::from_upper(
      n, [&](int i, int j) { return raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; });
}

ReciprocalMatrix consistent_from_weights(const PositiveVector& w) {
  return ReciprocalMatrix::from_upper(w.size(), [&](int i, int j) { return w[i] / w[j]; });
}

bool is_consistent(const ReciprocalMatrix& A, const ToleranceConfig& cfg) {
  cfg.validate();
  const int n = A.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        // Checking ordered triples i<j<k suffices: the other orientations are
        // reciprocal images of the same product.
        if (std::abs(A(i, j) * A(j, k) / A(i, k) - 1.0) > cfg.rtol) return false;
      }
    }
  }
  return true;
}

ReciprocalMatrix principal_submatrix(const ReciprocalMatrix& A, const std::vector<int>& indices,
                                     SubmatrixMode mode) {
  const int n = A.size();
  std::vector<int> sel = indices;
  std::sort(sel.begin(), sel.end());
  sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
  for (int i : sel) {
    if (i < 0 || i >= n) throw IndexOutOfRangeError("index " + std::to_string(i + 1) + " out of range");
  }
  std::vector<int> keep;
  if (mode == SubmatrixMode::Retain) {
    keep = sel;
  } else {
    std::size_t s = 0;
    for (int i = 0; i < n; ++i) {
      if (s < sel.size() && sel[s] == i) {
        ++s;
      } else {
        keep.push_back(i);
      }
    }
  }
  if (keep.empty()) throw EmptyResultError("selection leaves no rows");
  return ReciprocalMatrix::from_upper(static_cast<int>(keep.size()), [&](int i, int j) {
    return A(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
  });
}

}  // namespace effhull
