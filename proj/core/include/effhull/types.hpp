#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "effhull/errors.hpp"

namespace effhull {

// Vector with strictly positive finite entries. Weight vectors produced by
// matrix generators live here; no normalization is imposed.
class PositiveVector {
 public:
  explicit PositiveVector(std::vector<double> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DimensionTooSmallError("positive vector needs at least one entry");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (!std::isfinite(entries_[i]) || entries_[i] <= 0.0) {
        throw NonPositiveEntryError("entry " + std::to_string(i + 1) +
                                    " of a positive vector is not strictly positive and finite");
      }
    }
  }

  int size() const { return static_cast<int>(entries_.size()); }
  double operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& entries() const { return entries_; }

 private:
  std::vector<double> entries_;
};

// Point on the standard simplex: nonnegative entries renormalized to unit sum
// on construction. Used for convex-combination coefficients.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DimensionTooSmallError("weight vector needs at least one entry");
    double sum = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (!std::isfinite(entries_[i]) || entries_[i] < 0.0) {
        throw NonPositiveEntryError("entry " + std::to_string(i + 1) +
                                    " of a weight vector is negative or not finite");
      }
      sum += entries_[i];
    }
    if (sum <= 0.0) throw NonPositiveEntryError("weight vector must have a positive entry");
    for (double& v : entries_) v /= sum;
  }

  int size() const { return static_cast<int>(entries_.size()); }
  double operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& entries() const { return entries_; }

 private:
  std::vector<double> entries_;
};

}  // namespace effhull
