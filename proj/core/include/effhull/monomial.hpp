#pragma once

#include <vector>

#include "effhull/matrix.hpp"
#include "effhull/types.hpp"

namespace effhull {

// Monomial matrix S = P * diag(scale): S maps e_j to scale[j] * e_{perm[j]}
// (0-based). Similarity by S preserves reciprocity, and w is efficient for A
// exactly when S*w is efficient for S*A*S^-1, so these transforms carry
// witnesses between a matrix and its canonical form.
class MonomialTransform {
 public:
  MonomialTransform(std::vector<int> perm, PositiveVector scale);

  static MonomialTransform identity(int n);
  static MonomialTransform permutation(std::vector<int> perm);
  static MonomialTransform scaling(PositiveVector scale);

  int size() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const PositiveVector& scale() const { return scale_; }

  MonomialTransform inverse() const;
  // Composition: result(x) = next(this(x)).
  MonomialTransform then(const MonomialTransform& next) const;

 private:
  std::vector<int> perm_;
  PositiveVector scale_;
};

// S * A * S^-1; exact reciprocity is preserved by mirroring the transformed
// upper triangle.
ReciprocalMatrix monomial_similarity(const ReciprocalMatrix& A, const MonomialTransform& T);

// S * v for a plain vector (entries of any sign) and for a positive vector.
std::vector<double> apply_transform(const MonomialTransform& T, const std::vector<double>& v);
PositiveVector apply_transform(const MonomialTransform& T, const PositiveVector& v);

}  // namespace effhull
