#include "effhull/monomial.hpp"

#include <string>
#include <utility>

namespace effhull {

namespace {

void check_permutation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw PreconditionError("perm is not a permutation of 0.." + std::to_string(n - 1));
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

}  // namespace

MonomialTransform::MonomialTransform(std::vector<int> perm, PositiveVector scale)
    : perm_(std::move(perm)), scale_(std::move(scale)) {
  if (static_cast<int>(perm_.size()) != scale_.size()) {
    throw DimensionMismatchError("perm and scale sizes differ");
  }
  check_permutation(perm_);
}

MonomialTransform MonomialTransform::identity(int n) {
  if (n < 1) throw DimensionTooSmallError("transform dimension must be at least 1");
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  return MonomialTransform(std::move(perm), PositiveVector(std::vector<double>(static_cast<std::size_t>(n), 1.0)));
}

MonomialTransform MonomialTransform::permutation(std::vector<int> perm) {
  const int n = static_cast<int>(perm.size());
  if (n < 1) throw DimensionTooSmallError("transform dimension must be at least 1");
  return MonomialTransform(std::move(perm), PositiveVector(std::vector<double>(static_cast<std::size_t>(n), 1.0)));
}

MonomialTransform MonomialTransform::scaling(PositiveVector scale) {
  const int n = scale.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  return MonomialTransform(std::move(perm), std::move(scale));
}

MonomialTransform MonomialTransform::inverse() const {
  const int n = size();
  std::vector<int> inv(static_cast<std::size_t>(n));
  std::vector<double> sc(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) inv[static_cast<std::size_t>(perm_[static_cast<std::size_t>(j)])] = j;
  // S e_j = d_j e_{perm(j)}  =>  S^-1 e_i = (1 / d_{perm^-1(i)}) e_{perm^-1(i)}.
  for (int i = 0; i < n; ++i) sc[static_cast<std::size_t>(i)] = 1.0 / scale_[inv[static_cast<std::size_t>(i)]];
  return MonomialTransform(std::move(inv), PositiveVector(std::move(sc)));
}

MonomialTransform MonomialTransform::then(const MonomialTransform& next) const {
  if (next.size() != size()) throw DimensionMismatchError("composed transforms must share a dimension");
  const int n = size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::vector<double> sc(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    int mid = perm_[static_cast<std::size_t>(j)];
    perm[static_cast<std::size_t>(j)] = next.perm_[static_cast<std::size_t>(mid)];
    sc[static_cast<std::size_t>(j)] = scale_[j] * next.scale_[mid];
  }
  return MonomialTransform(std::move(perm), PositiveVector(std::move(sc)));
}

ReciprocalMatrix monomial_similarity(const ReciprocalMatrix& A, const MonomialTransform& T) {
  const int n = A.size();
  if (T.size() != n) throw DimensionMismatchError("transform dimension does not match matrix");
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) inv[static_cast<std::size_t>(T.perm()[static_cast<std::size_t>(j)])] = j;
  // (S A S^-1)_{perm(i), perm(j)} = (d_i / d_j) a_ij; build the upper triangle
  // in target coordinates so reciprocity stays exact.
  return ReciprocalMatrix::from_upper(n, [&](int p, int q) {
    int i = inv[static_cast<std::size_t>(p)];
    int j = inv[static_cast<std::size_t>(q)];
    return T.scale()[i] / T.scale()[j] * A(i, j);
  });
}

std::vector<double> apply_transform(const MonomialTransform& T, const std::vector<double>& v) {
  const int n = T.size();
  if (static_cast<int>(v.size()) != n) throw DimensionMismatchError("transform dimension does not match vector");
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    out[static_cast<std::size_t>(T.perm()[static_cast<std::size_t>(j)])] =
        T.scale()[j] * v[static_cast<std::size_t>(j)];
  }
  return out;
}

PositiveVector apply_transform(const MonomialTransform& T, const PositiveVector& v) {
  return PositiveVector(apply_transform(T, v.entries()));
}

}  // namespace effhull
