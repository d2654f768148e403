#include "support.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numeric>
#include <stdexcept>

namespace testsupport {

bool rel_close(double a, double b, double tol) {
  double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
  return std::fabs(a - b) <= tol * scale;
}

double random_ratio(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-std::log(9.0), std::log(9.0));
  return std::exp(u(rng));
}

effhull::ReciprocalMatrix random_reciprocal(int n, std::mt19937_64& rng) {
  std::vector<double> upper;
  upper.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) upper.push_back(random_ratio(rng));
  }
  std::size_t k = 0;
  return effhull::ReciprocalMatrix::from_upper(n, [&](int, int) { return upper[k++]; });
}

effhull::PositiveVector random_positive(int n, std::mt19937_64& rng) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (double& x : v) x = random_ratio(rng);
  return effhull::PositiveVector(std::move(v));
}

effhull::WeightVector random_simplex(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(n));
  for (double& x : v) x = u(rng);
  return effhull::WeightVector(std::move(v));
}

effhull::MonomialTransform random_monomial(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return effhull::MonomialTransform(std::move(perm), random_positive(n, rng));
}

std::vector<double> solve_linear(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    }
    if (std::fabs(a[pivot][col]) < 1e-14) throw std::runtime_error("singular system");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t ri = n; ri-- > 0;) {
    double s = b[ri];
    for (std::size_t c = ri + 1; c < n; ++c) s -= a[ri][c] * x[c];
    x[ri] = s / a[ri][ri];
  }
  return x;
}

std::pair<double, std::vector<double>> dominant_eig(const std::vector<std::vector<double>>& m) {
  const std::size_t n = m.size();
  std::vector<double> v(n, 1.0 / static_cast<double>(n)), next(n);
  double lambda = 0.0;
  for (int it = 0; it < 200000; ++it) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += m[i][j] * v[j];
      next[i] = s;
      sum += s;
    }
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= sum;
      change = std::max(change, std::fabs(next[i] - v[i]) / next[i]);
    }
    lambda = sum;
    v.swap(next);
    if (change < 1e-14) break;
  }
  return {lambda, v};
}

std::vector<std::vector<double>> gram_rows(const effhull::ReciprocalMatrix& A) {
  const int n = A.size();
  std::vector<std::vector<double>> g(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += A(i, k) * A(j, k);
      g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
    }
  }
  return g;
}

effhull::ReciprocalMatrix demo_matrix_4x4() {
  return effhull::ReciprocalMatrix::from_upper(4, [](int i, int j) {
    if (i == 0 && j == 1) return 4.0;
    if (i == 0 && j == 2) return 1.0 / 6.0;
    if (i == 1 && j == 2) return 5.0;
    return 1.0;
  });
}

std::string temp_dir() {
  static std::atomic<unsigned> counter{0};
  static const unsigned long long stamp = std::random_device{}();
  auto path = std::filesystem::temp_directory_path() /
              ("effhull-tests-" + std::to_string(stamp) + "-" + std::to_string(counter++));
  std::filesystem::create_directories(path);
  return path.string();
}

}  // namespace testsupport
