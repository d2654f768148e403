#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "effhull/matrix.hpp"
#include "effhull/monomial.hpp"
#include "effhull/types.hpp"

// Shared helpers for the unit tests and the acceptance runner. Everything
// here is deliberately independent of the library internals it checks:
// the linear solver and the dominant-eigenpair routine are plain textbook
// implementations used as cross-checking oracles.
namespace testsupport {

// Relative closeness: |a - b| <= tol * max(|a|, |b|, 1).
bool rel_close(double a, double b, double tol);

// Log-uniform ratio in [1/9, 9].
double random_ratio(std::mt19937_64& rng);

// Reciprocal matrix with independent log-uniform upper-triangle entries.
effhull::ReciprocalMatrix random_reciprocal(int n, std::mt19937_64& rng);

// Positive vector with log-uniform entries in [1/9, 9].
effhull::PositiveVector random_positive(int n, std::mt19937_64& rng);

// Uniform draws renormalized to the simplex.
effhull::WeightVector random_simplex(int n, std::mt19937_64& rng);

// Random permutation plus log-uniform positive scaling.
effhull::MonomialTransform random_monomial(int n, std::mt19937_64& rng);

// Gaussian elimination with partial pivoting; throws std::runtime_error on a
// numerically singular system.
std::vector<double> solve_linear(std::vector<std::vector<double>> a, std::vector<double> b);

// Dominant eigenpair of a positive square matrix (plain power iteration with
// unit-sum normalization). Returns (eigenvalue, unit-sum vector).
std::pair<double, std::vector<double>> dominant_eig(const std::vector<std::vector<double>>& m);

// A * A^T as a plain dense matrix.
std::vector<std::vector<double>> gram_rows(const effhull::ReciprocalMatrix& A);

// Fresh unique directory under the system temp path; caller removes it.
std::string temp_dir();

// 4x4 reciprocal matrix with all-ones last row and column whose equal-weight
// combination of the first three columns is inefficient (sink vertex 4):
// upper triangle a12=4, a13=1/6, a23=5, rest ones.
effhull::ReciprocalMatrix demo_matrix_4x4();

}  // namespace testsupport
