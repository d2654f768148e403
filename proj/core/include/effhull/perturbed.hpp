#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "effhull/efficiency.hpp"
#include "effhull/matrix.hpp"
#include "effhull/monomial.hpp"
#include "effhull/tolerance.hpp"
#include "effhull/types.hpp"

namespace effhull {

// Structural family of a matrix after rebasing by its best column and
// permuting the perturbed block to the front.
enum class BlockKind {
  Consistent,            // no perturbed pair survives rebasing
  Simple,                // one perturbed pair: all ones except a_12 = x
  ColumnPerturbed,       // perturbed pairs share one vertex: deviations live in row/col 1
  ThreeBlock,            // triangle pattern: deviations at (1,2), (1,3), (2,3)
  FourBlockTriangular,   // path/matching pattern: deviations at (1,3), (1,4), (2,4)
  GeneralBlock,          // small perturbed block of no recognized shape
  Unstructured,          // reserved: no rebasing shrinks the block (unreachable, see docs)
};

const char* to_string(BlockKind kind);

// Canonical three-block parameters a_12, a_13, a_23 together with which of
// the four recognized sign conditions (1..4) the triple satisfies:
//  1: a13 >= 1, a12 > 1, a23 > 1        3: a23 >= a13 >= a12 = 1
//  2: a12 >= a13 >= a23 = 1             4: a13 > 1, a12 < 1, a23 < 1
struct ThreeBlockParams {
  double a12 = 1.0;
  double a13 = 1.0;
  double a23 = 1.0;
  int cond_case = 0;
};

// Canonical triangular parameters: ones everywhere except (1,3), (1,4), (2,4),
// normalized so a14 >= 1.
struct TriangularParams {
  double a13 = 1.0;
  double a14 = 1.0;
  double a24 = 1.0;
};

struct BlockClassification {
  BlockKind kind;
  // 0-based input-labeling indices of the perturbed block (ascending).
  std::vector<int> block_indices;
  // Number of above-diagonal entries of the canonical form that differ from 1.
  int perturbed_pairs = 0;
  // Input -> canonical: monomial_similarity(input, transform) == canonical.
  MonomialTransform transform;
  ReciprocalMatrix canonical;
  // Family parameters; only the member matching `kind` is meaningful.
  double simple_x = 1.0;
  ThreeBlockParams three;
  TriangularParams triangular;

  BlockClassification(BlockKind k, std::vector<int> idx, int pairs, MonomialTransform t,
                      ReciprocalMatrix c)
      : kind(k),
        block_indices(std::move(idx)),
        perturbed_pairs(pairs),
        transform(std::move(t)),
        canonical(std::move(c)) {}

  int block_size() const { return static_cast<int>(block_indices.size()); }
};

// Rebase by each column (divide out a consistent matrix built from that
// column), keep the column minimizing the set of surviving perturbed pairs,
// then classify the pair pattern and permute the block to the front.
BlockClassification detect_block_structure(const ReciprocalMatrix& A, const ToleranceConfig& cfg = {});

// Same as detect_block_structure but requires at most three perturbed pairs;
// throws NotTriplePerturbedError otherwise.
BlockClassification classify_triple(const ReciprocalMatrix& A, const ToleranceConfig& cfg = {});

struct ThreeBlockCanonical {
  double a12 = 1.0;
  double a13 = 1.0;
  double a23 = 1.0;
  int cond_case = 0;
  std::vector<int> perm;  // relabeling applied (0-based, as MonomialTransform::permutation input)
};

// Permute a 3x3 reciprocal matrix until its parameters satisfy one of the
// four recognized conditions; candidates tried in lexicographic order,
// conditions in order 1..4. Throws CanonicalizationError if none fits.
ThreeBlockCanonical canonicalize_3block(const ReciprocalMatrix& block3, const ToleranceConfig& cfg = {});

struct TriangularCanonical {
  double a13 = 1.0;
  double a14 = 1.0;
  double a24 = 1.0;
  std::vector<int> perm;
};

// Normalize a 4x4 matrix that is ones except at (1,3), (1,4), (2,4) so that
// a14 >= 1, using the order-reversing relabeling when needed.
TriangularCanonical canonicalize_4block_triangular(const ReciprocalMatrix& block4,
                                                   const ToleranceConfig& cfg = {});

// Three-block family criterion: with parameters in a recognized condition,
// every convex combination of columns is efficient iff a13 <= a12 * a23
// (boundary counts as contained). Throws ConditionError outside conditions 1-4.
bool hull_in_efficient_3block(double a12, double a13, double a23, const ToleranceConfig& cfg = {});

// Triangular family criterion (requires a14 >= 1): contained unless
// 1 < a24 < a14 < a13 or a24 < 1 < a13 < a14 holds strictly.
bool hull_in_efficient_triangular(double a13, double a14, double a24, const ToleranceConfig& cfg = {});

// For A whose last row and column are all ones: w = [B*y ; 1] (B the leading
// block, y on the simplex with >= 3 positive entries) is inefficient iff
// B*y > e or B*y < e strictly. Returns that w, or nullopt.
std::optional<PositiveVector> rowsum_witness(const ReciprocalMatrix& A, const WeightVector& y,
                                             const ToleranceConfig& cfg = {});

// Inefficient convex combination produced by the constructive search.
struct WitnessResult {
  std::vector<double> coefficients;  // u >= 0 with w = A * u
  PositiveVector w;
  double epsilon;  // accepted value of the search parameter
};

// Canonical three-block witness (4x4): parameters must violate the
// containment criterion. Throws HullContainedError / SearchExhaustedError.
WitnessResult witness_3block(double a12, double a13, double a23, const ToleranceConfig& cfg = {});

// Canonical triangular witness (5x5): parameters must satisfy one of the two
// strict exclusion chains. Throws HullContainedError / SearchExhaustedError.
WitnessResult witness_triangular(double a13, double a14, double a24, const ToleranceConfig& cfg = {});

enum class Containment { Yes, No, Unknown };

const char* to_string(Containment c);

struct HullVerdict {
  Containment contained;
  std::string reason;
  BlockClassification classification;
  // Present iff contained == No; expressed in the input labeling and
  // re-certified against the input matrix.
  std::optional<WitnessResult> witness;

  HullVerdict(Containment c, std::string r, BlockClassification cls,
              std::optional<WitnessResult> w = std::nullopt)
      : contained(c), reason(std::move(r)), classification(std::move(cls)), witness(std::move(w)) {}
};

// End-to-end decision: classify, apply the family criterion, and on the
// negative side lift a certified witness back to the input labeling.
HullVerdict hull_subset_efficient(const ReciprocalMatrix& A, const ToleranceConfig& cfg = {});

// For the 3x3 matrix that is ones except a_13 = x (x > 1, within tolerance)
// and an efficient w: coefficients y >= 0 on the simplex with A * y
// proportional to w. Throws NotEfficientError / DegenerateError.
std::vector<double> decompose_3x3(const ReciprocalMatrix& A, const PositiveVector& w,
                                  const ToleranceConfig& cfg = {});

// Canonical family builders (all ones except the stated entries).
ReciprocalMatrix three_block_matrix(int n, double a12, double a13, double a23);      // n >= 3
ReciprocalMatrix triangular_matrix(int n, double a13, double a14, double a24);        // n >= 4
ReciprocalMatrix simple_perturbed_matrix(int n, double x);                            // n >= 2

}  // namespace effhull
