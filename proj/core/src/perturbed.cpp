#include "effhull/perturbed.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <utility>

namespace effhull {

const char* to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::Consistent: return "consistent";
    case BlockKind::Simple: return "simple";
    case BlockKind::ColumnPerturbed: return "column-perturbed";
    case BlockKind::ThreeBlock: return "three-block";
    case BlockKind::FourBlockTriangular: return "four-block-triangular";
    case BlockKind::GeneralBlock: return "general-block";
    case BlockKind::Unstructured: return "unstructured";
  }
  return "unknown";
}

const char* to_string(Containment c) {
  switch (c) {
    case Containment::Yes: return "yes";
    case Containment::No: return "no";
    case Containment::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

bool approx_one(double v, double tol) { return std::abs(v - 1.0) <= tol; }
bool leq_tol(double x, double y, double tol) { return x <= y * (1.0 + tol); }
bool lt_strict(double x, double y, double tol) { return x < y * (1.0 - tol); }

// Which of the four recognized parameter conditions (a12, a13, a23) satisfies;
// 0 when none does.
int cond_case_of(double a12, double a13, double a23, double tol) {
  auto eq1 = [&](double v) { return approx_one(v, tol); };
  auto gt1 = [&](double v) { return v > 1.0 && !eq1(v); };
  auto lt1 = [&](double v) { return v < 1.0 && !eq1(v); };
  auto geq = [&](double x, double y) { return x >= y * (1.0 - tol); };
  if (geq(a13, 1.0) && gt1(a12) && gt1(a23)) return 1;
  if (eq1(a23) && geq(a13, 1.0) && geq(a12, a13)) return 2;
  if (eq1(a12) && geq(a13, 1.0) && geq(a23, a13)) return 3;
  if (gt1(a13) && lt1(a12) && lt1(a23)) return 4;
  return 0;
}

// Strict exclusion chain satisfied by triangular parameters: 1 for
// 1 < a24 < a14 < a13, 2 for a24 < 1 < a13 < a14, 0 for neither.
int triangular_violation_case(double a13, double a14, double a24, double tol) {
  if (lt_strict(1.0, a24, tol) && lt_strict(a24, a14, tol) && lt_strict(a14, a13, tol)) return 1;
  if (lt_strict(a24, 1.0, tol) && lt_strict(1.0, a13, tol) && lt_strict(a13, a14, tol)) return 2;
  return 0;
}

// Full n-permutation placing `order` first and the remaining indices after,
// ascending; pi[v] = new position of v.
std::vector<int> full_perm(int n, const std::vector<int>& order) {
  std::vector<int> pi(static_cast<std::size_t>(n), -1);
  int pos = 0;
  for (int v : order) pi[static_cast<std::size_t>(v)] = pos++;
  for (int i = 0; i < n; ++i) {
    if (pi[static_cast<std::size_t>(i)] == -1) pi[static_cast<std::size_t>(i)] = pos++;
  }
  return pi;
}

struct Rebased {
  int column = 0;
  std::vector<std::pair<int, int>> edges;  // marked above-diagonal pairs, (i, k) with i < k
  std::vector<int> vertices;               // sorted union of edge endpoints
  MonomialTransform rebase;
  ReciprocalMatrix matrix;
};

Rebased best_rebasing(const ReciprocalMatrix& A, const ToleranceConfig& cfg) {
  const int n = A.size();
  std::optional<Rebased> best;
  for (int j = 0; j < n; ++j) {
    std::vector<double> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = 1.0 / A(i, j);
    MonomialTransform rebase = MonomialTransform::scaling(PositiveVector(std::move(d)));
    ReciprocalMatrix c0 = monomial_similarity(A, rebase);
    std::vector<std::pair<int, int>> edges;
    std::vector<char> mark(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      for (int k = i + 1; k < n; ++k) {
        if (!approx_one(c0(i, k), cfg.rtol)) {
          edges.emplace_back(i, k);
          mark[static_cast<std::size_t>(i)] = mark[static_cast<std::size_t>(k)] = 1;
        }
      }
    }
    std::vector<int> verts;
    for (int i = 0; i < n; ++i) {
      if (mark[static_cast<std::size_t>(i)]) verts.push_back(i);
    }
    bool better = !best || verts.size() < best->vertices.size() ||
                  (verts.size() == best->vertices.size() && edges.size() < best->edges.size());
    if (better) {
      best = Rebased{j, std::move(edges), std::move(verts), std::move(rebase), std::move(c0)};
    }
  }
  return std::move(*best);
}

// Vertex contained in every edge, or -1. With >= 2 edges this identifies the
// star pattern (deviations confined to one row and column).
int star_center(const std::vector<std::pair<int, int>>& edges, const std::vector<int>& verts) {
  for (int cand : verts) {
    bool all = true;
    for (const auto& e : edges) {
      if (e.first != cand && e.second != cand) {
        all = false;
        break;
      }
    }
    if (all) return cand;
  }
  return -1;
}

BlockClassification finish(const ReciprocalMatrix& A, const Rebased& base, BlockKind kind,
                           const std::vector<int>& order) {
  MonomialTransform transform = base.rebase.then(MonomialTransform::permutation(full_perm(A.size(), order)));
  ReciprocalMatrix canonical = monomial_similarity(A, transform);
  return BlockClassification(kind, base.vertices, static_cast<int>(base.edges.size()),
                             std::move(transform), std::move(canonical));
}

}  // namespace

ThreeBlockCanonical canonicalize_3block(const ReciprocalMatrix& block3, const ToleranceConfig& cfg) {
  cfg.validate();
  if (block3.size() != 3) throw DimensionMismatchError("canonicalize_3block needs a 3x3 block");
  std::array<int, 3> order = {0, 1, 2};
  // std::next_permutation enumerates orders lexicographically from (0,1,2).
  do {
    double p12 = block3(order[0], order[1]);
    double p13 = block3(order[0], order[2]);
    double p23 = block3(order[1], order[2]);
    int c = cond_case_of(p12, p13, p23, cfg.rtol);
    if (c != 0) {
      std::vector<int> perm(3);
      for (int s = 0; s < 3; ++s) perm[static_cast<std::size_t>(order[static_cast<std::size_t>(s)])] = s;
      return ThreeBlockCanonical{p12, p13, p23, c, std::move(perm)};
    }
  } while (std::next_permutation(order.begin(), order.end()));
  throw CanonicalizationError("no relabeling of the 3x3 block fits a recognized condition");
}

TriangularCanonical canonicalize_4block_triangular(const ReciprocalMatrix& block4,
                                                   const ToleranceConfig& cfg) {
  cfg.validate();
  if (block4.size() != 4) throw DimensionMismatchError("canonicalize_4block_triangular needs a 4x4 block");
  if (!approx_one(block4(0, 1), cfg.rtol) || !approx_one(block4(1, 2), cfg.rtol) ||
      !approx_one(block4(2, 3), cfg.rtol)) {
    throw CanonicalizationError("block is not ones at (1,2), (2,3), (3,4)");
  }
  double a13 = block4(0, 2), a14 = block4(0, 3), a24 = block4(1, 3);
  if (a14 >= 1.0 - cfg.rtol) {
    return TriangularCanonical{a13, a14, a24, {0, 1, 2, 3}};
  }
  // Reversal 1<->4, 2<->3 keeps the sparsity pattern and maps the parameters
  // to (1/a24, 1/a14, 1/a13), making a14 >= 1.
  return TriangularCanonical{1.0 / a24, 1.0 / a14, 1.0 / a13, {3, 2, 1, 0}};
}

BlockClassification detect_block_structure(const ReciprocalMatrix& A, const ToleranceConfig& cfg) {
  cfg.validate();
  Rebased base = best_rebasing(A, cfg);
  const auto& E = base.edges;
  const auto& V = base.vertices;

  if (E.empty()) {
    return BlockClassification(BlockKind::Consistent, {}, 0, base.rebase, base.matrix);
  }

  if (E.size() == 1) {
    int u = E[0].first, v = E[0].second;
    std::vector<int> order = base.matrix(u, v) >= 1.0 ? std::vector<int>{u, v} : std::vector<int>{v, u};
    BlockClassification cls = finish(A, base, BlockKind::Simple, order);
    cls.simple_x = cls.canonical(0, 1);
    return cls;
  }

  if (int center = star_center(E, V); center >= 0) {
    std::vector<int> order{center};
    for (int v : V) {
      if (v != center) order.push_back(v);
    }
    return finish(A, base, BlockKind::ColumnPerturbed, order);
  }

  if (V.size() == 3 && E.size() == 3) {
    ReciprocalMatrix b3 = principal_submatrix(base.matrix, V, SubmatrixMode::Retain);
    ThreeBlockCanonical c3 = canonicalize_3block(b3, cfg);
    std::vector<int> order(3);
    for (int t = 0; t < 3; ++t) {
      order[static_cast<std::size_t>(c3.perm[static_cast<std::size_t>(t)])] = V[static_cast<std::size_t>(t)];
    }
    BlockClassification cls = finish(A, base, BlockKind::ThreeBlock, order);
    cls.three = ThreeBlockParams{cls.canonical(0, 1), cls.canonical(0, 2), cls.canonical(1, 2), c3.cond_case};
    return cls;
  }

  if (V.size() == 4 && (E.size() == 2 || E.size() == 3)) {
    // Path (3 edges) or perfect matching (2 edges); star was excluded above.
    std::vector<int> pre(4, -1);
    if (E.size() == 3) {
      auto degree = [&](int v) {
        int d = 0;
        for (const auto& e : E) d += (e.first == v || e.second == v) ? 1 : 0;
        return d;
      };
      auto neighbor_not = [&](int v, int banned) {
        for (const auto& e : E) {
          if (e.first == v && e.second != banned) return e.second;
          if (e.second == v && e.first != banned) return e.first;
        }
        return -1;
      };
      int p1 = -1;
      for (int v : V) {
        if (degree(v) == 1) {
          p1 = v;
          break;  // V ascending: smallest endpoint starts the walk
        }
      }
      int p2 = neighbor_not(p1, -1);
      int p3 = neighbor_not(p2, p1);
      int p4 = neighbor_not(p3, p2);
      // Order mapping the path edges onto positions (1,3), (1,4), (2,4).
      pre = {p2, p4, p1, p3};
    } else {
      int x1 = E[0].first, y1 = E[0].second, x2 = E[1].first, y2 = E[1].second;
      pre = {x1, x2, y1, y2};
    }
    ReciprocalMatrix b4 = ReciprocalMatrix::from_upper(4, [&](int s, int t) {
      return base.matrix(pre[static_cast<std::size_t>(s)], pre[static_cast<std::size_t>(t)]);
    });
    TriangularCanonical c4 = canonicalize_4block_triangular(b4, cfg);
    std::vector<int> order(4);
    for (int t = 0; t < 4; ++t) {
      order[static_cast<std::size_t>(c4.perm[static_cast<std::size_t>(t)])] = pre[static_cast<std::size_t>(t)];
    }
    BlockClassification cls = finish(A, base, BlockKind::FourBlockTriangular, order);
    cls.triangular = TriangularParams{cls.canonical(0, 2), cls.canonical(0, 3), cls.canonical(1, 3)};
    return cls;
  }

  return finish(A, base, BlockKind::GeneralBlock, V);
}

BlockClassification classify_triple(const ReciprocalMatrix& A, const ToleranceConfig& cfg) {
  BlockClassification cls = detect_block_structure(A, cfg);
  if (cls.perturbed_pairs > 3) {
    throw NotTriplePerturbedError("matrix keeps " + std::to_string(cls.perturbed_pairs) +
                                  " perturbed pairs under every rebasing; at most 3 allowed");
  }
  if (cls.block_size() > 4) {
    throw NotTriplePerturbedError("perturbed pairs do not fit inside a 4x4 principal block");
  }
  return cls;
}

bool hull_in_efficient_3block(double a12, double a13, double a23, const ToleranceConfig& cfg) {
  cfg.validate();
  if (cond_case_of(a12, a13, a23, cfg.rtol) == 0) {
    throw ConditionError("parameters satisfy none of the recognized three-block conditions");
  }
  return leq_tol(a13, a12 * a23, cfg.rtol);
}

bool hull_in_efficient_triangular(double a13, double a14, double a24, const ToleranceConfig& cfg) {
  cfg.validate();
  if (a14 < 1.0 - cfg.rtol) throw PreconditionError("triangular criterion requires a14 >= 1");
  return triangular_violation_case(a13, a14, a24, cfg.edge_rtol) == 0;
}

std::optional<PositiveVector> rowsum_witness(const ReciprocalMatrix& A, const WeightVector& y,
                                             const ToleranceConfig& cfg) {
  cfg.validate();
  const int n = A.size();
  if (y.size() != n - 1) throw DimensionMismatchError("y must cover all but the last index");
  for (int j = 0; j < n; ++j) {
    if (!approx_one(A(n - 1, j), cfg.rtol)) {
      throw FormError("last row and column must be all ones");
    }
  }
  int nonzero = 0;
  for (int i = 0; i < n - 1; ++i) {
    if (y[i] > 0.0) ++nonzero;
  }
  if (nonzero < 3) return std::nullopt;
  std::vector<double> z(static_cast<std::size_t>(n - 1), 0.0);
  for (int i = 0; i < n - 1; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n - 1; ++j) acc += A(i, j) * y[j];
    z[static_cast<std::size_t>(i)] = acc;
  }
  bool all_above = true, all_below = true;
  for (double v : z) {
    all_above = all_above && lt_strict(1.0, v, cfg.edge_rtol);
    all_below = all_below && lt_strict(v, 1.0, cfg.edge_rtol);
  }
  if (!all_above && !all_below) return std::nullopt;
  z.push_back(1.0);
  return PositiveVector(std::move(z));
}

namespace {

// Coefficient formulas behind the three-block witness; case_id per cond_case_of.
std::vector<double> three_block_coeffs(int case_id, double a12, double a13, double a23, double eps) {
  if (case_id == 1) {
    double u1 = a12 * (a23 - 1.0) / (a13 - a23 * a12) + eps;
    double u3 = (a12 - 1.0) / (a13 - a12 * a23) + eps * (a12 - 1.0) / (2.0 * a12 * (a23 - 1.0));
    return {u1, 1.0, u3, 1.0};
  }
  double u1 = a13 * (a23 - 1.0) / (a23 * (a12 - 1.0)) - eps;
  double u2 = (a13 - 1.0) / (1.0 - a12) - eps * a23 * (a13 - 1.0) / (2.0 * a13 * (1.0 - a23));
  return {u1, u2, 1.0, 1.0};
}

// The two perturbations are coupled: the first must stay strictly below a
// parameter-dependent multiple of the second or one dominance margin closes
// to exactly zero (e.g. (5,4,2) in case 1). Scale eps1 by half that ratio.
std::vector<double> triangular_coeffs(int case_id, double a13, double a14, double a24, double eps) {
  if (case_id == 1) {
    double ratio = a24 * (a13 - a14) / (a14 - a24);
    double eps1 = eps * std::min(1.0, 0.5 * ratio);
    double u2 = a24 * (a13 - a14) / (a13 * a14 * (a24 - 1.0)) + eps1;
    double u3 = (a14 - a24) / (a13 * a14 * (a24 - 1.0)) + eps;
    return {1.0, u2, u3, 1.0, 0.0};
  }
  double ratio = a13 * a14 * (1.0 - a24) / (a24 * (a14 - a13));
  double eps1 = eps * std::min(1.0, 0.5 * ratio);
  double u1 = a13 * (1.0 - a24) / (a13 - 1.0) + eps1;
  double u2 = a24 * (a14 - a13) / (a14 * (a13 - 1.0)) + eps;
  return {u1, u2, 1.0, 1.0, 0.0};
}

// Shrink eps until the coefficients are nonnegative and `attempt` certifies a
// witness; attempt returns nullopt to reject a candidate.
WitnessResult eps_search(const ToleranceConfig& cfg,
                         const std::function<std::vector<double>(double)>& coeffs,
                         const std::function<std::optional<WitnessResult>(std::vector<double>, double)>& attempt) {
  double eps = cfg.eps0;
  for (int step = 0; step < cfg.eps_max_steps; ++step, eps *= cfg.eps_shrink) {
    std::vector<double> u = coeffs(eps);
    bool ok = true;
    for (double v : u) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (auto r = attempt(std::move(u), eps)) return std::move(*r);
  }
  throw SearchExhaustedError("witness search exhausted its epsilon schedule");
}

}  // namespace

WitnessResult witness_3block(double a12, double a13, double a23, const ToleranceConfig& cfg) {
  cfg.validate();
  int c = cond_case_of(a12, a13, a23, cfg.rtol);
  if (c == 0) throw ConditionError("parameters satisfy none of the recognized three-block conditions");
  if (leq_tol(a13, a12 * a23, cfg.rtol)) {
    throw HullContainedError("a13 <= a12*a23: every convex combination is efficient");
  }
  if (c != 1 && c != 4) {
    throw ConditionError("parameters sit on a boundary with no witness construction");
  }
  ReciprocalMatrix A4 = three_block_matrix(4, a12, a13, a23);
  return eps_search(
      cfg, [&](double eps) { return three_block_coeffs(c, a12, a13, a23, eps); },
      [&](std::vector<double> u, double eps) -> std::optional<WitnessResult> {
        PositiveVector w(A4.multiply(u));
        if (efficient_verdict(A4, w, cfg)) return std::nullopt;
        return WitnessResult{std::move(u), std::move(w), eps};
      });
}

WitnessResult witness_triangular(double a13, double a14, double a24, const ToleranceConfig& cfg) {
  cfg.validate();
  if (a14 < 1.0 - cfg.rtol) throw PreconditionError("triangular witness requires a14 >= 1");
  int c = triangular_violation_case(a13, a14, a24, cfg.edge_rtol);
  if (c == 0) {
    throw HullContainedError("no strict exclusion chain holds: every convex combination is efficient");
  }
  ReciprocalMatrix A5 = triangular_matrix(5, a13, a14, a24);
  return eps_search(
      cfg, [&](double eps) { return triangular_coeffs(c, a13, a14, a24, eps); },
      [&](std::vector<double> u, double eps) -> std::optional<WitnessResult> {
        PositiveVector w(A5.multiply(u));
        if (efficient_verdict(A5, w, cfg)) return std::nullopt;
        return WitnessResult{std::move(u), std::move(w), eps};
      });
}

namespace {

// Lift a canonical-block witness construction to the input labeling: embed
// the block coefficients with a zero tail, pull back through the inverse
// transform, and certify against both the canonical and the input matrix.
WitnessResult lifted_witness(const ReciprocalMatrix& A, const BlockClassification& cls, int family_case,
                             const ToleranceConfig& cfg) {
  const int n = A.size();
  MonomialTransform inv = cls.transform.inverse();
  auto coeffs = [&](double eps) {
    std::vector<double> small =
        cls.kind == BlockKind::ThreeBlock
            ? three_block_coeffs(family_case, cls.three.a12, cls.three.a13, cls.three.a23, eps)
            : triangular_coeffs(family_case, cls.triangular.a13, cls.triangular.a14, cls.triangular.a24, eps);
    small.resize(static_cast<std::size_t>(n), 0.0);
    return small;
  };
  auto attempt = [&](std::vector<double> u_canonical, double eps) -> std::optional<WitnessResult> {
    PositiveVector w_canonical(cls.canonical.multiply(u_canonical));
    if (efficient_verdict(cls.canonical, w_canonical, cfg)) return std::nullopt;
    std::vector<double> u_input = apply_transform(inv, u_canonical);
    double sum = 0.0;
    for (double v : u_input) sum += v;
    for (double& v : u_input) v /= sum;
    PositiveVector w_input(A.multiply(u_input));
    if (efficient_verdict(A, w_input, cfg)) return std::nullopt;
    return WitnessResult{std::move(u_input), std::move(w_input), eps};
  };
  return eps_search(cfg, coeffs, attempt);
}

}  // namespace

HullVerdict hull_subset_efficient(const ReciprocalMatrix& A, const ToleranceConfig& cfg) {
  BlockClassification cls = detect_block_structure(A, cfg);
  switch (cls.kind) {
    case BlockKind::Consistent:
      return HullVerdict(Containment::Yes, "consistent matrix: the hull is the ray of its weight vector",
                         std::move(cls));
    case BlockKind::Simple:
      return HullVerdict(Containment::Yes, "single perturbed pair: the hull is always efficient",
                         std::move(cls));
    case BlockKind::ColumnPerturbed:
      return HullVerdict(Containment::Yes,
                         "perturbations confined to one row and column: the hull is always efficient",
                         std::move(cls));
    case BlockKind::ThreeBlock: {
      const ThreeBlockParams p = cls.three;
      if (leq_tol(p.a13, p.a12 * p.a23, cfg.rtol)) {
        return HullVerdict(Containment::Yes, "three-block criterion holds: a13 <= a12*a23", std::move(cls));
      }
      int c = p.cond_case;
      if (c != 1 && c != 4) {
        return HullVerdict(Containment::Unknown,
                           "three-block parameters sit on a tolerance boundary; no verdict", std::move(cls));
      }
      try {
        WitnessResult w = lifted_witness(A, cls, c, cfg);
        return HullVerdict(Containment::No, "three-block criterion violated: a13 > a12*a23", std::move(cls),
                           std::move(w));
      } catch (const Error&) {
        return HullVerdict(Containment::Unknown,
                           "three-block criterion violated but no witness certified within tolerance",
                           std::move(cls));
      }
    }
    case BlockKind::FourBlockTriangular: {
      const TriangularParams p = cls.triangular;
      int c = triangular_violation_case(p.a13, p.a14, p.a24, cfg.edge_rtol);
      if (c == 0) {
        return HullVerdict(Containment::Yes, "triangular-block criterion holds: no strict exclusion chain",
                           std::move(cls));
      }
      std::string reason = c == 1 ? "triangular-block exclusion chain holds: 1 < a24 < a14 < a13"
                                  : "triangular-block exclusion chain holds: a24 < 1 < a13 < a14";
      try {
        WitnessResult w = lifted_witness(A, cls, c, cfg);
        return HullVerdict(Containment::No, std::move(reason), std::move(cls), std::move(w));
      } catch (const Error&) {
        return HullVerdict(Containment::Unknown,
                           "triangular criterion violated but no witness certified within tolerance",
                           std::move(cls));
      }
    }
    case BlockKind::GeneralBlock:
    case BlockKind::Unstructured:
      break;
  }
  return HullVerdict(Containment::Unknown, "outside classified families", std::move(cls));
}

std::vector<double> decompose_3x3(const ReciprocalMatrix& A, const PositiveVector& w,
                                  const ToleranceConfig& cfg) {
  cfg.validate();
  if (A.size() != 3) throw DimensionMismatchError("decompose_3x3 needs a 3x3 matrix");
  if (w.size() != 3) throw DimensionMismatchError("weight vector dimension does not match matrix");
  if (!approx_one(A(0, 1), cfg.rtol) || !approx_one(A(1, 2), cfg.rtol)) {
    throw PreconditionError("matrix must be all ones except the (1,3) pair");
  }
  const double x = A(0, 2);
  if (x < 1.0 - cfg.rtol) throw PreconditionError("corner entry must be at least 1");
  const double scale = std::max({w[0], w[1], w[2]});
  if (approx_one(x, cfg.rtol)) {
    bool constant = std::abs(w[0] - w[1]) <= cfg.rtol * scale && std::abs(w[1] - w[2]) <= cfg.rtol * scale;
    if (!constant) throw DegenerateError("corner entry 1 admits only constant efficient vectors");
    return {1.0, 0.0, 0.0};
  }
  if (!efficient_3x3(A, w, cfg)) throw NotEfficientError("vector is not efficient for this matrix");
  std::vector<double> y = {x * (w[1] - w[2]) / (x - 1.0), (x * w[2] - w[0]) / (x - 1.0),
                           (w[0] - w[1]) / (x - 1.0)};
  // The chain test admits edge_rtol slack, so entries may undershoot zero by
  // a sliver of that order; clamp those, reject anything larger.
  const double clamp = 8.0 * cfg.edge_rtol * (x + 1.0) / (x - 1.0) * scale;
  double sum = 0.0;
  for (double& v : y) {
    if (v < 0.0) {
      if (v < -clamp) throw NotEfficientError("vector is not efficient for this matrix");
      v = 0.0;
    }
    sum += v;
  }
  for (double& v : y) v /= sum;  // unit-sum convex coefficients
  return y;
}

ReciprocalMatrix three_block_matrix(int n, double a12, double a13, double a23) {
  if (n < 3) throw DimensionTooSmallError("three-block family needs dimension at least 3");
  return ReciprocalMatrix::from_upper(n, [&](int i, int j) {
    if (i == 0 && j == 1) return a12;
    if (i == 0 && j == 2) return a13;
    if (i == 1 && j == 2) return a23;
    return 1.0;
  });
}

ReciprocalMatrix triangular_matrix(int n, double a13, double a14, double a24) {
  if (n < 4) throw DimensionTooSmallError("triangular family needs dimension at least 4");
  return ReciprocalMatrix::from_upper(n, [&](int i, int j) {
    if (i == 0 && j == 2) return a13;
    if (i == 0 && j == 3) return a14;
    if (i == 1 && j == 3) return a24;
    return 1.0;
  });
}

ReciprocalMatrix simple_perturbed_matrix(int n, double x) {
  if (n < 2) throw DimensionTooSmallError("simple perturbed family needs dimension at least 2");
  return ReciprocalMatrix::from_upper(n, [&](int i, int j) { return (i == 0 && j == 1) ? x : 1.0; });
}

}  // namespace effhull
