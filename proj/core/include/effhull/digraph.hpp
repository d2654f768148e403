#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "effhull/matrix.hpp"
#include "effhull/tolerance.hpp"
#include "effhull/types.hpp"

namespace effhull {

// Dominance digraph of (A, w): edge i -> j (i != j) iff w_i >= a_ij * w_j up
// to edge_rtol slack. w is efficient for A exactly when this digraph is
// strongly connected.
struct EfficiencyDigraph {
  int n = 0;
  // Row-major n*n adjacency; 1 = edge present, diagonal always 0.
  std::vector<std::uint8_t> adj;

  bool edge(int i, int j) const {
    return adj[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] != 0;
  }
};

EfficiencyDigraph build_digraph(const ReciprocalMatrix& A, const PositiveVector& w,
                                const ToleranceConfig& cfg = {});

// Double-BFS check: every vertex reaches and is reached by vertex 0.
bool strongly_connected(const EfficiencyDigraph& g);

// Tarjan components, each sorted ascending. Emitted in reverse topological
// order of the condensation: the first component has no outgoing edge.
std::vector<std::vector<int>> strongly_connected_components(const EfficiencyDigraph& g);

}  // namespace effhull
