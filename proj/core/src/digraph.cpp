#include "effhull/digraph.hpp"

#include <algorithm>

namespace effhull {

EfficiencyDigraph build_digraph(const ReciprocalMatrix& A, const PositiveVector& w,
                                const ToleranceConfig& cfg) {
  cfg.validate();
  const int n = A.size();
  if (w.size() != n) {
    throw DimensionMismatchError("weight vector dimension does not match matrix");
  }
  EfficiencyDigraph g;
  g.n = n;
  g.adj.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  const double slack = 1.0 - cfg.edge_rtol;
  for (int i = 0; i < n; ++i) {
    const double wi = w[i];
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (wi >= A(i, j) * w[j] * slack) {
        g.adj[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = 1;
      }
    }
  }
  return g;
}

namespace {

// BFS over rows (forward = true) or columns (forward = false) from vertex 0.
int reach_count(const EfficiencyDigraph& g, bool forward) {
  const int n = g.n;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> frontier;
  frontier.reserve(static_cast<std::size_t>(n));
  frontier.push_back(0);
  seen[0] = 1;
  int count = 1;
  while (!frontier.empty()) {
    int v = frontier.back();
    frontier.pop_back();
    for (int u = 0; u < n; ++u) {
      if (seen[static_cast<std::size_t>(u)]) continue;
      bool connected = forward ? g.edge(v, u) : g.edge(u, v);
      if (connected) {
        seen[static_cast<std::size_t>(u)] = 1;
        frontier.push_back(u);
        ++count;
      }
    }
  }
  return count;
}

}  // namespace

bool strongly_connected(const EfficiencyDigraph& g) {
  if (g.n <= 1) return true;
  return reach_count(g, true) == g.n && reach_count(g, false) == g.n;
}

std::vector<std::vector<int>> strongly_connected_components(const EfficiencyDigraph& g) {
  const int n = g.n;
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<std::uint8_t> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  stack.reserve(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> comps;
  int next_index = 0;

  struct Frame {
    int v;
    int next_child;
  };
  std::vector<Frame> call;
  call.reserve(static_cast<std::size_t>(n));

  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] != -1) continue;
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = next_index++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = 1;
    call.push_back({root, 0});
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next_child < n) {
        const int v = f.v;
        const int u = f.next_child++;
        if (u == v || !g.edge(v, u)) continue;
        if (index[static_cast<std::size_t>(u)] == -1) {
          index[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = next_index++;
          stack.push_back(u);
          on_stack[static_cast<std::size_t>(u)] = 1;
          call.push_back({u, 0});  // invalidates f; loop re-fetches the frame
        } else if (on_stack[static_cast<std::size_t>(u)]) {
          low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(u)]);
        }
      } else {
        const int v = f.v;
        call.pop_back();
        if (!call.empty()) {
          int parent = call.back().v;
          low[static_cast<std::size_t>(parent)] =
              std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
        }
        if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
          comps.emplace_back();
          while (true) {
            int u = stack.back();
            stack.pop_back();
            on_stack[static_cast<std::size_t>(u)] = 0;
            comps.back().push_back(u);
            if (u == v) break;
          }
          std::sort(comps.back().begin(), comps.back().end());
        }
      }
    }
  }
  return comps;
}

}  // namespace effhull
