#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "longcycle/graph.hpp"
#include "longcycle/strong_core.hpp"

namespace testing {

using longcycle::Edge;
using longcycle::Graph;
using longcycle::Vertex;

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) e.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  return Graph(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, e);
}

inline std::vector<Vertex> path_vertices(std::size_t n) {
  std::vector<Vertex> p(n);
  for (Vertex v = 0; v < n; ++v) p[v] = v;
  return p;
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph(10, e);
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> e;
  for (const Edge& x : g.edges()) e.emplace_back(perm[x.u], perm[x.v]);
  return Graph(g.order(), e);
}

// Longest cycle by plain DFS over simple paths anchored at their smallest
// vertex. Shares nothing with the bitmask oracle.
inline std::size_t dfs_longest_cycle(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<char> on(n, 0);
  std::size_t best = 0;
  std::function<void(Vertex, Vertex, std::size_t)> go = [&](Vertex s, Vertex x, std::size_t len) {
    for (Vertex y : g.neighbors(x)) {
      if (y == s && len >= 3) best = std::max(best, len);
      if (y <= s || on[y]) continue;
      on[y] = 1;
      go(s, y, len + 1);
      on[y] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on[s] = 1;
    go(s, s, 1);
    on[s] = 0;
  }
  return best;
}

}  // namespace testing
