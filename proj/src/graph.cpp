#include "longcycle/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "longcycle/error.hpp"

namespace longcycle {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw InvalidParameter("self-loop at vertex " + std::to_string(e.u));
    if (e.v >= n) throw InvalidParameter("edge endpoint " + std::to_string(e.v) + " out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InvalidParameter("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
  }

  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  targets_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v), so filling in order yields sorted lists.
  for (const Edge& e : edges_) targets_[fill[e.u]++] = e.v;
  for (const Edge& e : edges_) targets_[fill[e.v]++] = e.u;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= order() || b >= order()) return false;
  if (degree(a) > degree(b)) std::swap(a, b);
  const auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

Graph sample_gnp(std::size_t n, double c, Seed seed) {
  if (!(c >= 0.0) || c > static_cast<double>(n)) {
    throw InvalidParameter("sample_gnp requires 0 <= c <= n");
  }
  std::vector<Edge> edges;
  if (n < 2 || c == 0.0) return Graph(n, std::move(edges));
  const double p = c / static_cast<double>(n);
  if (p >= 1.0) {
    edges.reserve(n * (n - 1) / 2);
    for (Vertex v = 1; v < n; ++v)
      for (Vertex u = 0; u < v; ++u) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
  }
  // Geometric skipping over the pairs (w, v), w < v, in column order.
  Rng rng(seed);
  edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n) * static_cast<double>(n - 1) / 2 * 1.1) + 16);
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = rng.uniform();
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
  }
  return Graph(n, std::move(edges));
}

Partition components(const Graph& g) {
  const std::size_t n = g.order();
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  Partition part;
  part.label.assign(n, kUnset);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (part.label[s] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(part.cells.size());
    auto& cell = part.cells.emplace_back();
    part.label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      cell.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (part.label[y] == kUnset) {
          part.label[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(cell.begin(), cell.end());
  }
  return part;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph out;
  out.to_parent.assign(vertices.begin(), vertices.end());
  std::sort(out.to_parent.begin(), out.to_parent.end());
  if (std::adjacent_find(out.to_parent.begin(), out.to_parent.end()) != out.to_parent.end()) {
    throw InvalidParameter("induced_subgraph: repeated vertex");
  }
  if (!out.to_parent.empty() && out.to_parent.back() >= g.order()) {
    throw InvalidParameter("induced_subgraph: vertex out of range");
  }
  constexpr auto kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> local(g.order(), kAbsent);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) local[out.to_parent[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    for (Vertex y : g.neighbors(out.to_parent[i])) {
      if (local[y] != kAbsent && local[y] > i) edges.emplace_back(static_cast<Vertex>(i), local[y]);
    }
  }
  out.graph = Graph(out.to_parent.size(), std::move(edges));
  return out;
}

std::vector<std::size_t> degree_profile(const Graph& g) {
  std::vector<std::size_t> counts;
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::size_t d = g.degree(v);
    if (d >= counts.size()) counts.resize(d + 1, 0);
    ++counts[d];
  }
  return counts;
}

}  // namespace longcycle
