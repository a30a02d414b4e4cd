#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "longcycle/rng.hpp"

namespace longcycle {

using Vertex = std::uint32_t;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

/// Unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  [[nodiscard]] std::uint64_t key() const { return (std::uint64_t{u} << 32) | v; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored compressed (CSR) with each neighbor list sorted, so
/// edge queries are a binary search. The edge list is sorted by (u, v).
class Graph {
 public:
  Graph() = default;

  /// Builds a graph; throws InvalidParameter on self-loops, duplicate edges
  /// or endpoints outside [0, n).
  Graph(std::size_t n, std::vector<Edge> edges);

  [[nodiscard]] std::size_t order() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  [[nodiscard]] std::size_t size() const { return edges_.size(); }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  [[nodiscard]] bool has_edge(Vertex a, Vertex b) const;
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<Edge> edges_;
};

/// Subgraph induced by a vertex set, with the map back to parent ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local id -> parent id
};

/// Connected components. `label[v]` is the cell index of v; cells are
/// numbered by their smallest vertex and each cell is sorted.
struct Partition {
  std::vector<std::uint32_t> label;
  std::vector<std::vector<Vertex>> cells;
};

/// Samples G(n, c/n): every pair independently with probability c/n.
/// Throws InvalidParameter unless 0 <= c <= n.
[[nodiscard]] Graph sample_gnp(std::size_t n, double c, Seed seed);

[[nodiscard]] Partition components(const Graph& g);

/// Local ids follow the sorted order of `vertices`. Throws InvalidParameter
/// on out-of-range or repeated vertices.
[[nodiscard]] InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// counts[d] = number of vertices of degree d; sums to n.
[[nodiscard]] std::vector<std::size_t> degree_profile(const Graph& g);

}  // namespace longcycle
