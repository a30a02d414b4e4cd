#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

enum class Color : std::uint8_t { Red, Blue, Black };

[[nodiscard]] const char* to_string(Color c);

/// Terminal red/blue/black coloring of the strong k-core peeling.
///
/// Black is the strong k-core: the largest S such that every vertex of
/// S ∪ N(S) has at least k neighbors in S. Blue is N(Black), Red the rest.
struct Coloring {
  unsigned k = 4;
  std::vector<Color> color;

  [[nodiscard]] std::size_t count(Color c) const;
  [[nodiscard]] std::vector<Vertex> vertices(Color c) const;
  [[nodiscard]] bool is(Vertex v, Color c) const { return color[v] == c; }
};

/// Runs the peeling with a work queue of violating vertices and live
/// black-neighbor counters, O(n + m). The result does not depend on the
/// processing order; `order`, when given, seeds the queue in that order.
[[nodiscard]] Coloring strong_core_coloring(const Graph& g, unsigned k = 4);
[[nodiscard]] Coloring strong_core_coloring(const Graph& g, unsigned k, std::span<const Vertex> order);

/// True iff every vertex of S ∪ N(S) has at least k neighbors in S.
[[nodiscard]] bool verify_strong_core(const Graph& g, std::span<const Vertex> s, unsigned k);

/// True iff some edge joins a Red and a Black vertex.
[[nodiscard]] bool has_red_black_edge(const Graph& g, const Coloring& col);

/// G^{r/b}: the subgraph induced by the red and blue vertices, with its
/// connected components (in local ids of `sub`).
struct RedBlueGraph {
  InducedSubgraph sub;
  Partition parts;
};

[[nodiscard]] RedBlueGraph rb_subgraph(const Graph& g, const Coloring& col);

/// Component statistics of G^{r/b}.
struct RBStats {
  std::vector<std::size_t> component_sizes;   // sorted descending
  std::map<std::size_t, std::size_t> x;       // X_i: vertices in components of size i
  std::map<std::size_t, std::size_t> y;       // Y_i: red vertices in components with i reds
  std::size_t y_multi = 0;                    // Y: reds in components with >= 2 reds
  std::size_t largest = 0;                    // r(G)
  std::size_t red = 0;
  std::size_t blue = 0;
  std::size_t black = 0;
};

[[nodiscard]] RBStats component_stats(const Graph& g, const Coloring& col);

}  // namespace longcycle
