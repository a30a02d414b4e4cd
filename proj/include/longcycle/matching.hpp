#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

inline constexpr Vertex kUnmatched = kNoVertex;

struct Matching {
  std::vector<Vertex> mate;  // mate[v] or kUnmatched
  std::size_t size = 0;

  [[nodiscard]] std::vector<Edge> edges() const;
};

/// Maximum-cardinality matching of g with the `forbidden` edges removed.
/// Edmonds' blossom algorithm seeded with a greedy matching.
[[nodiscard]] Matching maximum_matching(const Graph& g, std::span<const Edge> forbidden = {});

/// True iff `m` is a valid matching of g avoiding `forbidden`.
[[nodiscard]] bool is_matching(const Graph& g, const Matching& m, std::span<const Edge> forbidden = {});

}  // namespace longcycle
