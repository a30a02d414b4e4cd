#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "longcycle/graph.hpp"
#include "longcycle/strong_core.hpp"

namespace longcycle {

// Exact exponential-time solvers for small instances. They favor
// obviousness over speed and enforce vertex-count caps, throwing
// SizeCapExceeded above them.

/// Length of the longest cycle (0 if acyclic). Bitmask DP over
/// (vertex subset, endpoint) per connected component.
[[nodiscard]] std::size_t brute_longest_cycle(const Graph& g, std::size_t cap = 18);

/// Number of edges on the longest path.
[[nodiscard]] std::size_t brute_longest_path(const Graph& g, std::size_t cap = 18);

/// Set of cycle lengths present in g, as flags indexed by length (size n+1).
[[nodiscard]] std::vector<bool> cycle_lengths(const Graph& g, std::size_t cap = 18);

/// Minimum uncovered reds by exhaustive enumeration of edge subsets of the
/// component t, keeping those that form vertex-disjoint blue-endpoint paths.
[[nodiscard]] std::size_t brute_phi(const Graph& t, std::span<const Color> colors, std::size_t cap = 14);

/// Exact number of distinct cycles of length `length` (3 <= length <= 8),
/// each counted once regardless of start and direction.
[[nodiscard]] std::uint64_t count_cycles(const Graph& g, std::size_t length);

/// Exact cycle counts for small lengths plus presence of every length.
struct SpectrumReport {
  std::vector<std::uint64_t> counts;  // counts[l] for l <= min(8, n); zero below 3
  std::vector<bool> present;          // present[l] for l <= n
};

[[nodiscard]] SpectrumReport cycle_spectrum(const Graph& g, std::size_t cap = 18);

/// Maximum matching size by exhaustive search.
[[nodiscard]] std::size_t brute_matching_size(const Graph& g, std::size_t cap = 14);

/// Searches all U ⊆ V for one with matching_size == (|U| - odd(G - U) + n) / 2.
/// Such a U certifies that no larger matching exists.
[[nodiscard]] std::optional<std::vector<Vertex>> tutte_berge_witness(const Graph& g, std::size_t matching_size,
                                                                     std::size_t cap = 16);

/// Number of odd components of G - U.
[[nodiscard]] std::size_t odd_components_without(const Graph& g, std::span<const Vertex> removed);

}  // namespace longcycle
