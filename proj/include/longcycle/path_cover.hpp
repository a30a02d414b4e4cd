#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "longcycle/graph.hpp"
#include "longcycle/strong_core.hpp"

namespace longcycle {

/// A path with blue endpoints. A single blue vertex is a path of length 0.
struct CoverPath {
  std::vector<Vertex> vertices;
  std::size_t reds = 0;  // red vertices on the path (all interior)

  [[nodiscard]] Vertex front() const { return vertices.front(); }
  [[nodiscard]] Vertex back() const { return vertices.back(); }
  [[nodiscard]] std::size_t length() const { return vertices.size() - 1; }
};

/// Vertex-disjoint blue-endpoint paths inside one component of G^{r/b}.
/// Every blue vertex not on a longer path appears as a length-0 path.
struct PathCover {
  std::size_t component = 0;
  std::vector<CoverPath> paths;
  std::size_t red_total = 0;
  std::size_t uncovered_red = 0;
};

/// One cover per component of G^{r/b}, ids in the original graph.
struct CoverFamily {
  std::vector<PathCover> covers;
  std::vector<CoverPath> singles;  // paths covering exactly one red, by smallest vertex
  std::size_t total_phi = 0;
};

struct CoverOptions {
  std::size_t size_cap = 64;  // hard limit 64
  unsigned threads = 1;
};

/// Exact minimum of uncovered reds over all blue-endpoint path systems of
/// the connected component `t` (local ids; `colors[v]` is Red or Blue).
///
/// Among minimizers the cover with the most single-red paths wins; further
/// ties go to the lexicographically first sequence of path choices, taking
/// paths as canonical vertex sequences (front < back) at each decision.
/// Throws SizeCapExceeded if t has more than options.size_cap vertices.
[[nodiscard]] PathCover optimal_path_cover(const Graph& t, std::span<const Color> colors,
                                           const CoverOptions& options = {});

/// Exact cover of every component of G^{r/b}.
[[nodiscard]] CoverFamily exact_cover_family(const Graph& g, const Coloring& col,
                                             const CoverOptions& options = {});

/// Fast valid cover: a red vertex that is the only red of its component
/// and has degree >= 2 gets the path (blue, red, blue) through its two
/// smallest neighbors. Everything else is left uncovered.
[[nodiscard]] CoverFamily greedy_cover(const Graph& g, const Coloring& col);

/// Paths covering exactly one red vertex, ordered by smallest vertex id.
[[nodiscard]] std::vector<CoverPath> extract_singles(const CoverFamily& fam);

/// n minus the total uncovered count: the upper bound on the longest cycle
/// through the strong core. Throws InvalidColoring if a red-black edge
/// exists and UnsupportedRegime if there is no black vertex.
[[nodiscard]] std::size_t longest_cycle_upper_bound(const Graph& g, const Coloring& col,
                                                    const CoverFamily& fam);

}  // namespace longcycle
