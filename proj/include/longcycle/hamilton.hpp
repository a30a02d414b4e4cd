#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "longcycle/graph.hpp"
#include "longcycle/path_cover.hpp"
#include "longcycle/rng.hpp"
#include "longcycle/strong_core.hpp"

namespace longcycle {

/// The graph obtained by keeping Black and Blue vertices, dropping the
/// interiors of the retained cover paths and replacing each such path by a
/// forced edge between its endpoints. A Hamilton cycle through every forced
/// edge expands to a cycle of the original graph of length target_length.
struct ContractedInstance {
  Graph gamma;                      // local ids, forced edges included
  Graph base;                       // gamma without the forced pairs
  std::vector<Vertex> to_parent;    // local id -> original id
  std::vector<Color> color;         // local colors, Black or Blue
  std::vector<Edge> forced;         // local ids, pairwise disjoint
  std::vector<std::vector<Vertex>> expansion;  // original-id path per forced edge, front to back
  std::vector<Vertex> excluded_interior;       // original ids
  std::size_t ell = 0;
  std::size_t target_length = 0;
};

/// Throws InvalidParameter if ell exceeds the number of single-red paths.
[[nodiscard]] ContractedInstance build_gamma(const Graph& g, const Coloring& col, const CoverFamily& fam,
                                             std::size_t ell);

/// Expands a cycle of gamma (local ids) into the original graph.
[[nodiscard]] std::vector<Vertex> expand_cycle(const ContractedInstance& inst, std::span<const Vertex> cycle);

struct DecomposeOptions {
  double c = 0.0;                     // edge density parameter; 0 means 2m/n of h
  std::size_t n = 0;                  // size parameter; 0 means |V(h)|
  std::optional<double> p_prime;      // overrides the computed reservoir probability
};

/// Split of the working graph into the rotation graph and the reservoir.
struct HamiltonInstance {
  Graph h_prime;
  std::vector<Edge> reservoir;   // reveal order
  std::vector<Vertex> v1;        // sorted
  std::vector<Edge> forced;      // filled by the caller
  double p_prime = 0.0;
};

/// p' = min(1/2, 1 / (c * max(ln ln n, 1))).
[[nodiscard]] double reservoir_probability(double c, std::size_t n);

/// Marks each edge with probability p'. Unmarked edges form H1. V1 holds
/// the vertices with fewer than 4 Black neighbors in H1. H' is H1 plus every
/// edge touching V1; the other marked edges are the reservoir, shuffled.
[[nodiscard]] HamiltonInstance decompose(const Graph& h, std::span<const Color> color, Seed seed,
                                         const DecomposeOptions& options = {});

/// Vertex-disjoint paths covering every vertex of h_prime and containing
/// every forced edge, from the union of two maximum matchings with cycles
/// broken at a non-forced edge. Paths are ordered by smallest vertex.
[[nodiscard]] std::vector<std::vector<Vertex>> cover_paths_via_matchings(const HamiltonInstance& inst);

using TraceSink = std::function<void(const nlohmann::json&)>;

struct PosaOptions {
  std::size_t endpoint_budget = 24;  // endpoints tried as the fixed end before revealing reservoir edges
  TraceSink trace;
};

struct PosaFailure {
  std::size_t iteration = 0;
  std::size_t connectors_left = 0;
  std::size_t frontier_size = 0;
  std::size_t reservoir_used = 0;
};

struct PosaResult {
  bool success = false;
  std::vector<Vertex> cycle;         // local ids, on success
  std::size_t iterations = 0;
  std::size_t rotations = 0;
  std::size_t connectors = 0;        // |R| at the start
  std::size_t reservoir_used = 0;    // length of the revealed prefix
  std::optional<PosaFailure> failure;
};

/// Chains the paths with virtual connector edges into one Hamilton path of
/// H' ∪ R, then removes connectors one by one with rotations that insert
/// H' edges and never delete forced edges. Reservoir edges are revealed in
/// order, only when rotations alone get stuck. On success the cycle is
/// verified: it spans V(H'), contains every forced edge and no connector.
[[nodiscard]] PosaResult posa_merge(const HamiltonInstance& inst, const std::vector<std::vector<Vertex>>& paths,
                                    Seed seed, const PosaOptions& options = {});

/// True iff `cycle` is a simple cycle of g of length >= 3.
[[nodiscard]] bool is_cycle(const Graph& g, std::span<const Vertex> cycle);

/// Longest cycle found by a depth-first search using back edges. Used as a
/// fallback certificate when the construction fails.
[[nodiscard]] std::vector<Vertex> dfs_cycle(const Graph& g);

struct CycleOptions {
  unsigned attempts = 3;
  std::size_t endpoint_budget = 24;
  CoverOptions cover;
  unsigned threads = 1;
  TraceSink trace;
};

struct CycleCertificate {
  std::size_t upper_bound = 0;       // n minus the total uncovered reds
  std::size_t target = 0;            // upper_bound minus the deficiency
  std::size_t achieved = 0;
  std::size_t deficiency = 0;
  std::size_t singles = 0;           // single-red paths available
  unsigned retries = 0;
  std::size_t reservoir_used = 0;
  std::size_t reservoir_size = 0;
  std::size_t initial_paths = 0;
  std::size_t rotations = 0;
  bool success = false;
  std::optional<PosaFailure> failure;
};

struct CycleResult {
  std::vector<Vertex> cycle;         // original ids; on failure the fallback cycle
  CycleCertificate certificate;
};

/// Coloring, exact cover and upper bound shared by every deficiency.
struct CyclePlan {
  Coloring coloring;
  CoverFamily cover;
  std::size_t upper_bound = 0;
};

/// Throws UnsupportedRegime if the strong 4-core is empty.
[[nodiscard]] CyclePlan plan_cycles(const Graph& g, const CoverOptions& cover = {});

[[nodiscard]] CycleResult cycle_from_plan(const Graph& g, const CyclePlan& plan, Seed seed, std::size_t deficiency,
                                          const CycleOptions& options = {});

/// A cycle of length upper_bound.
[[nodiscard]] CycleResult longest_cycle(const Graph& g, Seed seed, const CycleOptions& options = {});

/// A cycle of length upper_bound - i. Throws InvalidParameter if i exceeds
/// the number of single-red paths.
[[nodiscard]] CycleResult cycle_of_deficiency(const Graph& g, Seed seed, std::size_t i,
                                              const CycleOptions& options = {});

/// cycle_of_deficiency for every i in [0, max_i], sharing the plan. Runs
/// the deficiencies in parallel on options.threads workers.
[[nodiscard]] std::vector<CycleResult> deficiency_sweep(const Graph& g, Seed seed, std::size_t max_i,
                                                        const CycleOptions& options = {});

}  // namespace longcycle
