#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_set>

#include "longcycle/error.hpp"
#include "longcycle/hamilton.hpp"
#include "longcycle/matching.hpp"

namespace longcycle {

double reservoir_probability(double c, std::size_t n) {
  if (n < 3 || c <= 0.0) return 0.0;
  const double loglog = std::max(std::log(std::log(static_cast<double>(n))), 1.0);
  return std::min(0.5, 1.0 / (c * loglog));
}

HamiltonInstance decompose(const Graph& h, std::span<const Color> color, Seed seed, const DecomposeOptions& options) {
  const std::size_t n = h.order();
  HamiltonInstance inst;
  const double c = options.c > 0.0 ? options.c : (n == 0 ? 0.0 : 2.0 * static_cast<double>(h.size()) / n);
  inst.p_prime = options.p_prime.value_or(reservoir_probability(c, options.n ? options.n : n));

  Rng rng(seed);
  std::vector<char> marked(h.size(), 0);
  if (inst.p_prime > 0.0) {
    std::bernoulli_distribution coin(inst.p_prime);
    for (std::size_t i = 0; i < h.size(); ++i) marked[i] = coin(rng);
  }

  std::vector<unsigned> black_in_h1(n, 0);
  const auto& edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (marked[i]) continue;
    if (color[edges[i].v] == Color::Black) ++black_in_h1[edges[i].u];
    if (color[edges[i].u] == Color::Black) ++black_in_h1[edges[i].v];
  }
  std::vector<char> in_v1(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (black_in_h1[v] < 4) {
      in_v1[v] = 1;
      inst.v1.push_back(v);
    }
  }

  std::vector<Edge> kept;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!marked[i] || in_v1[edges[i].u] || in_v1[edges[i].v]) {
      kept.push_back(edges[i]);
    } else {
      inst.reservoir.push_back(edges[i]);
    }
  }
  std::shuffle(inst.reservoir.begin(), inst.reservoir.end(), rng);
  inst.h_prime = Graph(n, std::move(kept));
  return inst;
}

std::vector<std::vector<Vertex>> cover_paths_via_matchings(const HamiltonInstance& inst) {
  const Graph& h = inst.h_prime;
  const std::size_t n = h.order();
  std::vector<Vertex> forced_mate(n, kNoVertex);
  for (const Edge& e : inst.forced) {
    forced_mate[e.u] = e.v;
    forced_mate[e.v] = e.u;
  }

  const Matching m1 = maximum_matching(h, inst.forced);
  std::vector<char> saturated(n, 0);  // degree 2 in M ∪ M1
  for (Vertex v = 0; v < n; ++v) saturated[v] = forced_mate[v] != kNoVertex && m1.mate[v] != kUnmatched;

  std::vector<Edge> rest;
  for (const Edge& e : h.edges()) {
    if (saturated[e.u] || saturated[e.v] || m1.mate[e.u] == e.v) continue;
    if (forced_mate[e.u] == e.v) continue;
    rest.push_back(e);
  }
  const Matching m2 = maximum_matching(Graph(n, std::move(rest)));

  // Union of M, M1 and M2: maximum degree 2.
  std::vector<std::array<Vertex, 2>> adj(n, {kNoVertex, kNoVertex});
  auto link = [&](Vertex a, Vertex b) {
    auto put = [&](Vertex x, Vertex y) {
      auto& slot = adj[x];
      if (slot[0] == kNoVertex) {
        slot[0] = y;
      } else if (slot[1] == kNoVertex) {
        slot[1] = y;
      } else {
        throw InternalInvariant("matching union has a vertex of degree 3");
      }
    };
    put(a, b);
    put(b, a);
  };
  for (const Edge& e : inst.forced) link(e.u, e.v);
  for (const Edge& e : m1.edges()) link(e.u, e.v);
  for (const Edge& e : m2.edges()) link(e.u, e.v);
  auto degree = [&](Vertex v) { return (adj[v][0] != kNoVertex) + (adj[v][1] != kNoVertex); };

  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> paths;
  auto walk = [&](Vertex start, Vertex avoid) {
    std::vector<Vertex> path{start};
    seen[start] = 1;
    Vertex prev = avoid;
    Vertex cur = start;
    for (;;) {
      Vertex next = kNoVertex;
      for (Vertex y : adj[cur]) {
        if (y != kNoVertex && y != prev && !seen[y]) {
          next = y;
          break;
        }
      }
      if (next == kNoVertex) break;
      seen[next] = 1;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    return path;
  };

  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v] && degree(v) <= 1) paths.push_back(walk(v, kNoVertex));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v]) continue;
    // v lies on a cycle; collect it, then cut at its smallest non-forced edge.
    std::vector<Vertex> cyc = walk(v, kNoVertex);
    std::size_t cut = cyc.size();
    Edge best;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Vertex a = cyc[i];
      const Vertex b = cyc[(i + 1) % cyc.size()];
      if (forced_mate[a] == b) continue;
      const Edge e(a, b);
      if (cut == cyc.size() || e < best) {
        best = e;
        cut = i;
      }
    }
    if (cut == cyc.size()) throw InternalInvariant("cycle made only of forced edges");
    std::rotate(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(cut + 1), cyc.end());
    paths.push_back(std::move(cyc));
  }

  for (auto& p : paths) {
    if (p.back() < p.front()) std::reverse(p.begin(), p.end());
  }
  std::sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  return paths;
}

}  // namespace longcycle
