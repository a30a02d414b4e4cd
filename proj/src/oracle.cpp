#include "longcycle/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "longcycle/error.hpp"

namespace longcycle {
namespace {

using Mask = std::uint32_t;

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (cap > 24) cap = 24;
  if (n > cap) {
    throw SizeCapExceeded(std::string(what) + ": " + std::to_string(n) + " vertices exceeds cap " +
                          std::to_string(cap));
  }
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

// Calls on_cycle(mask) for every vertex set spanned by some cycle, using
// the DP reach[mask] = endpoints v of a path from lowbit(mask) to v
// visiting exactly mask.
template <class F>
void for_each_cycle_set(const Graph& g, F&& on_cycle) {
  const auto n = static_cast<unsigned>(g.order());
  if (n < 3) return;
  const auto adj = adjacency_masks(g);
  std::vector<Mask> reach(std::size_t{1} << n, 0);
  for (unsigned s = 0; s < n; ++s) reach[Mask{1} << s] = Mask{1} << s;
  for (Mask mask = 1; mask < (Mask{1} << n); ++mask) {
    const Mask ends = reach[mask];
    if (ends == 0) continue;
    const auto s = static_cast<unsigned>(std::countr_zero(mask));
    if (std::popcount(mask) >= 3 && (ends & adj[s]) != 0) on_cycle(mask);
    const Mask above = ~((Mask{2} << s) - 1);  // vertices larger than s
    for (Mask e = ends; e != 0; e &= e - 1) {
      const auto v = static_cast<unsigned>(std::countr_zero(e));
      for (Mask nb = adj[v] & ~mask & above; nb != 0; nb &= nb - 1) {
        const Mask u = nb & (~nb + 1);
        reach[mask | u] |= u;
      }
    }
  }
}

}  // namespace

std::size_t brute_longest_cycle(const Graph& g, std::size_t cap) {
  check_cap(g.order(), cap, "brute_longest_cycle");
  std::size_t best = 0;
  for_each_cycle_set(g, [&](Mask m) { best = std::max<std::size_t>(best, std::popcount(m)); });
  return best;
}

std::vector<bool> cycle_lengths(const Graph& g, std::size_t cap) {
  check_cap(g.order(), cap, "cycle_lengths");
  std::vector<bool> present(g.order() + 1, false);
  for_each_cycle_set(g, [&](Mask m) { present[std::popcount(m)] = true; });
  return present;
}

std::size_t brute_longest_path(const Graph& g, std::size_t cap) {
  check_cap(g.order(), cap, "brute_longest_path");
  const auto n = static_cast<unsigned>(g.order());
  if (n == 0) return 0;
  const auto adj = adjacency_masks(g);
  // reach[mask] = vertices v such that some path visits exactly mask and ends at v.
  std::vector<Mask> reach(std::size_t{1} << n, 0);
  for (unsigned v = 0; v < n; ++v) reach[Mask{1} << v] = Mask{1} << v;
  std::size_t best = 0;
  for (Mask mask = 1; mask < (Mask{1} << n); ++mask) {
    const Mask ends = reach[mask];
    if (ends == 0) continue;
    best = std::max<std::size_t>(best, std::popcount(mask) - 1);
    for (Mask e = ends; e != 0; e &= e - 1) {
      const auto v = static_cast<unsigned>(std::countr_zero(e));
      for (Mask nb = adj[v] & ~mask; nb != 0; nb &= nb - 1) {
        const Mask u = nb & (~nb + 1);
        reach[mask | u] |= u;
      }
    }
  }
  return best;
}

std::size_t brute_phi(const Graph& t, std::span<const Color> colors, std::size_t cap) {
  check_cap(t.order(), cap, "brute_phi");
  const std::size_t n = t.order();
  const auto& edges = t.edges();
  std::size_t reds = 0;
  for (Vertex v = 0; v < n; ++v) reds += colors[v] == Color::Red;

  std::vector<unsigned> deg(n, 0);
  std::vector<Vertex> parent(n);
  for (Vertex v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  std::size_t best = reds;

  // Include/exclude each edge. A subset stays a candidate only while every
  // degree is <= 2 and it is acyclic; both properties are inherited by
  // subsets, so pruning on them never drops a valid path system.
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == edges.size()) {
      std::size_t covered = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (colors[v] == Color::Red) {
          if (deg[v] == 1) return;
          if (deg[v] == 2) ++covered;
        }
      }
      best = std::min(best, reds - covered);
      return;
    }
    walk(i + 1);
    const Edge& e = edges[i];
    if (deg[e.u] == 2 || deg[e.v] == 2) return;
    const Vertex ru = find(e.u);
    const Vertex rv = find(e.v);
    if (ru == rv) return;
    ++deg[e.u];
    ++deg[e.v];
    parent[ru] = rv;
    walk(i + 1);
    parent[ru] = ru;
    --deg[e.u];
    --deg[e.v];
  };
  walk(0);
  return best;
}

std::uint64_t count_cycles(const Graph& g, std::size_t length) {
  if (length < 3) return 0;
  if (length > 8) throw SizeCapExceeded("count_cycles supports lengths up to 8");
  const std::size_t n = g.order();
  std::vector<char> on_path(n, 0);
  std::uint64_t twice = 0;
  // Anchor each cycle at its smallest vertex s; every other vertex is > s.
  // Each cycle is then found once per direction.
  std::function<void(Vertex, Vertex, std::size_t)> extend = [&](Vertex s, Vertex x, std::size_t depth) {
    for (Vertex y : g.neighbors(x)) {
      if (y <= s) {
        if (y == s && depth == length) ++twice;
        continue;
      }
      if (depth == length || on_path[y]) continue;
      on_path[y] = 1;
      extend(s, y, depth + 1);
      on_path[y] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on_path[s] = 1;
    extend(s, s, 1);
    on_path[s] = 0;
  }
  return twice / 2;
}

SpectrumReport cycle_spectrum(const Graph& g, std::size_t cap) {
  SpectrumReport rep;
  rep.present = cycle_lengths(g, cap);
  const std::size_t top = std::min<std::size_t>(8, g.order());
  rep.counts.assign(top + 1, 0);
  for (std::size_t l = 3; l <= top; ++l) rep.counts[l] = count_cycles(g, l);
  return rep;
}

std::size_t brute_matching_size(const Graph& g, std::size_t cap) {
  check_cap(g.order(), cap, "brute_matching_size");
  const std::size_t n = g.order();
  std::vector<char> used(n, 0);
  std::function<std::size_t(Vertex)> best_from = [&](Vertex v) -> std::size_t {
    while (v < n && used[v]) ++v;
    if (v >= n) return 0;
    used[v] = 1;
    std::size_t best = best_from(v + 1);  // v unmatched
    for (Vertex u : g.neighbors(v)) {
      if (used[u]) continue;
      used[u] = 1;
      best = std::max(best, 1 + best_from(v + 1));
      used[u] = 0;
    }
    used[v] = 0;
    return best;
  };
  return best_from(0);
}

std::size_t odd_components_without(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(g.order(), 0);
  for (Vertex v : removed) gone[v] = 1;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack;
  std::size_t odd = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (gone[s] || seen[s]) continue;
    std::size_t size = 0;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex y : g.neighbors(x)) {
        if (!gone[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    odd += size % 2;
  }
  return odd;
}

std::optional<std::vector<Vertex>> tutte_berge_witness(const Graph& g, std::size_t matching_size, std::size_t cap) {
  check_cap(g.order(), cap, "tutte_berge_witness");
  const auto n = static_cast<unsigned>(g.order());
  std::vector<Vertex> u;
  for (Mask mask = 0; mask < (Mask{1} << n); ++mask) {
    u.clear();
    for (Mask m = mask; m != 0; m &= m - 1) u.push_back(static_cast<Vertex>(std::countr_zero(m)));
    const std::size_t odd = odd_components_without(g, u);
    if (u.size() + n < odd) continue;
    if ((u.size() + n - odd) == 2 * matching_size) return u;
  }
  return std::nullopt;
}

}  // namespace longcycle
