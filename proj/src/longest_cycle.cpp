#include <algorithm>

#include "longcycle/error.hpp"
#include "longcycle/hamilton.hpp"
#include "longcycle/parallel.hpp"

namespace longcycle {

bool is_cycle(const Graph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 3) return false;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % cycle.size()];
    if (a >= g.order() || seen[a] || !g.has_edge(a, b)) return false;
    seen[a] = 1;
  }
  return true;
}

std::vector<Vertex> dfs_cycle(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> state(n, 0);
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<std::size_t> depth(n, 0);
  std::size_t best = 0;
  Vertex best_low = kNoVertex;
  Vertex best_top = kNoVertex;
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (state[s]) continue;
    state[s] = 1;
    stack.emplace_back(s, 0);
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      const auto nbrs = g.neighbors(x);
      if (next == nbrs.size()) {
        state[x] = 2;
        stack.pop_back();
        continue;
      }
      const Vertex y = nbrs[next++];
      if (state[y] == 0) {
        state[y] = 1;
        parent[y] = x;
        depth[y] = depth[x] + 1;
        stack.emplace_back(y, 0);
      } else if (state[y] == 1 && y != parent[x] && depth[x] - depth[y] + 1 > best) {
        best = depth[x] - depth[y] + 1;
        best_low = x;
        best_top = y;
      }
    }
  }
  std::vector<Vertex> cycle;
  if (best < 3) return cycle;
  for (Vertex v = best_low; v != best_top; v = parent[v]) cycle.push_back(v);
  cycle.push_back(best_top);
  return cycle;
}

CyclePlan plan_cycles(const Graph& g, const CoverOptions& cover) {
  CyclePlan plan;
  plan.coloring = strong_core_coloring(g, 4);
  if (plan.coloring.count(Color::Black) == 0) throw UnsupportedRegime("the strong 4-core is empty");
  plan.cover = exact_cover_family(g, plan.coloring, cover);
  plan.upper_bound = longest_cycle_upper_bound(g, plan.coloring, plan.cover);
  return plan;
}

CycleResult cycle_from_plan(const Graph& g, const CyclePlan& plan, Seed seed, std::size_t deficiency,
                            const CycleOptions& options) {
  const ContractedInstance inst = build_gamma(g, plan.coloring, plan.cover, deficiency);
  CycleResult out;
  CycleCertificate& cert = out.certificate;
  cert.upper_bound = plan.upper_bound;
  cert.deficiency = deficiency;
  cert.target = inst.target_length;
  cert.singles = plan.cover.singles.size();

  DecomposeOptions split;
  split.n = g.order();
  split.c = g.order() == 0 ? 0.0 : 2.0 * static_cast<double>(g.size()) / static_cast<double>(g.order());
  PosaOptions posa_options;
  posa_options.endpoint_budget = options.endpoint_budget;
  posa_options.trace = options.trace;

  const unsigned attempts = std::max(1u, options.attempts);
  for (unsigned attempt = 0; attempt < attempts; ++attempt) {
    const Seed stream = seed.derive(attempt);
    if (options.trace) options.trace({{"event", "attempt"}, {"index", attempt}});
    HamiltonInstance hi = decompose(inst.base, inst.color, stream.derive(0), split);
    hi.forced = inst.forced;
    const auto paths = cover_paths_via_matchings(hi);
    const PosaResult posa = posa_merge(hi, paths, stream.derive(1), posa_options);
    cert.retries = attempt;
    cert.reservoir_size = hi.reservoir.size();
    cert.reservoir_used = posa.reservoir_used;
    cert.initial_paths = paths.size();
    cert.rotations += posa.rotations;
    if (!posa.success) {
      cert.failure = posa.failure;
      continue;
    }
    out.cycle = expand_cycle(inst, posa.cycle);
    if (out.cycle.size() != inst.target_length || !is_cycle(g, out.cycle)) {
      throw InternalInvariant("expanded cycle failed validation");
    }
    cert.achieved = out.cycle.size();
    cert.success = true;
    cert.failure.reset();
    return out;
  }
  out.cycle = dfs_cycle(g);
  cert.achieved = out.cycle.size();
  return out;
}

CycleResult longest_cycle(const Graph& g, Seed seed, const CycleOptions& options) {
  return cycle_of_deficiency(g, seed, 0, options);
}

CycleResult cycle_of_deficiency(const Graph& g, Seed seed, std::size_t i, const CycleOptions& options) {
  const CyclePlan plan = plan_cycles(g, options.cover);
  return cycle_from_plan(g, plan, seed, i, options);
}

std::vector<CycleResult> deficiency_sweep(const Graph& g, Seed seed, std::size_t max_i, const CycleOptions& options) {
  const CyclePlan plan = plan_cycles(g, options.cover);
  if (max_i > plan.cover.singles.size()) {
    throw InvalidParameter("deficiency exceeds the number of single-red paths");
  }
  std::vector<CycleResult> results(max_i + 1);
  CycleOptions quiet = options;
  quiet.trace = nullptr;
  parallel_for(max_i + 1, resolve_threads(options.threads),
               [&](std::size_t i) { results[i] = cycle_from_plan(g, plan, seed, i, quiet); });
  return results;
}

}  // namespace longcycle
