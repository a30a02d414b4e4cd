#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "longcycle/error.hpp"
#include "longcycle/hamilton.hpp"

namespace longcycle {

ContractedInstance build_gamma(const Graph& g, const Coloring& col, const CoverFamily& fam, std::size_t ell) {
  if (ell > fam.singles.size()) {
    throw InvalidParameter("deficiency " + std::to_string(ell) + " exceeds the " +
                           std::to_string(fam.singles.size()) + " single-red paths");
  }
  const std::size_t n = g.order();
  std::unordered_set<Vertex> dropped;
  for (std::size_t i = 0; i < ell; ++i) dropped.insert(fam.singles[i].front());

  std::vector<const CoverPath*> retained;
  std::vector<char> interior(n, 0);
  for (const PathCover& cover : fam.covers) {
    for (const CoverPath& p : cover.paths) {
      if (p.reds == 0 || dropped.contains(p.front())) continue;
      retained.push_back(&p);
      for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) interior[p.vertices[i]] = 1;
    }
  }

  ContractedInstance out;
  out.ell = ell;
  std::vector<Vertex> local(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    if (col.color[v] == Color::Red || interior[v]) {
      if (interior[v]) out.excluded_interior.push_back(v);
      continue;
    }
    local[v] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
    out.color.push_back(col.color[v]);
  }

  std::vector<Edge> base_edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] != kNoVertex && local[e.v] != kNoVertex) base_edges.emplace_back(local[e.u], local[e.v]);
  }
  std::sort(retained.begin(), retained.end(), [](const CoverPath* a, const CoverPath* b) {
    return std::min(a->front(), a->back()) < std::min(b->front(), b->back());
  });
  std::unordered_set<std::uint64_t> forced_keys;
  for (const CoverPath* p : retained) {
    const Edge f(local[p->front()], local[p->back()]);
    out.forced.push_back(f);
    out.expansion.push_back(p->vertices);
    forced_keys.insert(f.key());
  }
  std::vector<Edge> gamma_edges = base_edges;
  std::erase_if(base_edges, [&](const Edge& e) { return forced_keys.contains(e.key()); });
  for (const Edge& f : out.forced) {
    if (!std::binary_search(gamma_edges.begin(), gamma_edges.end(), f)) gamma_edges.push_back(f);
  }
  const std::size_t m = out.to_parent.size();
  out.gamma = Graph(m, std::move(gamma_edges));
  out.base = Graph(m, std::move(base_edges));
  out.target_length = m + out.excluded_interior.size();
  return out;
}

std::vector<Vertex> expand_cycle(const ContractedInstance& inst, std::span<const Vertex> cycle) {
  std::unordered_map<std::uint64_t, std::size_t> which;
  for (std::size_t i = 0; i < inst.forced.size(); ++i) which.emplace(inst.forced[i].key(), i);
  std::vector<Vertex> out;
  out.reserve(inst.target_length);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % cycle.size()];
    out.push_back(inst.to_parent[a]);
    const auto it = which.find(Edge(a, b).key());
    if (it == which.end()) continue;
    const auto& path = inst.expansion[it->second];
    if (path.front() == inst.to_parent[a]) {
      out.insert(out.end(), path.begin() + 1, path.end() - 1);
    } else {
      out.insert(out.end(), path.rbegin() + 1, path.rend() - 1);
    }
  }
  return out;
}

}  // namespace longcycle
