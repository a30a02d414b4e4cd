#include "longcycle/strong_core.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "longcycle/error.hpp"

namespace longcycle {

const char* to_string(Color c) {
  switch (c) {
    case Color::Red:
      return "red";
    case Color::Blue:
      return "blue";
    case Color::Black:
      return "black";
  }
  return "?";
}

std::size_t Coloring::count(Color c) const {
  return static_cast<std::size_t>(std::count(color.begin(), color.end(), c));
}

std::vector<Vertex> Coloring::vertices(Color c) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < color.size(); ++v)
    if (color[v] == c) out.push_back(v);
  return out;
}

Coloring strong_core_coloring(const Graph& g, unsigned k) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  return strong_core_coloring(g, k, order);
}

Coloring strong_core_coloring(const Graph& g, unsigned k, std::span<const Vertex> order) {
  if (k == 0) throw InvalidParameter("strong_core_coloring requires k >= 1");
  const std::size_t n = g.order();
  if (order.size() != n) throw InvalidParameter("processing order must list every vertex once");

  Coloring col;
  col.k = k;
  col.color.assign(n, Color::Black);
  std::vector<std::uint32_t> black_nb(n);
  for (Vertex v = 0; v < n; ++v) black_nb[v] = static_cast<std::uint32_t>(g.degree(v));

  std::deque<Vertex> queue;
  std::vector<char> queued(n, 0);
  auto enqueue_if_violating = [&](Vertex u) {
    if (col.color[u] != Color::Red && black_nb[u] < k && !queued[u]) {
      queued[u] = 1;
      queue.push_back(u);
    }
  };
  // Black neighbor counts only ever decrease, so a queued vertex stays in
  // violation until it is colored red.
  auto lose_black = [&](Vertex x) {
    for (Vertex y : g.neighbors(x)) {
      --black_nb[y];
      enqueue_if_violating(y);
    }
  };

  for (Vertex v : order) enqueue_if_violating(v);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    const bool was_black = col.color[v] == Color::Black;
    col.color[v] = Color::Red;
    if (was_black) lose_black(v);
    for (Vertex u : g.neighbors(v)) {
      if (col.color[u] == Color::Black) {
        col.color[u] = Color::Blue;
        lose_black(u);
        enqueue_if_violating(u);
      }
    }
  }
  return col;
}

bool verify_strong_core(const Graph& g, std::span<const Vertex> s, unsigned k) {
  std::vector<char> in_s(g.order(), 0);
  for (Vertex v : s) {
    if (v >= g.order()) throw InvalidParameter("verify_strong_core: vertex out of range");
    in_s[v] = 1;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    bool relevant = in_s[v] != 0;
    unsigned inside = 0;
    for (Vertex u : g.neighbors(v)) {
      if (in_s[u]) {
        relevant = true;
        ++inside;
      }
    }
    if (relevant && inside < k) return false;
  }
  return true;
}

bool has_red_black_edge(const Graph& g, const Coloring& col) {
  for (const Edge& e : g.edges()) {
    const Color a = col.color[e.u];
    const Color b = col.color[e.v];
    if ((a == Color::Red && b == Color::Black) || (a == Color::Black && b == Color::Red)) return true;
  }
  return false;
}

RedBlueGraph rb_subgraph(const Graph& g, const Coloring& col) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (col.color[v] != Color::Black) keep.push_back(v);
  RedBlueGraph out;
  out.sub = induced_subgraph(g, keep);
  out.parts = components(out.sub.graph);
  return out;
}

RBStats component_stats(const Graph& g, const Coloring& col) {
  RBStats st;
  st.red = col.count(Color::Red);
  st.blue = col.count(Color::Blue);
  st.black = col.count(Color::Black);
  const RedBlueGraph rb = rb_subgraph(g, col);
  for (const auto& cell : rb.parts.cells) {
    const std::size_t size = cell.size();
    std::size_t reds = 0;
    for (Vertex local : cell)
      if (col.color[rb.sub.to_parent[local]] == Color::Red) ++reds;
    st.component_sizes.push_back(size);
    st.x[size] += size;
    if (reds > 0) st.y[reds] += reds;
    if (reds >= 2) st.y_multi += reds;
  }
  std::sort(st.component_sizes.rbegin(), st.component_sizes.rend());
  st.largest = st.component_sizes.empty() ? 0 : st.component_sizes.front();
  return st;
}

}  // namespace longcycle
