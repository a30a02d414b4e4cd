#include "longcycle/matching.hpp"

#include <algorithm>
#include <unordered_set>

namespace longcycle {
namespace {

class Blossom {
 public:
  Blossom(const Graph& g, std::span<const Edge> forbidden)
      : g_(g), n_(g.order()), mate_(n_, kUnmatched), link_(n_, kUnmatched), base_(n_), label_(n_, kFree),
        stamp_(n_, 0) {
    for (const Edge& e : forbidden) banned_.insert(e.key());
    for (Vertex v = 0; v < n_; ++v) base_[v] = v;
  }

  Matching run() {
    greedy();
    for (Vertex s = 0; s < n_; ++s) {
      // A vertex with no augmenting path stays unaugmentable after later
      // augmentations, so one search per root is enough.
      if (mate_[s] == kUnmatched) search(s);
    }
    Matching m;
    m.mate = std::move(mate_);
    for (Vertex v = 0; v < n_; ++v) m.size += m.mate[v] != kUnmatched && v < m.mate[v];
    return m;
  }

 private:
  static constexpr int kFree = -1;
  static constexpr int kEven = 0;
  static constexpr int kOdd = 1;

  bool allowed(Vertex a, Vertex b) const { return banned_.empty() || !banned_.contains(Edge(a, b).key()); }

  void greedy() {
    // Low-degree vertices first leaves fewer vertices for the searches.
    std::vector<Vertex> order(n_);
    for (Vertex v = 0; v < n_; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g_.degree(a) < g_.degree(b); });
    for (Vertex v : order) {
      if (mate_[v] != kUnmatched) continue;
      for (Vertex u : g_.neighbors(v)) {
        if (mate_[u] == kUnmatched && allowed(v, u)) {
          mate_[v] = u;
          mate_[u] = v;
          break;
        }
      }
    }
  }

  Vertex find(Vertex x) {
    while (base_[x] != x) {
      base_[x] = base_[base_[x]];
      x = base_[x];
    }
    return x;
  }

  Vertex lca(Vertex x, Vertex y) {
    ++clock_;
    x = find(x);
    y = find(y);
    for (;; std::swap(x, y)) {
      if (x == kUnmatched) continue;
      if (stamp_[x] == clock_) return x;
      stamp_[x] = clock_;
      x = mate_[x] == kUnmatched ? kUnmatched : find(link_[mate_[x]]);
    }
  }

  void shrink(Vertex x, Vertex y, Vertex top) {
    while (find(x) != top) {
      link_[x] = y;
      y = mate_[x];
      if (label_[y] == kOdd) {
        label_[y] = kEven;
        queue_.push_back(y);
      }
      if (find(x) == x) base_[x] = top;
      if (find(y) == y) base_[y] = top;
      x = link_[y];
    }
  }

  void augment(Vertex y) {
    while (y != kUnmatched) {
      const Vertex x = link_[y];
      const Vertex next = mate_[x];
      mate_[y] = x;
      mate_[x] = y;
      y = next;
    }
  }

  void reset() {
    for (Vertex v : touched_) {
      base_[v] = v;
      label_[v] = kFree;
      link_[v] = kUnmatched;
    }
    touched_.clear();
  }

  bool search(Vertex s) {
    queue_.clear();
    touched_.push_back(s);
    label_[s] = kEven;
    queue_.push_back(s);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex x = queue_[head];
      for (Vertex y : g_.neighbors(x)) {
        if (!allowed(x, y)) continue;
        if (label_[y] == kFree) {
          touched_.push_back(y);
          label_[y] = kOdd;
          link_[y] = x;
          if (mate_[y] == kUnmatched) {
            augment(y);
            reset();
            return true;
          }
          const Vertex z = mate_[y];
          touched_.push_back(z);
          label_[z] = kEven;
          queue_.push_back(z);
        } else if (label_[y] == kEven && find(x) != find(y)) {
          const Vertex top = lca(x, y);
          shrink(x, y, top);
          shrink(y, x, top);
        }
      }
    }
    reset();
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::unordered_set<std::uint64_t> banned_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> link_;
  std::vector<Vertex> base_;
  std::vector<int> label_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t clock_ = 0;
  std::vector<Vertex> queue_;
  std::vector<Vertex> touched_;
};

}  // namespace

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < mate.size(); ++v) {
    if (mate[v] != kUnmatched && v < mate[v]) out.emplace_back(v, mate[v]);
  }
  return out;
}

Matching maximum_matching(const Graph& g, std::span<const Edge> forbidden) { return Blossom(g, forbidden).run(); }

bool is_matching(const Graph& g, const Matching& m, std::span<const Edge> forbidden) {
  if (m.mate.size() != g.order()) return false;
  std::unordered_set<std::uint64_t> banned;
  for (const Edge& e : forbidden) banned.insert(e.key());
  std::size_t count = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const Vertex u = m.mate[v];
    if (u == kUnmatched) continue;
    if (u >= g.order() || u == v || m.mate[u] != v || !g.has_edge(u, v) || banned.contains(Edge(u, v).key())) {
      return false;
    }
    count += v < u;
  }
  return count == m.size;
}

}  // namespace longcycle
