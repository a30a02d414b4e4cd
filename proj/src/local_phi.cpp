#include <algorithm>
#include <cmath>

#include "longcycle/error.hpp"
#include "longcycle/estimator.hpp"
#include "longcycle/parallel.hpp"
#include "longcycle/path_cover.hpp"
#include "longcycle/strong_core.hpp"

namespace longcycle {

const char* to_string(LocalReason r) {
  switch (r) {
    case LocalReason::BlackCenter: return "black-center";
    case LocalReason::CapExceeded: return "cap-exceeded";
    case LocalReason::CycleFound: return "cycle-found";
    case LocalReason::Computed: return "computed";
  }
  return "?";
}

double ball_cap(double c, unsigned k, unsigned i) { return 10.0 * std::pow(c * k, 3.0 * i); }

namespace {

// Per-worker buffers indexed by vertex, cleared by bumping a generation.
class BallWorkspace {
 public:
  explicit BallWorkspace(std::size_t n) : stamp_(n, 0), depth_(n), parent_(n), local_(n) {}

  LocalValue evaluate(const Graph& g, Vertex v, unsigned k, double c) {
    if (k == 0) throw InvalidParameter("local radius must be at least 1");
    ++gen_;
    ball_.clear();
    visit(v, 0, kNoVertex);
    LocalValue out;
    out.phi = 0;

    std::size_t layer_begin = 0;
    for (unsigned d = 0; d < k; ++d) {
      const std::size_t layer_end = ball_.size();
      for (std::size_t i = layer_begin; i < layer_end; ++i) {
        const Vertex x = ball_[i];
        for (Vertex y : g.neighbors(x)) {
          if (y == parent_[x]) continue;
          if (stamp_[y] == gen_) {
            out.reason = LocalReason::CycleFound;
            return out;
          }
          visit(y, d + 1, x);
        }
      }
      layer_begin = layer_end;
      const std::size_t layer = ball_.size() - layer_end;
      if (layer == 0) break;
      if (static_cast<double>(layer) >= ball_cap(c, k, d + 1)) {
        out.reason = LocalReason::CapExceeded;
        return out;
      }
    }
    for (std::size_t i = layer_begin; i < ball_.size(); ++i) {
      const Vertex x = ball_[i];
      if (depth_[x] < k) continue;
      for (Vertex y : g.neighbors(x)) {
        if (y != parent_[x] && stamp_[y] == gen_) {
          out.reason = LocalReason::CycleFound;
          return out;
        }
      }
    }
    return peel(g, v, k, out);
  }

 private:
  void visit(Vertex y, unsigned d, Vertex parent) {
    stamp_[y] = gen_;
    depth_[y] = d;
    parent_[y] = parent;
    local_[y] = static_cast<Vertex>(ball_.size());
    ball_.push_back(y);
  }

  bool in_ball(Vertex y) const { return stamp_[y] == gen_; }

  // Strong 4-core peeling confined to the ball's interior.
  LocalValue& peel(const Graph& g, Vertex v, unsigned k, LocalValue& out) {
    const std::size_t m = ball_.size();
    std::vector<Color> color(m, Color::Black);
    std::vector<unsigned> count(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (Vertex y : g.neighbors(ball_[i])) count[i] += in_ball(y);
    }
    std::vector<Vertex> queue;
    auto interior = [&](Vertex x) { return depth_[x] < k; };
    auto consider = [&](Vertex x) {
      const Vertex lx = local_[x];
      if (interior(x) && color[lx] != Color::Red && count[lx] < 4) queue.push_back(x);
    };
    auto lose_black = [&](Vertex x) {
      for (Vertex y : g.neighbors(x)) {
        if (!in_ball(y)) continue;
        --count[local_[y]];
        consider(y);
      }
    };
    for (Vertex x : ball_) consider(x);
    while (!queue.empty()) {
      const Vertex u = queue.back();
      queue.pop_back();
      const Vertex lu = local_[u];
      if (color[lu] == Color::Red || count[lu] >= 4) continue;
      const bool was_black = color[lu] == Color::Black;
      color[lu] = Color::Red;
      if (was_black) lose_black(u);
      for (Vertex y : g.neighbors(u)) {
        if (!in_ball(y) || !interior(y) || color[local_[y]] != Color::Black) continue;
        color[local_[y]] = Color::Blue;
        lose_black(y);
        consider(y);
      }
    }
    if (color[local_[v]] == Color::Black) {
      out.reason = LocalReason::BlackCenter;
      return out;
    }

    // v's component among the red and blue vertices.
    std::vector<Vertex> comp{v};
    std::vector<char> taken(m, 0);
    taken[local_[v]] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex y : g.neighbors(comp[i])) {
        if (!in_ball(y) || taken[local_[y]] || color[local_[y]] == Color::Black) continue;
        taken[local_[y]] = 1;
        comp.push_back(y);
      }
    }
    std::sort(comp.begin(), comp.end());
    const InducedSubgraph t = induced_subgraph(g, comp);
    std::vector<Color> tcolor(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) tcolor[i] = color[local_[comp[i]]];
    const PathCover cover = optimal_path_cover(t.graph, tcolor);
    out.reason = LocalReason::Computed;
    out.component_size = comp.size();
    out.uncovered = cover.uncovered_red;
    out.phi = Rational(static_cast<long long>(cover.uncovered_red), static_cast<long long>(comp.size()));
    return out;
  }

  std::vector<std::uint32_t> stamp_;
  std::vector<unsigned> depth_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> local_;
  std::vector<Vertex> ball_;
  std::uint32_t gen_ = 0;
};

}  // namespace

LocalValue local_phi_k(const Graph& g, Vertex v, unsigned k, double c) {
  if (v >= g.order()) throw InvalidParameter("vertex out of range");
  BallWorkspace ws(g.order());
  return ws.evaluate(g, v, k, c);
}

Rational l_cnk(const Graph& g, unsigned k, double c, unsigned threads) {
  if (k == 0) throw InvalidParameter("local radius must be at least 1");
  const std::size_t n = g.order();
  // A vertex in the global strong 4-core stays black in every ball, so its
  // local value is 0 whatever the ball looks like.
  const Coloring global = strong_core_coloring(g, 4);
  const unsigned workers = resolve_threads(threads);
  const std::size_t chunks = std::min<std::size_t>(n, std::size_t{workers} * 4);
  std::vector<Rational> partial(chunks, 0);
  parallel_for(chunks, workers, [&](std::size_t chunk) {
    BallWorkspace ws(n);
    Rational sum = 0;
    for (std::size_t v = chunk; v < n; v += chunks) {
      if (global.color[v] == Color::Black) continue;
      sum += ws.evaluate(g, static_cast<Vertex>(v), k, c).phi;
    }
    partial[chunk] = sum;
  });
  Rational total = static_cast<long long>(n);
  for (const Rational& p : partial) total -= p;
  return total;
}

}  // namespace longcycle
