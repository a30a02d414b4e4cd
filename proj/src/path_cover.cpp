#include "longcycle/path_cover.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include "longcycle/error.hpp"
#include "longcycle/parallel.hpp"

namespace longcycle {
namespace {

using Mask = std::uint64_t;

constexpr Mask bit(unsigned v) { return Mask{1} << v; }

struct Score {
  std::uint32_t uncovered = 0;
  std::uint32_t singles = 0;

  Score operator+(const Score& o) const { return {uncovered + o.uncovered, singles + o.singles}; }
};

bool better(const Score& a, const Score& b) {
  return a.uncovered < b.uncovered || (a.uncovered == b.uncovered && a.singles > b.singles);
}

// Memoized search over remaining vertex sets. A state is the set S of
// vertices still available; the smallest red of a connected S is either
// left uncovered or placed on some blue-endpoint path inside S.
class CoverSolver {
 public:
  CoverSolver(const Graph& t, std::span<const Color> colors) : n_(static_cast<unsigned>(t.order())) {
    adj_.assign(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex u : t.neighbors(v)) adj_[v] |= bit(u);
      if (colors[v] == Color::Red) red_ |= bit(v);
      else if (colors[v] == Color::Blue) blue_ |= bit(v);
      else throw InvalidParameter("path cover: component contains a black vertex");
    }
  }

  Mask all() const { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }
  Mask red() const { return red_; }

  Score solve(Mask s) {
    if ((s & red_) == 0) return {};
    if (auto it = memo_.find(s); it != memo_.end()) return it->second.score;

    Entry entry;
    const std::vector<Mask> parts = split(s);
    if (parts.size() > 1) {
      entry.kind = Kind::Split;
      for (Mask p : parts) entry.score = entry.score + solve(p);
    } else if (Mask dead = dead_reds(s); dead != 0) {
      entry.kind = Kind::Prune;
      entry.aux = dead;
      entry.score = solve(s & ~dead);
      entry.score.uncovered += static_cast<std::uint32_t>(std::popcount(dead));
    } else {
      const auto r = static_cast<Vertex>(std::countr_zero(s & red_));
      bool have = false;
      for (auto& path : candidate_paths(r, s)) {
        Mask pm = 0;
        for (auto v : path) pm |= bit(v);
        const auto reds = static_cast<unsigned>(std::popcount(pm & red_));
        Score sc = solve(s & ~pm);
        if (reds == 1) ++sc.singles;
        if (!have || better(sc, entry.score)) {
          have = true;
          entry.score = sc;
          entry.kind = Kind::Path;
          entry.aux = pm;
          entry.path = std::move(path);
        }
      }
      Score skip = solve(s & ~bit(r));
      ++skip.uncovered;
      if (!have || better(skip, entry.score)) {
        entry.score = skip;
        entry.kind = Kind::Uncover;
        entry.aux = bit(r);
        entry.path.clear();
      }
    }
    const Score result = entry.score;
    memo_.emplace(s, std::move(entry));
    return result;
  }

  void reconstruct(Mask s, std::vector<std::vector<Vertex>>& out) const {
    if ((s & red_) == 0) return;
    const Entry& e = memo_.at(s);
    switch (e.kind) {
      case Kind::Split:
        for (Mask p : split(s)) reconstruct(p, out);
        return;
      case Kind::Prune:
      case Kind::Uncover:
        reconstruct(s & ~e.aux, out);
        return;
      case Kind::Path:
        out.emplace_back(e.path.begin(), e.path.end());
        reconstruct(s & ~e.aux, out);
        return;
    }
  }

 private:
  enum class Kind : std::uint8_t { Split, Prune, Uncover, Path };
  struct Entry {
    Score score;
    Kind kind = Kind::Split;
    Mask aux = 0;
    std::vector<std::uint8_t> path;
  };

  std::vector<Mask> split(Mask s) const {
    std::vector<Mask> parts;
    while (s != 0) {
      Mask comp = s & (~s + 1);
      Mask frontier = comp;
      while (frontier != 0) {
        Mask next = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) next |= adj_[std::countr_zero(f)];
        next &= s & ~comp;
        comp |= next;
        frontier = next;
      }
      parts.push_back(comp);
      s &= ~comp;
    }
    return parts;
  }

  // Reds that cannot be interior to any path inside s.
  Mask dead_reds(Mask s) const {
    if ((s & blue_) == 0) return s & red_;
    Mask dead = 0;
    for (Mask m = s & red_; m != 0; m &= m - 1) {
      const auto v = static_cast<unsigned>(std::countr_zero(m));
      if (std::popcount(adj_[v] & s) < 2) dead |= bit(v);
    }
    return dead;
  }

  struct Arm {
    std::vector<std::uint8_t> seq;  // from a neighbor of r outwards, ends blue
    Mask mask = 0;
  };

  void grow(Mask s, Mask used, std::vector<std::uint8_t>& seq, std::vector<Arm>& arms) const {
    const unsigned x = seq.back();
    if (blue_ & bit(x)) arms.push_back({seq, used});
    for (Mask m = adj_[x] & s & ~used; m != 0; m &= m - 1) {
      const auto y = static_cast<std::uint8_t>(std::countr_zero(m));
      seq.push_back(y);
      grow(s, used | bit(y), seq, arms);
      seq.pop_back();
    }
  }

  // All simple paths inside s with blue endpoints and r in the interior,
  // as canonical sequences (front < back), sorted lexicographically.
  std::vector<std::vector<std::uint8_t>> candidate_paths(Vertex r, Mask s) const {
    std::vector<Arm> arms;
    std::vector<std::uint8_t> seq;
    for (Mask m = adj_[r] & s; m != 0; m &= m - 1) {
      const auto y = static_cast<std::uint8_t>(std::countr_zero(m));
      seq.assign(1, y);
      grow(s, bit(r) | bit(y), seq, arms);
    }
    for (auto& a : arms) a.mask &= ~bit(r);
    std::vector<std::vector<std::uint8_t>> paths;
    for (std::size_t i = 0; i < arms.size(); ++i) {
      for (std::size_t j = i + 1; j < arms.size(); ++j) {
        if (arms[i].mask & arms[j].mask) continue;
        std::vector<std::uint8_t> p(arms[i].seq.rbegin(), arms[i].seq.rend());
        p.push_back(static_cast<std::uint8_t>(r));
        p.insert(p.end(), arms[j].seq.begin(), arms[j].seq.end());
        if (p.front() > p.back()) std::reverse(p.begin(), p.end());
        paths.push_back(std::move(p));
      }
    }
    std::sort(paths.begin(), paths.end());
    return paths;
  }

  unsigned n_;
  std::vector<Mask> adj_;
  Mask red_ = 0;
  Mask blue_ = 0;
  std::unordered_map<Mask, Entry> memo_;
};

void sort_paths(std::vector<CoverPath>& paths) {
  std::sort(paths.begin(), paths.end(), [](const CoverPath& a, const CoverPath& b) {
    return *std::min_element(a.vertices.begin(), a.vertices.end()) <
           *std::min_element(b.vertices.begin(), b.vertices.end());
  });
}

// Fills the remaining blue vertices in as length-0 paths and sets counts.
void finish_cover(PathCover& cover, std::span<const Vertex> cell, const std::vector<Color>& color) {
  std::vector<char> on_path(color.size(), 0);
  std::size_t covered = 0;
  for (auto& p : cover.paths) {
    p.reds = 0;
    for (Vertex v : p.vertices) {
      on_path[v] = 1;
      if (color[v] == Color::Red) ++p.reds;
    }
    covered += p.reds;
  }
  cover.red_total = 0;
  for (Vertex v : cell) {
    if (color[v] == Color::Red) ++cover.red_total;
    else if (!on_path[v]) cover.paths.push_back({{v}, 0});
  }
  cover.uncovered_red = cover.red_total - covered;
  sort_paths(cover.paths);
}

CoverFamily assemble(std::vector<PathCover> covers) {
  CoverFamily fam;
  fam.covers = std::move(covers);
  for (const auto& c : fam.covers) fam.total_phi += c.uncovered_red;
  fam.singles = extract_singles(fam);
  return fam;
}

}  // namespace

PathCover optimal_path_cover(const Graph& t, std::span<const Color> colors, const CoverOptions& options) {
  const std::size_t cap = std::min<std::size_t>(options.size_cap, 64);
  if (t.order() > cap) {
    throw SizeCapExceeded("path cover: component of size " + std::to_string(t.order()) +
                          " exceeds the cap of " + std::to_string(cap));
  }
  if (colors.size() != t.order()) throw InvalidParameter("path cover: one color per vertex required");
  PathCover cover;
  if (t.order() > 0) {
    CoverSolver solver(t, colors);
    solver.solve(solver.all());
    std::vector<std::vector<Vertex>> raw;
    solver.reconstruct(solver.all(), raw);
    for (auto& p : raw) cover.paths.push_back({std::move(p), 0});
  }
  std::vector<Vertex> cell(t.order());
  for (Vertex v = 0; v < t.order(); ++v) cell[v] = v;
  finish_cover(cover, cell, std::vector<Color>(colors.begin(), colors.end()));
  return cover;
}

CoverFamily exact_cover_family(const Graph& g, const Coloring& col, const CoverOptions& options) {
  const RedBlueGraph rb = rb_subgraph(g, col);
  std::vector<PathCover> covers(rb.parts.cells.size());
  parallel_for(covers.size(), options.threads, [&](std::size_t ci) {
    const auto& cell = rb.parts.cells[ci];
    std::vector<Vertex> original(cell.size());
    for (std::size_t i = 0; i < cell.size(); ++i) original[i] = rb.sub.to_parent[cell[i]];
    PathCover& cover = covers[ci];
    bool any_red = false;
    for (Vertex v : original) any_red |= col.color[v] == Color::Red;
    if (any_red) {
      const InducedSubgraph comp = induced_subgraph(rb.sub.graph, cell);
      std::vector<Color> local(cell.size());
      for (std::size_t i = 0; i < cell.size(); ++i) local[i] = col.color[rb.sub.to_parent[comp.to_parent[i]]];
      try {
        PathCover solved = optimal_path_cover(comp.graph, local, options);
        for (auto& p : solved.paths) {
          if (p.vertices.size() < 2) continue;
          for (Vertex& v : p.vertices) v = rb.sub.to_parent[comp.to_parent[v]];
          cover.paths.push_back(std::move(p));
        }
      } catch (const SizeCapExceeded& e) {
        throw SizeCapExceeded(std::string(e.what()) + " (component " + std::to_string(ci) +
                              ", smallest vertex " + std::to_string(original.front()) + ")");
      }
    }
    cover.component = ci;
    finish_cover(cover, original, col.color);
  });
  return assemble(std::move(covers));
}

CoverFamily greedy_cover(const Graph& g, const Coloring& col) {
  const RedBlueGraph rb = rb_subgraph(g, col);
  std::vector<PathCover> covers(rb.parts.cells.size());
  for (std::size_t ci = 0; ci < covers.size(); ++ci) {
    std::vector<Vertex> original;
    std::vector<Vertex> reds;
    for (Vertex local : rb.parts.cells[ci]) {
      const Vertex v = rb.sub.to_parent[local];
      original.push_back(v);
      if (col.color[v] == Color::Red) reds.push_back(v);
    }
    PathCover& cover = covers[ci];
    cover.component = ci;
    if (reds.size() == 1 && g.degree(reds.front()) >= 2) {
      const auto nb = g.neighbors(reds.front());
      cover.paths.push_back({{nb[0], reds.front(), nb[1]}, 0});
    }
    finish_cover(cover, original, col.color);
  }
  return assemble(std::move(covers));
}

std::vector<CoverPath> extract_singles(const CoverFamily& fam) {
  std::vector<CoverPath> singles;
  for (const auto& c : fam.covers)
    for (const auto& p : c.paths)
      if (p.reds == 1) singles.push_back(p);
  sort_paths(singles);
  return singles;
}

std::size_t longest_cycle_upper_bound(const Graph& g, const Coloring& col, const CoverFamily& fam) {
  if (has_red_black_edge(g, col)) throw InvalidColoring("coloring has a red-black edge");
  if (col.count(Color::Black) == 0) {
    throw UnsupportedRegime("upper bound requires a nonempty black set");
  }
  return g.order() - fam.total_phi;
}

}  // namespace longcycle
