#include <numeric>

#include "doctest.h"
#include "helpers.hpp"
#include "longcycle/strong_core.hpp"

using namespace longcycle;

namespace {

// Largest strong k-core by exhaustive search: the union of all valid sets,
// checked to be valid itself.
std::vector<Vertex> brute_core(const Graph& g, unsigned k) {
  const auto n = static_cast<unsigned>(g.order());
  std::uint32_t all = 0;
  std::vector<Vertex> s;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    s.clear();
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    if (verify_strong_core(g, s, k)) all |= mask;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (all >> v & 1) out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("complete graph K6 is entirely black") {
  const Coloring col = strong_core_coloring(testing::complete(6), 4);
  CHECK(col.count(Color::Black) == 6);
}

TEST_CASE("C5 erodes to all red") {
  const Coloring col = strong_core_coloring(testing::cycle(5), 4);
  CHECK(col.count(Color::Black) == 0);
  CHECK(col.count(Color::Red) == 5);
}

TEST_CASE("black set equals the exhaustive maximal strong core") {
  const Graph g = sample_gnp(12, 6, Seed{2024});
  const Coloring col = strong_core_coloring(g, 4);
  CHECK(col.vertices(Color::Black) == brute_core(g, 4));
  CHECK(verify_strong_core(g, brute_core(g, 4), 4));
}

TEST_CASE("maximality on many small graphs") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Graph g = sample_gnp(10, 5.5, Seed{s});
    CHECK(strong_core_coloring(g, 4).vertices(Color::Black) == brute_core(g, 4));
  }
}

TEST_CASE("rb_subgraph") {
  const RedBlueGraph all_black = rb_subgraph(testing::complete(6), strong_core_coloring(testing::complete(6), 4));
  CHECK(all_black.sub.graph.order() == 0);
  CHECK(all_black.parts.cells.empty());
  const Graph c5 = testing::cycle(5);
  const RedBlueGraph rb = rb_subgraph(c5, strong_core_coloring(c5, 4));
  CHECK(rb.sub.graph.order() == 5);
  CHECK(rb.parts.cells.size() == 1);
}

TEST_CASE("component_stats") {
  const RBStats none = component_stats(testing::complete(6), strong_core_coloring(testing::complete(6), 4));
  CHECK(none.x.empty());
  CHECK(none.y.empty());
  CHECK(none.largest == 0);
  CHECK(none.red == 0);
  const Graph c5 = testing::cycle(5);
  const RBStats s = component_stats(c5, strong_core_coloring(c5, 4));
  CHECK(s.x.at(5) == 5);
  CHECK(s.component_sizes == std::vector<std::size_t>{5});
  CHECK(s.red == 5);
  CHECK(s.y.at(5) == 5);
  CHECK(s.largest == 5);
}

TEST_CASE("statistics invariants on a sampled graph") {
  const Graph g = sample_gnp(20000, 6, Seed{77});
  const Coloring col = strong_core_coloring(g, 4);
  const RBStats s = component_stats(g, col);
  std::size_t sx = 0, sy = 0;
  for (auto [i, v] : s.x) sx += v;
  for (auto [i, v] : s.y)
    if (i >= 2) sy += v;
  CHECK(sx == s.red + s.blue);
  CHECK(sy == s.y_multi);
}

TEST_CASE("verify_strong_core") {
  std::vector<Vertex> all(6);
  std::iota(all.begin(), all.end(), 0);
  CHECK(verify_strong_core(testing::complete(6), all, 4));
  const std::vector<Vertex> some{0, 2};
  CHECK_FALSE(verify_strong_core(testing::cycle(5), some, 4));
  CHECK(verify_strong_core(testing::cycle(5), {}, 4));
}

TEST_CASE("every red/blue component is at least a quarter red") {
  for (std::uint64_t s = 0; s < 3; ++s) {
    const Graph g = sample_gnp(10000, 8, Seed{500 + s});
    const Coloring col = strong_core_coloring(g, 4);
    const RedBlueGraph rb = rb_subgraph(g, col);
    for (const auto& cell : rb.parts.cells) {
      std::size_t reds = 0;
      for (Vertex v : cell) reds += col.is(rb.sub.to_parent[v], Color::Red);
      CHECK(4 * reds >= cell.size());
    }
    CHECK_FALSE(has_red_black_edge(g, col));
  }
}

TEST_CASE("processing order does not matter") {
  const Graph g = sample_gnp(3000, 5, Seed{31});
  const Coloring base = strong_core_coloring(g, 4);
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(Seed{32});
  for (int t = 0; t < 100; ++t) {
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(strong_core_coloring(g, 4, order).color == base.color);
  }
  CHECK(verify_strong_core(g, base.vertices(Color::Black), 4));
}

TEST_CASE("component size profile stays under the expected-size bound") {
  const std::size_t n = 100000;
  for (const double c : {10.0, 20.0}) {
    std::map<std::size_t, double> mean;
    const int seeds = c < 15 ? 100 : 20;
    for (int s = 0; s < seeds; ++s) {
      const Graph g = sample_gnp(n, c, Seed{9000u + static_cast<unsigned>(s)});
      const RBStats st = component_stats(g, strong_core_coloring(g, 4));
      for (auto [i, v] : st.x) mean[i] += static_cast<double>(v) / seeds;
    }
    for (auto [i, v] : mean) {
      CAPTURE(c);
      CAPTURE(i);
      const double bound = std::pow(0.8, -static_cast<double>(std::min<std::size_t>(i, 1000))) * n / (c * i);
      CHECK(v <= bound);
    }
  }
}

TEST_CASE("size profile at c=10 peaks at four and has a large component") {
  const Graph g = sample_gnp(100000, 10, Seed{9000});
  const RBStats st = component_stats(g, strong_core_coloring(g, 4));
  CHECK(st.x.at(4) > st.x.at(1));
  CHECK(st.largest > 1000);
}
