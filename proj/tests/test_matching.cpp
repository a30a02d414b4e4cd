#include "doctest.h"
#include "helpers.hpp"
#include "longcycle/matching.hpp"
#include "longcycle/oracle.hpp"

using namespace longcycle;

TEST_CASE("small matchings") {
  CHECK(maximum_matching(testing::cycle(6)).size == 3);
  const std::vector<Edge> forbid{{0, 1}};
  const Matching m = maximum_matching(testing::complete(4), forbid);
  CHECK(m.size == 2);
  CHECK(is_matching(testing::complete(4), m, forbid));
  CHECK(m.mate[0] != 1);
  CHECK(maximum_matching(testing::petersen()).size == 5);
  CHECK(maximum_matching(Graph(0, {})).size == 0);
}

TEST_CASE("blossoms are handled") {
  // Two triangles joined by a path: greedy choices must be undone.
  const Graph g(8, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 7}});
  CHECK(maximum_matching(g).size == 4);
}

TEST_CASE("maximum matching agrees with brute force and has a Tutte-Berge witness") {
  for (std::uint64_t s = 0; s < 500; ++s) {
    const std::size_t n = 2 + s % 11;
    const Graph g = sample_gnp(n, std::min<double>(n, 1.0 + static_cast<double>(s % 7)), Seed{s});
    const Matching m = maximum_matching(g);
    CHECK(is_matching(g, m));
    CHECK(m.size == brute_matching_size(g));
    CHECK(tutte_berge_witness(g, m.size).has_value());
  }
}

TEST_CASE("forbidden edges are avoided on larger graphs") {
  const Graph g = sample_gnp(5000, 6, Seed{42});
  std::vector<Edge> forbid;
  for (std::size_t i = 0; i < g.size(); i += 7) forbid.push_back(g.edges()[i]);
  const Matching m = maximum_matching(g, forbid);
  CHECK(is_matching(g, m, forbid));
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (i % 7 != 0) kept.push_back(g.edges()[i]);
  CHECK(maximum_matching(Graph(g.order(), kept)).size == m.size);
}
