#include <numeric>

#include "doctest.h"
#include "helpers.hpp"
#include "longcycle/error.hpp"
#include "longcycle/oracle.hpp"

using namespace longcycle;

TEST_CASE("longest cycle examples") {
  CHECK(brute_longest_cycle(testing::path(8)) == 0);
  Graph c7p(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {6, 7}});
  CHECK(brute_longest_cycle(c7p) == 7);
  CHECK(brute_longest_cycle(testing::petersen()) == 9);
  CHECK(testing::dfs_longest_cycle(testing::petersen()) == 9);
  CHECK(brute_longest_cycle(testing::complete(6)) == 6);
  CHECK_THROWS_AS((void)brute_longest_cycle(testing::path(19)), SizeCapExceeded);
}

TEST_CASE("longest path examples") {
  CHECK(brute_longest_path(Graph(2, {{0, 1}})) == 1);
  CHECK(brute_longest_path(testing::cycle(5)) == 4);
  CHECK(brute_longest_path(Graph(3, {})) == 0);
  CHECK(brute_longest_path(testing::petersen()) == 9);
}

TEST_CASE("bitmask DP agrees with the DFS enumerator") {
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const std::size_t n = 4 + s % 9;
    const double c = 1.5 + static_cast<double>(s % 5);
    const Graph g = sample_gnp(n, std::min<double>(c, n), Seed{s});
    const std::size_t cyc = brute_longest_cycle(g);
    CHECK(cyc == testing::dfs_longest_cycle(g));
    CHECK(cyc <= brute_longest_path(g) + 1);
  }
}

TEST_CASE("cycle counts") {
  CHECK(count_cycles(testing::complete(4), 3) == 4);
  CHECK(count_cycles(testing::cycle(6), 6) == 1);
  CHECK(count_cycles(testing::cycle(6), 3) == 0);
  CHECK(count_cycles(testing::complete(5), 5) == 12);
  CHECK(count_cycles(testing::complete(5), 4) == 15);
  CHECK(count_cycles(testing::petersen(), 5) == 12);
  CHECK_THROWS_AS((void)count_cycles(testing::complete(5), 9), SizeCapExceeded);
}

TEST_CASE("cycle counts are invariant under relabeling and match presence") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Graph g = sample_gnp(12, 4, Seed{s});
    std::vector<Vertex> perm(12);
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng(Seed{s + 7});
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = testing::relabel(g, perm);
    const SpectrumReport rep = cycle_spectrum(g);
    for (std::size_t l = 3; l <= 8; ++l) {
      CHECK(count_cycles(h, l) == rep.counts[l]);
      CHECK(rep.present[l] == (rep.counts[l] > 0));
    }
  }
}

TEST_CASE("brute phi examples") {
  CHECK(brute_phi(Graph(1, {}), std::vector<Color>{Color::Red}) == 1);
  const Graph brb(3, {{0, 1}, {1, 2}});
  CHECK(brute_phi(brb, std::vector<Color>{Color::Blue, Color::Red, Color::Blue}) == 0);
}

TEST_CASE("matching oracle and Tutte-Berge witness") {
  CHECK(brute_matching_size(testing::cycle(6)) == 3);
  CHECK(brute_matching_size(testing::cycle(5)) == 2);
  CHECK(brute_matching_size(testing::petersen()) == 5);
  const auto u = tutte_berge_witness(testing::cycle(5), 2);
  REQUIRE(u.has_value());
  // Weak duality: no vertex subset certifies less than the maximum matching.
  const Graph c5 = testing::cycle(5);
  for (unsigned mask = 0; mask < 32; ++mask) {
    std::vector<Vertex> removed;
    for (Vertex v = 0; v < 5; ++v)
      if (mask >> v & 1u) removed.push_back(v);
    CHECK(removed.size() + 5 - odd_components_without(c5, removed) >= 4);
  }
  // Star K_{1,3}: removing the center leaves 3 odd components.
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(odd_components_without(star, std::vector<Vertex>{0}) == 3);
  CHECK(tutte_berge_witness(star, 1).has_value());
}
