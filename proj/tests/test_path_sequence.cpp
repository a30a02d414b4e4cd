#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "longcycle/path_sequence.hpp"
#include "longcycle/rng.hpp"

using namespace longcycle;

TEST_CASE("path sequence matches a vector model under random operations") {
  Rng rng(Seed{1});
  for (int round = 0; round < 20; ++round) {
    const std::size_t universe = 300;
    std::vector<Vertex> ids(universe);
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<Vertex> model(ids.begin(), ids.begin() + 50 + rng.below(200));
    PathSequence seq(universe, model);
    REQUIRE(seq.to_vector() == model);
    for (int op = 0; op < 400; ++op) {
      const std::size_t n = model.size();
      switch (rng.below(4)) {
        case 0: {
          std::size_t a = rng.below(n), b = rng.below(n);
          if (a > b) std::swap(a, b);
          seq.reverse(a, b);
          std::reverse(model.begin() + a, model.begin() + b + 1);
          break;
        }
        case 1: {
          const std::size_t k = rng.below(n);
          seq.rotate(k);
          std::rotate(model.begin(), model.begin() + k, model.end());
          break;
        }
        case 2: {
          const std::size_t i = rng.below(n);
          CHECK(seq.at(i) == model[i]);
          CHECK(seq.index_of(model[i]) == i);
          break;
        }
        default:
          CHECK(seq.front() == model.front());
          CHECK(seq.back() == model.back());
      }
    }
    CHECK(seq.to_vector() == model);
    CHECK(seq.size() == model.size());
  }
}

TEST_CASE("membership") {
  const std::vector<Vertex> order{4, 2, 7};
  PathSequence seq(10, order);
  CHECK(seq.contains(2));
  CHECK_FALSE(seq.contains(3));
  CHECK(seq.index_of(7) == 2);
}
