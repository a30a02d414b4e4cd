#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "longcycle/graph.hpp"
#include "longcycle/rng.hpp"

namespace longcycle {

using Rational = boost::multiprecision::cpp_rational;

enum class LocalReason : std::uint8_t { BlackCenter, CapExceeded, CycleFound, Computed };

[[nodiscard]] const char* to_string(LocalReason r);

/// Deficiency of v seen through its radius-k ball.
struct LocalValue {
  Rational phi;                  // in [0, 1]
  LocalReason reason = LocalReason::Computed;
  std::size_t component_size = 0;  // |T| when computed
  std::size_t uncovered = 0;       // uncovered reds of T when computed
};

/// Ball-size threshold for layer i: 10 (c k)^(3 i).
[[nodiscard]] double ball_cap(double c, unsigned k, unsigned i);

/// Local value of v. Layers are grown breadth-first; the search stops at
/// the first layer reaching ball_cap (cap-exceeded) or the first edge
/// closing a cycle inside the ball (cycle-found), whichever comes first.
/// Otherwise the ball is a tree and is peeled with the strong 4-core rule,
/// never recoloring the outermost layer; if v stays black the value is 0,
/// else it is the uncovered-red fraction of v's red/blue component.
[[nodiscard]] LocalValue local_phi_k(const Graph& g, Vertex v, unsigned k, double c);

/// n minus the sum of local values, exact.
[[nodiscard]] Rational l_cnk(const Graph& g, unsigned k, double c, unsigned threads = 1);

struct EstimateReport {
  std::string target;
  double estimate = 0.0;
  double stderr_ = 0.0;
  double band = 0.0;           // stderr plus the truncation allowance, when defined
  std::size_t trials = 0;
  std::size_t n = 0;
  double c = 0.0;
  unsigned k = 0;
  std::uint64_t seed = 0;
  std::vector<double> samples;  // per-trial values, in trial order
};

/// Mean and standard error of l_cnk / n over `trials` graphs G(n, c/n),
/// trial t using seed.derive(t).
[[nodiscard]] EstimateReport estimate_rho(double c, unsigned k, std::size_t n, std::size_t trials, Seed seed,
                                          unsigned threads = 1);

/// estimate_rho at k = kmax with band stderr + 1 / (2 (kmax - 1)).
[[nodiscard]] EstimateReport estimate_f(double c, unsigned kmax, std::size_t n, std::size_t trials, Seed seed,
                                        unsigned threads = 1);

/// Limiting probability that G(n, c/n) is weakly pancyclic, within tol.
/// Throws InvalidParameter for c <= 1 or tol <= 0.
[[nodiscard]] double weakly_pancyclic_prob(double c, double tol);

/// Truncation points used by weakly_pancyclic_prob.
struct PancyclicTruncation {
  std::size_t product_end = 0;  // last factor index kept in the infinite products
  std::size_t sum_end = 0;      // last girth term kept
};

[[nodiscard]] PancyclicTruncation pancyclic_truncation(double c, double tol);

/// Limiting probability that every length in `lengths` appears as a cycle.
[[nodiscard]] double spectrum_prob(double c, const std::set<unsigned>& lengths);

struct SpectrumEstimate {
  unsigned length = 0;
  double presence = 0.0;         // fraction of trials with such a cycle
  double mean_count = 0.0;
  double expected_presence = 0.0;
  double expected_mean = 0.0;    // c^l / (2 l)
};

/// Cycle presence frequencies and mean counts over `trials` graphs
/// G(n, c/n). Lengths must lie in [3, 8]; trials >= 100.
[[nodiscard]] std::vector<SpectrumEstimate> mc_spectrum(std::size_t n, double c, const std::set<unsigned>& lengths,
                                                        std::size_t trials, Seed seed, unsigned threads = 1);

}  // namespace longcycle
