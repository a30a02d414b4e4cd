#include <cmath>

#include "longcycle/error.hpp"
#include "longcycle/estimator.hpp"
#include "longcycle/oracle.hpp"
#include "longcycle/parallel.hpp"

namespace longcycle {

std::vector<SpectrumEstimate> mc_spectrum(std::size_t n, double c, const std::set<unsigned>& lengths,
                                          std::size_t trials, Seed seed, unsigned threads) {
  if (trials < 100) throw InvalidParameter("at least 100 trials are required");
  for (unsigned l : lengths) {
    if (l < 3 || l > 8) throw InvalidParameter("cycle lengths must lie in [3, 8]");
  }
  const std::vector<unsigned> ls(lengths.begin(), lengths.end());
  std::vector<std::vector<std::uint64_t>> counts(trials, std::vector<std::uint64_t>(ls.size(), 0));
  parallel_for(trials, resolve_threads(threads), [&](std::size_t t) {
    const Graph g = sample_gnp(n, c, seed.derive(t));
    for (std::size_t i = 0; i < ls.size(); ++i) counts[t][i] = count_cycles(g, ls[i]);
  });
  std::vector<SpectrumEstimate> out;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    SpectrumEstimate e;
    e.length = ls[i];
    double present = 0.0;
    double total = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      present += counts[t][i] > 0;
      total += static_cast<double>(counts[t][i]);
    }
    e.presence = present / static_cast<double>(trials);
    e.mean_count = total / static_cast<double>(trials);
    e.expected_mean = std::pow(c, ls[i]) / (2.0 * ls[i]);
    e.expected_presence = spectrum_prob(c, {ls[i]});
    out.push_back(e);
  }
  return out;
}

}  // namespace longcycle
