#include <cmath>
#include <numeric>

#include "longcycle/error.hpp"
#include "longcycle/estimator.hpp"
#include "longcycle/parallel.hpp"

namespace longcycle {

EstimateReport estimate_rho(double c, unsigned k, std::size_t n, std::size_t trials, Seed seed, unsigned threads) {
  if (trials < 2) throw InvalidParameter("at least 2 trials are needed for a standard error");
  if (n == 0) throw InvalidParameter("n must be positive");
  EstimateReport rep;
  rep.target = "rho";
  rep.trials = trials;
  rep.n = n;
  rep.c = c;
  rep.k = k;
  rep.seed = seed.master;
  rep.samples.assign(trials, 0.0);
  parallel_for(trials, resolve_threads(threads), [&](std::size_t t) {
    const Graph g = sample_gnp(n, c, seed.derive(t));
    const Rational value = l_cnk(g, k, c, 1) / static_cast<long long>(n);
    rep.samples[t] = static_cast<double>(value);
  });
  const double mean = std::accumulate(rep.samples.begin(), rep.samples.end(), 0.0) / static_cast<double>(trials);
  double ss = 0.0;
  for (double x : rep.samples) ss += (x - mean) * (x - mean);
  rep.estimate = mean;
  rep.stderr_ = std::sqrt(ss / static_cast<double>(trials - 1)) / std::sqrt(static_cast<double>(trials));
  rep.band = rep.stderr_;
  return rep;
}

EstimateReport estimate_f(double c, unsigned kmax, std::size_t n, std::size_t trials, Seed seed, unsigned threads) {
  if (kmax < 2) throw InvalidParameter("kmax must be at least 2");
  EstimateReport rep = estimate_rho(c, kmax, n, trials, seed, threads);
  rep.target = "f";
  rep.band = rep.stderr_ + 1.0 / (2.0 * (kmax - 1));
  return rep;
}

}  // namespace longcycle
