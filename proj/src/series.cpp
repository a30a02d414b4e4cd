#include <cmath>
#include <vector>

#include "longcycle/error.hpp"
#include "longcycle/estimator.hpp"

namespace longcycle {
namespace {

// lambda_l = c^l / (2 l)
long double rate(long double c, std::size_t l) {
  return std::exp(static_cast<long double>(l) * std::log(c) - std::log(2.0L * static_cast<long double>(l)));
}

void check(double c, double tol) {
  if (!(c > 1.0)) throw InvalidParameter("the pancyclicity series needs c > 1");
  if (!(tol > 0.0)) throw InvalidParameter("tolerance must be positive");
}

}  // namespace

PancyclicTruncation pancyclic_truncation(double c, double tol) {
  check(c, tol);
  const long double cc = c;
  // Past the first l where lambda grows by at least ln 2 per step the
  // terms e^{-lambda} at least halve, so the tail is below twice its head.
  std::size_t l = 3;
  while (rate(cc, l + 1) - rate(cc, l) < std::log(2.0L)) ++l;
  while (2.0L * std::exp(-rate(cc, l + 1)) >= tol / 2.0) ++l;
  PancyclicTruncation t;
  t.product_end = l;
  // Girth terms: beyond product_end each term is at most half the previous
  // one, so stopping once the prefix drops below tol/4 loses < tol/2.
  long double prefix = 1.0L;
  std::size_t k = 3;
  while (k <= t.product_end || prefix >= tol / 4.0) {
    prefix *= std::exp(-rate(cc, k));
    ++k;
  }
  t.sum_end = k - 1;
  return t;
}

double weakly_pancyclic_prob(double c, double tol) {
  const PancyclicTruncation t = pancyclic_truncation(c, tol);
  const long double cc = c;
  const std::size_t top = std::max(t.product_end, t.sum_end);
  // suffix[k] = sum_{l=k}^{product_end} ln(1 - e^{-lambda_l})
  std::vector<long double> suffix(top + 2, 0.0L);
  for (std::size_t l = t.product_end; l >= 3; --l) {
    suffix[l] = suffix[l + 1] + std::log1p(-std::exp(-rate(cc, l)));
  }
  long double total = 0.0L;
  long double log_prefix = 0.0L;  // sum_{l=3}^{k-1} -lambda_l
  for (std::size_t k = 3; k <= t.sum_end; ++k) {
    const long double tail = k <= t.product_end ? suffix[k] : 0.0L;
    total += std::exp(log_prefix + tail);
    log_prefix -= rate(cc, k);
  }
  return static_cast<double>(total);
}

double spectrum_prob(double c, const std::set<unsigned>& lengths) {
  if (c < 0.0) throw InvalidParameter("c must be nonnegative");
  long double p = 1.0L;
  for (unsigned l : lengths) {
    if (l < 3) throw InvalidParameter("cycle lengths start at 3");
    p *= -std::expm1(-rate(c, l));
  }
  return static_cast<double>(p);
}

}  // namespace longcycle
