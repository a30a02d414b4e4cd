// Acceptance run: one PASS/FAIL line per criterion on stdout, progress and
// per-instance detail on stderr.

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "longcycle/error.hpp"
#include "longcycle/estimator.hpp"
#include "longcycle/hamilton.hpp"
#include "longcycle/matching.hpp"
#include "longcycle/oracle.hpp"
#include "longcycle/path_cover.hpp"
#include "longcycle/strong_core.hpp"

using namespace longcycle;

namespace {

using Clock = std::chrono::steady_clock;
using Big = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<200>>;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool pass = false;
  std::string detail;
};

// Small graphs with a nonempty strong 4-core, n in [6, 14], c in {2,3,4,5}.
struct Instance {
  Graph g;
  Coloring col;
  std::size_t n;
  double c;
};

const std::vector<Instance>& small_corpus() {
  static const std::vector<Instance> corpus = [] {
    std::vector<Instance> out;
    for (std::uint64_t s = 0; out.size() < 2000; ++s) {
      const std::size_t n = 6 + s % 9;
      const double c = 2.0 + static_cast<double>((s / 9) % 4);
      Graph g = sample_gnp(n, c, Seed{s});
      Coloring col = strong_core_coloring(g, 4);
      if (col.count(Color::Black) == 0) continue;
      out.push_back({std::move(g), std::move(col), n, c});
    }
    return out;
  }();
  return corpus;
}

// Independent of the library's own cycle check.
bool valid_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  if (cycle.size() < 3) return false;
  std::set<Vertex> seen(cycle.begin(), cycle.end());
  if (seen.size() != cycle.size()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

Verdict bound_soundness() {
  const auto t0 = Clock::now();
  std::size_t violations = 0;
  std::size_t tight = 0;
  for (const Instance& in : small_corpus()) {
    const CoverFamily fam = exact_cover_family(in.g, in.col);
    const std::size_t bound = longest_cycle_upper_bound(in.g, in.col, fam);
    const std::size_t longest = brute_longest_cycle(in.g);
    if (longest > bound) ++violations;
    if (longest == bound) ++tight;
  }
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << small_corpus().size() << " graphs, " << violations << " violations, " << tight << " tight, " << secs << " s";
  return {violations == 0 && secs < 120, os.str()};
}

Verdict cover_exactness() {
  const auto t0 = Clock::now();
  std::size_t compared = 0;
  std::size_t mismatches = 0;
  for (const Instance& in : small_corpus()) {
    const RedBlueGraph rb = rb_subgraph(in.g, in.col);
    for (const auto& cell : rb.parts.cells) {
      if (cell.size() > 14) continue;
      const InducedSubgraph t = induced_subgraph(rb.sub.graph, cell);
      std::vector<Color> colors;
      for (Vertex v : t.to_parent) colors.push_back(in.col.color[rb.sub.to_parent[v]]);
      ++compared;
      if (optimal_path_cover(t.graph, colors).uncovered_red != brute_phi(t.graph, colors)) ++mismatches;
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << compared << " components, " << mismatches << " mismatches, " << secs << " s";
  return {mismatches == 0 && compared > 0 && secs < 120, os.str()};
}

Verdict strong_core_checks() {
  std::size_t order_fail = 0;
  std::size_t maximal_checked = 0;
  std::size_t maximal_fail = 0;
  std::size_t quarter_fail = 0;
  std::size_t red_black = 0;
  std::uint64_t salt = 0;
  for (const Instance& in : small_corpus()) {
    const std::vector<Vertex> black = in.col.vertices(Color::Black);
    std::vector<Vertex> order(in.n);
    for (Vertex v = 0; v < in.n; ++v) order[v] = v;
    Rng rng(Seed{++salt});
    for (int r = 0; r < 100; ++r) {
      std::shuffle(order.begin(), order.end(), rng);
      if (strong_core_coloring(in.g, 4, order).vertices(Color::Black) != black) {
        ++order_fail;
        break;
      }
    }
    if (in.n <= 10) {
      ++maximal_checked;
      bool ok = verify_strong_core(in.g, black, 4);
      const std::set<Vertex> core(black.begin(), black.end());
      for (std::uint32_t mask = 1; ok && mask < (1u << in.n); ++mask) {
        std::vector<Vertex> s;
        for (Vertex v = 0; v < in.n; ++v)
          if (mask >> v & 1u) s.push_back(v);
        if (!verify_strong_core(in.g, s, 4)) continue;
        for (Vertex v : s) ok = ok && core.count(v) == 1;
      }
      if (!ok) ++maximal_fail;
    }
    const RedBlueGraph rb = rb_subgraph(in.g, in.col);
    for (const auto& cell : rb.parts.cells) {
      std::size_t reds = 0;
      for (Vertex v : cell) reds += in.col.is(rb.sub.to_parent[v], Color::Red) ? 1 : 0;
      if (reds < (cell.size() + 3) / 4) ++quarter_fail;
    }
    for (const Edge& e : in.g.edges()) {
      const Color a = in.col.color[e.u];
      const Color b = in.col.color[e.v];
      if ((a == Color::Red && b == Color::Black) || (a == Color::Black && b == Color::Red)) ++red_black;
    }
  }
  std::ostringstream os;
  os << "order changes " << order_fail << ", maximality failures " << maximal_fail << "/" << maximal_checked
     << ", quarter-rule failures " << quarter_fail << ", red-black edges " << red_black;
  return {order_fail == 0 && maximal_fail == 0 && maximal_checked > 0 && quarter_fail == 0 && red_black == 0,
          os.str()};
}

Verdict regime_runs() {
  std::size_t hits = 0;
  double slowest = 0;
  for (unsigned s = 0; s < 20; ++s) {
    const auto t0 = Clock::now();
    const Graph g = sample_gnp(2000, 20, Seed{1000 + s});
    const CycleResult r = longest_cycle(g, Seed{2000 + s});
    const double secs = seconds_since(t0);
    slowest = std::max(slowest, secs);
    const bool ok = r.certificate.success && valid_cycle(g, r.cycle) &&
                    r.cycle.size() == r.certificate.upper_bound && secs < 60;
    hits += ok ? 1 : 0;
    std::cerr << "  c=20 run " << s << ": bound " << r.certificate.upper_bound << ", achieved " << r.cycle.size()
              << ", " << secs << " s" << (ok ? "" : " (miss)") << '\n';
  }
  for (unsigned s = 0; s < 10; ++s) {
    const Graph g = sample_gnp(100000, 10, Seed{3000 + s});
    try {
      const CycleResult r = longest_cycle(g, Seed{4000 + s});
      std::cerr << "  c=10 run " << s << " (informational): achieved/bound " << r.cycle.size() << "/"
                << r.certificate.upper_bound << " = "
                << static_cast<double>(r.cycle.size()) / static_cast<double>(r.certificate.upper_bound) << '\n';
    } catch (const Error& e) {
      std::cerr << "  c=10 run " << s << " (informational): " << e.what() << '\n';
    }
  }
  std::ostringstream os;
  os << hits << "/20 runs at n=2000, c=20 reached the bound with a validated cycle, slowest " << slowest << " s";
  return {hits >= 19, os.str()};
}

Verdict deficiency_range() {
  std::size_t accepted = 0;
  std::size_t succeeded = 0;
  std::string first_error;
  for (unsigned s = 0; accepted < 5 && s < 20; ++s) {
    const Graph g = sample_gnp(100000, 10, Seed{5000 + s});
    CyclePlan plan;
    try {
      plan = plan_cycles(g);
    } catch (const Error& e) {
      // No exact cover, so the single-red path count is unknown. Counted
      // as one of the five instances and as a failure.
      ++accepted;
      if (first_error.empty()) first_error = e.what();
      std::cerr << "  instance " << s << ": " << e.what() << '\n';
      continue;
    }
    if (plan.cover.singles.size() < 10) continue;
    ++accepted;
    const std::size_t top = std::min<std::size_t>(plan.cover.singles.size(), 50);
    bool all = true;
    for (std::size_t i = 0; i <= top; ++i) {
      const CycleResult r = cycle_from_plan(g, plan, Seed{6000 + s}, i);
      const bool ok = r.certificate.success && valid_cycle(g, r.cycle) && r.cycle.size() == plan.upper_bound - i;
      all = all && ok;
    }
    std::cerr << "  instance " << s << ": singles " << plan.cover.singles.size() << ", deficiencies 0.." << top
              << (all ? " all validated" : " incomplete") << '\n';
    succeeded += all ? 1 : 0;
  }
  // Same protocol one step denser, where the red/blue components are small.
  // Reported only; it does not enter the verdict.
  {
    const Graph g = sample_gnp(100000, 14, Seed{5100});
    const CyclePlan plan = plan_cycles(g);
    const std::size_t top = std::min<std::size_t>(plan.cover.singles.size(), 50);
    std::size_t built = 0;
    for (std::size_t i = 0; i <= top; ++i) {
      const CycleResult r = cycle_from_plan(g, plan, Seed{5101}, i);
      built += r.certificate.success && valid_cycle(g, r.cycle) && r.cycle.size() == plan.upper_bound - i ? 1 : 0;
    }
    std::cerr << "  c=14 (informational): singles " << plan.cover.singles.size() << ", " << built << "/" << top + 1
              << " deficiencies validated\n";
  }
  std::ostringstream os;
  os << succeeded << "/" << accepted << " instances at n=100000, c=10 built every deficiency";
  if (!first_error.empty()) os << "; first error: " << first_error;
  return {accepted == 5 && succeeded == 5, os.str()};
}

Verdict local_approximation() {
  const std::size_t n = 50000;
  std::ostringstream os;
  bool pass = true;
  for (unsigned k : {2u, 3u}) {
    std::size_t within = 0;
    const double slack = static_cast<double>(n) / (4.0 * k * k) + std::pow(static_cast<double>(n), 0.7);
    double worst = 0;
    for (unsigned s = 0; s < 10; ++s) {
      const Graph g = sample_gnp(n, 20, Seed{7000 + s});
      const CyclePlan plan = plan_cycles(g);
      const double local = l_cnk(g, k, 20).convert_to<double>();
      const double gap = std::abs(local - static_cast<double>(plan.upper_bound));
      worst = std::max(worst, gap);
      within += gap <= slack ? 1 : 0;
    }
    os << "k=" << k << ": " << within << "/10 within " << slack << " (worst gap " << worst << ") ";
    pass = pass && within >= 9;
  }
  return {pass, os.str()};
}

Verdict cauchy() {
  const EstimateReport r2 = estimate_rho(20, 2, 50000, 30, Seed{8000});
  const EstimateReport r3 = estimate_rho(20, 3, 50000, 30, Seed{8001});
  const double gap = std::abs(r2.estimate - r3.estimate);
  const double allowed = 1.0 / 8.0 + 3.0 * (r2.stderr_ + r3.stderr_);
  std::ostringstream os;
  os.precision(10);
  os << "rho2 " << r2.estimate << " (se " << r2.stderr_ << "), rho3 " << r3.estimate << " (se " << r3.stderr_
     << "), gap " << gap << " <= " << allowed;
  return {gap <= allowed, os.str()};
}

Verdict poisson() {
  const auto t0 = Clock::now();
  const auto dense = mc_spectrum(3000, 3, {3}, 2000, Seed{9000});
  const double target = 1.0 - std::exp(-4.5);
  bool pass = std::abs(dense.front().presence - target) <= 0.03;
  std::ostringstream os;
  os << "c=3 l=3 presence " << dense.front().presence << " vs " << target << "; c=1.5 means";
  const auto sparse = mc_spectrum(3000, 1.5, {3, 4, 5}, 2000, Seed{9001});
  for (const SpectrumEstimate& e : sparse) {
    const double expect = std::pow(1.5, e.length) / (2.0 * e.length);
    const bool ok = std::abs(e.mean_count - expect) <= 0.1 * expect;
    pass = pass && ok;
    os << " l=" << e.length << ": " << e.mean_count << " vs " << expect;
  }
  const double secs = seconds_since(t0);
  os << "; " << secs << " s";
  return {pass && secs < 600, os.str()};
}

Big big_rate(const Big& c, unsigned l) { return boost::multiprecision::pow(c, l) / (2 * l); }

Verdict formulas() {
  const Big c = 2;
  unsigned last = 3;
  while (big_rate(c, last) < 2000) ++last;
  Big oracle = 0;
  for (unsigned k = 3; k <= last; ++k) {
    Big term = 1;
    for (unsigned l = 3; l < k; ++l) term *= exp(-big_rate(c, l));
    for (unsigned l = k; l <= last; ++l) term *= 1 - exp(-big_rate(c, l));
    oracle += term;
  }
  const double pan = weakly_pancyclic_prob(2, 1e-9);
  const double pan_err = std::abs(pan - oracle.convert_to<double>());
  double spec_err = 0;
  const std::vector<std::set<unsigned>> sets{{3}, {3, 4}, {4, 6, 9}, {3, 5, 7, 11}, {}};
  for (double cc : {1.5, 2.0, 3.0}) {
    for (const auto& s : sets) {
      Big p = 1;
      for (unsigned l : s) p *= 1 - exp(-big_rate(Big(cc), l));
      spec_err = std::max(spec_err, std::abs(spectrum_prob(cc, s) - p.convert_to<double>()));
    }
  }
  const double top = weakly_pancyclic_prob(20, 1e-9);
  std::ostringstream os;
  os.precision(12);
  os << "pancyclic(2) " << pan << " error " << pan_err << ", spectrum max error " << spec_err
     << ", pancyclic(20) " << top;
  return {pan_err <= 1e-9 && spec_err <= 1e-9 && std::abs(1.0 - top) <= 1e-9, os.str()};
}

Verdict matchings() {
  std::size_t mismatches = 0;
  std::size_t missing_witness = 0;
  for (std::uint64_t s = 0; s < 500; ++s) {
    const std::size_t n = 2 + s % 11;
    const double c = std::min(0.5 + static_cast<double>(s % 7), static_cast<double>(n));
    const Graph g = sample_gnp(n, c, Seed{10000 + s});
    const Matching m = maximum_matching(g);
    if (!is_matching(g, m) || m.size != brute_matching_size(g)) ++mismatches;
    if (!tutte_berge_witness(g, m.size).has_value()) ++missing_witness;
  }
  std::ostringstream os;
  os << "500 graphs, " << mismatches << " size mismatches, " << missing_witness << " without a witness";
  return {mismatches == 0 && missing_witness == 0, os.str()};
}

}  // namespace

// --expect-fail=5,7 makes the exit status 0 exactly when the failing
// criteria are the listed ones. The printed verdicts are unaffected.
std::set<std::size_t> parse_expected(int argc, char** argv) {
  std::set<std::size_t> out;
  const std::string flag = "--expect-fail=";
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind(flag, 0) != 0) continue;
    std::stringstream list(arg.substr(flag.size()));
    for (std::string item; std::getline(list, item, ',');) out.insert(std::stoul(item));
  }
  return out;
}

int main(int argc, char** argv) {
  const std::set<std::size_t> expected = parse_expected(argc, argv);
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"upper-bound soundness", bound_soundness},
      {"cover exactness", cover_exactness},
      {"strong core", strong_core_checks},
      {"cycle at regime scale", regime_runs},
      {"deficiency range", deficiency_range},
      {"local approximation", local_approximation},
      {"locality Cauchy bound", cauchy},
      {"Poisson cycle counts", poisson},
      {"limit formulas", formulas},
      {"matching certificate", matchings},
  };
  std::set<std::size_t> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    std::cerr << "criterion " << i + 1 << ": " << criteria[i].first << '\n';
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2zu %-24s %s  %s [%.1f s]\n", i + 1, criteria[i].first, v.pass ? "PASS" : "FAIL",
                v.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
    if (!v.pass) failed.insert(i + 1);
  }
  std::printf("%zu of %zu criteria failed\n", failed.size(), criteria.size());
  if (!expected.empty()) {
    std::printf("expected failures:");
    for (std::size_t i : expected) std::printf(" %zu", i);
    std::printf(" (%s)\n", failed == expected ? "matched" : "not matched");
  }
  return failed == expected ? 0 : 1;
}
