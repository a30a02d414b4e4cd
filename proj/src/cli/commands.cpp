#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "longcycle/cli.hpp"
#include "longcycle/edge_list.hpp"
#include "longcycle/error.hpp"
#include "longcycle/estimator.hpp"
#include "longcycle/hamilton.hpp"
#include "longcycle/matching.hpp"
#include "longcycle/oracle.hpp"
#include "longcycle/parallel.hpp"
#include "longcycle/path_cover.hpp"
#include "longcycle/strong_core.hpp"
#include "manifest.hpp"
#include "reports.hpp"

namespace longcycle::cli {
namespace {

struct GraphSource {
  std::string file;
  std::size_t n = 0;
  double c = 0.0;
  std::uint64_t seed = 0;
  CLI::Option* file_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* c_opt = nullptr;

  void attach(CLI::App* sub) {
    file_opt = sub->add_option("--graph,graph", file, "Edge-list file");
    file_opt->check(CLI::ExistingFile);
    n_opt = sub->add_option("--n", n, "Vertex count of a sampled graph");
    c_opt = sub->add_option("--c", c, "Edge density: p = c/n");
    sub->add_option("--seed", seed, "Master seed");
  }

  Graph load() const {
    if (file_opt->count() > 0) return load_edge_list(file);
    if (n_opt->count() == 0 || c_opt->count() == 0) {
      throw InvalidParameter("give an edge-list file or both --n and --c");
    }
    return sample_gnp(n, c, Seed{seed});
  }

  json describe() const {
    if (file_opt->count() > 0) return {{"file", file}};
    return {{"n", n}, {"c", c}, {"seed", seed}};
  }
};

struct Outcome {
  json body;
  int code = kOk;
  std::string summary;
  std::uint64_t seed = 0;
};

std::vector<unsigned> parse_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw InvalidParameter("bad list entry '" + item + "'");
    }
    if (used != item.size()) throw InvalidParameter("bad list entry '" + item + "'");
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InvalidParameter("bad number '" + item + "'");
    }
    if (used != item.size()) throw InvalidParameter("bad number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw InvalidParameter("cannot write " + path);
  return os;
}

std::string status(bool ok) { return ok ? "pass" : "fail"; }

// Invariant checks reported by `validate`.
json validate_graph(const Graph& g, std::uint64_t seed, std::size_t& failures) {
  json checks = json::array();
  auto record = [&](const std::string& name, const std::string& st, const std::string& detail) {
    if (st == "fail") ++failures;
    checks.push_back({{"name", name}, {"status", st}, {"detail", detail}});
  };
  const Coloring col = strong_core_coloring(g, 4);
  const auto black = col.vertices(Color::Black);

  bool fixpoint = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    unsigned nb = 0;
    for (Vertex u : g.neighbors(v)) nb += col.is(u, Color::Black);
    if (col.is(v, Color::Red) ? nb != 0 : nb < 4) fixpoint = false;
    if (col.is(v, Color::Blue) && nb == 0) fixpoint = false;
  }
  record("coloring_fixpoint", status(fixpoint), "black and blue vertices have >= 4 black neighbors, red none");
  record("strong_core", status(verify_strong_core(g, black, 4)), "black set satisfies the strong 4-core property");
  record("no_red_black_edge", status(!has_red_black_edge(g, col)), "");

  bool same = true;
  Rng rng(Seed{seed}.derive(0x76616c));
  std::vector<Vertex> order(g.order());
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  for (int t = 0; t < 10 && same; ++t) {
    std::shuffle(order.begin(), order.end(), rng);
    same = strong_core_coloring(g, 4, order).color == col.color;
  }
  record("order_independence", status(same), "10 shuffled processing orders");

  const RedBlueGraph rb = rb_subgraph(g, col);
  bool quarter = true;
  for (const auto& cell : rb.parts.cells) {
    std::size_t reds = 0;
    for (Vertex v : cell) reds += col.is(rb.sub.to_parent[v], Color::Red);
    if (4 * reds < cell.size()) quarter = false;
  }
  record("red_quarter_rule", status(quarter), "every red/blue component is at least a quarter red");

  std::optional<CoverFamily> fam;
  try {
    fam = exact_cover_family(g, col);
  } catch (const SizeCapExceeded& e) {
    record("cover_exactness", "skipped", e.what());
  }
  if (fam) {
    bool exact = true;
    std::size_t checked = 0;
    for (std::size_t i = 0; i < rb.parts.cells.size(); ++i) {
      const auto& cell = rb.parts.cells[i];
      if (cell.size() > 14) continue;
      const InducedSubgraph t = induced_subgraph(rb.sub.graph, cell);
      std::vector<Color> colors(cell.size());
      for (std::size_t j = 0; j < cell.size(); ++j) colors[j] = col.color[rb.sub.to_parent[cell[j]]];
      exact = exact && brute_phi(t.graph, colors) == fam->covers[i].uncovered_red;
      ++checked;
    }
    record("cover_exactness", status(exact), std::to_string(checked) + " components of size <= 14");
    if (g.order() <= 18 && !black.empty()) {
      const std::size_t bound = longest_cycle_upper_bound(g, col, *fam);
      const std::size_t truth = brute_longest_cycle(g);
      record("bound_soundness", status(truth <= bound),
             "longest cycle " + std::to_string(truth) + ", bound " + std::to_string(bound));
    } else {
      record("bound_soundness", "skipped", black.empty() ? "empty strong 4-core" : "more than 18 vertices");
    }
  }

  if (g.order() <= 16) {
    const Matching m = maximum_matching(g);
    const bool ok = is_matching(g, m) && tutte_berge_witness(g, m.size).has_value();
    record("matching_certificate", status(ok), "matching of size " + std::to_string(m.size));
  } else {
    record("matching_certificate", "skipped", "more than 16 vertices");
  }
  return checks;
}

struct Cli {
  CLI::App app{"Longest cycles in sparse random graphs", "longcycle"};
  unsigned threads = 0;
  std::string manifest;

  CLI::App* sample = nullptr;
  std::size_t sample_n = 0;
  double sample_c = 0.0;
  std::uint64_t sample_seed = 0;
  std::string sample_out;

  CLI::App* core = nullptr;
  GraphSource core_src;
  unsigned core_k = 4;
  std::string core_csv;

  CLI::App* cover = nullptr;
  GraphSource cover_src;
  std::size_t cover_cap = 64;
  bool cover_paths = false;

  CLI::App* cycle = nullptr;
  GraphSource cycle_src;
  std::size_t cycle_deficiency = 0;
  std::string cycle_trace;
  unsigned cycle_attempts = 3;

  CLI::App* oracle = nullptr;
  GraphSource oracle_src;

  CLI::App* estimate = nullptr;
  std::string est_target;
  double est_c = 0.0;
  std::string est_grid;
  unsigned est_k = 2;
  unsigned est_kmax = 3;
  std::size_t est_n = 10000;
  std::size_t est_trials = 30;
  std::uint64_t est_seed = 0;
  double est_tol = 1e-9;
  std::string est_lengths = "3";
  std::string est_csv;

  CLI::App* spectrum = nullptr;
  GraphSource spectrum_src;
  std::string spectrum_lengths = "3,4,5,6,7,8";

  CLI::App* validate = nullptr;
  GraphSource validate_src;

  CLI::App* replay = nullptr;
  std::string replay_manifest;
  std::size_t replay_index = 0;

  Cli() {
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--threads", threads, "Worker threads (default: $LONGCYCLE_THREADS or all cores)");
    app.add_option("--manifest", manifest, "Append this run to a manifest file");

    sample = app.add_subcommand("sample", "Sample G(n, c/n) and write it as an edge list");
    sample->add_option("--n", sample_n, "Vertex count")->required();
    sample->add_option("--c", sample_c, "Edge density: p = c/n")->required();
    sample->add_option("--seed", sample_seed, "Master seed");
    sample->add_option("--out", sample_out, "Edge-list output file");

    core = app.add_subcommand("core", "Strong k-core coloring and red/blue component statistics");
    core_src.attach(core);
    core->add_option("--k", core_k, "Core parameter")->check(CLI::PositiveNumber);
    core->add_option("--csv", core_csv, "Write the X_i / Y_i table as CSV");

    cover = app.add_subcommand("cover", "Exact path covers of the red/blue components");
    cover_src.attach(cover);
    cover->add_option("--cap", cover_cap, "Largest component solved exactly (<= 64)");
    cover->add_flag("--paths", cover_paths, "Include the cover paths");

    cycle = app.add_subcommand("longest-cycle", "Construct a longest cycle (or one of given deficiency)");
    cycle_src.attach(cycle);
    cycle->add_option("--deficiency", cycle_deficiency, "Build a cycle this much shorter than the bound");
    cycle->add_option("--trace", cycle_trace, "Write the rotation trace as JSON lines");
    cycle->add_option("--attempts", cycle_attempts, "Reservoir resampling attempts")->check(CLI::PositiveNumber);

    oracle = app.add_subcommand("oracle", "Exact brute-force quantities of a small graph");
    oracle_src.attach(oracle);

    estimate = app.add_subcommand("estimate", "Monte Carlo estimates and limit formulas");
    estimate->add_option("--target", est_target, "rho, f, pancyclic, spectrum or mc-spectrum")
        ->required()
        ->check(CLI::IsMember({"rho", "f", "pancyclic", "spectrum", "mc-spectrum"}));
    estimate->add_option("--c", est_c, "Edge density");
    estimate->add_option("--c-grid", est_grid, "Comma-separated c values (rho and f curves)");
    estimate->add_option("--k", est_k, "Locality radius for rho");
    estimate->add_option("--kmax", est_kmax, "Locality radius for f");
    estimate->add_option("--n", est_n, "Vertex count per sampled graph");
    estimate->add_option("--trials", est_trials, "Number of sampled graphs");
    estimate->add_option("--seed", est_seed, "Master seed");
    estimate->add_option("--tol", est_tol, "Absolute tolerance for pancyclic");
    estimate->add_option("--lengths", est_lengths, "Comma-separated cycle lengths");
    estimate->add_option("--csv", est_csv, "Write the curve as CSV");

    spectrum = app.add_subcommand("spectrum", "Exact cycle counts of a graph");
    spectrum_src.attach(spectrum);
    spectrum->add_option("--lengths", spectrum_lengths, "Comma-separated lengths in [3, 8]");

    validate = app.add_subcommand("validate", "Check the deterministic invariants on a graph");
    validate_src.attach(validate);

    replay = app.add_subcommand("replay", "Re-run a manifest entry and compare digests");
    replay->add_option("manifest", replay_manifest, "Manifest file")->required()->check(CLI::ExistingFile);
    replay->add_option("--index", replay_index, "Run index")->required();
  }
};

Outcome do_sample(Cli& c) {
  const Graph g = sample_gnp(c.sample_n, c.sample_c, Seed{c.sample_seed});
  if (!c.sample_out.empty()) save_edge_list(c.sample_out, g);
  Outcome o;
  o.body = {{"n", g.order()}, {"m", g.size()}, {"c", c.sample_c}, {"seed", c.sample_seed}};
  if (!c.sample_out.empty()) o.body["out"] = c.sample_out;
  o.seed = c.sample_seed;
  o.summary = "sampled " + std::to_string(g.order()) + " vertices, " + std::to_string(g.size()) + " edges";
  return o;
}

Outcome do_core(Cli& c) {
  const Graph g = c.core_src.load();
  const Coloring col = strong_core_coloring(g, c.core_k);
  const RBStats s = component_stats(g, col);
  if (!c.core_csv.empty()) {
    auto os = open_out(c.core_csv);
    write_component_csv(os, s);
  }
  Outcome o;
  o.body = {{"graph", c.core_src.describe()}, {"n", g.order()}, {"m", g.size()}, {"k", c.core_k}};
  o.body.update(to_json(s));
  o.seed = c.core_src.seed;
  o.summary = "black " + std::to_string(s.black) + ", blue " + std::to_string(s.blue) + ", red " +
              std::to_string(s.red) + ", largest red/blue component " + std::to_string(s.largest);
  return o;
}

Outcome do_cover(Cli& c) {
  const Graph g = c.cover_src.load();
  const Coloring col = strong_core_coloring(g, 4);
  CoverOptions opts;
  opts.size_cap = c.cover_cap;
  opts.threads = resolve_threads(c.threads);
  const CoverFamily fam = exact_cover_family(g, col, opts);
  Outcome o;
  o.body = {{"graph", c.cover_src.describe()}, {"n", g.order()}, {"m", g.size()}};
  o.body.update(to_json(fam, c.cover_paths));
  if (col.count(Color::Black) > 0) {
    o.body["bound"] = longest_cycle_upper_bound(g, col, fam);
  } else {
    o.body["bound"] = nullptr;
  }
  o.seed = c.cover_src.seed;
  o.summary = "total uncovered reds " + std::to_string(fam.total_phi) + ", single-red paths " +
              std::to_string(fam.singles.size());
  return o;
}

Outcome do_cycle(Cli& c) {
  const Graph g = c.cycle_src.load();
  CycleOptions opts;
  opts.attempts = c.cycle_attempts;
  opts.threads = resolve_threads(c.threads);
  opts.cover.threads = opts.threads;
  std::ofstream trace;
  if (!c.cycle_trace.empty()) {
    trace = open_out(c.cycle_trace);
    opts.trace = [&trace](const json& e) { trace << e.dump() << '\n'; };
  }
  const CycleResult r = cycle_of_deficiency(g, Seed{c.cycle_src.seed}, c.cycle_deficiency, opts);
  Outcome o;
  o.body = {{"graph", c.cycle_src.describe()}, {"n", g.order()}, {"m", g.size()}};
  o.body.update(to_json(r));
  o.seed = c.cycle_src.seed;
  o.code = r.certificate.success ? kOk : kAlgorithmFailure;
  o.summary = (r.certificate.success ? "cycle of length " : "construction failed; fallback cycle of length ") +
              std::to_string(r.certificate.achieved) + ", bound " + std::to_string(r.certificate.upper_bound);
  return o;
}

Outcome do_oracle(Cli& c) {
  const Graph g = c.oracle_src.load();
  Outcome o;
  const SpectrumReport spec = cycle_spectrum(g);
  json lengths = json::array();
  for (std::size_t l = 3; l < spec.present.size(); ++l) {
    if (spec.present[l]) lengths.push_back(l);
  }
  json counts = json::object();
  for (std::size_t l = 3; l < spec.counts.size(); ++l) counts[std::to_string(l)] = spec.counts[l];
  o.body = {{"graph", c.oracle_src.describe()},
            {"n", g.order()},
            {"m", g.size()},
            {"longest_cycle", brute_longest_cycle(g)},
            {"longest_path", brute_longest_path(g)},
            {"cycle_lengths", lengths},
            {"cycle_counts", counts}};
  if (g.order() <= 14) o.body["matching"] = brute_matching_size(g);
  o.seed = c.oracle_src.seed;
  o.summary = "longest cycle " + o.body["longest_cycle"].dump() + ", longest path " + o.body["longest_path"].dump();
  return o;
}

Outcome do_estimate(Cli& c) {
  Outcome o;
  o.seed = c.est_seed;
  const unsigned workers = resolve_threads(c.threads);
  const std::string& t = c.est_target;
  if (t == "rho" || t == "f") {
    std::vector<double> grid = c.est_grid.empty() ? std::vector<double>{c.est_c} : parse_reals(c.est_grid);
    std::vector<EstimateReport> rows;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const Seed s = grid.size() == 1 ? Seed{c.est_seed} : Seed{c.est_seed}.derive(i);
      rows.push_back(t == "rho" ? estimate_rho(grid[i], c.est_k, c.est_n, c.est_trials, s, workers)
                                : estimate_f(grid[i], c.est_kmax, c.est_n, c.est_trials, s, workers));
    }
    if (!c.est_csv.empty()) {
      auto os = open_out(c.est_csv);
      write_curve_csv(os, rows);
    }
    if (rows.size() == 1) {
      o.body = to_json(rows.front());
    } else {
      o.body = {{"target", t}, {"curve", json::array()}};
      for (const auto& r : rows) o.body["curve"].push_back(to_json(r));
    }
    o.summary = t + " = " + std::to_string(rows.front().estimate) + " +- " + std::to_string(rows.front().band);
  } else if (t == "pancyclic") {
    const double v = weakly_pancyclic_prob(c.est_c, c.est_tol);
    const PancyclicTruncation tr = pancyclic_truncation(c.est_c, c.est_tol);
    o.body = {{"target", t},
              {"c", c.est_c},
              {"tol", c.est_tol},
              {"value", v},
              {"product_end", tr.product_end},
              {"sum_end", tr.sum_end}};
    o.summary = "weakly pancyclic probability " + std::to_string(v);
  } else if (t == "spectrum") {
    const auto ls = parse_list(c.est_lengths);
    const std::set<unsigned> lengths(ls.begin(), ls.end());
    const double v = spectrum_prob(c.est_c, lengths);
    o.body = {{"target", t}, {"c", c.est_c}, {"lengths", lengths}, {"value", v}};
    o.summary = "spectrum probability " + std::to_string(v);
  } else {
    const auto ls = parse_list(c.est_lengths);
    const std::set<unsigned> lengths(ls.begin(), ls.end());
    const auto rows = mc_spectrum(c.est_n, c.est_c, lengths, c.est_trials, Seed{c.est_seed}, workers);
    o.body = {{"target", t},
              {"n", c.est_n},
              {"c", c.est_c},
              {"trials", c.est_trials},
              {"seed", c.est_seed},
              {"lengths", json::array()}};
    for (const auto& r : rows) o.body["lengths"].push_back(to_json(r));
    o.summary = "sampled " + std::to_string(c.est_trials) + " graphs";
  }
  return o;
}

Outcome do_spectrum(Cli& c) {
  const Graph g = c.spectrum_src.load();
  const auto ls = parse_list(c.spectrum_lengths);
  Outcome o;
  json counts = json::object();
  for (unsigned l : std::set<unsigned>(ls.begin(), ls.end())) counts[std::to_string(l)] = count_cycles(g, l);
  o.body = {{"graph", c.spectrum_src.describe()}, {"n", g.order()}, {"m", g.size()}, {"cycle_counts", counts}};
  if (g.order() <= 18) {
    const auto present = cycle_lengths(g);
    json lengths = json::array();
    for (std::size_t l = 3; l < present.size(); ++l) {
      if (present[l]) lengths.push_back(l);
    }
    o.body["cycle_lengths"] = lengths;
  }
  o.seed = c.spectrum_src.seed;
  o.summary = "counted cycles of " + std::to_string(counts.size()) + " lengths";
  return o;
}

Outcome do_validate(Cli& c) {
  const Graph g = c.validate_src.load();
  std::size_t failures = 0;
  Outcome o;
  o.body = {{"graph", c.validate_src.describe()}, {"n", g.order()}, {"m", g.size()}};
  o.body["checks"] = validate_graph(g, c.validate_src.seed, failures);
  o.body["failures"] = failures;
  o.code = failures == 0 ? kOk : kAlgorithmFailure;
  o.seed = c.validate_src.seed;
  o.summary = std::to_string(o.body["checks"].size()) + " checks, " + std::to_string(failures) + " failed";
  return o;
}

struct Execution {
  int code = kOk;
  std::string subcommand;
  Outcome outcome;
  bool has_body = false;
};

Execution execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, int depth);

Outcome do_replay(Cli& c, std::ostream& err, int depth) {
  if (depth > 0) throw InvalidParameter("replay entries cannot themselves be replays");
  const json m = load_manifest(c.replay_manifest);
  const auto& runs = m["runs"];
  if (c.replay_index >= runs.size()) {
    throw InvalidParameter("manifest has " + std::to_string(runs.size()) + " runs; no entry " +
                           std::to_string(c.replay_index));
  }
  const json& entry = runs[c.replay_index];
  const auto args = entry.at("args").get<std::vector<std::string>>();
  std::ostringstream sink;
  const Execution ex = execute(args, sink, err, depth + 1);
  Outcome o;
  const std::string expected = entry.at("digest").get<std::string>();
  const std::string actual = ex.has_body ? digest(ex.outcome.body) : "";
  const bool match = ex.has_body && expected == actual;
  o.body = {{"index", c.replay_index},
            {"subcommand", entry.at("subcommand")},
            {"expected", expected},
            {"actual", actual},
            {"match", match}};
  o.code = match ? kOk : kAlgorithmFailure;
  o.summary = match ? "digest match" : "digest mismatch";
  return o;
}

Execution execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, int depth) {
  Execution ex;
  Cli c;
  std::vector<std::string> storage{"longcycle"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    c.app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << c.app.help();
    return ex;
  } catch (const CLI::CallForAllHelp&) {
    out << c.app.help("", CLI::AppFormatMode::All);
    return ex;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << c.app.help();
    ex.code = kBadInput;
    return ex;
  }
  const auto subs = c.app.get_subcommands();
  ex.subcommand = subs.front()->get_name();
  try {
    Outcome o;
    if (ex.subcommand == "sample") o = do_sample(c);
    else if (ex.subcommand == "core") o = do_core(c);
    else if (ex.subcommand == "cover") o = do_cover(c);
    else if (ex.subcommand == "longest-cycle") o = do_cycle(c);
    else if (ex.subcommand == "oracle") o = do_oracle(c);
    else if (ex.subcommand == "estimate") o = do_estimate(c);
    else if (ex.subcommand == "spectrum") o = do_spectrum(c);
    else if (ex.subcommand == "validate") o = do_validate(c);
    else o = do_replay(c, err, depth);
    json body = {{"command", ex.subcommand}};
    body.update(o.body);
    o.body = std::move(body);
    ex.outcome = std::move(o);
    ex.has_body = true;
    ex.code = ex.outcome.code;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    ex.code = kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    ex.code = kAlgorithmFailure;
  }
  if (ex.has_body && depth == 0) {
    out << ex.outcome.body.dump(2) << '\n';
    err << ex.subcommand << ": " << ex.outcome.summary << '\n';
    if (!c.manifest.empty() && ex.subcommand != "replay") {
      std::vector<std::string> kept;
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--manifest" || args[i] == "--threads") {
          ++i;
          continue;
        }
        if (args[i].rfind("--manifest=", 0) == 0 || args[i].rfind("--threads=", 0) == 0) continue;
        kept.push_back(args[i]);
      }
      json params = json::object();
      for (const CLI::Option* opt : subs.front()->get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help") continue;
        const auto values = opt->results();
        params[opt->get_name()] = values.size() == 1 ? json(values.front()) : json(values);
      }
      append_run(c.manifest, ex.subcommand, kept, params, ex.outcome.seed, ex.outcome.body);
    }
  }
  return ex;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return execute(args, out, err, 0).code;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kAlgorithmFailure;
  }
}

}  // namespace longcycle::cli
