#include "reports.hpp"

#include <ostream>
#include <set>

namespace longcycle::cli {

json to_json(const RBStats& s) {
  json x = json::object();
  for (auto [i, v] : s.x) x[std::to_string(i)] = v;
  json y = json::object();
  for (auto [i, v] : s.y) y[std::to_string(i)] = v;
  return {{"colors", {{"red", s.red}, {"blue", s.blue}, {"black", s.black}}},
          {"components", s.component_sizes.size()},
          {"component_sizes", s.component_sizes},
          {"x", x},
          {"y", y},
          {"y_multi", s.y_multi},
          {"largest", s.largest}};
}

json to_json(const CoverFamily& fam, bool with_paths) {
  json comps = json::array();
  for (const PathCover& c : fam.covers) {
    std::size_t size = 0;
    for (const CoverPath& p : c.paths) size += p.vertices.size();
    json entry = {{"id", c.component}, {"red", c.red_total}, {"phi", c.uncovered_red}, {"covered_vertices", size}};
    if (with_paths) {
      json paths = json::array();
      for (const CoverPath& p : c.paths) {
        if (p.reds > 0) paths.push_back(p.vertices);
      }
      entry["paths"] = paths;
    }
    comps.push_back(entry);
  }
  json singles = json::array();
  for (const CoverPath& p : fam.singles) singles.push_back(p.vertices);
  json out = {{"total_phi", fam.total_phi}, {"singles", fam.singles.size()}, {"components", comps}};
  if (with_paths) out["single_paths"] = singles;
  return out;
}

json to_json(const CycleResult& r) {
  const CycleCertificate& c = r.certificate;
  json out = {{"bound", c.upper_bound},
              {"target", c.target},
              {"achieved", c.achieved},
              {"deficiency", c.deficiency},
              {"singles", c.singles},
              {"success", c.success},
              {"retries", c.retries},
              {"reservoir_used", c.reservoir_used},
              {"reservoir_size", c.reservoir_size},
              {"initial_paths", c.initial_paths},
              {"rotations", c.rotations},
              {"cycle", r.cycle}};
  if (c.failure) {
    out["failure"] = {{"iteration", c.failure->iteration},
                      {"connectors_left", c.failure->connectors_left},
                      {"frontier_size", c.failure->frontier_size},
                      {"reservoir_used", c.failure->reservoir_used}};
  }
  return out;
}

json to_json(const EstimateReport& r) {
  return {{"target", r.target}, {"estimate", r.estimate}, {"stderr", r.stderr_}, {"band", r.band},
          {"trials", r.trials}, {"n", r.n},               {"c", r.c},            {"k", r.k},
          {"seed", r.seed},     {"samples", r.samples}};
}

json to_json(const SpectrumEstimate& e) {
  return {{"length", e.length},
          {"presence", e.presence},
          {"mean_count", e.mean_count},
          {"expected_presence", e.expected_presence},
          {"expected_mean", e.expected_mean}};
}

void write_component_csv(std::ostream& os, const RBStats& s) {
  os << "i,x_i,y_i\n";
  std::set<std::size_t> keys;
  for (auto [i, v] : s.x) keys.insert(i);
  for (auto [i, v] : s.y) keys.insert(i);
  for (std::size_t i : keys) {
    const auto xi = s.x.find(i);
    const auto yi = s.y.find(i);
    os << i << ',' << (xi == s.x.end() ? 0 : xi->second) << ',' << (yi == s.y.end() ? 0 : yi->second) << '\n';
  }
}

void write_curve_csv(std::ostream& os, const std::vector<EstimateReport>& rows) {
  os << "c,k,estimate,stderr,band,trials,n\n";
  os.precision(17);
  for (const auto& r : rows) {
    os << r.c << ',' << r.k << ',' << r.estimate << ',' << r.stderr_ << ',' << r.band << ',' << r.trials << ','
       << r.n << '\n';
  }
}

}  // namespace longcycle::cli
