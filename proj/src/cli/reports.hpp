#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "longcycle/estimator.hpp"
#include "longcycle/hamilton.hpp"
#include "longcycle/path_cover.hpp"
#include "longcycle/strong_core.hpp"

namespace longcycle::cli {

using nlohmann::json;

json to_json(const RBStats& s);
json to_json(const CoverFamily& fam, bool with_paths);
json to_json(const CycleResult& r);
json to_json(const EstimateReport& r);
json to_json(const SpectrumEstimate& e);

/// Columns: i, x_i, y_i.
void write_component_csv(std::ostream& os, const RBStats& s);

/// Columns: c, k, estimate, stderr, band, trials, n.
void write_curve_csv(std::ostream& os, const std::vector<EstimateReport>& rows);

}  // namespace longcycle::cli
