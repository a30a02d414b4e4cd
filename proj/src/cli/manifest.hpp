#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace longcycle::cli {

inline constexpr int kManifestVersion = 1;

/// Lowercase hex SHA-256 of the compact JSON dump of `body`.
std::string digest(const nlohmann::json& body);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

/// Appends a run to the manifest at `path`, creating it if needed.
void append_run(const std::string& path, const std::string& subcommand, const std::vector<std::string>& args,
                const nlohmann::json& params, std::uint64_t seed, const nlohmann::json& body);

/// Loads and minimally checks a manifest. Throws InvalidParameter.
nlohmann::json load_manifest(const std::string& path);

}  // namespace longcycle::cli
