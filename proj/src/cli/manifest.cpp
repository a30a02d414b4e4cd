#include "manifest.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "longcycle/error.hpp"

namespace longcycle::cli {

std::string digest(const nlohmann::json& body) {
  const std::string text = body.dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{md[i]};
  return hex.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

nlohmann::json load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open manifest " + path);
  nlohmann::json m;
  try {
    in >> m;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter("manifest " + path + " is not valid JSON: " + e.what());
  }
  if (!m.is_object() || !m.contains("runs") || !m["runs"].is_array()) {
    throw InvalidParameter("manifest " + path + " has no runs array");
  }
  return m;
}

void append_run(const std::string& path, const std::string& subcommand, const std::vector<std::string>& args,
                const nlohmann::json& params, std::uint64_t seed, const nlohmann::json& body) {
  nlohmann::json m = {{"version", kManifestVersion}, {"runs", nlohmann::json::array()}};
  if (std::filesystem::exists(path)) m = load_manifest(path);
  m["runs"].push_back({{"subcommand", subcommand},
                       {"args", args},
                       {"params", params},
                       {"seed", seed},
                       {"timestamp", utc_timestamp()},
                       {"digest", digest(body)}});
  std::ofstream out(path);
  if (!out) throw InvalidParameter("cannot write manifest " + path);
  out << m.dump(2) << '\n';
}

}  // namespace longcycle::cli
