#include "invsem/config.hpp"

#include <fstream>
#include <sstream>

#include "invsem/errors.hpp"

namespace invsem {

Limits load_limits(const std::string& path) {
  Limits limits;
  std::ifstream in(path);
  if (!in) return limits;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) continue;
    std::uint64_t v = 0;
    try {
      v = std::stoull(value);
    } catch (const std::exception&) {
      throw InvalidInput("config: bad value for " + key + ": " + value);
    }
    if (key == "UNIVERSE_CAP")
      limits.universe_cap = v;
    else if (key == "CLOSURE_CAP")
      limits.closure_cap = v;
    else if (key == "MUNN_CAP")
      limits.munn_cap = v;
    else if (key == "LATTICE_CAP")
      limits.lattice_cap = v;
    else if (key == "PA_CAP")
      limits.pa_cap = v;
    else if (key == "ISO_STEP_LIMIT")
      limits.iso_step_limit = v;
    else if (key == "HARNESS_ISO_CAP")
      limits.harness_iso_cap = v;
    else if (key == "CATALOG_BOUND")
      limits.catalog_bound = static_cast<int>(v);
  }
  return limits;
}

}  // namespace invsem
