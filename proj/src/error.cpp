#include "cubeforge/error.hpp"

#include <cstdlib>
#include <sstream>

namespace cubeforge {

namespace {

std::size_t parse_count(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  unsigned long long parsed = 0;
  try {
    parsed = std::stoull(value, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != value.size()) {
    throw InputError("budget value for '" + key + "' is not a number: " + value);
  }
  return static_cast<std::size_t>(parsed);
}

}  // namespace

Budget Budget::parse(const std::string& spec) {
  Budget budget;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("budget entry without '=': " + item);
    const std::string key = item.substr(0, eq);
    const std::size_t value = parse_count(key, item.substr(eq + 1));
    if (key == "census_classes") {
      budget.census_classes = static_cast<int>(value);
    } else if (key == "hypercube_dimension") {
      budget.hypercube_dimension = static_cast<int>(value);
    } else if (key == "matchings") {
      budget.matchings = value;
    } else if (key == "cliques") {
      budget.cliques = value;
    } else if (key == "iso_vertices") {
      budget.iso_vertices = static_cast<int>(value);
    } else {
      throw InputError("unknown budget key: " + key);
    }
  }
  return budget;
}

const Budget& default_budget() {
  static const Budget budget = [] {
    const char* env = std::getenv("CUBE_FORGE_BUDGET");
    return env ? Budget::parse(env) : Budget{};
  }();
  return budget;
}

}  // namespace cubeforge
