#include "rab/limits.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

#include "rab/error.hpp"

namespace rab {

void Limits::apply_env() {
  const char* env = std::getenv("RABKIT_LIMITS");
  if (env == nullptr) return;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      fail(ErrorKind::kValidate,
           "RABKIT_LIMITS: expected key=value, got '" + item + "'");
    }
    std::string key = item.substr(0, eq);
    long value = 0;
    try {
      value = std::stol(item.substr(eq + 1));
    } catch (const std::exception&) {
      fail(ErrorKind::kValidate, "RABKIT_LIMITS: bad value in '" + item + "'");
    }
    if (value <= 0) {
      fail(ErrorKind::kValidate, "RABKIT_LIMITS: value must be positive in '" + item + "'");
    }
    if (key == "radius") {
      max_radius = static_cast<int>(value);
    } else if (key == "q") {
      max_q = static_cast<int>(value);
    } else if (key == "rank") {
      max_rank = static_cast<int>(value);
    } else if (key == "elements") {
      element_bound = static_cast<std::size_t>(value);
    } else if (key == "galleries") {
      gallery_bound = static_cast<std::size_t>(value);
    } else {
      fail(ErrorKind::kValidate, "RABKIT_LIMITS: unknown key '" + key + "'");
    }
  }
}

void Limits::check_radius(int r) const {
  if (r < 0) fail(ErrorKind::kValidate, "radius must be non-negative");
  if (r > max_radius) {
    fail(ErrorKind::kLimit, "radius " + std::to_string(r) +
                                " exceeds safety cap " + std::to_string(max_radius));
  }
}

}  // namespace rab
