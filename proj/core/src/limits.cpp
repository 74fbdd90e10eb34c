#include "abeldim/limits.hpp"

#include <cstdlib>
#include <string>

namespace abeldim {

namespace {

Limits load_limits() {
  Limits limits;
  if (const char* raw = std::getenv("ABELDIM_MAX_ENUM")) {
    try {
      const auto value = std::stoull(raw);
      if (value > 0) {
        limits.max_box_volume = value;
        limits.max_grid_points = value;
      }
    } catch (const std::exception&) {
      // malformed value: keep defaults
    }
  }
  return limits;
}

}  // namespace

const Limits& default_limits() {
  static const Limits limits = load_limits();
  return limits;
}

}  // namespace abeldim
