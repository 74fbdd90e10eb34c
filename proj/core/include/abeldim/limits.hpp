#pragma once

#include <cstddef>
#include <cstdint>

namespace abeldim {

// Enumeration caps shared by every exhaustive routine. Exceeding a cap is a
// hard error, never a silent truncation.
struct Limits {
  std::size_t max_support_vertices = 20;
  std::uint64_t max_box_volume = 1'000'000;
  std::uint64_t max_grid_points = 200'000;
  int max_doubling_rounds = 10;
};

// Defaults, with ABELDIM_MAX_ENUM (if set to a positive integer) replacing
// the box-volume and grid-point caps.
const Limits& default_limits();

}  // namespace abeldim
