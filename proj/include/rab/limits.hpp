#pragma once

#include <cstddef>

namespace rab {

// Desk-scale safety caps. Enumerations refuse to run past these instead of
// silently truncating. The env var RABKIT_LIMITS ("radius=8,q=8,rank=6,
// elements=20000,galleries=20000") overrides individual caps.
struct Limits {
  int max_radius = 6;
  int max_q = 6;
  int max_rank = 5;
  std::size_t element_bound = 10000;
  std::size_t gallery_bound = 10000;

  void apply_env();
  void check_radius(int r) const;
};

}  // namespace rab
