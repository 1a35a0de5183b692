#pragma once

#include <cstdint>
#include <string>

#include "memsat/formula.hpp"

namespace memsat {

// Outcome of one solver run. When solved, `assignment` has been re-checked
// against the formula before the result is returned.
struct RunResult {
  bool solved = false;
  uint64_t steps = 0;
  double wall_time_s = 0.0;
  std::string engine;  // "float" or "fixed"
  uint64_t seed = 0;
  uint64_t instance_seed = 0;
  uint32_t num_vars = 0;
  Assignment assignment;
};

}  // namespace memsat
