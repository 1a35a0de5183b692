#pragma once

#include <cstdint>
#include <vector>

#include "memsat/formula.hpp"
#include "memsat/result.hpp"

namespace memsat {

// Model constants. Defaults match the power-of-two set used by the integer
// datapath, so the two engines integrate the same system.
struct Params {
  double alpha = 4.0;
  double beta = 16.0;
  double gamma = 0.25;             // 2^-2
  double delta = 819.0 / 16384.0;  // 819 * 2^-14
  double epsilon = 1.0 / 1024.0;   // 2^-10
  double zeta = 1.0 / 1024.0;      // 2^-10
  double dt = 0.0625;              // 2^-4
  uint64_t max_steps = 100000000;
  double xl_cap_factor = 1e4;  // x_l clamped to [1, xl_cap_factor * M]
};

// v in [-1,1] per variable, xs in [0,1] and xl in [1, cap] per clause.
struct FloatState {
  std::vector<double> v;
  std::vector<double> xs;
  std::vector<double> xl;
  uint64_t step = 0;
};

struct FloatDerivs {
  std::vector<double> dv;
  std::vector<double> dxs;
  std::vector<double> dxl;
};

// v uniform in [-1,1) from the seed, xs = 1/2, xl = 1.
FloatState init_float_state(const Formula& f, uint64_t seed);

// Clause function: half the minimum over the clause's literals of (1 - q*v).
// 0 at a satisfied extreme, 1 when maximally violated.
double clause_value(const Formula& f, uint32_t m, const std::vector<double>& v);

// Gradient force on variable n from clause m, weighted by how unsatisfied the
// other two literals are. n must occur in clause m.
double gradient_term(const Formula& f, uint32_t m, uint32_t n,
                     const std::vector<double>& v);

// Rigidity force: nonzero only when variable n attains the clause minimum
// (exact equality; every tied variable receives its term).
double rigidity_term(const Formula& f, uint32_t m, uint32_t n,
                     const std::vector<double>& v);

// All three derivative vectors, evaluated entirely from the input state.
FloatDerivs derivatives(const Formula& f, const Params& p, const FloatState& s);

// One forward Euler step with componentwise clamping to the state ranges.
// Two-phase: every derivative is computed from s before s' is written.
FloatState euler_step(const Formula& f, const Params& p, const FloatState& s);

// Sign projection: v >= 0 reads as TRUE (zero maps to TRUE by convention).
Assignment boolean_projection(const FloatState& s);

// Integrate until the sign projection satisfies f or the step budget runs
// out. Deterministic in (f, p, seed).
RunResult solve(const Formula& f, const Params& p, uint64_t seed);

}  // namespace memsat
