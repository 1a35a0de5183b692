#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "memsat/dynamics.hpp"
#include "memsat/formula.hpp"
#include "memsat/result.hpp"

namespace memsat {

// The model constants in Q14. Multiplication by zeta, dt and 1/2^14 are
// arithmetic right shifts; every shift is floor division by a power of two.
struct FixedParams {
  int64_t alpha_int = 4;
  int64_t beta_int = 16;
  int64_t gamma_q14 = 4096;   // 2^14 * 2^-2
  int64_t delta_q14 = 819;    // 2^14 * delta
  int64_t epsilon_q14 = 16;   // 2^14 * 2^-10
  int zeta_shift = 10;        // * zeta == >> 10
  int dt_shift = 4;           // * dt == >> 4
  int scale_shift = 14;
};

constexpr int64_t kQ14One = 1 << 14;

// All state in Q14 integers: V = 2^14 * v, etc.
struct FixedState {
  std::vector<int64_t> V;
  std::vector<int64_t> Xs;
  std::vector<int64_t> Xl;
  uint64_t step = 0;
};

struct FixedDerivs {
  std::vector<int64_t> dV;
  std::vector<int64_t> dXs;
  std::vector<int64_t> dXl;
};

// Largest intermediate magnitudes seen while accumulating, for checking the
// 64-bit width budget.
struct WidthStats {
  int64_t max_abs_term = 0;  // per-clause contribution before the final >>14
  int64_t max_abs_dv = 0;    // per-variable accumulator
};

// V uniform on [-2^14, 2^14] (inclusive) from the seed, Xs = 2^13, Xl = 2^14.
FixedState init_fixed_state(const Formula& f, uint64_t seed);

// C' = (min over literals of (2^14 - q*V)) >> 1, in [0, 2^14].
int64_t clause_value_q14(const Formula& f, uint32_t m,
                         const std::vector<int64_t>& V);

FixedDerivs derivatives_q14(const Formula& f, const FixedParams& fp,
                            const FixedState& s, WidthStats* stats = nullptr);

// One Euler step of the integer datapath: derivatives from the input state,
// dt applied as >> dt_shift, then clamped to the state ranges.
FixedState step_q14(const Formula& f, const FixedParams& fp,
                    const FixedState& s);

Assignment boolean_projection(const FixedState& s);

// Same loop contract as dynamics::solve, bit-identical across platforms.
// When `trace` is set, the initial state and every subsequent state are
// dumped in the binary trace format below.
RunResult solve_q14(const Formula& f, const FixedParams& fp, uint64_t seed,
                    uint64_t max_steps = 100000000,
                    std::ostream* trace = nullptr);

// Trace layout, all little-endian: 8-byte magic "MEMTRC01", u64 N, u64 M,
// then per recorded state: u64 step, N x i64 V, M x i64 Xs, M x i64 Xl.
void write_trace_header(std::ostream& out, const Formula& f);
void write_trace_state(std::ostream& out, const FixedState& s);

// Round toward -inf onto the Q14 grid, matching shift semantics.
FixedState quantize(const FloatState& s);
FloatState dequantize(const FixedState& s);

// Validation bridge: quantize the float state, evaluate one derivative in
// both engines at the same grid point, return the max componentwise
// |float - fixed/2^14| deviation.
double quantization_check(const Formula& f, const Params& p,
                          const FixedParams& fp, const FloatState& s_float);

}  // namespace memsat
