#include "memsat/fixedpoint.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <ostream>
#include <stdexcept>

#include "memsat/rng.hpp"

namespace memsat {

static_assert((-3 >> 1) == -2, "arithmetic right shift required");

FixedState init_fixed_state(const Formula& f, uint64_t seed) {
  SplitMix64 rng(seed);
  FixedState s;
  s.V.resize(f.num_vars());
  for (int64_t& vn : s.V)
    vn = static_cast<int64_t>(rng.next_below(2 * kQ14One + 1)) - kQ14One;
  s.Xs.assign(f.num_clauses(), kQ14One / 2);
  s.Xl.assign(f.num_clauses(), kQ14One);
  return s;
}

int64_t clause_value_q14(const Formula& f, uint32_t m,
                         const std::vector<int64_t>& V) {
  const Clause& c = f.clause(m);
  int64_t t0 = kQ14One - c.lits[0].sign * V[c.lits[0].var];
  int64_t t1 = kQ14One - c.lits[1].sign * V[c.lits[1].var];
  int64_t t2 = kQ14One - c.lits[2].sign * V[c.lits[2].var];
  return std::min({t0, t1, t2}) >> 1;
}

FixedDerivs derivatives_q14(const Formula& f, const FixedParams& fp,
                            const FixedState& s, WidthStats* stats) {
  const uint32_t n = f.num_vars();
  const uint32_t m = f.num_clauses();
  FixedDerivs d;
  d.dV.assign(n, 0);
  d.dXs.resize(m);
  d.dXl.resize(m);

  for (uint32_t ci = 0; ci < m; ++ci) {
    const Clause& c = f.clause(ci);
    int64_t t[3];
    for (int i = 0; i < 3; ++i)
      t[i] = kQ14One - c.lits[i].sign * s.V[c.lits[i].var];
    const int64_t tmin = std::min({t[0], t[1], t[2]});
    const int64_t cm = tmin >> 1;

    d.dXs[ci] =
        (fp.beta_int * (s.Xs[ci] + fp.epsilon_q14) * (cm - fp.gamma_q14)) >> 14;
    d.dXl[ci] = fp.alpha_int * (cm - fp.delta_q14);

    const int64_t grad_w = (s.Xl[ci] * s.Xs[ci]) >> 14;
    const int64_t rig_w =
        ((kQ14One + (s.Xl[ci] >> fp.zeta_shift)) * (kQ14One - s.Xs[ci])) >> 14;
    for (int i = 0; i < 3; ++i) {
      const Literal& l = c.lits[i];
      const int64_t other = std::min(t[(i + 1) % 3], t[(i + 2) % 3]);
      const int64_t grad = (l.sign * other) >> 1;
      int64_t term = (grad_w * grad) >> 14;
      if (cm == (t[i] >> 1)) {
        const int64_t rig = (l.sign * kQ14One - s.V[l.var]) >> 1;
        term += (rig_w * rig) >> 14;
      }
      if (stats) stats->max_abs_term = std::max(stats->max_abs_term, std::abs(term));
      d.dV[l.var] += term;
      assert(std::abs(d.dV[l.var]) < (int64_t{1} << 62));
    }
  }
  if (stats)
    for (int64_t x : d.dV)
      stats->max_abs_dv = std::max(stats->max_abs_dv, std::abs(x));
  return d;
}

namespace {

void apply_step(const Formula& f, const FixedParams& fp, const FixedDerivs& d,
                FixedState& s) {
  const int64_t xl_cap = int64_t{10000} * f.num_clauses() * kQ14One;
  for (uint32_t i = 0; i < f.num_vars(); ++i)
    s.V[i] = std::clamp(s.V[i] + (d.dV[i] >> fp.dt_shift), -kQ14One, kQ14One);
  for (uint32_t m = 0; m < f.num_clauses(); ++m) {
    s.Xs[m] = std::clamp(s.Xs[m] + (d.dXs[m] >> fp.dt_shift), int64_t{0}, kQ14One);
    s.Xl[m] = std::clamp(s.Xl[m] + (d.dXl[m] >> fp.dt_shift), kQ14One, xl_cap);
  }
  ++s.step;
}

bool projection_satisfies(const Formula& f, const std::vector<int64_t>& V) {
  for (const Clause& c : f.clauses()) {
    bool sat = false;
    for (const Literal& l : c.lits) {
      if ((l.sign > 0) == (V[l.var] >= 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

void put_u64(std::ostream& out, uint64_t x) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((x >> (8 * i)) & 0xFF);
  out.write(buf, 8);
}

void put_i64_vec(std::ostream& out, const std::vector<int64_t>& v) {
  for (int64_t x : v) put_u64(out, static_cast<uint64_t>(x));
}

}  // namespace

FixedState step_q14(const Formula& f, const FixedParams& fp,
                    const FixedState& s) {
  FixedDerivs d = derivatives_q14(f, fp, s);
  FixedState next = s;
  apply_step(f, fp, d, next);
  return next;
}

Assignment boolean_projection(const FixedState& s) {
  Assignment a(s.V.size());
  for (size_t i = 0; i < s.V.size(); ++i) a[i] = s.V[i] >= 0 ? 1 : 0;
  return a;
}

void write_trace_header(std::ostream& out, const Formula& f) {
  out.write("MEMTRC01", 8);
  put_u64(out, f.num_vars());
  put_u64(out, f.num_clauses());
}

void write_trace_state(std::ostream& out, const FixedState& s) {
  put_u64(out, s.step);
  put_i64_vec(out, s.V);
  put_i64_vec(out, s.Xs);
  put_i64_vec(out, s.Xl);
}

RunResult solve_q14(const Formula& f, const FixedParams& fp, uint64_t seed,
                    uint64_t max_steps, std::ostream* trace) {
  const auto t0 = std::chrono::steady_clock::now();
  FixedState s = init_fixed_state(f, seed);
  if (trace) {
    write_trace_header(*trace, f);
    write_trace_state(*trace, s);
  }

  bool solved = projection_satisfies(f, s.V);
  FixedDerivs d;
  while (!solved && s.step < max_steps) {
    d = derivatives_q14(f, fp, s);
    apply_step(f, fp, d, s);
    if (trace) write_trace_state(*trace, s);
    solved = projection_satisfies(f, s.V);
  }

  RunResult r;
  r.engine = "fixed";
  r.seed = seed;
  r.num_vars = f.num_vars();
  r.steps = s.step;
  r.solved = solved;
  if (solved) {
    r.assignment = boolean_projection(s);
    if (!f.evaluate(r.assignment).satisfied)
      throw std::logic_error("solver reported an unverified assignment");
  }
  r.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

FixedState quantize(const FloatState& s) {
  FixedState q;
  q.step = s.step;
  auto to_q14 = [](double x) {
    return static_cast<int64_t>(std::floor(x * kQ14One));
  };
  q.V.reserve(s.v.size());
  for (double x : s.v) q.V.push_back(to_q14(x));
  q.Xs.reserve(s.xs.size());
  for (double x : s.xs) q.Xs.push_back(to_q14(x));
  q.Xl.reserve(s.xl.size());
  for (double x : s.xl) q.Xl.push_back(to_q14(x));
  return q;
}

FloatState dequantize(const FixedState& s) {
  FloatState f;
  f.step = s.step;
  auto to_real = [](int64_t x) { return static_cast<double>(x) / kQ14One; };
  f.v.reserve(s.V.size());
  for (int64_t x : s.V) f.v.push_back(to_real(x));
  f.xs.reserve(s.Xs.size());
  for (int64_t x : s.Xs) f.xs.push_back(to_real(x));
  f.xl.reserve(s.Xl.size());
  for (int64_t x : s.Xl) f.xl.push_back(to_real(x));
  return f;
}

double quantization_check(const Formula& f, const Params& p,
                          const FixedParams& fp, const FloatState& s_float) {
  FixedState q = quantize(s_float);
  FloatState grid = dequantize(q);
  FloatDerivs fd = derivatives(f, p, grid);
  FixedDerivs id = derivatives_q14(f, fp, q);

  double dev = 0.0;
  auto update = [&dev](double a, int64_t b) {
    dev = std::max(dev, std::abs(a - static_cast<double>(b) / kQ14One));
  };
  for (size_t i = 0; i < fd.dv.size(); ++i) update(fd.dv[i], id.dV[i]);
  for (size_t i = 0; i < fd.dxs.size(); ++i) update(fd.dxs[i], id.dXs[i]);
  for (size_t i = 0; i < fd.dxl.size(); ++i) update(fd.dxl[i], id.dXl[i]);
  return dev;
}

}  // namespace memsat
