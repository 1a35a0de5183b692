#include "memsat/dynamics.hpp"

#include <algorithm>
#include <chrono>
#include <cassert>
#include <stdexcept>

#include "memsat/rng.hpp"

namespace memsat {

FloatState init_float_state(const Formula& f, uint64_t seed) {
  SplitMix64 rng(seed);
  FloatState s;
  s.v.resize(f.num_vars());
  for (double& vn : s.v) vn = rng.next_symmetric();
  s.xs.assign(f.num_clauses(), 0.5);
  s.xl.assign(f.num_clauses(), 1.0);
  return s;
}

double clause_value(const Formula& f, uint32_t m, const std::vector<double>& v) {
  const Clause& c = f.clause(m);
  double t0 = 1.0 - c.lits[0].sign * v[c.lits[0].var];
  double t1 = 1.0 - c.lits[1].sign * v[c.lits[1].var];
  double t2 = 1.0 - c.lits[2].sign * v[c.lits[2].var];
  return 0.5 * std::min({t0, t1, t2});
}

namespace {

int position_of(const Clause& c, uint32_t n) {
  for (int i = 0; i < 3; ++i)
    if (c.lits[i].var == n) return i;
  throw std::invalid_argument("variable not in clause");
}

}  // namespace

double gradient_term(const Formula& f, uint32_t m, uint32_t n,
                     const std::vector<double>& v) {
  const Clause& c = f.clause(m);
  int i = position_of(c, n);
  int j = (i + 1) % 3, k = (i + 2) % 3;
  double tj = 1.0 - c.lits[j].sign * v[c.lits[j].var];
  double tk = 1.0 - c.lits[k].sign * v[c.lits[k].var];
  return 0.5 * c.lits[i].sign * std::min(tj, tk);
}

double rigidity_term(const Formula& f, uint32_t m, uint32_t n,
                     const std::vector<double>& v) {
  const Clause& c = f.clause(m);
  int i = position_of(c, n);
  double own = 0.5 * (1.0 - c.lits[i].sign * v[c.lits[i].var]);
  if (clause_value(f, m, v) == own)
    return 0.5 * (c.lits[i].sign - v[c.lits[i].var]);
  return 0.0;
}

namespace {

// Accumulates all three derivative vectors in one pass over the clauses.
void compute_derivs(const Formula& f, const Params& p, const FloatState& s,
                    FloatDerivs& d) {
  const uint32_t n = f.num_vars();
  const uint32_t m = f.num_clauses();
  d.dv.assign(n, 0.0);
  d.dxs.resize(m);
  d.dxl.resize(m);

  for (uint32_t ci = 0; ci < m; ++ci) {
    const Clause& c = f.clause(ci);
    double t[3];
    for (int i = 0; i < 3; ++i)
      t[i] = 1.0 - c.lits[i].sign * s.v[c.lits[i].var];
    const double tmin = std::min({t[0], t[1], t[2]});
    const double cm = 0.5 * tmin;

    d.dxs[ci] = p.beta * (s.xs[ci] + p.epsilon) * (cm - p.gamma);
    d.dxl[ci] = p.alpha * (cm - p.delta);

    const double grad_w = s.xl[ci] * s.xs[ci];
    const double rig_w = (1.0 + p.zeta * s.xl[ci]) * (1.0 - s.xs[ci]);
    for (int i = 0; i < 3; ++i) {
      const Literal& l = c.lits[i];
      const double other = std::min(t[(i + 1) % 3], t[(i + 2) % 3]);
      double dvn = grad_w * (0.5 * l.sign * other);
      if (t[i] == tmin)
        dvn += rig_w * (0.5 * (l.sign - s.v[l.var]));
      d.dv[l.var] += dvn;
    }
  }
}

void apply_step(const Formula& f, const Params& p, const FloatDerivs& d,
                FloatState& s) {
  const double xl_cap = p.xl_cap_factor * f.num_clauses();
  for (uint32_t i = 0; i < f.num_vars(); ++i)
    s.v[i] = std::clamp(s.v[i] + p.dt * d.dv[i], -1.0, 1.0);
  for (uint32_t m = 0; m < f.num_clauses(); ++m) {
    s.xs[m] = std::clamp(s.xs[m] + p.dt * d.dxs[m], 0.0, 1.0);
    s.xl[m] = std::clamp(s.xl[m] + p.dt * d.dxl[m], 1.0, xl_cap);
  }
  ++s.step;
}

bool projection_satisfies(const Formula& f, const std::vector<double>& v) {
  for (const Clause& c : f.clauses()) {
    bool sat = false;
    for (const Literal& l : c.lits) {
      if ((l.sign > 0) == (v[l.var] >= 0.0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace

FloatDerivs derivatives(const Formula& f, const Params& p, const FloatState& s) {
  FloatDerivs d;
  compute_derivs(f, p, s, d);
  return d;
}

FloatState euler_step(const Formula& f, const Params& p, const FloatState& s) {
  FloatDerivs d = derivatives(f, p, s);
  FloatState next = s;
  apply_step(f, p, d, next);
  return next;
}

Assignment boolean_projection(const FloatState& s) {
  Assignment a(s.v.size());
  for (size_t i = 0; i < s.v.size(); ++i) a[i] = s.v[i] >= 0.0 ? 1 : 0;
  return a;
}

RunResult solve(const Formula& f, const Params& p, uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  FloatState s = init_float_state(f, seed);
  FloatDerivs d;

  bool solved = projection_satisfies(f, s.v);
  while (!solved && s.step < p.max_steps) {
    compute_derivs(f, p, s, d);
    apply_step(f, p, d, s);
    solved = projection_satisfies(f, s.v);
  }

  RunResult r;
  r.engine = "float";
  r.seed = seed;
  r.num_vars = f.num_vars();
  r.steps = s.step;
  r.solved = solved;
  if (solved) {
    r.assignment = boolean_projection(s);
    assert(f.evaluate(r.assignment).satisfied);
    if (!f.evaluate(r.assignment).satisfied)
      throw std::logic_error("solver reported an unverified assignment");
  }
  r.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

}  // namespace memsat
