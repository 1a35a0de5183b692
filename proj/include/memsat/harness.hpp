#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "memsat/barthel.hpp"
#include "memsat/dynamics.hpp"
#include "memsat/fixedpoint.hpp"
#include "memsat/result.hpp"

namespace memsat {

enum class Engine { Float, Fixed };

const char* engine_name(Engine e);
Engine engine_from_name(const std::string& name);

// Lower median: for even counts the smaller of the two central elements.
uint64_t median(std::vector<uint64_t> values);
double median(std::vector<double> values);

struct PowerLawFit {
  double exponent = 0.0;   // slope of the log-log least-squares line
  double prefactor = 0.0;  // exp(intercept)
  double stderr_exponent = 0.0;
};

// Ordinary least squares on (log N, log median). Needs at least two distinct
// sizes and strictly positive medians.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points);

struct ResourceEstimate {
  uint32_t n_vars = 0;
  int64_t luts = 0;       // -204557 + 9559*N
  int64_t dsps = 0;       // 43*N
  bool fits_vcu118 = false;
  bool in_domain = false;  // the LUT fit is linear only from N = 40 up
  static constexpr int64_t projected_step_ns = 96;
};

ResourceEstimate estimate_resources(uint32_t n_vars);

// Projected FPGA time to solution for a given step count, in seconds.
double projected_fpga_time_s(uint64_t steps);

struct EnsembleConfig {
  std::vector<uint32_t> sizes;
  uint32_t runs_per_size = 100;
  uint64_t base_seed = 0;
  Engine engine = Engine::Fixed;
  double ratio = 4.3;
  uint64_t max_steps = 100000000;
  unsigned jobs = 1;
  Params float_params;
  FixedParams fixed_params;
};

struct SizeStats {
  uint32_t n_vars = 0;
  uint32_t ensemble = 0;
  uint32_t solved = 0;
  uint64_t median_steps = 0;  // over solved runs only
  double unsolved_fraction = 0.0;
};

struct ScalingReport {
  EnsembleConfig config;
  std::vector<RunResult> results;  // keyed by (size index, run index)
  std::vector<SizeStats> per_size;
  std::optional<PowerLawFit> fit;
};

// Per-run seeds under a base seed; documented so external tooling can
// regenerate any instance: instance_seed = derive_seed(base, N, 2*i),
// run_seed = derive_seed(base, N, 2*i + 1).
uint64_t instance_seed_for(uint64_t base_seed, uint32_t n_vars, uint32_t run);
uint64_t run_seed_for(uint64_t base_seed, uint32_t n_vars, uint32_t run);

// Generates runs_per_size instances per size, solves each, aggregates
// medians and the power-law fit. Runs are distributed over cfg.jobs threads;
// results are keyed by index, so the report is identical regardless of
// completion order.
ScalingReport run_ensemble(const EnsembleConfig& cfg);

// CSV: header "engine,N,instance_seed,solved,steps,wall_time_s", one row per
// run, stable order.
std::string export_csv(const ScalingReport& report);

// Full nested report as JSON; parse_report_json(export_json(r)) reproduces
// the report (wall times included verbatim).
std::string export_json(const ScalingReport& report);
ScalingReport parse_report_json(const std::string& text);

// Two-column CSV of (N, median), optional header, for re-fitting external
// data.
std::vector<std::pair<double, double>> load_points_csv(std::istream& in);

}  // namespace memsat
