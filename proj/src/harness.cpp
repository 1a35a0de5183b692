#include "memsat/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "memsat/rng.hpp"

namespace memsat {

using nlohmann::json;

const char* engine_name(Engine e) {
  return e == Engine::Float ? "float" : "fixed";
}

Engine engine_from_name(const std::string& name) {
  if (name == "float") return Engine::Float;
  if (name == "fixed") return Engine::Fixed;
  throw std::invalid_argument("unknown engine: " + name);
}

namespace {

template <typename T>
T lower_median(std::vector<T> values) {
  if (values.empty()) throw std::invalid_argument("median of empty set");
  std::sort(values.begin(), values.end());
  return values[(values.size() - 1) / 2];
}

}  // namespace

uint64_t median(std::vector<uint64_t> values) {
  return lower_median(std::move(values));
}

double median(std::vector<double> values) {
  return lower_median(std::move(values));
}

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points) {
  std::vector<double> xs, ys;
  for (auto [n, med] : points) {
    if (!(med > 0.0))
      throw std::invalid_argument("power-law fit needs positive medians");
    xs.push_back(std::log(n));
    ys.push_back(std::log(med));
  }
  std::vector<double> distinct = xs;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 2)
    throw std::invalid_argument("power-law fit needs >= 2 distinct sizes");

  const size_t n = xs.size();
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;

  double sse = 0;
  for (size_t i = 0; i < n; ++i) {
    double r = ys[i] - (intercept + slope * xs[i]);
    sse += r * r;
  }
  PowerLawFit fit;
  fit.exponent = slope;
  fit.prefactor = std::exp(intercept);
  fit.stderr_exponent = n > 2 ? std::sqrt(sse / (n - 2) / sxx) : 0.0;
  return fit;
}

ResourceEstimate estimate_resources(uint32_t n_vars) {
  ResourceEstimate e;
  e.n_vars = n_vars;
  e.luts = -204557 + int64_t{9559} * n_vars;
  e.dsps = int64_t{43} * n_vars;
  e.fits_vcu118 = e.luts <= 1182240 && e.dsps <= 6840;
  e.in_domain = n_vars >= 40;
  return e;
}

double projected_fpga_time_s(uint64_t steps) {
  return static_cast<double>(steps) * 96e-9;
}

uint64_t instance_seed_for(uint64_t base_seed, uint32_t n_vars, uint32_t run) {
  return derive_seed(base_seed, n_vars, uint64_t{2} * run);
}

uint64_t run_seed_for(uint64_t base_seed, uint32_t n_vars, uint32_t run) {
  return derive_seed(base_seed, n_vars, uint64_t{2} * run + 1);
}

ScalingReport run_ensemble(const EnsembleConfig& cfg) {
  if (cfg.sizes.empty()) throw std::invalid_argument("ensemble: no sizes");
  if (cfg.runs_per_size < 1)
    throw std::invalid_argument("ensemble: runs_per_size must be >= 1");

  ScalingReport report;
  report.config = cfg;
  const size_t total = cfg.sizes.size() * cfg.runs_per_size;
  report.results.resize(total);

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1)) {
      const uint32_t si = static_cast<uint32_t>(idx / cfg.runs_per_size);
      const uint32_t ri = static_cast<uint32_t>(idx % cfg.runs_per_size);
      const uint32_t n = cfg.sizes[si];
      const uint64_t iseed = instance_seed_for(cfg.base_seed, n, ri);
      const uint64_t rseed = run_seed_for(cfg.base_seed, n, ri);
      PlantedInstance inst = generate({n, cfg.ratio, iseed});
      RunResult r;
      if (cfg.engine == Engine::Float) {
        Params p = cfg.float_params;
        p.max_steps = cfg.max_steps;
        r = solve(inst.formula, p, rseed);
      } else {
        r = solve_q14(inst.formula, cfg.fixed_params, rseed, cfg.max_steps);
      }
      r.instance_seed = iseed;
      report.results[idx] = std::move(r);
    }
  };

  const unsigned jobs = std::max(1u, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < jobs; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  std::vector<std::pair<double, double>> points;
  for (size_t si = 0; si < cfg.sizes.size(); ++si) {
    SizeStats st;
    st.n_vars = cfg.sizes[si];
    st.ensemble = cfg.runs_per_size;
    std::vector<uint64_t> solved_steps;
    for (uint32_t ri = 0; ri < cfg.runs_per_size; ++ri) {
      const RunResult& r = report.results[si * cfg.runs_per_size + ri];
      if (r.solved) solved_steps.push_back(r.steps);
    }
    st.solved = static_cast<uint32_t>(solved_steps.size());
    st.unsolved_fraction =
        1.0 - static_cast<double>(st.solved) / st.ensemble;
    if (!solved_steps.empty()) {
      st.median_steps = median(std::move(solved_steps));
      if (st.median_steps > 0)
        points.emplace_back(st.n_vars, static_cast<double>(st.median_steps));
    }
    report.per_size.push_back(st);
  }

  std::vector<double> distinct;
  for (auto& pt : points) distinct.push_back(pt.first);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() >= 2) report.fit = fit_power_law(points);
  return report;
}

std::string export_csv(const ScalingReport& report) {
  std::ostringstream out;
  out << "engine,N,instance_seed,solved,steps,wall_time_s\n";
  for (const RunResult& r : report.results) {
    out << r.engine << ',' << r.num_vars << ',' << r.instance_seed << ','
        << (r.solved ? 1 : 0) << ',' << r.steps << ',' << r.wall_time_s
        << '\n';
  }
  return out.str();
}

namespace {

json fit_to_json(const PowerLawFit& f) {
  return {{"exponent", f.exponent},
          {"prefactor", f.prefactor},
          {"stderr_exponent", f.stderr_exponent}};
}

}  // namespace

std::string export_json(const ScalingReport& report) {
  json j;
  j["config"] = {{"engine", engine_name(report.config.engine)},
                 {"sizes", report.config.sizes},
                 {"runs_per_size", report.config.runs_per_size},
                 {"base_seed", report.config.base_seed},
                 {"ratio", report.config.ratio},
                 {"max_steps", report.config.max_steps}};
  j["per_size"] = json::array();
  for (const SizeStats& st : report.per_size) {
    j["per_size"].push_back({{"N", st.n_vars},
                             {"ensemble", st.ensemble},
                             {"solved", st.solved},
                             {"median_steps", st.median_steps},
                             {"unsolved_fraction", st.unsolved_fraction}});
  }
  j["fit"] = report.fit ? fit_to_json(*report.fit) : json(nullptr);
  j["results"] = json::array();
  for (const RunResult& r : report.results) {
    j["results"].push_back({{"engine", r.engine},
                            {"N", r.num_vars},
                            {"instance_seed", r.instance_seed},
                            {"run_seed", r.seed},
                            {"solved", r.solved},
                            {"steps", r.steps},
                            {"wall_time_s", r.wall_time_s}});
  }
  return j.dump(2);
}

ScalingReport parse_report_json(const std::string& text) {
  json j = json::parse(text);
  ScalingReport report;
  const json& c = j.at("config");
  report.config.engine = engine_from_name(c.at("engine").get<std::string>());
  report.config.sizes = c.at("sizes").get<std::vector<uint32_t>>();
  report.config.runs_per_size = c.at("runs_per_size").get<uint32_t>();
  report.config.base_seed = c.at("base_seed").get<uint64_t>();
  report.config.ratio = c.at("ratio").get<double>();
  report.config.max_steps = c.at("max_steps").get<uint64_t>();
  for (const json& s : j.at("per_size")) {
    SizeStats st;
    st.n_vars = s.at("N").get<uint32_t>();
    st.ensemble = s.at("ensemble").get<uint32_t>();
    st.solved = s.at("solved").get<uint32_t>();
    st.median_steps = s.at("median_steps").get<uint64_t>();
    st.unsolved_fraction = s.at("unsolved_fraction").get<double>();
    report.per_size.push_back(st);
  }
  if (!j.at("fit").is_null()) {
    PowerLawFit f;
    f.exponent = j["fit"].at("exponent").get<double>();
    f.prefactor = j["fit"].at("prefactor").get<double>();
    f.stderr_exponent = j["fit"].at("stderr_exponent").get<double>();
    report.fit = f;
  }
  for (const json& s : j.at("results")) {
    RunResult r;
    r.engine = s.at("engine").get<std::string>();
    r.num_vars = s.at("N").get<uint32_t>();
    r.instance_seed = s.at("instance_seed").get<uint64_t>();
    r.seed = s.at("run_seed").get<uint64_t>();
    r.solved = s.at("solved").get<bool>();
    r.steps = s.at("steps").get<uint64_t>();
    r.wall_time_s = s.at("wall_time_s").get<double>();
    report.results.push_back(std::move(r));
  }
  return report;
}

std::vector<std::pair<double, double>> load_points_csv(std::istream& in) {
  std::vector<std::pair<double, double>> points;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double n, med;
    if (ls >> n >> med) points.emplace_back(n, med);
    // non-numeric lines (headers) are skipped
  }
  if (points.empty())
    throw std::invalid_argument("no (N, median) rows in CSV input");
  return points;
}

}  // namespace memsat
