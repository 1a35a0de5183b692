#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "memsat/barthel.hpp"
#include "memsat/dynamics.hpp"
#include "memsat/fixedpoint.hpp"
#include "memsat/formula.hpp"
#include "memsat/harness.hpp"

using nlohmann::json;
using namespace memsat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnsolved = 10;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

Formula load_cnf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormulaError("cannot open " + path);
  return parse_dimacs(in);
}

json result_to_json(const RunResult& r) {
  json j = {{"engine", r.engine}, {"solved", r.solved},  {"steps", r.steps},
            {"seed", r.seed},     {"N", r.num_vars},     {"wall_time_s", r.wall_time_s}};
  if (r.solved) {
    json a = json::array();
    for (uint8_t v : r.assignment) a.push_back(static_cast<int>(v));
    j["assignment"] = a;
  }
  return j;
}

int cmd_generate(uint32_t n, double ratio, uint64_t seed,
                 const std::string& out, bool as_json) {
  PlantedInstance inst = generate({n, ratio, seed});
  if (out.empty()) {
    emit_dimacs(inst.formula, std::cout);
  } else {
    std::ofstream cnf(out);
    if (!cnf) throw FormulaError("cannot write " + out);
    emit_dimacs(inst.formula, cnf);

    json side = {{"seed", seed},
                 {"N", inst.formula.num_vars()},
                 {"M", inst.formula.num_clauses()},
                 {"ratio", ratio}};
    json planted = json::array();
    for (uint8_t v : inst.planted) planted.push_back(v ? 1 : -1);
    side["planted"] = planted;
    std::string side_path = out + ".json";
    std::ofstream sj(side_path);
    sj << side.dump(2) << '\n';
    if (as_json) {
      std::cout << side.dump(2) << '\n';
    } else {
      std::cerr << "wrote " << out << " (N=" << inst.formula.num_vars()
                << " M=" << inst.formula.num_clauses() << ") and " << side_path
                << '\n';
    }
  }
  return kExitOk;
}

int cmd_solve(const std::string& path, const std::string& engine,
              uint64_t seed, uint64_t max_steps, int dt_shift,
              const std::string& out, const std::string& trace_path,
              bool as_json) {
  Formula f = load_cnf(path);
  RunResult r;
  if (engine_from_name(engine) == Engine::Float) {
    Params p;
    p.max_steps = max_steps;
    r = solve(f, p, seed);
  } else {
    FixedParams fp;
    fp.dt_shift = dt_shift;
    std::ofstream trace;
    std::ostream* tp = nullptr;
    if (!trace_path.empty()) {
      trace.open(trace_path, std::ios::binary);
      if (!trace) throw FormulaError("cannot write " + trace_path);
      tp = &trace;
    }
    r = solve_q14(f, fp, seed, max_steps, tp);
  }

  json j = result_to_json(r);
  if (as_json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << (r.solved ? "s SATISFIABLE" : "s UNKNOWN") << '\n'
              << "c engine " << r.engine << " steps " << r.steps
              << " wall_time_s " << r.wall_time_s << '\n';
    if (r.solved) {
      std::cout << "v ";
      for (uint32_t i = 0; i < r.num_vars; ++i)
        std::cout << (r.assignment[i] ? int(i + 1) : -int(i + 1)) << ' ';
      std::cout << "0\n";
    }
  }
  if (!out.empty()) {
    std::ofstream of(out);
    of << j.dump(2) << '\n';
  }
  return r.solved ? kExitOk : kExitUnsolved;
}

int cmd_bench(const EnsembleConfig& cfg, const std::string& out, bool as_json) {
  ScalingReport report = run_ensemble(cfg);
  if (!out.empty()) {
    std::ofstream csv(out + ".csv");
    csv << export_csv(report);
    std::ofstream js(out + ".json");
    js << export_json(report) << '\n';
  }
  if (as_json) {
    std::cout << export_json(report) << '\n';
  } else {
    std::cout << "engine " << engine_name(cfg.engine) << ", base seed "
              << cfg.base_seed << '\n';
    for (const SizeStats& st : report.per_size)
      std::cout << "N=" << st.n_vars << " solved " << st.solved << '/'
                << st.ensemble << " median_steps " << st.median_steps << '\n';
    if (report.fit)
      std::cout << "fit: exponent " << report.fit->exponent << " +/- "
                << report.fit->stderr_exponent << ", prefactor "
                << report.fit->prefactor << '\n';
  }
  return kExitOk;
}

int cmd_fit(const std::string& path, bool as_json) {
  std::ifstream in(path);
  if (!in) throw FormulaError("cannot open " + path);
  PowerLawFit fit = fit_power_law(load_points_csv(in));
  if (as_json) {
    json j = {{"exponent", fit.exponent},
              {"prefactor", fit.prefactor},
              {"stderr_exponent", fit.stderr_exponent}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "exponent " << fit.exponent << " +/- " << fit.stderr_exponent
              << ", prefactor " << fit.prefactor << '\n';
  }
  return kExitOk;
}

int cmd_resources(uint32_t n, uint64_t steps, bool as_json) {
  ResourceEstimate e = estimate_resources(n);
  json j = {{"N", e.n_vars},
            {"luts", e.luts},
            {"dsps", e.dsps},
            {"fits_vcu118", e.fits_vcu118},
            {"in_domain", e.in_domain},
            {"step_ns", ResourceEstimate::projected_step_ns}};
  if (steps > 0) j["projected_time_s"] = projected_fpga_time_s(steps);
  if (as_json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "N=" << e.n_vars << " LUTs=" << e.luts << " DSPs=" << e.dsps
              << " fits_vcu118=" << (e.fits_vcu118 ? "yes" : "no");
    if (!e.in_domain) std::cout << " (LUT fit out of domain below N=40)";
    if (steps > 0)
      std::cout << " projected_time_s=" << projected_fpga_time_s(steps);
    std::cout << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digital-memcomputing 3-SAT solver toolkit"};
  app.require_subcommand(1);
  bool as_json = false;

  // generate
  auto* gen = app.add_subcommand("generate", "generate a planted 3-SAT instance");
  uint32_t gen_n = 20;
  double gen_ratio = 4.3;
  uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("-n,--num-vars", gen_n, "number of variables")->required();
  gen->add_option("--ratio", gen_ratio, "clause ratio M/N");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("-o,--out", gen_out, "output CNF path (sidecar JSON alongside)");

  // solve
  auto* sol = app.add_subcommand("solve", "solve a CNF file");
  std::string sol_file, sol_engine = "fixed", sol_out, sol_trace;
  uint64_t sol_seed = 0, sol_max_steps = 100000000;
  int sol_dt_shift = 4;
  sol->add_option("file", sol_file, "DIMACS CNF input")->required();
  sol->add_option("--engine", sol_engine, "float or fixed")
      ->check(CLI::IsMember({"float", "fixed"}));
  sol->add_option("--seed", sol_seed, "run seed");
  sol->add_option("--max-steps", sol_max_steps, "step budget");
  sol->add_option("--dt-shift", sol_dt_shift, "dt as right shift (fixed engine)");
  sol->add_option("-o,--out", sol_out, "write JSON result here");
  sol->add_option("--trace", sol_trace, "binary state trace (fixed engine)");

  // bench
  auto* bench = app.add_subcommand("bench", "ensemble benchmark and scaling fit");
  EnsembleConfig bcfg;
  bcfg.sizes = {20, 40, 60};
  bcfg.runs_per_size = 100;
  std::string bench_engine = "fixed", bench_out;
  bench->add_option("--sizes", bcfg.sizes, "problem sizes")->delimiter(',');
  bench->add_option("--runs-per-size", bcfg.runs_per_size, "instances per size");
  bench->add_option("--seed", bcfg.base_seed, "base seed");
  bench->add_option("--engine", bench_engine, "float or fixed")
      ->check(CLI::IsMember({"float", "fixed"}));
  bench->add_option("--ratio", bcfg.ratio, "clause ratio M/N");
  bench->add_option("--max-steps", bcfg.max_steps, "step budget per run");
  bench->add_option("--jobs", bcfg.jobs, "concurrent solver instances");
  bench->add_option("-o,--out", bench_out, "output prefix (.csv and .json)");

  // fit
  auto* fit = app.add_subcommand("fit", "power-law fit of (N, median) CSV data");
  std::string fit_file;
  fit->add_option("file", fit_file, "CSV with N,median columns")->required();

  // resources
  auto* res = app.add_subcommand("resources", "FPGA resource/time projection");
  uint32_t res_n = 100;
  uint64_t res_steps = 0;
  res->add_option("-n,--num-vars", res_n, "number of variables")->required();
  res->add_option("--steps", res_steps, "step count for the time projection");

  for (auto* sc : {gen, sol, bench, fit, res})
    sc->add_flag("--json", as_json, "machine-readable JSON on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed())
      return cmd_generate(gen_n, gen_ratio, gen_seed, gen_out, as_json);
    if (sol->parsed())
      return cmd_solve(sol_file, sol_engine, sol_seed, sol_max_steps,
                       sol_dt_shift, sol_out, sol_trace, as_json);
    if (bench->parsed()) {
      bcfg.engine = engine_from_name(bench_engine);
      return cmd_bench(bcfg, bench_out, as_json);
    }
    if (fit->parsed()) return cmd_fit(fit_file, as_json);
    if (res->parsed()) return cmd_resources(res_n, res_steps, as_json);
  } catch (const FormulaError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}
