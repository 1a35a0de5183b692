#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "memsat/harness.hpp"

using namespace memsat;

TEST_CASE("lower median") {
  CHECK(median(std::vector<uint64_t>{5, 3, 9}) == 5);
  CHECK(median(std::vector<uint64_t>{4, 8}) == 4);
  CHECK(median(std::vector<uint64_t>{7}) == 7);
  CHECK_THROWS_AS(median(std::vector<uint64_t>{}), std::invalid_argument);
}

TEST_CASE("median is permutation invariant") {
  std::vector<uint64_t> a{9, 1, 6, 6, 2, 14};
  std::vector<uint64_t> b{14, 6, 2, 9, 6, 1};
  CHECK(median(a) == median(b));
}

TEST_CASE("power-law fit on exact data") {
  PowerLawFit two = fit_power_law({{10, 1000}, {100, 100000}});
  CHECK(two.exponent == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(two.stderr_exponent == 0.0);

  std::vector<std::pair<double, double>> cubic;
  for (int n = 20; n <= 100; n += 10)
    cubic.emplace_back(n, 7.5 * std::pow(n, 3));
  PowerLawFit fit = fit_power_law(cubic);
  CHECK(fit.exponent == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(fit.prefactor == doctest::Approx(7.5).epsilon(1e-9));
  CHECK(fit.stderr_exponent == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("fit rejects degenerate input") {
  CHECK_THROWS_AS(fit_power_law({{10, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_power_law({{10, 5}, {10, 6}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_power_law({{10, 0}, {20, 5}}), std::invalid_argument);
}

TEST_CASE("scaling all medians moves the prefactor, not the exponent") {
  std::vector<std::pair<double, double>> pts = {
      {20, 900}, {40, 4100}, {60, 11000}, {80, 26000}};
  PowerLawFit base = fit_power_law(pts);
  for (auto& p : pts) p.second *= 13.0;
  PowerLawFit scaled = fit_power_law(pts);
  CHECK(scaled.exponent == doctest::Approx(base.exponent).epsilon(1e-12));
  CHECK(scaled.prefactor == doctest::Approx(13.0 * base.prefactor).epsilon(1e-9));
}

TEST_CASE("resource model") {
  ResourceEstimate e100 = estimate_resources(100);
  CHECK(e100.luts == 751343);
  CHECK(e100.dsps == 4300);
  CHECK(e100.fits_vcu118);
  CHECK(e100.in_domain);

  ResourceEstimate e150 = estimate_resources(150);
  CHECK(e150.luts == 1229293);
  CHECK(e150.dsps == 6450);
  CHECK_FALSE(e150.fits_vcu118);

  CHECK_FALSE(estimate_resources(30).in_domain);
  CHECK(projected_fpga_time_s(1000000) == doctest::Approx(0.096));
}

TEST_CASE("ensemble is reproducible, also under concurrency") {
  EnsembleConfig cfg;
  cfg.sizes = {10, 20};
  cfg.runs_per_size = 8;
  cfg.base_seed = 77;
  cfg.engine = Engine::Fixed;
  cfg.max_steps = 200000;

  ScalingReport serial = run_ensemble(cfg);
  cfg.jobs = 4;
  ScalingReport parallel = run_ensemble(cfg);

  REQUIRE(serial.results.size() == parallel.results.size());
  for (size_t i = 0; i < serial.results.size(); ++i) {
    CHECK(serial.results[i].steps == parallel.results[i].steps);
    CHECK(serial.results[i].solved == parallel.results[i].solved);
    CHECK(serial.results[i].instance_seed == parallel.results[i].instance_seed);
  }
  for (size_t i = 0; i < serial.per_size.size(); ++i)
    CHECK(serial.per_size[i].median_steps == parallel.per_size[i].median_steps);
}

TEST_CASE("singleton ensembles have median equal to the observation") {
  EnsembleConfig cfg;
  cfg.sizes = {10};
  cfg.runs_per_size = 1;
  cfg.base_seed = 5;
  cfg.engine = Engine::Float;
  cfg.max_steps = 200000;
  ScalingReport r = run_ensemble(cfg);
  REQUIRE(r.per_size.size() == 1);
  if (r.results[0].solved)
    CHECK(r.per_size[0].median_steps == r.results[0].steps);
  CHECK_FALSE(r.fit.has_value());  // one size cannot be fitted
}

TEST_CASE("CSV export") {
  ScalingReport r;
  RunResult run;
  run.engine = "fixed";
  run.num_vars = 20;
  run.instance_seed = 42;
  run.solved = true;
  run.steps = 123;
  run.wall_time_s = 0.5;
  r.results.push_back(run);
  std::string csv = export_csv(r);
  CHECK(csv == "engine,N,instance_seed,solved,steps,wall_time_s\n"
               "fixed,20,42,1,123,0.5\n");

  ScalingReport empty;
  CHECK(export_csv(empty) == "engine,N,instance_seed,solved,steps,wall_time_s\n");
}

TEST_CASE("JSON export round-trips") {
  EnsembleConfig cfg;
  cfg.sizes = {10, 20};
  cfg.runs_per_size = 3;
  cfg.base_seed = 9;
  cfg.engine = Engine::Fixed;
  cfg.max_steps = 200000;
  ScalingReport r = run_ensemble(cfg);
  std::string once = export_json(r);
  std::string twice = export_json(parse_report_json(once));
  CHECK(once == twice);
}

TEST_CASE("points CSV loader") {
  std::istringstream in("N,median\n20,900\n40,4100\n");
  auto pts = load_points_csv(in);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == std::pair<double, double>{20, 900});
  CHECK(pts[1] == std::pair<double, double>{40, 4100});
  std::istringstream empty("header only\n");
  CHECK_THROWS_AS(load_points_csv(empty), std::invalid_argument);
}

TEST_CASE("engine names") {
  CHECK(engine_from_name("float") == Engine::Float);
  CHECK(engine_from_name("fixed") == Engine::Fixed);
  CHECK_THROWS_AS(engine_from_name("quantum"), std::invalid_argument);
  CHECK(std::string(engine_name(Engine::Float)) == "float");
}
