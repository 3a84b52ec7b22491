#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include "doctest.h"
#include "dstas/dstas.h"

namespace {

dstas_scenario* make_scenario(int m = 2, double gs = 1.0, double gp = 1.0,
                              double n0 = 1.0, double pmax = 10.0,
                              double limit = 1.0) {
  dstas_scenario* s = nullptr;
  REQUIRE(dstas_scenario_create(m, gs, gp, n0, pmax, limit, &s) == DSTAS_OK);
  REQUIRE(s != nullptr);
  return s;
}

}  // namespace

TEST_CASE("error names and argument validation") {
  CHECK(std::strcmp(dstas_error_name(DSTAS_OK), "ok") == 0);
  CHECK(dstas_error_name(DSTAS_ERR_IO) != nullptr);

  dstas_scenario* s = nullptr;
  CHECK(dstas_scenario_create(0, 1, 1, 1, 1, 1, &s) ==
        DSTAS_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(dstas_last_error()) > 0);
  CHECK(dstas_scenario_create(2, 1, 1, 1, 1, 1, nullptr) ==
        DSTAS_ERR_INVALID_ARGUMENT);

  double v = 0.0;
  CHECK(dstas_mutual_information(nullptr, 0.5, 1.0, &v) ==
        DSTAS_ERR_INVALID_ARGUMENT);
  dstas_scenario_destroy(nullptr);  // must be a no-op
}

TEST_CASE("closed-form entry points match reference values") {
  dstas_scenario* s = make_scenario();
  double v = 0.0;
  CHECK(dstas_cdf_data_gain(s, 0.5, 1.0, &v) == DSTAS_OK);
  CHECK(v == doctest::Approx(0.4672440425120344).epsilon(1e-10));
  CHECK(dstas_mean_interference_gain(s, 0.5, &v) == DSTAS_OK);
  CHECK(v == doctest::Approx(0.625).epsilon(1e-12));
  CHECK(dstas_mutual_information(s, 1.0, 1.0, &v) == DSTAS_OK);
  CHECK(v == doctest::Approx(1.1994077608258666).epsilon(1e-10));
  CHECK(dstas_outage_probability(s, 1.0, 1.0, 1.0, &v) == DSTAS_OK);
  CHECK(v > 0.0);
  CHECK(v < 1.0);
  CHECK(dstas_average_interference(s, 0.5, 2.0, &v) == DSTAS_OK);
  CHECK(v == doctest::Approx(1.25).epsilon(1e-12));
  dstas_scenario_destroy(s);
}

TEST_CASE("power and optimization") {
  dstas_scenario* s = make_scenario(4, 1.0, 1.0, 1.0, 10.0, 1.0);
  double ps = 0.0;
  int binding = -1;
  CHECK(dstas_statistical_power(s, 1.0, &ps, &binding) == DSTAS_OK);
  CHECK(ps == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(binding == 2);  // interference

  CHECK(dstas_instantaneous_power_pic(4.0, 2.0, 1.0, &ps) == DSTAS_OK);
  CHECK(ps == doctest::Approx(0.25).epsilon(1e-15));

  dstas_opt_result opt{};
  CHECK(dstas_optimize(s, 0, 1.0, &opt) == DSTAS_OK);
  CHECK(opt.objective_value == doctest::Approx(2.2150170757777894).epsilon(1e-8));
  CHECK(std::fabs(opt.delta_star - 0.222) < 5e-3);
  CHECK(dstas_optimize(s, 5, 1.0, &opt) == DSTAS_ERR_INVALID_ARGUMENT);
  dstas_scenario_destroy(s);
}

TEST_CASE("simulation through the C boundary") {
  dstas_scenario* s = make_scenario();
  dstas_sim_config cfg{};
  cfg.strategy = 0;
  cfg.delta = 1.0;
  cfg.policy = 2;
  cfg.fixed_power = 1.0;
  cfg.trials = 100000;
  cfg.seed = 3;
  cfg.r0 = 1.0;
  cfg.workers = 2;
  dstas_sim_report rep{};
  CHECK(dstas_simulate(s, &cfg, &rep) == DSTAS_OK);
  CHECK(rep.trials_used == 100000);
  CHECK(std::fabs(rep.mean_mi - 1.1994077608258666) < 4.0 * rep.mean_mi_stderr);

  cfg.delta = 2.0;
  CHECK(dstas_simulate(s, &cfg, &rep) == DSTAS_ERR_INVALID_ARGUMENT);
  cfg.delta = 1.0;
  cfg.strategy = 7;
  CHECK(dstas_simulate(s, &cfg, &rep) == DSTAS_ERR_INVALID_ARGUMENT);
  dstas_scenario_destroy(s);
}

TEST_CASE("sweep writes the fixed schema and reports I/O failures") {
  const char* spec =
      "variable=xi\nstart=0.5\nstop=2\npoints=3\nspacing=log\n"
      "systems=DS-AIC\ntrials=1000\nseed=1\n";
  const std::string path = "capi_sweep_test.csv";
  CHECK(dstas_sweep(spec, path.c_str()) == DSTAS_OK);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string header;
  std::getline(f, header);
  CHECK(header ==
        "sweep_variable,value,system,delta,p_s,metric_name,metric_value,"
        "stderr,trials,seed");
  std::remove(path.c_str());

  CHECK(dstas_sweep(spec, "/no-such-dir/x.csv") == DSTAS_ERR_IO);
  CHECK(dstas_sweep("points=-3\n", path.c_str()) == DSTAS_ERR_INVALID_ARGUMENT);
  CHECK(dstas_sweep(nullptr, path.c_str()) == DSTAS_ERR_INVALID_ARGUMENT);
}
