// Command-line front end: scenario analysis, Monte Carlo runs, and the
// figure-reproduction sweeps. Links the C API only.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dstas/dstas.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) {
  throw CliError{code, message};
}

[[noreturn]] void fail_api(int rc, const std::string& context) {
  const std::string detail = dstas_last_error();
  fail(rc == DSTAS_ERR_IO ? kExitIo : kExitUsage,
       context + ": " + dstas_error_name(rc) +
           (detail.empty() ? "" : " (" + detail + ")"));
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// Line-oriented key=value config with '#' comments; flags override file values.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::map<std::string, std::string> kv;
  if (path.empty()) return kv;
  std::ifstream f(path);
  if (!f) fail(kExitUsage, "--config: cannot read " + path);
  std::string line;
  while (std::getline(f, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto strip = [](std::string& s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    };
    strip(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(kExitUsage, "--config: expected key=value, got: " + line);
    }
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    strip(key);
    strip(val);
    kv[key] = val;
  }
  return kv;
}

// Scenario flags shared by the subcommands; powers are taken in dB and
// converted once at this boundary.
struct ScenarioOptions {
  int antennas = 2;
  double xi = 1.0;
  double mean_gain_s = -1.0;  // <0 means derive from xi * mean_gain_p
  double mean_gain_p = 1.0;
  double noise = 1.0;
  double r0 = 1.0;
  double pmax_db = 10.0;
  double wp_db = 0.0;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("-M,--antennas", antennas, "transmit antennas at the secondary");
    cmd->add_option("--xi", xi, "mean-gain ratio mean_gain_s/mean_gain_p");
    cmd->add_option("--mean-gain-s", mean_gain_s, "mean s->s gain (overrides --xi)");
    cmd->add_option("--mean-gain-p", mean_gain_p, "mean s->p gain");
    cmd->add_option("--noise", noise, "noise power N0, linear");
    cmd->add_option("--r0", r0, "outage target rate, bits/s/Hz");
    cmd->add_option("--pmax-db", pmax_db, "peak transmit power, dB (inf allowed)");
    cmd->add_option("--wp-db", wp_db, "average interference limit, dB");
  }

  void apply_config(const std::map<std::string, std::string>& kv, CLI::App* cmd) {
    auto set_if = [&](const char* key, const char* flag, auto& field) {
      const auto it = kv.find(key);
      if (it == kv.end() || cmd->count(flag) > 0) return;
      std::istringstream ss(it->second);
      ss >> field;
      if (ss.fail()) fail(kExitUsage, std::string("--config: bad value for ") + key);
    };
    set_if("antennas", "--antennas", antennas);
    set_if("xi", "--xi", xi);
    set_if("mean_gain_s", "--mean-gain-s", mean_gain_s);
    set_if("mean_gain_p", "--mean-gain-p", mean_gain_p);
    set_if("noise", "--noise", noise);
    set_if("r0", "--r0", r0);
    set_if("pmax_db", "--pmax-db", pmax_db);
    set_if("wp_db", "--wp-db", wp_db);
  }

  dstas_scenario* create() const {
    const double gs = mean_gain_s > 0.0 ? mean_gain_s : xi * mean_gain_p;
    dstas_scenario* s = nullptr;
    const int rc =
        dstas_scenario_create(antennas, gs, mean_gain_p, noise,
                              db_to_linear(pmax_db), db_to_linear(wp_db), &s);
    if (rc != DSTAS_OK) fail_api(rc, "scenario");
    return s;
  }
};

struct ScenarioGuard {
  dstas_scenario* s;
  explicit ScenarioGuard(dstas_scenario* p) : s(p) {}
  ~ScenarioGuard() { dstas_scenario_destroy(s); }
  ScenarioGuard(const ScenarioGuard&) = delete;
  ScenarioGuard& operator=(const ScenarioGuard&) = delete;
};

void write_csv(const std::string& path, const std::string& header,
               const std::string& row) {
  std::ofstream f(path);
  if (!f) fail(kExitIo, "cannot open output file: " + path);
  f << header << "\n" << row << "\n";
  if (!f.good()) fail(kExitIo, "write failed: " + path);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

int run_analyze(const ScenarioOptions& sc, const std::string& delta_arg,
                const std::string& metric, const std::string& out_path) {
  if (metric != "mi" && metric != "outage") {
    fail(kExitUsage, "--metric: must be 'mi' or 'outage'");
  }
  ScenarioGuard guard(sc.create());
  double delta = 1.0;
  if (delta_arg == "optimal") {
    dstas_opt_result opt{};
    const int rc =
        dstas_optimize(guard.s, metric == "mi" ? 0 : 1, sc.r0, &opt);
    if (rc != DSTAS_OK) fail_api(rc, "optimize");
    delta = opt.delta_star;
  } else {
    std::istringstream ss(delta_arg);
    ss >> delta;
    if (ss.fail() || !ss.eof() || !(delta >= 0.0 && delta <= 1.0)) {
      fail(kExitUsage, "--delta: must be a number in [0,1] or 'optimal'");
    }
  }
  double p_s = 0.0;
  int binding = 0;
  int rc = dstas_statistical_power(guard.s, delta, &p_s, &binding);
  if (rc != DSTAS_OK) fail_api(rc, "statistical power");
  double value = 0.0;
  rc = metric == "mi"
           ? dstas_mutual_information(guard.s, delta, p_s, &value)
           : dstas_outage_probability(guard.s, delta, p_s, sc.r0, &value);
  if (rc != DSTAS_OK) fail_api(rc, "metric");
  const char* binding_name[] = {"none", "peak-power", "interference"};
  std::printf("delta          %s\n", fmt(delta).c_str());
  std::printf("p_s            %s (%.6g dB, binding: %s)\n", fmt(p_s).c_str(),
              10.0 * std::log10(p_s), binding_name[binding]);
  std::printf("%-14s %s\n", metric == "mi" ? "mi (bits/s/Hz)" : "outage",
              fmt(value).c_str());
  if (!out_path.empty()) {
    write_csv(out_path, "delta,p_s,metric_name,metric_value",
              fmt(delta) + "," + fmt(p_s) + "," + metric + "," + fmt(value));
  }
  return 0;
}

int run_optimize(const ScenarioOptions& sc, const std::string& objective,
                 const std::string& out_path) {
  if (objective != "max-mi" && objective != "min-outage") {
    fail(kExitUsage, "--objective: must be 'max-mi' or 'min-outage'");
  }
  ScenarioGuard guard(sc.create());
  dstas_opt_result opt{};
  const int rc =
      dstas_optimize(guard.s, objective == "max-mi" ? 0 : 1, sc.r0, &opt);
  if (rc != DSTAS_OK) fail_api(rc, "optimize");
  std::printf("objective      %s\n", objective.c_str());
  std::printf("delta*         %s\n", fmt(opt.delta_star).c_str());
  std::printf("p_s*           %s (%.6g dB)\n", fmt(opt.p_s_star).c_str(),
              10.0 * std::log10(opt.p_s_star));
  std::printf("value          %s\n", fmt(opt.objective_value).c_str());
  std::printf("evaluations    %ld\n", opt.evaluations);
  if (!out_path.empty()) {
    write_csv(out_path, "objective,delta_star,p_s_star,objective_value",
              objective + "," + fmt(opt.delta_star) + "," + fmt(opt.p_s_star) +
                  "," + fmt(opt.objective_value));
  }
  return 0;
}

int run_simulate(const ScenarioOptions& sc, const std::string& strategy,
                 double delta, const std::string& policy, double ps_db,
                 long long trials, std::uint64_t seed, int workers,
                 const std::string& out_path) {
  dstas_sim_config cfg{};
  cfg.delta = delta;
  if (strategy == "difference") {
    cfg.strategy = 0;
  } else if (strategy == "ratio") {
    cfg.strategy = 1;
  } else if (strategy == "max-gain") {
    cfg.strategy = 0;
    cfg.delta = 1.0;
  } else if (strategy == "min-interference") {
    cfg.strategy = 0;
    cfg.delta = 0.0;
  } else {
    fail(kExitUsage,
         "--strategy: must be difference|ratio|max-gain|min-interference");
  }
  if (policy == "statistical-aic") {
    cfg.policy = 0;
  } else if (policy == "instantaneous-pic") {
    cfg.policy = 1;
  } else if (policy == "fixed") {
    cfg.policy = 2;
    cfg.fixed_power = db_to_linear(ps_db);
  } else {
    fail(kExitUsage, "--policy: must be statistical-aic|instantaneous-pic|fixed");
  }
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.r0 = sc.r0;
  cfg.workers = workers;
  ScenarioGuard guard(sc.create());
  dstas_sim_report rep{};
  const int rc = dstas_simulate(guard.s, &cfg, &rep);
  if (rc != DSTAS_OK) fail_api(rc, "simulate");
  std::printf("trials                  %lld\n", rep.trials_used);
  std::printf("power_used              %s\n", fmt(rep.power_used).c_str());
  std::printf("mean_mi (bits/s/Hz)     %s  (stderr %s)\n", fmt(rep.mean_mi).c_str(),
              fmt(rep.mean_mi_stderr).c_str());
  std::printf("outage                  %s  (stderr %s)\n", fmt(rep.outage).c_str(),
              fmt(rep.outage_stderr).c_str());
  std::printf("mean_interference       %s  (stderr %s)\n",
              fmt(rep.mean_interference).c_str(),
              fmt(rep.mean_interference_stderr).c_str());
  std::printf("mean_selected_gain_s    %s  (stderr %s)\n",
              fmt(rep.mean_selected_gain_s).c_str(),
              fmt(rep.mean_selected_gain_s_stderr).c_str());
  std::printf("mean_selected_gain_p    %s  (stderr %s)\n",
              fmt(rep.mean_selected_gain_p).c_str(),
              fmt(rep.mean_selected_gain_p_stderr).c_str());
  if (rep.phase1_mean != 0.0) {
    std::printf("phase1_mean_gain_p      %s  (stderr %s)\n",
                fmt(rep.phase1_mean).c_str(), fmt(rep.phase1_stderr).c_str());
  }
  if (!out_path.empty()) {
    write_csv(out_path,
              "mean_mi,mean_mi_stderr,outage,outage_stderr,mean_interference,"
              "mean_interference_stderr,mean_selected_gain_s,"
              "mean_selected_gain_s_stderr,mean_selected_gain_p,"
              "mean_selected_gain_p_stderr,trials,seed,power_used",
              fmt(rep.mean_mi) + "," + fmt(rep.mean_mi_stderr) + "," +
                  fmt(rep.outage) + "," + fmt(rep.outage_stderr) + "," +
                  fmt(rep.mean_interference) + "," +
                  fmt(rep.mean_interference_stderr) + "," +
                  fmt(rep.mean_selected_gain_s) + "," +
                  fmt(rep.mean_selected_gain_s_stderr) + "," +
                  fmt(rep.mean_selected_gain_p) + "," +
                  fmt(rep.mean_selected_gain_p_stderr) + "," +
                  std::to_string(trials) + "," + std::to_string(seed) + "," +
                  fmt(rep.power_used));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"difference antenna selection toolkit for spectrum-sharing links"};
  app.require_subcommand(1);

  std::string config_path;
  std::uint64_t seed = 1;
  int workers = 0;
  std::string out_path;
  app.add_option("--config", config_path, "key=value config file");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--workers", workers, "worker threads (0 = hardware)");
  app.add_option("--out", out_path, "output CSV path");

  ScenarioOptions sc;

  auto* analyze = app.add_subcommand("analyze", "closed-form metrics for one scenario");
  analyze->fallthrough();
  sc.add_flags(analyze);
  std::string delta_arg = "optimal";
  std::string metric = "mi";
  analyze->add_option("--delta", delta_arg, "selection weight in [0,1] or 'optimal'");
  analyze->add_option("--metric", metric, "mi | outage");

  auto* optimize = app.add_subcommand("optimize", "joint (delta, power) optimization");
  optimize->fallthrough();
  sc.add_flags(optimize);
  std::string objective = "max-mi";
  optimize->add_option("--objective", objective, "max-mi | min-outage");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo run");
  simulate->fallthrough();
  sc.add_flags(simulate);
  std::string strategy = "difference";
  std::string policy = "statistical-aic";
  double delta = 1.0;
  double ps_db = 0.0;
  long long trials = 100000;
  simulate->add_option("--strategy", strategy,
                       "difference | ratio | max-gain | min-interference");
  simulate->add_option("--delta", delta, "selection weight for difference");
  simulate->add_option("--policy", policy,
                       "statistical-aic | instantaneous-pic | fixed");
  simulate->add_option("--ps-db", ps_db, "fixed transmit power, dB");
  simulate->add_option("--trials", trials, "number of trials");

  auto* sweep = app.add_subcommand("sweep", "figure-reproduction sweep to CSV");
  sweep->fallthrough();
  sc.add_flags(sweep);
  std::string preset, variable, spacing, systems;
  double start = 0.0, stop = 0.0;
  int points = 0;
  long long sweep_trials = 0;
  sweep->add_option("--preset", preset, "fig2..fig9");
  sweep->add_option("--variable", variable, "xi | p_max_db | interference_limit");
  sweep->add_option("--start", start, "sweep start");
  sweep->add_option("--stop", stop, "sweep stop");
  sweep->add_option("--points", points, "number of sweep points");
  sweep->add_option("--spacing", spacing, "linear | log");
  sweep->add_option("--systems", systems, "comma-separated system list");
  sweep->add_option("--trials", sweep_trials, "trials per simulated point");

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return kExitUsage;
    }

    const auto config = read_config(config_path);
    auto global_from_config = [&](const char* key, const char* flag, auto& field) {
      const auto it = config.find(key);
      if (it == config.end() || app.count(flag) > 0) return;
      std::istringstream ss(it->second);
      ss >> field;
      if (ss.fail()) fail(kExitUsage, std::string("--config: bad value for ") + key);
    };
    global_from_config("seed", "--seed", seed);
    global_from_config("workers", "--workers", workers);

    if (analyze->parsed()) {
      sc.apply_config(config, analyze);
      return run_analyze(sc, delta_arg, metric, out_path);
    }
    if (optimize->parsed()) {
      sc.apply_config(config, optimize);
      return run_optimize(sc, objective, out_path);
    }
    if (simulate->parsed()) {
      sc.apply_config(config, simulate);
      return run_simulate(sc, strategy, delta, policy, ps_db, trials, seed,
                          workers, out_path);
    }

    // sweep: assemble key=value spec text (config first, flags override)
    sc.apply_config(config, sweep);
    std::ostringstream spec;
    for (const auto& [k, v] : config) spec << k << "=" << v << "\n";
    if (!preset.empty()) spec << "preset=" << preset << "\n";
    if (sweep->count("--variable")) spec << "variable=" << variable << "\n";
    if (sweep->count("--start")) spec << "start=" << fmt(start) << "\n";
    if (sweep->count("--stop")) spec << "stop=" << fmt(stop) << "\n";
    if (sweep->count("--points")) spec << "points=" << points << "\n";
    if (sweep->count("--spacing")) spec << "spacing=" << spacing << "\n";
    if (sweep->count("--systems")) spec << "systems=" << systems << "\n";
    if (sweep->count("--trials")) spec << "trials=" << sweep_trials << "\n";
    if (sweep->count("--antennas")) spec << "antennas=" << sc.antennas << "\n";
    if (sweep->count("--xi")) spec << "xi=" << fmt(sc.xi) << "\n";
    if (sweep->count("--mean-gain-p")) spec << "mean_gain_p=" << fmt(sc.mean_gain_p) << "\n";
    if (sweep->count("--noise")) spec << "noise=" << fmt(sc.noise) << "\n";
    if (sweep->count("--r0")) spec << "r0=" << fmt(sc.r0) << "\n";
    if (sweep->count("--pmax-db")) spec << "pmax_db=" << fmt(sc.pmax_db) << "\n";
    if (sweep->count("--wp-db")) spec << "wp_db=" << fmt(sc.wp_db) << "\n";
    if (app.count("--seed")) spec << "seed=" << seed << "\n";
    if (app.count("--workers")) spec << "workers=" << workers << "\n";
    const std::string path = out_path.empty() ? "sweep.csv" : out_path;
    const int rc = dstas_sweep(spec.str().c_str(), path.c_str());
    if (rc != DSTAS_OK) fail_api(rc, "sweep");
    std::printf("wrote %s\n", path.c_str());
    return 0;
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
}
