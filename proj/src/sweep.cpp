#include "sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "analytic.hpp"
#include "montecarlo.hpp"
#include "optimizer.hpp"
#include "power.hpp"

namespace dstas {
namespace {

const char* kCsvHeader =
    "sweep_variable,value,system,delta,p_s,metric_name,metric_value,stderr,"
    "trials,seed";

const std::vector<std::string> kKnownSystems = {
    "DS-AIC",    "DS-optimal", "DS-delta0",       "DS-delta1",
    "RS-AIC",    "RS-PIC",     "RS-PIC-infinite",
};

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::uint64_t cell_seed(std::uint64_t seed, int point_index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (point_index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string variable_name(SweepVariable v) {
  switch (v) {
    case SweepVariable::xi: return "xi";
    case SweepVariable::p_max_db: return "p_max_db";
    case SweepVariable::interference_limit: return "interference_limit";
  }
  return "";
}

std::vector<std::string> split_csv_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void apply_preset(SweepSpec& s, const std::string& name) {
  s.preset = name;
  s.variable = SweepVariable::xi;
  s.start = 0.1;
  s.stop = 100.0;
  s.num_points = 13;
  s.log_spacing = true;
  s.antennas = 2;
  s.xi = 1.0;
  s.pmax_db = 0.0;
  s.wp_db = 0.0;
  if (name == "fig2" || name == "fig3") {
    s.antennas = 4;
    s.pmax_db = 10.0;
    s.systems = {"DS-optimal", "DS-delta0", "DS-delta1"};
    s.metric = name == "fig2" ? SweepMetric::mi : SweepMetric::outage;
  } else if (name == "fig4" || name == "fig5") {
    s.systems = {"DS-AIC", "RS-AIC", "RS-PIC", "RS-PIC-infinite"};
    s.metric = name == "fig4" ? SweepMetric::mi : SweepMetric::outage;
  } else if (name == "fig6" || name == "fig7") {
    s.variable = SweepVariable::p_max_db;
    s.start = -10.0;
    s.stop = 15.0;
    s.num_points = 11;
    s.log_spacing = false;
    s.systems = {"DS-AIC", "RS-AIC", "RS-PIC", "RS-PIC-infinite"};
    s.metric = name == "fig6" ? SweepMetric::mi : SweepMetric::outage;
  } else if (name == "fig8" || name == "fig9") {
    s.variable = SweepVariable::interference_limit;
    s.start = -10.0;
    s.stop = 20.0;
    s.num_points = 13;
    s.log_spacing = false;
    s.pmax_db = 5.0;
    s.systems = {"DS-AIC", "RS-AIC", "RS-PIC", "RS-PIC-infinite"};
    s.metric = name == "fig8" ? SweepMetric::mi : SweepMetric::outage;
  } else {
    throw std::invalid_argument("unknown preset: " + name);
  }
}

}  // namespace

void SweepSpec::validate() const {
  if (num_points < 2) throw std::invalid_argument("sweep: points must be >= 2");
  if (!(start < stop)) throw std::invalid_argument("sweep: need start < stop");
  if (systems.empty()) throw std::invalid_argument("sweep: no systems given");
  for (const auto& s : systems) {
    if (std::find(kKnownSystems.begin(), kKnownSystems.end(), s) ==
        kKnownSystems.end()) {
      throw std::invalid_argument("sweep: unknown system: " + s);
    }
  }
  if (antennas < 1 || antennas > 64) {
    throw std::invalid_argument("sweep: antennas must be in [1, 64]");
  }
  if (trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
  if (!(xi > 0.0) || !(mean_gain_p > 0.0) || !(noise > 0.0) || !(r0 > 0.0)) {
    throw std::invalid_argument("sweep: xi, gains, noise, r0 must be > 0");
  }
  if (log_spacing && !(start > 0.0)) {
    throw std::invalid_argument("sweep: log spacing needs start > 0");
  }
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
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
      throw std::invalid_argument("config: expected key=value, got: " + line);
    }
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    strip(key);
    strip(val);
    if (key.empty()) throw std::invalid_argument("config: empty key");
    kv[key] = val;
  }
  return kv;
}

SweepSpec parse_sweep_spec(const std::string& text) {
  const auto kv = parse_key_values(text);
  SweepSpec s;
  const auto it = kv.find("preset");
  if (it != kv.end()) apply_preset(s, it->second);
  auto num = [&](const char* key, double& field) {
    const auto f = kv.find(key);
    if (f == kv.end()) return;
    try {
      field = std::stod(f->second);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("config: bad number for ") + key);
    }
  };
  const auto v = kv.find("variable");
  if (v != kv.end()) {
    if (v->second == "xi") {
      s.variable = SweepVariable::xi;
    } else if (v->second == "p_max_db") {
      s.variable = SweepVariable::p_max_db;
    } else if (v->second == "interference_limit") {
      s.variable = SweepVariable::interference_limit;
    } else {
      throw std::invalid_argument("config: unknown variable: " + v->second);
    }
  }
  num("start", s.start);
  num("stop", s.stop);
  if (auto f = kv.find("points"); f != kv.end()) s.num_points = std::stoi(f->second);
  if (auto f = kv.find("spacing"); f != kv.end()) {
    if (f->second == "log") {
      s.log_spacing = true;
    } else if (f->second == "linear") {
      s.log_spacing = false;
    } else {
      throw std::invalid_argument("config: spacing must be linear or log");
    }
  }
  if (auto f = kv.find("systems"); f != kv.end()) {
    s.systems = split_csv_list(f->second);
  }
  if (auto f = kv.find("metric"); f != kv.end()) {
    if (f->second == "mi") {
      s.metric = SweepMetric::mi;
    } else if (f->second == "outage") {
      s.metric = SweepMetric::outage;
    } else {
      throw std::invalid_argument("config: metric must be mi or outage");
    }
  }
  if (auto f = kv.find("antennas"); f != kv.end()) s.antennas = std::stoi(f->second);
  num("xi", s.xi);
  num("mean_gain_p", s.mean_gain_p);
  num("noise", s.noise);
  num("r0", s.r0);
  num("pmax_db", s.pmax_db);
  num("wp_db", s.wp_db);
  if (auto f = kv.find("trials"); f != kv.end()) {
    s.trials = static_cast<long long>(std::stod(f->second));
  }
  if (auto f = kv.find("seed"); f != kv.end()) s.seed = std::stoull(f->second);
  if (auto f = kv.find("workers"); f != kv.end()) s.workers = std::stoi(f->second);
  s.validate();
  return s;
}

std::vector<double> sweep_values(const SweepSpec& spec) {
  std::vector<double> vals(spec.num_points);
  for (int i = 0; i < spec.num_points; ++i) {
    const double t = static_cast<double>(i) / (spec.num_points - 1);
    vals[i] = spec.log_spacing
                  ? std::exp(std::log(spec.start) +
                             t * (std::log(spec.stop) - std::log(spec.start)))
                  : spec.start + t * (spec.stop - spec.start);
  }
  return vals;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::vector<double> vals = sweep_values(spec);
  const std::string varname = variable_name(spec.variable);
  const std::string metric_name = spec.metric == SweepMetric::mi ? "mi" : "outage";
  std::vector<SweepRecord> out;
  out.reserve(vals.size() * spec.systems.size());

  for (int pi = 0; pi < static_cast<int>(vals.size()); ++pi) {
    const double v = vals[pi];
    SystemParams params;
    params.num_antennas = spec.antennas;
    params.noise_power = spec.noise;
    params.mean_gain_p = spec.mean_gain_p;
    double xi = spec.xi;
    double pmax_db = spec.pmax_db;
    double wp_db = spec.wp_db;
    switch (spec.variable) {
      case SweepVariable::xi: xi = v; break;
      case SweepVariable::p_max_db: pmax_db = v; break;
      case SweepVariable::interference_limit: wp_db = v; break;
    }
    params.mean_gain_s = xi * params.mean_gain_p;
    Constraints constraints;
    constraints.p_max = db_to_linear(pmax_db);
    constraints.interference_limit = db_to_linear(wp_db);

    const std::uint64_t seed = cell_seed(spec.seed, pi);
    for (const auto& system : spec.systems) {
      SweepRecord rec;
      rec.sweep_variable = varname;
      rec.value = v;
      rec.system = system;
      rec.metric_name = metric_name;
      const bool want_mi = spec.metric == SweepMetric::mi;
      if (system == "DS-AIC" || system == "DS-optimal") {
        const OptimizationResult opt = optimize_delta(
            params, constraints,
            want_mi ? Objective::max_mi : Objective::min_outage, spec.r0);
        rec.delta = opt.delta_star;
        rec.has_delta = true;
        rec.p_s = opt.p_s_star;
        rec.has_p_s = true;
        rec.metric_value = opt.objective_value;
      } else if (system == "DS-delta0" || system == "DS-delta1") {
        const double delta = system == "DS-delta1" ? 1.0 : 0.0;
        const PowerDecision pd = statistical_power(params, constraints, delta);
        rec.delta = delta;
        rec.has_delta = true;
        rec.p_s = pd.p_s;
        rec.has_p_s = true;
        rec.metric_value =
            want_mi ? mutual_information(pd.p_s, params, delta)
                    : outage_probability(pd.p_s, spec.r0, params, delta);
      } else {
        SimConfig cfg;
        cfg.params = params;
        cfg.constraints = constraints;
        cfg.strategy = Strategy::ratio;
        cfg.trials = spec.trials;
        cfg.seed = seed;
        cfg.r0 = spec.r0;
        cfg.workers = spec.workers;
        if (system == "RS-AIC") {
          cfg.policy = PowerPolicy::statistical_aic;
        } else {
          cfg.policy = PowerPolicy::instantaneous_pic;
          if (system == "RS-PIC-infinite") {
            cfg.constraints.p_max = std::numeric_limits<double>::infinity();
          }
        }
        const SimReport rep = run_sim(cfg);
        if (!std::isnan(rep.power_used)) {
          rec.p_s = rep.power_used;
          rec.has_p_s = true;
        }
        rec.metric_value = want_mi ? rep.mean_mi : rep.outage;
        rec.stderr_value = want_mi ? rep.mean_mi_stderr : rep.outage_stderr;
        rec.has_stderr = true;
        rec.trials = spec.trials;
        rec.seed = seed;
        rec.is_simulated = true;
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

void run_sweep_to_csv(const SweepSpec& spec, const std::string& output_path) {
  const std::vector<SweepRecord> records = run_sweep(spec);
  std::ofstream f(output_path);
  if (!f) throw IoError("cannot open output file: " + output_path);
  f << kCsvHeader << "\n";
  for (const auto& r : records) {
    f << r.sweep_variable << ',' << fmt(r.value) << ',' << r.system << ','
      << (r.has_delta ? fmt(r.delta) : "") << ','
      << (r.has_p_s ? fmt(r.p_s) : "") << ',' << r.metric_name << ','
      << fmt(r.metric_value) << ','
      << (r.has_stderr ? fmt(r.stderr_value) : "") << ','
      << (r.is_simulated ? std::to_string(r.trials) : "") << ','
      << (r.is_simulated ? std::to_string(r.seed) : "") << "\n";
  }
  if (!f.good()) throw IoError("write failed: " + output_path);
  f.close();

  if (!spec.preset.empty()) {
    const std::string gp_path = output_path + ".gp";
    std::ofstream g(gp_path);
    if (!g) throw IoError("cannot open output file: " + gp_path);
    g << "# gnuplot companion for preset " << spec.preset << "\n";
    g << "if (!exists(\"datafile\")) datafile = '" << output_path << "'\n";
    g << "set datafile separator ','\n";
    g << "set xlabel '" << variable_name(spec.variable) << "'\n";
    g << "set ylabel '" << (spec.metric == SweepMetric::mi
                                ? "mutual information (bits/s/Hz)"
                                : "outage probability")
      << "'\n";
    if (spec.variable == SweepVariable::xi && spec.log_spacing) {
      g << "set logscale x\n";
    }
    if (spec.metric == SweepMetric::outage) g << "set logscale y\n";
    g << "set key outside\n";
    g << "plot ";
    for (std::size_t i = 0; i < spec.systems.size(); ++i) {
      if (i) g << ", \\\n     ";
      g << "datafile every ::1 using (strcol(3) eq '" << spec.systems[i]
        << "' ? column(2) : NaN):(column(7)) with linespoints title '"
        << spec.systems[i] << "'";
    }
    g << "\n";
    if (!g.good()) throw IoError("write failed: " + gp_path);
  }
}

}  // namespace dstas
