#include "dstas/dstas.h"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "analytic.hpp"
#include "model.hpp"
#include "montecarlo.hpp"
#include "optimizer.hpp"
#include "power.hpp"
#include "sweep.hpp"

namespace {

thread_local std::string g_last_error;

struct Scenario {
  dstas::SystemParams params;
  dstas::Constraints constraints;
};

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return DSTAS_OK;
  } catch (const dstas::IoError& e) {
    g_last_error = e.what();
    return DSTAS_ERR_IO;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return DSTAS_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return DSTAS_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DSTAS_ERR_INTERNAL;
  }
}

const Scenario* unwrap(const dstas_scenario* s) {
  if (s == nullptr) throw std::invalid_argument("null scenario handle");
  return reinterpret_cast<const Scenario*>(s);
}

template <typename T>
T* require(T* p, const char* what) {
  if (p == nullptr) throw std::invalid_argument(std::string("null ") + what);
  return p;
}

}  // namespace

extern "C" {

const char* dstas_error_name(int code) {
  switch (code) {
    case DSTAS_OK: return "ok";
    case DSTAS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DSTAS_ERR_DOMAIN: return "domain error";
    case DSTAS_ERR_IO: return "i/o error";
    default: return "internal error";
  }
}

const char* dstas_last_error(void) { return g_last_error.c_str(); }

int dstas_scenario_create(int num_antennas, double mean_gain_s,
                          double mean_gain_p, double noise_power, double p_max,
                          double interference_limit, dstas_scenario** out) {
  return guarded([&] {
    require(out, "output pointer");
    auto sc = std::make_unique<Scenario>();
    sc->params = {num_antennas, mean_gain_s, mean_gain_p, noise_power};
    sc->constraints = {p_max, interference_limit};
    sc->params.validate();
    sc->constraints.validate();
    *out = reinterpret_cast<dstas_scenario*>(sc.release());
  });
}

void dstas_scenario_destroy(dstas_scenario* s) {
  delete reinterpret_cast<Scenario*>(s);
}

int dstas_cdf_data_gain(const dstas_scenario* s, double delta, double x,
                        double* out) {
  return guarded([&] {
    *require(out, "output pointer") =
        dstas::cdf_selected_data_gain(x, unwrap(s)->params, delta);
  });
}

int dstas_cdf_interference_gain(const dstas_scenario* s, double delta, double y,
                                double* out) {
  return guarded([&] {
    *require(out, "output pointer") =
        dstas::cdf_selected_interference_gain(y, unwrap(s)->params, delta);
  });
}

int dstas_mean_interference_gain(const dstas_scenario* s, double delta,
                                 double* out) {
  return guarded([&] {
    *require(out, "output pointer") =
        dstas::mean_selected_interference_gain(unwrap(s)->params, delta);
  });
}

int dstas_mutual_information(const dstas_scenario* s, double delta, double p_s,
                             double* out) {
  return guarded([&] {
    *require(out, "output pointer") =
        dstas::mutual_information(p_s, unwrap(s)->params, delta);
  });
}

int dstas_outage_probability(const dstas_scenario* s, double delta, double p_s,
                             double r0, double* out) {
  return guarded([&] {
    *require(out, "output pointer") =
        dstas::outage_probability(p_s, r0, unwrap(s)->params, delta);
  });
}

int dstas_average_interference(const dstas_scenario* s, double delta,
                               double p_s, double* out) {
  return guarded([&] {
    *require(out, "output pointer") =
        dstas::average_interference(p_s, unwrap(s)->params, delta);
  });
}

int dstas_statistical_power(const dstas_scenario* s, double delta, double* p_s,
                            int* binding) {
  return guarded([&] {
    const Scenario* sc = unwrap(s);
    const dstas::PowerDecision d =
        dstas::statistical_power(sc->params, sc->constraints, delta);
    *require(p_s, "output pointer") = d.p_s;
    if (binding != nullptr) *binding = static_cast<int>(d.binding);
  });
}

int dstas_instantaneous_power_pic(double gain_p, double p_max,
                                  double interference_limit, double* p_s) {
  return guarded([&] {
    dstas::Constraints c{p_max, interference_limit};
    *require(p_s, "output pointer") =
        dstas::instantaneous_power_pic(gain_p, c).p_s;
  });
}

int dstas_optimize(const dstas_scenario* s, int objective, double r0,
                   dstas_opt_result* out) {
  return guarded([&] {
    if (objective != 0 && objective != 1) {
      throw std::invalid_argument("objective must be 0 (max MI) or 1 (min outage)");
    }
    const Scenario* sc = unwrap(s);
    const dstas::OptimizationResult r = dstas::optimize_delta(
        sc->params, sc->constraints,
        objective == 0 ? dstas::Objective::max_mi : dstas::Objective::min_outage,
        r0);
    dstas_opt_result* o = require(out, "output pointer");
    o->delta_star = r.delta_star;
    o->p_s_star = r.p_s_star;
    o->objective_value = r.objective_value;
    o->evaluations = r.evaluations;
  });
}

int dstas_simulate(const dstas_scenario* s, const dstas_sim_config* config,
                   dstas_sim_report* out) {
  return guarded([&] {
    const Scenario* sc = unwrap(s);
    const dstas_sim_config* c = require(config, "sim config");
    if (c->strategy != 0 && c->strategy != 1) {
      throw std::invalid_argument("strategy must be 0 (difference) or 1 (ratio)");
    }
    if (c->policy < 0 || c->policy > 2) {
      throw std::invalid_argument("policy must be 0, 1 or 2");
    }
    dstas::SimConfig cfg;
    cfg.params = sc->params;
    cfg.constraints = sc->constraints;
    cfg.strategy = c->strategy == 0 ? dstas::Strategy::difference
                                    : dstas::Strategy::ratio;
    cfg.delta = c->delta;
    cfg.policy = c->policy == 0   ? dstas::PowerPolicy::statistical_aic
                 : c->policy == 1 ? dstas::PowerPolicy::instantaneous_pic
                                  : dstas::PowerPolicy::fixed;
    cfg.fixed_power = c->fixed_power;
    cfg.trials = c->trials;
    cfg.seed = c->seed;
    cfg.r0 = c->r0;
    cfg.workers = c->workers;
    const dstas::SimReport r = dstas::run_sim(cfg);
    dstas_sim_report* o = require(out, "output pointer");
    o->mean_mi = r.mean_mi;
    o->mean_mi_stderr = r.mean_mi_stderr;
    o->outage = r.outage;
    o->outage_stderr = r.outage_stderr;
    o->mean_interference = r.mean_interference;
    o->mean_interference_stderr = r.mean_interference_stderr;
    o->mean_selected_gain_s = r.mean_selected_gain_s;
    o->mean_selected_gain_s_stderr = r.mean_selected_gain_s_stderr;
    o->mean_selected_gain_p = r.mean_selected_gain_p;
    o->mean_selected_gain_p_stderr = r.mean_selected_gain_p_stderr;
    o->trials_used = r.trials_used;
    o->power_used = r.power_used;
    o->phase1_mean = r.phase1_mean;
    o->phase1_stderr = r.phase1_stderr;
  });
}

int dstas_sweep(const char* spec_text, const char* output_path) {
  return guarded([&] {
    require(spec_text, "spec text");
    require(output_path, "output path");
    dstas::run_sweep_to_csv(dstas::parse_sweep_spec(spec_text), output_path);
  });
}

}  // extern "C"
