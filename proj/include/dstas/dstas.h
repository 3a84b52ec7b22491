/* Difference-selection transmit antenna toolkit for spectrum-sharing links.
 *
 * C API over the C++ core: opaque handles, integer error codes, value
 * outputs through pointers. All powers are linear units at this boundary;
 * mutual information is bits/s/Hz.
 */
#ifndef DSTAS_H
#define DSTAS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Error codes */
enum {
  DSTAS_OK = 0,
  DSTAS_ERR_INVALID_ARGUMENT = 1, /* bad parameter / configuration */
  DSTAS_ERR_DOMAIN = 2,           /* math domain violation */
  DSTAS_ERR_IO = 3,               /* file could not be written */
  DSTAS_ERR_INTERNAL = 4
};

/* Static string for an error code. */
const char* dstas_error_name(int code);

/* Detail message of the most recent failure on this thread ("" if none). */
const char* dstas_last_error(void);

/* Scenario: antenna count, mean channel gains, noise power, and the
 * peak-power / average-interference constraints. p_max may be INFINITY. */
typedef struct dstas_scenario dstas_scenario;

int dstas_scenario_create(int num_antennas, double mean_gain_s,
                          double mean_gain_p, double noise_power, double p_max,
                          double interference_limit, dstas_scenario** out);
void dstas_scenario_destroy(dstas_scenario* s);

/* Closed-form statistics and metrics (difference selection, weight delta). */
int dstas_cdf_data_gain(const dstas_scenario* s, double delta, double x,
                        double* out);
int dstas_cdf_interference_gain(const dstas_scenario* s, double delta, double y,
                                double* out);
int dstas_mean_interference_gain(const dstas_scenario* s, double delta,
                                 double* out);
int dstas_mutual_information(const dstas_scenario* s, double delta, double p_s,
                             double* out);
int dstas_outage_probability(const dstas_scenario* s, double delta, double p_s,
                             double r0, double* out);

/* Power allocation. binding: 0 = none, 1 = peak power, 2 = interference. */
int dstas_average_interference(const dstas_scenario* s, double delta,
                               double p_s, double* out);
int dstas_statistical_power(const dstas_scenario* s, double delta, double* p_s,
                            int* binding);
int dstas_instantaneous_power_pic(double gain_p, double p_max,
                                  double interference_limit, double* p_s);

/* Joint (delta, power) optimization. objective: 0 = max MI, 1 = min outage. */
typedef struct {
  double delta_star;
  double p_s_star;
  double objective_value;
  long evaluations;
} dstas_opt_result;

int dstas_optimize(const dstas_scenario* s, int objective, double r0,
                   dstas_opt_result* out);

/* Monte Carlo simulation.
 * strategy: 0 = difference (uses delta), 1 = ratio.
 * policy: 0 = statistical AIC, 1 = instantaneous PIC, 2 = fixed power. */
typedef struct {
  int strategy;
  double delta;
  int policy;
  double fixed_power;
  long long trials;
  uint64_t seed;
  double r0;
  int workers; /* 0 = hardware concurrency */
} dstas_sim_config;

typedef struct {
  double mean_mi, mean_mi_stderr;
  double outage, outage_stderr;
  double mean_interference, mean_interference_stderr;
  double mean_selected_gain_s, mean_selected_gain_s_stderr;
  double mean_selected_gain_p, mean_selected_gain_p_stderr;
  long long trials_used;
  double power_used; /* NaN under the instantaneous PIC rule */
  double phase1_mean, phase1_stderr;
} dstas_sim_report;

int dstas_simulate(const dstas_scenario* s, const dstas_sim_config* config,
                   dstas_sim_report* out);

/* Parameter sweep driven by line-oriented "key=value" spec text ('#'
 * comments). Writes a CSV with the fixed schema header
 *   sweep_variable,value,system,delta,p_s,metric_name,metric_value,stderr,trials,seed
 * and, for "preset=figN" specs, a gnuplot companion script "<path>.gp". */
int dstas_sweep(const char* spec_text, const char* output_path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DSTAS_H */
