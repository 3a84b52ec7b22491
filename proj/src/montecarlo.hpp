#pragma once

#include <cstdint>
#include <vector>

#include "model.hpp"

namespace dstas {

enum class Strategy { difference, ratio };
enum class PowerPolicy { statistical_aic, instantaneous_pic, fixed };

struct SimConfig {
  SystemParams params;
  Constraints constraints;
  Strategy strategy = Strategy::difference;
  double delta = 1.0;  // difference strategy only
  PowerPolicy policy = PowerPolicy::statistical_aic;
  double fixed_power = 1.0;  // fixed policy only
  long long trials = 100000;
  std::uint64_t seed = 1;
  double r0 = 1.0;
  int workers = 0;  // 0 = hardware concurrency

  void validate() const;
};

struct SimReport {
  double mean_mi = 0.0;
  double mean_mi_stderr = 0.0;
  double outage = 0.0;
  double outage_stderr = 0.0;
  double mean_interference = 0.0;
  double mean_interference_stderr = 0.0;
  double mean_selected_gain_s = 0.0;
  double mean_selected_gain_s_stderr = 0.0;
  double mean_selected_gain_p = 0.0;
  double mean_selected_gain_p_stderr = 0.0;
  long long trials_used = 0;
  // power actually applied; NaN under the per-realization PIC rule
  double power_used = 0.0;
  // RS-AIC phase-1 estimate of E(gain_p), with its standard error (0 otherwise)
  double phase1_mean = 0.0;
  double phase1_stderr = 0.0;
};

SimReport run_sim(const SimConfig& config);

enum class Link { data, interference };

/// Empirical CDF of the selected link gain on a sorted grid.
std::vector<double> empirical_cdf(const SimConfig& config, Link link,
                                  const std::vector<double>& x_grid);

}  // namespace dstas
