#pragma once

#include "model.hpp"

namespace dstas {

enum class Binding { none, peak_power, interference };

struct PowerDecision {
  double p_s = 0.0;
  Binding binding = Binding::none;
};

/// Average interference power seen by the primary receiver at transmit power
/// p_s; always within [p_s*mean_gain_p/M, p_s*mean_gain_p].
double average_interference(double p_s, const SystemParams& params, double delta);

/// Statistics-based power rule: largest p_s meeting both the average
/// interference limit and the peak power cap.
PowerDecision statistical_power(const SystemParams& params,
                                const Constraints& constraints, double delta);

/// Instantaneous rule min{p_max, limit/gain_p} used by the peak-interference
/// benchmark.
PowerDecision instantaneous_power_pic(double gain_p_selected,
                                      const Constraints& constraints);

}  // namespace dstas
