#include "power.hpp"

#include <cmath>
#include <stdexcept>

#include "analytic.hpp"

namespace dstas {

double average_interference(double p_s, const SystemParams& params, double delta) {
  if (!(p_s >= 0.0)) {
    throw std::domain_error("average_interference: p_s must be >= 0");
  }
  return p_s * mean_selected_interference_gain(params, delta);
}

PowerDecision statistical_power(const SystemParams& params,
                                const Constraints& constraints, double delta) {
  constraints.validate();
  const double p_max = constraints.p_max;
  const double limit = constraints.interference_limit;
  if (params.mean_gain_p < limit / p_max) {
    // interference constraint inactive even at full power
    mean_selected_interference_gain(params, delta);  // validates params, delta
    return {p_max, Binding::peak_power};
  }
  const double cand = limit / mean_selected_interference_gain(params, delta);
  if (std::fabs(cand - p_max) <= 1e-12 * p_max || cand < p_max) {
    return {cand, Binding::interference};
  }
  return {p_max, Binding::peak_power};
}

PowerDecision instantaneous_power_pic(double gain_p_selected,
                                      const Constraints& constraints) {
  constraints.validate();
  if (!(gain_p_selected >= 0.0)) {
    throw std::domain_error("instantaneous_power_pic: gain must be >= 0");
  }
  if (gain_p_selected == 0.0) {
    if (std::isinf(constraints.p_max)) {
      throw std::domain_error(
          "instantaneous_power_pic: zero gain with unbounded p_max");
    }
    return {constraints.p_max, Binding::peak_power};
  }
  const double cap = constraints.interference_limit / gain_p_selected;
  if (cap < constraints.p_max) return {cap, Binding::interference};
  return {constraints.p_max, Binding::peak_power};
}

}  // namespace dstas
