#pragma once

#include <vector>

#include "model.hpp"
#include "power.hpp"

namespace dstas {

enum class Objective { max_mi, min_outage };

struct OptimizationResult {
  double delta_star = 1.0;
  double p_s_star = 0.0;
  double objective_value = 0.0;
  Objective objective = Objective::max_mi;
  long evaluations = 0;
};

struct CurvePoint {
  double delta = 0.0;
  double p_s = 0.0;
  double value = 0.0;
};

/// Best selection weight for the composite objective C(statistical_power(d), d).
/// Coarse 101-point scan followed by golden-section refinement; ties within
/// 1e-12 go to the larger delta.
OptimizationResult optimize_delta(const SystemParams& params,
                                  const Constraints& constraints,
                                  Objective objective, double r0 = 1.0);

/// Objective evaluated on a uniform delta grid including both endpoints.
std::vector<CurvePoint> objective_curve(const SystemParams& params,
                                        const Constraints& constraints,
                                        Objective objective, double r0,
                                        int grid_size);

}  // namespace dstas
