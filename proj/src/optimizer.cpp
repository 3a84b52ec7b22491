#include "optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "analytic.hpp"

namespace dstas {
namespace {

constexpr double kTieBand = 1e-12;
constexpr double kInvPhi = 0.6180339887498948482;

}  // namespace

OptimizationResult optimize_delta(const SystemParams& params,
                                  const Constraints& constraints,
                                  Objective objective, double r0) {
  params.validate();
  constraints.validate();
  OptimizationResult res;
  res.objective = objective;

  // score is maximized; outage enters negated
  auto score = [&](double delta) {
    ++res.evaluations;
    const double p_s = statistical_power(params, constraints, delta).p_s;
    if (objective == Objective::max_mi) {
      return mutual_information(p_s, params, delta);
    }
    return -outage_probability(p_s, r0, params, delta);
  };

  double best_delta = 0.0;
  double best_score = score(0.0);
  const int coarse = 100;
  for (int i = 1; i <= coarse; ++i) {
    const double d = static_cast<double>(i) / coarse;
    const double s = score(d);
    // ties go to the larger delta, which the ascending scan gives for free
    if (s >= best_score - kTieBand) {
      best_score = std::max(best_score, s);
      best_delta = d;
    }
  }

  // golden-section refinement inside the best coarse bracket
  double lo = std::max(0.0, best_delta - 1.0 / coarse);
  double hi = std::min(1.0, best_delta + 1.0 / coarse);
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = score(x1);
  double f2 = score(x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = score(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = score(x1);
    }
  }
  const double refined = f1 >= f2 ? x1 : x2;
  const double refined_score = std::max(f1, f2);
  if (refined_score > best_score + kTieBand ||
      (refined_score >= best_score - kTieBand && refined > best_delta)) {
    best_delta = refined;
  }

  res.delta_star = best_delta;
  res.p_s_star = statistical_power(params, constraints, best_delta).p_s;
  res.objective_value = objective == Objective::max_mi
                            ? mutual_information(res.p_s_star, params, best_delta)
                            : outage_probability(res.p_s_star, r0, params,
                                                 best_delta);
  return res;
}

std::vector<CurvePoint> objective_curve(const SystemParams& params,
                                        const Constraints& constraints,
                                        Objective objective, double r0,
                                        int grid_size) {
  if (grid_size < 2) {
    throw std::invalid_argument("objective_curve: grid_size must be >= 2");
  }
  params.validate();
  constraints.validate();
  std::vector<CurvePoint> curve;
  curve.reserve(grid_size);
  for (int i = 0; i < grid_size; ++i) {
    const double d = static_cast<double>(i) / (grid_size - 1);
    CurvePoint p;
    p.delta = d;
    p.p_s = statistical_power(params, constraints, d).p_s;
    p.value = objective == Objective::max_mi
                  ? mutual_information(p.p_s, params, d)
                  : outage_probability(p.p_s, r0, params, d);
    curve.push_back(p);
  }
  return curve;
}

}  // namespace dstas
