#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "analytic.hpp"
#include "doctest.h"
#include "model.hpp"
#include "optimizer.hpp"
#include "power.hpp"

using namespace dstas;

namespace {
const SystemParams kP4{4, 1.0, 1.0, 1.0};
const Constraints kC{10.0, 1.0};  // Pmax = 10 dB, unit interference limit
}  // namespace

TEST_CASE("reference optimum (fine-grid oracle)") {
  const OptimizationResult r = optimize_delta(kP4, kC, Objective::max_mi);
  // 1e-4-grid reference: delta* = 0.2220, MI* = 2.2150170757777894
  CHECK(std::fabs(r.delta_star - 0.2220) < 5e-3);
  CHECK(r.objective_value == doctest::Approx(2.2150170757777894).epsilon(1e-8));
  CHECK(r.evaluations > 0);
  // endpoint values from the same oracle
  const double mi0 = mutual_information(statistical_power(kP4, kC, 0.0).p_s, kP4, 0.0);
  const double mi1 = mutual_information(statistical_power(kP4, kC, 1.0).p_s, kP4, 1.0);
  CHECK(mi0 == doctest::Approx(1.9344887816584122).epsilon(1e-10));
  CHECK(mi1 == doctest::Approx(1.5284013104226326).epsilon(1e-10));
  CHECK(r.objective_value > mi0);
  CHECK(r.objective_value > mi1);
}

TEST_CASE("result re-evaluates consistently") {
  const OptimizationResult r = optimize_delta(kP4, kC, Objective::max_mi);
  const PowerDecision d = statistical_power(kP4, kC, r.delta_star);
  CHECK(r.p_s_star == doctest::Approx(d.p_s).epsilon(1e-12));
  CHECK(r.objective_value ==
        doctest::Approx(mutual_information(d.p_s, kP4, r.delta_star)).epsilon(1e-12));
}

TEST_CASE("optimum dominates a dense grid for both objectives") {
  for (Objective obj : {Objective::max_mi, Objective::min_outage}) {
    const OptimizationResult r = optimize_delta(kP4, kC, obj, 1.0);
    const auto curve = objective_curve(kP4, kC, obj, 1.0, 401);
    CHECK(curve.size() == 401);
    CHECK(curve.front().delta == 0.0);
    CHECK(curve.back().delta == 1.0);
    for (const CurvePoint& pt : curve) {
      CAPTURE(pt.delta);
      if (obj == Objective::max_mi) {
        CHECK(r.objective_value >= pt.value - 1e-12);
      } else {
        CHECK(r.objective_value <= pt.value + 1e-12);
      }
    }
  }
}

TEST_CASE("outage objective produces a valid probability and sane optimum") {
  const OptimizationResult r = optimize_delta(kP4, kC, Objective::min_outage, 2.0);
  CHECK(r.objective_value >= 0.0);
  CHECK(r.objective_value <= 1.0);
  CHECK(r.delta_star >= 0.0);
  CHECK(r.delta_star <= 1.0);
  const double at_star =
      outage_probability(r.p_s_star, 2.0, kP4, r.delta_star);
  CHECK(r.objective_value == doctest::Approx(at_star).epsilon(1e-12));
}

TEST_CASE("flat objective resolves ties toward larger delta") {
  // with M = 1 the selected links do not depend on delta, but the statistical
  // power may; pick constraints where peak power always binds so the
  // objective is exactly flat
  const SystemParams p1{1, 1.0, 1.0, 1.0};
  const Constraints loose{0.5, 100.0};
  const OptimizationResult r = optimize_delta(p1, loose, Objective::max_mi);
  CHECK(r.delta_star == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("optimum respects constraints") {
  const OptimizationResult r = optimize_delta(kP4, kC, Objective::max_mi);
  CHECK(r.p_s_star <= kC.p_max + 1e-12);
  CHECK(average_interference(r.p_s_star, kP4, r.delta_star) <=
        kC.interference_limit * (1.0 + 1e-12));
}
