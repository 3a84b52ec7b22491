#include "analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "special.hpp"

namespace dstas {
namespace {

constexpr double kLog2E = 1.4426950408889634073599246810019;

// Compensated (Neumaier) accumulator for the alternating binomial sums.
struct CompensatedSum {
  double s = 0.0;
  double c = 0.0;
  void add(double v) {
    double t = s + v;
    if (std::fabs(s) >= std::fabs(v)) {
      c += (s - t) + v;
    } else {
      c += (v - t) + s;
    }
    s = t;
  }
  double value() const { return s + c; }
};

void require_nonneg(double x, const char* fn) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(fn) + ": argument must be finite and >= 0");
  }
}

void require_power(double p_s) {
  if (!(p_s > 0.0)) {
    throw std::domain_error("mutual information/outage: p_s must be > 0");
  }
}

}  // namespace

double cdf_selected_data_gain(double x, const SystemParams& params, double delta) {
  require_nonneg(x, "cdf_selected_data_gain");
  const int M = params.num_antennas;
  const double gs = params.mean_gain_s;
  if (delta >= 1.0 - kEndpointBand) {
    derive_weights(params, std::min(delta, 1.0));  // validates inputs
    return std::pow(-std::expm1(-x / gs), M);
  }
  if (delta <= kEndpointBand) {
    derive_weights(params, std::max(delta, 0.0));
    return -std::expm1(-x / gs);
  }
  const DerivedWeights w = derive_weights(params, delta);
  const double gb = w.gamma_bar;
  const double mu = std::exp(-delta * gb * x / (w.w_s * w.w_p));
  CompensatedSum f;
  f.add(-std::pow(w.w_p / gb, M) * mu);
  f.add(std::pow(1.0 - (w.w_s / gb) * std::exp(-x / gs), M));
  for (int k = 0; k < M; ++k) {
    if (w.degenerate_g && k == *w.degenerate_g) continue;
    double coef = M * binomial(M - 1, k) * std::pow(-w.w_s / gb, k + 1) *
                  w.w_p / (w.w_s - k * w.w_p);
    f.add(coef * (std::exp(-(k + 1) * x / gs) - mu));
  }
  if (w.degenerate_g) {
    const int g = *w.degenerate_g;
    double mug = binomial(M - 1, g) * std::pow(-w.w_s / gb, g) *
                 std::exp(-(g + 1) * x / gs);
    f.add(-(M / gb) * delta * x * mug);
  }
  return std::clamp(f.value(), 0.0, 1.0);
}

double cdf_selected_interference_gain(double y, const SystemParams& params,
                                      double delta) {
  require_nonneg(y, "cdf_selected_interference_gain");
  const int M = params.num_antennas;
  const double gp = params.mean_gain_p;
  if (delta >= 1.0 - kEndpointBand) {
    derive_weights(params, std::min(delta, 1.0));
    return -std::expm1(-y / gp);
  }
  if (delta <= kEndpointBand) {
    derive_weights(params, std::max(delta, 0.0));
    return -std::expm1(-M * y / gp);
  }
  const DerivedWeights w = derive_weights(params, delta);
  const double gb = w.gamma_bar;
  const double e_sel = std::exp(-(1.0 - delta) * gb * y / (w.w_s * w.w_p));
  const double e_min = std::exp(-M * y / gp);
  double f;
  if (std::fabs((M - 1) * w.w_s - w.w_p) <= kDegeneracyTol * gb) {
    f = 1.0 - e_sel - std::pow(w.w_p / gb, M) * (e_min - e_sel) -
        M * (1.0 - delta) * std::pow(w.w_p / gb, M - 1) / gb * e_sel * y;
  } else {
    double coef = w.w_p * std::pow(w.w_p / gb, M - 1) / ((M - 1) * w.w_s - w.w_p);
    f = 1.0 - e_sel + coef * (e_min - e_sel);
  }
  return std::clamp(f, 0.0, 1.0);
}

double mean_selected_interference_gain(const SystemParams& params, double delta) {
  const DerivedWeights w = derive_weights(params, delta);
  const int M = params.num_antennas;
  // [M gb^{M-1} w_s + w_p^M] / (M gb^M) * mean_gain_p, written in scaled form
  return params.mean_gain_p *
         (w.w_s / w.gamma_bar + std::pow(w.w_p / w.gamma_bar, M) / M);
}

double mutual_information(double p_s, const SystemParams& params, double delta) {
  require_power(p_s);
  if (delta >= 1.0 - kEndpointBand) return mutual_information_limit_delta1(p_s, params);
  if (delta <= kEndpointBand) return mutual_information_limit_delta0(p_s, params);
  const DerivedWeights w = derive_weights(params, delta);
  const int M = params.num_antennas;
  const double gs = params.mean_gain_s;
  const double n0 = params.noise_power;
  const double gb = w.gamma_bar;
  const double a2 = delta * gb * n0 / (w.w_s * w.w_p * p_s);
  const double e2 = exp_scaled_e1(a2);
  CompensatedSum r;
  r.add(std::pow(w.w_p / gb, M) * e2);  // Upsilon
  for (int k = 0; k < M; ++k) {
    const double a1 = (k + 1) * n0 / (gs * p_s);
    const double e1k = exp_scaled_e1(a1);
    const double base = M * binomial(M - 1, k) * std::pow(-w.w_s / gb, k + 1);
    r.add(-base / (k + 1) * e1k);  // Phi_k
    if (!(w.degenerate_g && k == *w.degenerate_g)) {
      r.add(base * w.w_p / (w.w_s - k * w.w_p) * (e2 - e1k));  // Psi_k
    }
  }
  if (w.degenerate_g) {
    const int g = *w.degenerate_g;
    const double a1g = (g + 1) * n0 / (gs * p_s);
    const double cg = std::pow(-w.w_s / gb, g + 1);
    r.add(-binomial(M, g + 1) * cg);
    r.add(M * binomial(M - 1, g) * cg * n0 / (gs * p_s) * exp_scaled_e1(a1g));
  }
  return std::max(r.value() * kLog2E, 0.0);
}

double mutual_information_limit_delta1(double p_s, const SystemParams& params) {
  require_power(p_s);
  params.validate();
  const int M = params.num_antennas;
  const double c = params.noise_power / (params.mean_gain_s * p_s);
  CompensatedSum r;
  for (int k = 0; k < M; ++k) {
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    r.add(sign * binomial(M, k + 1) * exp_scaled_e1((k + 1) * c));
  }
  return std::max(r.value() * kLog2E, 0.0);
}

double mutual_information_limit_delta0(double p_s, const SystemParams& params) {
  require_power(p_s);
  params.validate();
  return exp_scaled_e1(params.noise_power / (params.mean_gain_s * p_s)) * kLog2E;
}

double outage_probability(double p_s, double r0, const SystemParams& params,
                          double delta) {
  require_power(p_s);
  if (!(r0 > 0.0) || !std::isfinite(r0)) {
    throw std::domain_error("outage_probability: r0 must be finite and > 0");
  }
  const double threshold = (std::exp2(r0) - 1.0) * params.noise_power / p_s;
  return cdf_selected_data_gain(threshold, params, delta);
}

double asymptotic_cdf_small_x(double x, const SystemParams& params, double delta) {
  require_nonneg(x, "asymptotic_cdf_small_x");
  const int M = params.num_antennas;
  const double gs = params.mean_gain_s;
  if (delta >= 1.0 - kEndpointBand) {
    derive_weights(params, std::min(delta, 1.0));
    return std::pow(x / gs, M);
  }
  const DerivedWeights w = derive_weights(params, delta);
  if (w.degenerate_g) {
    return x / (std::pow(*w.degenerate_g + 1.0, M - 1) * gs);
  }
  return std::pow(w.w_p / w.gamma_bar, M - 1) * x / gs;
}

double pdf_difference_metric(double z, const SystemParams& params, double delta) {
  params.validate();
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::domain_error("pdf_difference_metric: delta must be in (0, 1)");
  }
  const double gb = delta * params.mean_gain_s + (1.0 - delta) * params.mean_gain_p;
  if (z <= 0.0) {
    return std::exp(z / ((1.0 - delta) * params.mean_gain_p)) / gb;
  }
  return std::exp(-z / (delta * params.mean_gain_s)) / gb;
}

}  // namespace dstas
