#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace dstas {

// delta values this close to 0 or 1 are routed to the endpoint closed forms;
// the general-branch expressions have w_s*w_p denominators that blow up there.
inline constexpr double kEndpointBand = 1e-6;

// Relative band (times gamma_bar) inside which w_s = g*w_p is treated as
// exactly degenerate; the non-degenerate branch has a (w_s-k*w_p)^-1 pole.
inline constexpr double kDegeneracyTol = 1e-9;

/// Static scenario description of the secondary link.
struct SystemParams {
  int num_antennas = 1;      // M
  double mean_gain_s = 1.0;  // average s->s channel power gain
  double mean_gain_p = 1.0;  // average s->p channel power gain
  double noise_power = 1.0;  // N0, linear

  void validate() const;
};

/// Peak transmit power and average interference limit, linear units.
/// p_max may be +inf for the unconstrained instantaneous-power benchmark.
struct Constraints {
  double p_max = 1.0;
  double interference_limit = 1.0;

  void validate() const;
};

/// delta-dependent quantities every closed form is written in.
struct DerivedWeights {
  double w_s = 0.0;        // delta * mean_gain_s
  double w_p = 0.0;        // (1-delta) * mean_gain_p
  double gamma_bar = 0.0;  // w_s + w_p
  double alpha = 0.0;      // w_s / w_p, +inf when w_p == 0
  std::optional<int> degenerate_g;  // g with |w_s - g*w_p| <= tol*gamma_bar
};

DerivedWeights derive_weights(const SystemParams& params, double delta);

/// One realization of the per-antenna channel gains.
struct GainSample {
  std::vector<double> gains_s;
  std::vector<double> gains_p;
};

// Counter-based random source: every draw is a pure function of
// (seed, trial, antenna, tag), so results do not depend on worker count or
// iteration order.
class GainStream {
 public:
  enum Tag : int {
    kData = 0,
    kInterference = 1,
    kPhaseOneData = 2,
    kPhaseOneInterference = 3,
  };

  explicit GainStream(std::uint64_t seed);

  /// Uniform in the open interval (0,1).
  double uniform(std::uint64_t trial, int antenna, int tag) const;

  /// Exponential with the given mean; strictly positive.
  double exponential(double mean, std::uint64_t trial, int antenna, int tag) const;

  GainSample sample_gains(const SystemParams& params, std::uint64_t trial) const;

 private:
  std::uint64_t state_;
};

}  // namespace dstas
