#include "model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dstas {
namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

void SystemParams::validate() const {
  if (num_antennas < 1 || num_antennas > 64) {
    throw std::invalid_argument("SystemParams: num_antennas must be in [1, 64]");
  }
  if (!(mean_gain_s > 0.0) || !std::isfinite(mean_gain_s) ||
      !(mean_gain_p > 0.0) || !std::isfinite(mean_gain_p) ||
      !(noise_power > 0.0) || !std::isfinite(noise_power)) {
    throw std::invalid_argument("SystemParams: gains and noise must be finite and > 0");
  }
}

void Constraints::validate() const {
  if (!(p_max > 0.0) || !(interference_limit > 0.0) ||
      !std::isfinite(interference_limit)) {
    throw std::invalid_argument("Constraints: powers must be > 0 (p_max may be +inf)");
  }
}

DerivedWeights derive_weights(const SystemParams& params, double delta) {
  params.validate();
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("derive_weights: delta must be in [0, 1]");
  }
  DerivedWeights w;
  w.w_s = delta * params.mean_gain_s;
  w.w_p = (1.0 - delta) * params.mean_gain_p;
  w.gamma_bar = w.w_s + w.w_p;
  w.alpha = w.w_p > 0.0 ? w.w_s / w.w_p
                        : std::numeric_limits<double>::infinity();
  double best = std::numeric_limits<double>::infinity();
  for (int g = 0; g < params.num_antennas; ++g) {
    double miss = std::fabs(w.w_s - g * w.w_p);
    if (miss <= kDegeneracyTol * w.gamma_bar && miss < best) {
      best = miss;
      w.degenerate_g = g;
    }
  }
  return w;
}

GainStream::GainStream(std::uint64_t seed)
    : state_(mix64(seed ^ 0x6A09E667F3BCC909ULL)) {}

double GainStream::uniform(std::uint64_t trial, int antenna, int tag) const {
  std::uint64_t ctr = (trial << 9) | (static_cast<std::uint64_t>(antenna) << 3) |
                      static_cast<std::uint64_t>(tag);
  std::uint64_t v = mix64(state_ + ctr * 0x9E3779B97F4A7C15ULL);
  // 53-bit mantissa, offset by half a ulp so u is never exactly 0 or 1
  return (static_cast<double>(v >> 11) + 0.5) * 0x1.0p-53;
}

double GainStream::exponential(double mean, std::uint64_t trial, int antenna,
                               int tag) const {
  return -mean * std::log1p(-uniform(trial, antenna, tag));
}

GainSample GainStream::sample_gains(const SystemParams& params,
                                    std::uint64_t trial) const {
  GainSample s;
  s.gains_s.resize(params.num_antennas);
  s.gains_p.resize(params.num_antennas);
  for (int i = 0; i < params.num_antennas; ++i) {
    s.gains_s[i] = exponential(params.mean_gain_s, trial, i, kData);
    s.gains_p[i] = exponential(params.mean_gain_p, trial, i, kInterference);
  }
  return s;
}

}  // namespace dstas
