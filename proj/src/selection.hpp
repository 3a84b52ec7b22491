#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>

#include "model.hpp"

namespace dstas {

/// Result of picking one antenna out of a GainSample. index is 0-based.
struct SelectionOutcome {
  int index = 0;
  double gain_s = 0.0;
  double gain_p = 0.0;
  double metric = 0.0;  // winning Z_i or ratio
};

/// Pick the antenna maximizing Z_i = delta*gain_s[i] - (1-delta)*gain_p[i].
/// Ties go to the lowest index.
inline SelectionOutcome difference_select(const GainSample& sample, double delta) {
  SelectionOutcome out;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sample.gains_s.size(); ++i) {
    double z = delta * sample.gains_s[i] - (1.0 - delta) * sample.gains_p[i];
    if (z > best) {
      best = z;
      out.index = static_cast<int>(i);
    }
  }
  out.metric = best;
  out.gain_s = sample.gains_s[out.index];
  out.gain_p = sample.gains_p[out.index];
  return out;
}

/// Pick the antenna maximizing gain_s[i] / gain_p[i]; ties to lowest index.
inline SelectionOutcome ratio_select(const GainSample& sample) {
  SelectionOutcome out;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sample.gains_p.size(); ++i) {
    if (sample.gains_p[i] <= 0.0) {
      throw std::domain_error("ratio_select: zero interference gain");
    }
    double r = sample.gains_s[i] / sample.gains_p[i];
    if (r > best) {
      best = r;
      out.index = static_cast<int>(i);
    }
  }
  out.metric = best;
  out.gain_s = sample.gains_s[out.index];
  out.gain_p = sample.gains_p[out.index];
  return out;
}

}  // namespace dstas
