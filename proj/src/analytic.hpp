#pragma once

#include "model.hpp"

namespace dstas {

// Closed-form statistics of the selected links under difference selection,
// and the secondary-link performance metrics built from them.
//
// All probabilities are in [0,1]; mutual information is in bits/s/Hz
// (the internal rate integral is in nats and scaled by log2 e on the way out).

/// CDF of the selected s->s gain at x >= 0.
double cdf_selected_data_gain(double x, const SystemParams& params, double delta);

/// CDF of the selected s->p gain at y >= 0.
double cdf_selected_interference_gain(double y, const SystemParams& params,
                                      double delta);

/// Mean of the selected s->p gain; lies in [mean_gain_p/M, mean_gain_p].
double mean_selected_interference_gain(const SystemParams& params, double delta);

/// Ergodic mutual information of the secondary link at transmit power p_s > 0.
double mutual_information(double p_s, const SystemParams& params, double delta);

/// delta -> 1 limit: selection combining over M antennas.
double mutual_information_limit_delta1(double p_s, const SystemParams& params);

/// delta -> 0 limit: single-antenna Rayleigh channel, independent of M.
double mutual_information_limit_delta0(double p_s, const SystemParams& params);

/// P(rate <= r0) at power p_s and target rate r0 (bits/s/Hz).
double outage_probability(double p_s, double r0, const SystemParams& params,
                          double delta);

/// First-order small-x expansion of the data-gain CDF (diversity behavior).
double asymptotic_cdf_small_x(double x, const SystemParams& params, double delta);

/// Two-sided exponential density of the selection metric Z_i, 0 < delta < 1.
double pdf_difference_metric(double z, const SystemParams& params, double delta);

}  // namespace dstas
