#pragma once

namespace dstas {

/// Exponential integral E1(x) = \int_x^inf e^{-u}/u du, x > 0.
/// Relative error <= 1e-12 on [1e-12, 700]; underflows gracefully beyond.
double exp_integral_e1(double x);

/// e^x * E1(x) evaluated without forming the two overflowing factors.
/// Usable for x up to ~1e8 and beyond (asymptotically ~ 1/x).
double exp_scaled_e1(double x);

/// Binomial coefficient as a double, exact integer arithmetic for n <= 64.
double binomial(int n, int k);

}  // namespace dstas
