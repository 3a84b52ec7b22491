#include "special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dstas {
namespace {

constexpr double kEulerGamma = 0.577215664901532860606512090082;

void require_positive(double x, const char* fn) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(fn) + ": argument must be finite and > 0");
  }
}

// Power series E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!),
// rapidly convergent for x <= 1.
double e1_series(double x) {
  double sum = 0.0;
  double t = 1.0;  // (-x)^k / k!
  for (int k = 1; k <= 48; ++k) {
    t *= -x / k;
    double add = -t / k;
    sum += add;
    if (std::fabs(add) < 1e-18 * std::fabs(sum) + 1e-300) break;
  }
  return -kEulerGamma - std::log(x) + sum;
}

// Modified Lentz evaluation of the scaled continued fraction
//   e^x E1(x) = 1/(x+1- 1/(x+3- 4/(x+5- 9/(x+7- ...)))),  x > 1.
double e1_scaled_cf(double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 300; ++i) {
    double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    double del = c * d;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return h;
}

}  // namespace

double exp_scaled_e1(double x) {
  require_positive(x, "exp_scaled_e1");
  if (x <= 1.0) return std::exp(x) * e1_series(x);
  return e1_scaled_cf(x);
}

double exp_integral_e1(double x) {
  require_positive(x, "exp_integral_e1");
  if (x <= 1.0) return e1_series(x);
  return std::exp(-x) * e1_scaled_cf(x);
}

double binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > 64) {
    throw std::domain_error("binomial: need 0 <= k <= n <= 64");
  }
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<double>(static_cast<unsigned long long>(r));
}

}  // namespace dstas
