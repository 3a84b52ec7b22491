#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "model.hpp"

using namespace dstas;

TEST_CASE("parameter validation") {
  SystemParams p{2, 1.0, 1.0, 1.0};
  CHECK_NOTHROW(p.validate());
  CHECK_THROWS_AS((SystemParams{0, 1, 1, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((SystemParams{65, 1, 1, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((SystemParams{2, -1, 1, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((SystemParams{2, 1, 0, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((SystemParams{2, 1, 1, 0}.validate()), std::invalid_argument);

  CHECK_NOTHROW((Constraints{1.0, 1.0}.validate()));
  CHECK_NOTHROW(
      (Constraints{std::numeric_limits<double>::infinity(), 1.0}.validate()));
  CHECK_THROWS_AS((Constraints{0.0, 1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Constraints{1.0, 0.0}.validate()), std::invalid_argument);
}

TEST_CASE("derived weights") {
  SystemParams p{2, 1.0, 1.0, 1.0};
  auto w = derive_weights(p, 0.5);
  CHECK(w.w_s == doctest::Approx(0.5));
  CHECK(w.w_p == doctest::Approx(0.5));
  CHECK(w.gamma_bar == doctest::Approx(1.0));
  CHECK(w.alpha == doctest::Approx(1.0));
  REQUIRE(w.degenerate_g.has_value());
  CHECK(*w.degenerate_g == 1);

  // g = 2 requires at least three antennas for the pole to be in range
  w = derive_weights(SystemParams{3, 1.0, 1.0, 1.0}, 2.0 / 3.0);
  REQUIRE(w.degenerate_g.has_value());
  CHECK(*w.degenerate_g == 2);
  w = derive_weights(p, 2.0 / 3.0);
  CHECK_FALSE(w.degenerate_g.has_value());

  w = derive_weights(p, 0.4);  // alpha = 2/3, no integer g
  CHECK_FALSE(w.degenerate_g.has_value());

  w = derive_weights(p, 1.0);
  CHECK(w.w_p == 0.0);
  CHECK(std::isinf(w.alpha));
}

TEST_CASE("gain stream is a pure function of (seed, trial, antenna, tag)") {
  GainStream a(42), b(42), c(43);
  CHECK(a.uniform(7, 3, GainStream::kData) == b.uniform(7, 3, GainStream::kData));
  CHECK(a.uniform(7, 3, GainStream::kData) != c.uniform(7, 3, GainStream::kData));
  CHECK(a.uniform(7, 3, GainStream::kData) !=
        a.uniform(7, 3, GainStream::kInterference));
  CHECK(a.uniform(7, 3, GainStream::kData) != a.uniform(8, 3, GainStream::kData));
  CHECK(a.uniform(7, 3, GainStream::kData) != a.uniform(7, 4, GainStream::kData));
  // repeated evaluation has no hidden state
  CHECK(a.exponential(2.0, 11, 0, GainStream::kData) ==
        a.exponential(2.0, 11, 0, GainStream::kData));
}

TEST_CASE("uniforms live strictly inside (0,1)") {
  GainStream s(1);
  for (std::uint64_t t = 0; t < 20000; ++t) {
    const double u = s.uniform(t, 0, GainStream::kData);
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("exponential draws match the target distribution (KS)") {
  const double mean = 2.0;
  const int n = 20000;
  GainStream s(123);
  std::vector<double> draws(n);
  for (int t = 0; t < n; ++t) {
    draws[t] = s.exponential(mean, static_cast<std::uint64_t>(t), 1,
                             GainStream::kInterference);
    CHECK(draws[t] > 0.0);
  }
  std::sort(draws.begin(), draws.end());
  double ks = 0.0;
  for (int i = 0; i < n; ++i) {
    const double f = 1.0 - std::exp(-draws[i] / mean);
    ks = std::max(ks, std::fabs(f - (i + 1.0) / n));
    ks = std::max(ks, std::fabs(f - static_cast<double>(i) / n));
  }
  // 1% critical value is 1.63/sqrt(n) ~ 0.0115
  CHECK(ks < 1.63 / std::sqrt(static_cast<double>(n)));
  // sample mean within 5 standard errors
  double sum = 0.0;
  for (double d : draws) sum += d;
  CHECK(sum / n == doctest::Approx(mean).epsilon(5.0 / std::sqrt(n)));
}

TEST_CASE("sample_gains shapes and scales") {
  SystemParams p{4, 3.0, 0.5, 1.0};
  GainStream s(9);
  const GainSample g = s.sample_gains(p, 0);
  CHECK(g.gains_s.size() == 4);
  CHECK(g.gains_p.size() == 4);
  // long-run means track the configured channel gains
  double ms = 0.0, mp = 0.0;
  const int n = 50000;
  for (int t = 0; t < n; ++t) {
    const GainSample gt = s.sample_gains(p, static_cast<std::uint64_t>(t));
    ms += gt.gains_s[2];
    mp += gt.gains_p[2];
  }
  CHECK(ms / n == doctest::Approx(3.0).epsilon(0.03));
  CHECK(mp / n == doctest::Approx(0.5).epsilon(0.03));
}
