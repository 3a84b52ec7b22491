#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "model.hpp"
#include "selection.hpp"

using namespace dstas;

TEST_CASE("difference selection endpoints") {
  GainSample s{{0.5, 3.0, 1.0}, {2.0, 1.5, 0.1}};
  // delta = 1: pure max data gain
  auto out = difference_select(s, 1.0);
  CHECK(out.index == 1);
  CHECK(out.gain_s == 3.0);
  CHECK(out.gain_p == 1.5);
  CHECK(out.metric == doctest::Approx(3.0));
  // delta = 0: pure min interference gain
  out = difference_select(s, 0.0);
  CHECK(out.index == 2);
  CHECK(out.gain_p == 0.1);
  CHECK(out.metric == doctest::Approx(-0.1));
}

TEST_CASE("difference selection maximizes the weighted metric") {
  GainStream rng(5);
  SystemParams p{6, 1.0, 2.0, 1.0};
  for (std::uint64_t t = 0; t < 2000; ++t) {
    const GainSample s = rng.sample_gains(p, t);
    for (double delta : {0.0, 0.3, 0.5, 0.8, 1.0}) {
      const auto out = difference_select(s, delta);
      for (std::size_t i = 0; i < s.gains_s.size(); ++i) {
        const double z = delta * s.gains_s[i] - (1.0 - delta) * s.gains_p[i];
        CHECK(out.metric >= z - 1e-15);
      }
      CHECK(out.gain_s == s.gains_s[out.index]);
      CHECK(out.gain_p == s.gains_p[out.index]);
    }
  }
}

TEST_CASE("ties go to the lowest index") {
  GainSample s{{2.0, 2.0}, {1.0, 1.0}};
  CHECK(difference_select(s, 1.0).index == 0);
  CHECK(difference_select(s, 0.0).index == 0);
  CHECK(ratio_select(s).index == 0);
}

TEST_CASE("ratio selection") {
  GainSample s{{0.5, 3.0, 1.0}, {2.0, 1.5, 0.1}};
  const auto out = ratio_select(s);
  CHECK(out.index == 2);  // ratios 0.25, 2.0, 10.0
  CHECK(out.metric == doctest::Approx(10.0));

  GainSample bad{{1.0, 1.0}, {1.0, 0.0}};
  CHECK_THROWS_AS(ratio_select(bad), std::domain_error);
}

TEST_CASE("ratio selection is invariant to common scaling of data gains") {
  GainStream rng(17);
  SystemParams p{4, 1.0, 1.0, 1.0};
  for (std::uint64_t t = 0; t < 500; ++t) {
    GainSample s = rng.sample_gains(p, t);
    const int base = ratio_select(s).index;
    for (auto& g : s.gains_s) g *= 7.5;
    CHECK(ratio_select(s).index == base);
  }
}
