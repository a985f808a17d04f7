#include <doctest.h>

#include "curveform/sensing.hpp"

using namespace curveform;

namespace {
SensorSpec nominal() { return SensorSpec{0.32, 0.35, 0.5, 0.006}; }
}  // namespace

TEST_CASE("detection probability branches") {
  const SensorSpec s = nominal();
  CHECK(detection_probability(s, 0.10) == 1.0);
  CHECK(detection_probability(s, 0.33) == 0.5);
  CHECK(detection_probability(s, 0.40) == 0.0);
  CHECK(detection_probability(s, 0.32) == 1.0);   // sure up to and including
  CHECK(detection_probability(s, 0.35) == 0.5);   // mid band is half-open
  CHECK_THROWS_AS(detection_probability(s, -0.1), std::domain_error);
}

TEST_CASE("detection probability is non-increasing in distance") {
  const SensorSpec s = nominal();
  double prev = 1.0;
  for (double m = 0.0; m < 0.6; m += 0.001) {
    const double p = detection_probability(s, m);
    CHECK(p <= prev + 1e-15);
    prev = p;
  }
}

TEST_CASE("sampling: noiseless sure range and hard cutoff") {
  SensorSpec s = nominal();
  s.phi = 0.0;
  RandomStream rng(1, RngDomain::kTest, 20);
  for (int i = 0; i < 100; ++i) {
    const auto y = sample_measurement(s, 0.1, rng);
    REQUIRE(y.has_value());
    CHECK(*y == 0.1);
  }
  for (int i = 0; i < 1000; ++i)
    CHECK_FALSE(sample_measurement(s, 0.5, rng).has_value());
}

TEST_CASE("sampling: mid-band presence rate") {
  const SensorSpec s = nominal();
  RandomStream rng(2, RngDomain::kTest, 21);
  int present = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i)
    if (sample_measurement(s, 0.33, rng).has_value()) ++present;
  CHECK(static_cast<double>(present) / n == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("distance interval clipping") {
  SensorSpec s = nominal();
  s.phi = 0.1;
  const DistanceInterval a = measurement_to_distance_interval(s, 0.05);
  CHECK(a.lo == 0.0);
  CHECK(a.hi == doctest::Approx(0.15));

  s.phi = 0.02;
  const DistanceInterval b = measurement_to_distance_interval(s, 0.34);
  CHECK(b.lo == doctest::Approx(0.32));
  CHECK(b.hi == doctest::Approx(0.35));

  s.phi = 0.01;
  const DistanceInterval c = measurement_to_distance_interval(s, 0.20);
  CHECK(c.lo == doctest::Approx(0.19));
  CHECK(c.hi == doctest::Approx(0.21));
}

TEST_CASE("containment and absence information") {
  const SensorSpec s = nominal();
  RandomStream dist_rng(3, RngDomain::kTest, 22);
  RandomStream draw_rng(4, RngDomain::kTest, 23);
  for (int i = 0; i < 100000; ++i) {
    const double m = dist_rng.uniform(0.0, 0.5);
    const auto y = sample_measurement(s, m, draw_rng);
    if (y.has_value()) {
      const DistanceInterval di = measurement_to_distance_interval(s, *y);
      CHECK(di.lo <= m + 1e-15);
      CHECK(m <= di.hi + 1e-15);
    } else {
      // An absent reading certifies the peer is beyond the sure radius.
      CHECK(m > s.r_sure);
    }
  }
}
