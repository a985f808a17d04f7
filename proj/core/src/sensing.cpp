#include "curveform/sensing.hpp"

#include <algorithm>

namespace curveform {

double detection_probability(const SensorSpec& spec, double m) {
  if (m < 0.0) throw std::domain_error("detection_probability: m < 0");
  if (m <= spec.r_sure) return 1.0;
  if (m <= spec.r_max) return spec.q_bar;
  return 0.0;
}

std::optional<double> sample_measurement(const SensorSpec& spec, double m,
                                         RandomStream& rng) {
  const double p = detection_probability(spec, m);
  if (!rng.bernoulli(p)) return std::nullopt;
  return m + rng.symmetric(spec.phi);
}

DistanceInterval measurement_to_distance_interval(const SensorSpec& spec,
                                                  double y) {
  const double lo = std::max(y - spec.phi, 0.0);
  const double hi = std::min(y + spec.phi, spec.r_max);
  if (lo > hi)
    throw std::logic_error(
        "measurement_to_distance_interval: measurement above r_max + phi");
  return DistanceInterval(lo, hi);
}

}  // namespace curveform
