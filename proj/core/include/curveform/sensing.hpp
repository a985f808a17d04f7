#ifndef CURVEFORM_SENSING_HPP
#define CURVEFORM_SENSING_HPP

#include <optional>
#include <stdexcept>

#include "curveform/curve.hpp"
#include "curveform/rng.hpp"

namespace curveform {

/// Proximity sensor model: detection is sure within r_sure, Bernoulli(q_bar)
/// within (r_sure, r_max], impossible beyond r_max; additive noise is bounded
/// by phi.
struct SensorSpec {
  double r_sure = 0.32;
  double r_max = 0.35;
  double q_bar = 0.5;
  double phi = 0.0;

  void validate() const {
    if (!(0.0 < r_sure && r_sure < r_max))
      throw std::invalid_argument("SensorSpec: need 0 < r_sure < r_max");
    if (!(0.0 < q_bar && q_bar < 1.0))
      throw std::invalid_argument("SensorSpec: need q_bar in (0,1)");
    if (!(phi >= 0.0)) throw std::invalid_argument("SensorSpec: phi < 0");
  }
};

/// Probability of gathering a measurement at true distance m.
double detection_probability(const SensorSpec& spec, double m);

/// One realized output for a pair at one step: nullopt when no measurement is
/// gathered, otherwise m + v with v uniform in [-phi, phi].
std::optional<double> sample_measurement(const SensorSpec& spec, double m,
                                         RandomStream& rng);

/// Guaranteed distance bound from a present measurement:
/// [max{y - phi, 0}, min{y + phi, r_max}].
DistanceInterval measurement_to_distance_interval(const SensorSpec& spec,
                                                  double y);

}  // namespace curveform

#endif
