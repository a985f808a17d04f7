#ifndef CURVEFORM_RNG_HPP
#define CURVEFORM_RNG_HPP

#include <cstdint>

namespace curveform {

/// Draw domains keep unrelated consumers of the same run seed decorrelated.
enum class RngDomain : std::uint64_t {
  kMeasurement = 1,
  kInitialPositions = 2,
  kTest = 100,
};

/// splitmix64 finalizer (Steele, Lea, Flood / Vigna).
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Counter-based stream keyed by (seed, domain, a, b, c). Every keyed stream
/// is an independent splitmix64 sequence, so draws for a given (step, pair)
/// are reproducible regardless of evaluation order.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, RngDomain domain, std::uint64_t a = 0,
               std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t h = mix64(seed ^ (static_cast<std::uint64_t>(domain) *
                                    0xD6E8FEB86659FD93ull));
    h = mix64(h ^ (a * 0xA24BAED4963EE407ull));
    h = mix64(h ^ (b * 0x9FB21C651E98DF25ull));
    h = mix64(h ^ (c * 0xC2B2AE3D27D4EB4Full));
    state_ = h;
  }

  std::uint64_t next_u64() { return mix64(state_ += 0x9E3779B97F4A7C15ull); }

  /// Uniform in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_unit();
  }

  /// Uniform in [-amplitude, amplitude].
  double symmetric(double amplitude) {
    return (2.0 * next_unit() - 1.0) * amplitude;
  }

  bool bernoulli(double p) { return next_unit() < p; }

 private:
  std::uint64_t state_;
};

}  // namespace curveform

#endif
