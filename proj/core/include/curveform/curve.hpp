#ifndef CURVEFORM_CURVE_HPP
#define CURVEFORM_CURVE_HPP

#include <string>
#include <vector>

#include "curveform/circle_math.hpp"

namespace curveform {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Euclidean distance bounds in plane units, 0 <= lo <= hi.
struct DistanceInterval {
  double lo = 0.0;
  double hi = 0.0;

  DistanceInterval() = default;
  DistanceInterval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(0.0 <= lo && lo <= hi))
      throw std::invalid_argument("DistanceInterval: need 0 <= lo <= hi");
  }
};

/// A closed simple polyline parametrized by arclength, with a precomputed
/// distance envelope: per arc-separation cell [x, x+dx] in [0, l/2], exact
/// min/max of ||gamma(a) - gamma(a+x')|| over all base points a and x' in
/// the cell. The envelope inverts Euclidean distance information into
/// multi-intervals of relative arc positions.
///
/// Immutable after construction; all queries are pure.
class CurveModel {
 public:
  /// `cell_size` <= 0 picks the default length/4000. Throws if the polyline
  /// is degenerate, self-intersecting, or the grid is coarser than l/200.
  static CurveModel build(std::vector<Vec2> vertices, double cell_size = 0.0);

  /// Plain text file, one "x y" vertex per line, implicitly closed.
  static CurveModel load(const std::string& path, double cell_size = 0.0);

  double length() const { return length_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<Vec2>& vertices() const { return vertices_; }
  double cell_size() const { return cell_size_; }
  std::size_t cell_count() const { return dmin_.size(); }

  /// Point at arclength mod(s, l).
  Vec2 point_at(double s) const;

  /// ||gamma(mod(s2,l)) - gamma(mod(s1,l))||.
  double euclidean_distance(double s1, double s2) const;

  /// Envelope bounds at arc separation |x| (cell lookup).
  double envelope_min(double x) const;
  double envelope_max(double x) const;

  /// All relative arc positions x in [-l/2, l/2) whose distance envelope
  /// intersects the measured bound: union of grid cells passing
  /// [dmin, dmax] n [m.lo, m.hi] != {}, symmetrized about 0.
  MultiInterval invert_measured(const DistanceInterval& m) const;

  /// Closure of { x : dmax(|x|) > r_sure }: every relative position at which
  /// the true distance could exceed the sure-detection radius.
  MultiInterval invert_absent(double r_sure) const;

 private:
  CurveModel() = default;
  void build_envelope();
  void validate_simple() const;
  MultiInterval cells_to_multiinterval(const std::vector<char>& pass) const;

  std::vector<Vec2> vertices_;
  std::vector<double> cumulative_;  // cumulative_[i] = arclength at vertex i
  double length_ = 0.0;
  double cell_size_ = 0.0;
  std::vector<double> dmin_;
  std::vector<double> dmax_;
};

}  // namespace curveform

#endif
