#ifndef CURVEFORM_CIRCLE_MATH_HPP
#define CURVEFORM_CIRCLE_MATH_HPP

#include <span>
#include <stdexcept>
#include <vector>

namespace curveform {

/// Modulo with result in [0, |m|): c = z - q*m, q integer.
double mod_scalar(double z, double m);

/// Symmetric remainder with result in [-|m|/2, |m|/2).
/// Satisfies rem(-z, m) == -rem(z, m) whenever z is not a multiple of m.
double rem_scalar(double z, double m);

/// A closed interval [lo, hi] on the real line, lo <= hi.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo <= hi)) throw std::invalid_argument("Interval: lo > hi");
  }
  double width() const { return hi - lo; }
};

/// {x + y | x in X, y in Y}.
inline Interval minkowski_sum(const Interval& x, const Interval& y) {
  return Interval(x.lo + y.lo, x.hi + y.hi);
}

/// Linear-coordinate hull of a set of intervals.
struct Hull {
  double lo = 0.0;
  double hi = 0.0;
};

Hull hull(std::span<const Interval> parts);

/// A finite union of disjoint closed intervals on a circle of circumference l,
/// stored in the canonical domain [-l/2, l/2). Parts are sorted ascending and
/// pairwise disjoint; endpoints closer than 1e-12*l are merged. The empty
/// union is a representable value.
class MultiInterval {
 public:
  explicit MultiInterval(double circumference);
  MultiInterval(double circumference, std::vector<Interval> parts);

  static MultiInterval empty(double circumference) {
    return MultiInterval(circumference);
  }
  static MultiInterval full(double circumference);

  /// Canonicalizes an interval [lo, hi] given in unwrapped coordinates
  /// (arbitrary reals, hi - lo >= 0) by mapping it through rem(., l).
  /// A part crossing the domain boundary splits in two; width >= l gives
  /// the full circle.
  static MultiInterval from_unwrapped(double circumference, double lo,
                                      double hi);

  double circumference() const { return circumference_; }
  const std::vector<Interval>& parts() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }
  std::size_t part_count() const { return parts_.size(); }

  /// Image under rem(., l) of the Minkowski sum of every part with `shift`.
  MultiInterval shifted(const Interval& shift) const;

  /// Pointwise set intersection; may be empty. Throws on circumference
  /// mismatch.
  MultiInterval intersected(const MultiInterval& other) const;

  /// Closed-endpoint membership of rem(x, l), with a small slack against
  /// floating-point boundary ties.
  bool contains(double x) const;
  bool contains(double x, double slack) const;

  /// Hull over all parts in the canonical linear coordinates.
  /// Throws std::logic_error when empty.
  Hull hull() const;

  double endpoint_tolerance() const { return tol_; }

 private:
  void canonicalize();

  double circumference_;
  double tol_;
  std::vector<Interval> parts_;
};

}  // namespace curveform

#endif
