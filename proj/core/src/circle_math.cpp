#include "curveform/circle_math.hpp"

#include <algorithm>
#include <cmath>

namespace curveform {

double mod_scalar(double z, double m) {
  if (m == 0.0) throw std::domain_error("mod_scalar: zero modulus");
  const double am = std::abs(m);
  double c = z - am * std::floor(z / am);
  if (c >= am) c -= am;
  if (c < 0.0) c += am;
  return c;
}

double rem_scalar(double z, double m) {
  if (m == 0.0) throw std::domain_error("rem_scalar: zero modulus");
  const double am = std::abs(m);
  return mod_scalar(z + am / 2.0, am) - am / 2.0;
}

Hull hull(std::span<const Interval> parts) {
  if (parts.empty()) throw std::logic_error("hull: empty input");
  Hull h{parts.front().lo, parts.front().hi};
  for (const auto& p : parts) {
    h.lo = std::min(h.lo, p.lo);
    h.hi = std::max(h.hi, p.hi);
  }
  return h;
}

MultiInterval::MultiInterval(double circumference)
    : circumference_(circumference), tol_(1e-12 * circumference) {
  if (!(circumference > 0.0))
    throw std::invalid_argument("MultiInterval: circumference must be > 0");
}

MultiInterval::MultiInterval(double circumference, std::vector<Interval> parts)
    : MultiInterval(circumference) {
  parts_ = std::move(parts);
  const double half = circumference_ / 2.0;
  for (auto& p : parts_) {
    if (p.lo < -half - tol_ || p.hi > half + tol_)
      throw std::invalid_argument("MultiInterval: part outside [-l/2, l/2]");
    p.lo = std::max(p.lo, -half);
    p.hi = std::min(p.hi, half);
  }
  canonicalize();
}

MultiInterval MultiInterval::full(double circumference) {
  return MultiInterval(circumference,
                       {Interval(-circumference / 2.0, circumference / 2.0)});
}

MultiInterval MultiInterval::from_unwrapped(double circumference, double lo,
                                            double hi) {
  if (!(lo <= hi)) throw std::invalid_argument("from_unwrapped: lo > hi");
  const double l = circumference;
  const double half = l / 2.0;
  const double width = hi - lo;
  if (width >= l - 1e-12 * l) return full(l);
  const double base = rem_scalar(lo, l);
  const double top = base + width;
  if (top <= half) return MultiInterval(l, {Interval(base, top)});
  return MultiInterval(l, {Interval(-half, top - l), Interval(base, half)});
}

void MultiInterval::canonicalize() {
  if (parts_.empty()) return;
  std::sort(parts_.begin(), parts_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  merged.reserve(parts_.size());
  merged.push_back(parts_.front());
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    Interval& last = merged.back();
    if (parts_[i].lo <= last.hi + tol_) {
      last.hi = std::max(last.hi, parts_[i].hi);
    } else {
      merged.push_back(parts_[i]);
    }
  }
  parts_ = std::move(merged);
}

MultiInterval MultiInterval::shifted(const Interval& shift) const {
  std::vector<Interval> pieces;
  pieces.reserve(parts_.size() * 2);
  for (const auto& p : parts_) {
    const double lo = p.lo + shift.lo;
    const double hi = p.hi + shift.hi;
    MultiInterval wrapped = from_unwrapped(circumference_, lo, hi);
    if (wrapped.part_count() == 1 &&
        wrapped.parts_.front().width() >= circumference_ - tol_)
      return full(circumference_);
    for (const auto& w : wrapped.parts_) pieces.push_back(w);
  }
  return MultiInterval(circumference_, std::move(pieces));
}

MultiInterval MultiInterval::intersected(const MultiInterval& other) const {
  if (std::abs(circumference_ - other.circumference_) > tol_)
    throw std::domain_error("intersected: circumference mismatch");
  std::vector<Interval> out;
  std::size_t ia = 0, ib = 0;
  while (ia < parts_.size() && ib < other.parts_.size()) {
    const Interval& a = parts_[ia];
    const Interval& b = other.parts_[ib];
    const double lo = std::max(a.lo, b.lo);
    const double hi = std::min(a.hi, b.hi);
    if (lo <= hi) out.emplace_back(lo, hi);
    if (a.hi < b.hi)
      ++ia;
    else
      ++ib;
  }
  return MultiInterval(circumference_, std::move(out));
}

bool MultiInterval::contains(double x) const { return contains(x, tol_); }

bool MultiInterval::contains(double x, double slack) const {
  const double r = rem_scalar(x, circumference_);
  for (const auto& p : parts_) {
    // Also test the circularly equivalent coordinates so that points next
    // to the domain boundary match parts stored on the opposite side.
    for (const double c : {r, r - circumference_, r + circumference_}) {
      if (c >= p.lo - slack && c <= p.hi + slack) return true;
    }
  }
  return false;
}

Hull MultiInterval::hull() const {
  if (parts_.empty()) throw std::logic_error("hull: empty multi-interval");
  return curveform::hull(std::span<const Interval>(parts_));
}

}  // namespace curveform
