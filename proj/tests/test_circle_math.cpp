#include <cmath>
#include <vector>

#include <doctest.h>

#include "curveform/circle_math.hpp"
#include "curveform/rng.hpp"

using namespace curveform;

namespace {

// Sampling oracle: membership of a dense set of points decides whether two
// multi-interval values agree as subsets of the circle.
bool same_set(const MultiInterval& a, const MultiInterval& b, int samples) {
  const double l = a.circumference();
  const double slack = 1e-9 * l;
  RandomStream rng(7, RngDomain::kTest, 42);
  for (int s = 0; s < samples; ++s) {
    const double x = rng.uniform(-l / 2.0, l / 2.0);
    const bool in_a = a.contains(x, slack);
    const bool in_b = b.contains(x, slack);
    // Points within slack of any endpoint are ambiguous; skip them.
    bool near_edge = false;
    for (const auto& set : {a, b}) {
      for (const Interval& p : set.parts()) {
        if (std::abs(rem_scalar(x - p.lo, l)) < 2.0 * slack ||
            std::abs(rem_scalar(x - p.hi, l)) < 2.0 * slack)
          near_edge = true;
      }
    }
    if (near_edge) continue;
    if (in_a != in_b) return false;
  }
  return true;
}

MultiInterval random_multiinterval(double l, RandomStream& rng) {
  const int n = 1 + static_cast<int>(rng.next_u64() % 3);
  std::vector<Interval> parts;
  for (int i = 0; i < n; ++i) {
    const double lo = rng.uniform(-l / 2.0, l / 2.0 - 1e-6);
    const double w = rng.uniform(0.0, l / 4.0);
    const double hi = std::min(lo + w, l / 2.0 - 1e-9);
    parts.emplace_back(lo, hi);
  }
  return MultiInterval(l, std::move(parts));
}

}  // namespace

TEST_CASE("mod_scalar basics") {
  CHECK(mod_scalar(5.0, 4.0) == doctest::Approx(1.0));
  CHECK(mod_scalar(-1.0, 4.0) == doctest::Approx(3.0));
  CHECK(mod_scalar(0.0, 4.0) == 0.0);
  CHECK_THROWS_AS(mod_scalar(1.0, 0.0), std::domain_error);
  for (double z : {-17.3, -4.0, -0.1, 0.0, 2.5, 4.0, 123.456}) {
    const double c = mod_scalar(z, 4.0);
    CHECK(c >= 0.0);
    CHECK(c < 4.0);
    CHECK(std::remainder(z - c, 4.0) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("rem_scalar basics") {
  CHECK(rem_scalar(3.0, 4.0) == doctest::Approx(-1.0));
  CHECK(rem_scalar(2.0, 4.0) == doctest::Approx(-2.0));
  CHECK(rem_scalar(0.3, 4.0) == doctest::Approx(0.3));
  CHECK_THROWS_AS(rem_scalar(1.0, 0.0), std::domain_error);
  RandomStream rng(1, RngDomain::kTest, 1);
  for (int i = 0; i < 1000; ++i) {
    const double z = rng.uniform(-20.0, 20.0);
    const double r = rem_scalar(z, 4.0);
    CHECK(r >= -2.0);
    CHECK(r < 2.0);
    CHECK(std::remainder(z - r, 4.0) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("minkowski_sum endpoint arithmetic") {
  const Interval a = minkowski_sum({1, 2}, {3, 4});
  CHECK(a.lo == 4.0);
  CHECK(a.hi == 6.0);
  const Interval b = minkowski_sum({-1, 1}, {0, 0});
  CHECK(b.lo == -1.0);
  CHECK(b.hi == 1.0);
  const Interval c = minkowski_sum({0.1, 0.2}, {-0.05, 0.05});
  CHECK(c.lo == doctest::Approx(0.05));
  CHECK(c.hi == doctest::Approx(0.25));
}

TEST_CASE("minkowski_sum matches the pointwise-sum oracle") {
  RandomStream rng(3, RngDomain::kTest, 2);
  for (int trial = 0; trial < 10000; ++trial) {
    const double xl = rng.uniform(-5, 5), xw = rng.uniform(0, 2);
    const double yl = rng.uniform(-5, 5), yw = rng.uniform(0, 2);
    const Interval x(xl, xl + xw), y(yl, yl + yw);
    const Interval s = minkowski_sum(x, y);
    const double px = rng.uniform(x.lo, x.hi);
    const double py = rng.uniform(y.lo, y.hi);
    CHECK(px + py >= s.lo - 1e-12);
    CHECK(px + py <= s.hi + 1e-12);
  }
}

TEST_CASE("hull of interval lists") {
  const std::vector<Interval> a{{0, 1}, {3, 4}};
  CHECK(hull(a).lo == 0.0);
  CHECK(hull(a).hi == 4.0);
  const std::vector<Interval> b{{-2, -1}};
  CHECK(hull(b).lo == -2.0);
  CHECK(hull(b).hi == -1.0);
  const std::vector<Interval> c{{-1.9, -1.8}, {1.7, 1.9}};
  CHECK(hull(c).lo == -1.9);
  CHECK(hull(c).hi == 1.9);
  CHECK_THROWS(hull(std::span<const Interval>{}));
  CHECK_THROWS_AS(MultiInterval::empty(4.0).hull(), std::logic_error);
}

TEST_CASE("Interval rejects lo > hi") {
  CHECK_THROWS_AS(Interval(1.0, 0.5), std::invalid_argument);
}

TEST_CASE("shifted wraps across the domain boundary") {
  const MultiInterval m(4.0, {{1.8, 1.9}});
  const MultiInterval out = m.shifted({0.1, 0.3});
  REQUIRE(out.part_count() == 2);
  CHECK(out.parts()[0].lo == doctest::Approx(-2.0));
  CHECK(out.parts()[0].hi == doctest::Approx(-1.8));
  CHECK(out.parts()[1].lo == doctest::Approx(1.9));
  CHECK(out.parts()[1].hi == doctest::Approx(2.0));
}

TEST_CASE("shifted identity and plain sum") {
  const MultiInterval a(4.0, {{0.0, 0.5}});
  const MultiInterval ia = a.shifted({0, 0});
  REQUIRE(ia.part_count() == 1);
  CHECK(ia.parts()[0].lo == doctest::Approx(0.0));
  CHECK(ia.parts()[0].hi == doctest::Approx(0.5));

  const MultiInterval b(4.0, {{-0.2, 0.2}});
  const MultiInterval sb = b.shifted({-0.1, 0.1});
  REQUIRE(sb.part_count() == 1);
  CHECK(sb.parts()[0].lo == doctest::Approx(-0.3));
  CHECK(sb.parts()[0].hi == doctest::Approx(0.3));
}

TEST_CASE("intersected examples") {
  const MultiInterval a(4.0, {{0, 1}});
  const MultiInterval b(4.0, {{0.5, 2}});
  const MultiInterval ab = a.intersected(b);
  REQUIRE(ab.part_count() == 1);
  CHECK(ab.parts()[0].lo == doctest::Approx(0.5));
  CHECK(ab.parts()[0].hi == doctest::Approx(1.0));

  const MultiInterval c(4.0, {{1.5, 2.0 - 1e-9}});
  CHECK(a.intersected(c).is_empty());

  const MultiInterval d(4.0, {{-1, 0}, {1, 2.0 - 1e-9}});
  const MultiInterval e(4.0, {{-0.5, 1.5}});
  const MultiInterval de = d.intersected(e);
  REQUIRE(de.part_count() == 2);
  CHECK(de.parts()[0].lo == doctest::Approx(-0.5));
  CHECK(de.parts()[0].hi == doctest::Approx(0.0));
  CHECK(de.parts()[1].lo == doctest::Approx(1.0));
  CHECK(de.parts()[1].hi == doctest::Approx(1.5));

  CHECK_THROWS_AS(a.intersected(MultiInterval(3.0, {{0, 1}})),
                  std::domain_error);
}

TEST_CASE("contains with closed endpoints") {
  const MultiInterval m(4.0, {{0, 1}});
  CHECK(m.contains(0.5));
  CHECK(m.contains(1.0));
  CHECK(m.contains(0.0));
  CHECK_FALSE(m.contains(-0.1));
  CHECK(m.contains(4.5));   // wraps to 0.5
  CHECK(m.contains(-3.5));  // wraps to 0.5
}

TEST_CASE("from_unwrapped covers wrap and saturation") {
  const MultiInterval whole = MultiInterval::from_unwrapped(4.0, 0.0, 4.0);
  CHECK(whole.part_count() == 1);
  CHECK(whole.parts()[0].width() == doctest::Approx(4.0));

  const MultiInterval wrap = MultiInterval::from_unwrapped(4.0, 1.5, 2.5);
  REQUIRE(wrap.part_count() == 2);
  CHECK(wrap.contains(1.9));
  CHECK(wrap.contains(-1.9));
  CHECK_FALSE(wrap.contains(0.0));
}

TEST_CASE("canonical form is idempotent and merges touching parts") {
  const MultiInterval m(4.0, {{0.5, 1.0}, {1.0, 1.5}, {-1.0, -0.5}});
  REQUIRE(m.part_count() == 2);
  CHECK(m.parts()[0].lo == doctest::Approx(-1.0));
  CHECK(m.parts()[1].lo == doctest::Approx(0.5));
  CHECK(m.parts()[1].hi == doctest::Approx(1.5));
  const MultiInterval again(4.0, m.parts());
  CHECK(again.part_count() == m.part_count());
}

TEST_CASE("shifted agrees with the dense-sampling oracle") {
  RandomStream rng(11, RngDomain::kTest, 3);
  const double l = 4.0;
  for (int trial = 0; trial < 200; ++trial) {
    const MultiInterval m = random_multiinterval(l, rng);
    const double slo = rng.uniform(-0.5, 0.5);
    const double shi = slo + rng.uniform(0.0, 0.5);
    const Interval shift(slo, shi);
    const MultiInterval out = m.shifted(shift);
    // Forward containment: every shifted sample lands inside the result.
    for (int s = 0; s < 200; ++s) {
      const Interval& p = m.parts()[rng.next_u64() % m.part_count()];
      const double x = rng.uniform(p.lo, p.hi);
      const double dx = rng.uniform(shift.lo, shift.hi);
      CHECK(out.contains(x + dx, 1e-9));
    }
  }
}

TEST_CASE("intersected agrees with the membership oracle") {
  RandomStream rng(13, RngDomain::kTest, 4);
  const double l = 4.0;
  for (int trial = 0; trial < 200; ++trial) {
    const MultiInterval a = random_multiinterval(l, rng);
    const MultiInterval b = random_multiinterval(l, rng);
    const MultiInterval ab = a.intersected(b);
    for (int s = 0; s < 50; ++s) {
      const double x = rng.uniform(-l / 2.0, l / 2.0);
      const bool direct = a.contains(x, -1e-9) && b.contains(x, -1e-9);
      if (direct) CHECK(ab.contains(x, 1e-9));
      const bool outside = !(a.contains(x, 1e-9) && b.contains(x, 1e-9));
      if (outside) CHECK_FALSE(ab.contains(x, -1e-9));
    }
  }
}

TEST_CASE("self-intersection is the identity") {
  RandomStream rng(17, RngDomain::kTest, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiInterval a = random_multiinterval(4.0, rng);
    CHECK(same_set(a, a.intersected(a), 500));
  }
}
