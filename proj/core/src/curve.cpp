#include "curveform/curve.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace curveform {

namespace {

double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
Vec2 sub(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
double norm(const Vec2& a) { return std::hypot(a.x, a.y); }

bool on_segment(const Vec2& p, const Vec2& q, const Vec2& r) {
  return std::min(p.x, r.x) <= q.x && q.x <= std::max(p.x, r.x) &&
         std::min(p.y, r.y) <= q.y && q.y <= std::max(p.y, r.y);
}

int orientation(const Vec2& p, const Vec2& q, const Vec2& r) {
  const double v = cross(sub(q, p), sub(r, p));
  if (v > 0.0) return 1;
  if (v < 0.0) return -1;
  return 0;
}

bool segments_intersect(const Vec2& a1, const Vec2& a2, const Vec2& b1,
                        const Vec2& b2) {
  const int o1 = orientation(a1, a2, b1);
  const int o2 = orientation(a1, a2, b2);
  const int o3 = orientation(b1, b2, a1);
  const int o4 = orientation(b1, b2, a2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a1, b1, a2)) return true;
  if (o2 == 0 && on_segment(a1, b2, a2)) return true;
  if (o3 == 0 && on_segment(b1, a1, b2)) return true;
  if (o4 == 0 && on_segment(b1, a2, b2)) return true;
  return false;
}

struct Pt {
  double s, t;
};

/// Clips a convex polygon against the half-plane cs*s + ct*t <= rhs.
void clip_halfplane(std::vector<Pt>& poly, double cs, double ct, double rhs,
                    double tol) {
  if (poly.empty()) return;
  std::vector<Pt> out;
  out.reserve(poly.size() + 2);
  const auto value = [&](const Pt& p) { return cs * p.s + ct * p.t - rhs; };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Pt& cur = poly[i];
    const Pt& nxt = poly[(i + 1) % poly.size()];
    const double vc = value(cur);
    const double vn = value(nxt);
    if (vc <= tol) out.push_back(cur);
    if ((vc < -tol && vn > tol) || (vc > tol && vn < -tol)) {
      const double f = vc / (vc - vn);
      out.push_back({cur.s + f * (nxt.s - cur.s), cur.t + f * (nxt.t - cur.t)});
    }
  }
  poly = std::move(out);
}

}  // namespace

CurveModel CurveModel::build(std::vector<Vec2> vertices, double cell_size) {
  CurveModel c;
  if (vertices.size() >= 2) {
    const Vec2& first = vertices.front();
    const Vec2& last = vertices.back();
    if (first.x == last.x && first.y == last.y) vertices.pop_back();
  }
  if (vertices.size() < 3)
    throw std::invalid_argument("CurveModel: need at least 3 vertices");
  c.vertices_ = std::move(vertices);

  const std::size_t n = c.vertices_.size();
  c.cumulative_.resize(n + 1);
  c.cumulative_[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double seg = norm(sub(c.vertices_[(i + 1) % n], c.vertices_[i]));
    if (!(seg > 0.0))
      throw std::invalid_argument("CurveModel: zero-length segment");
    c.cumulative_[i + 1] = c.cumulative_[i] + seg;
  }
  c.length_ = c.cumulative_[n];

  c.validate_simple();

  c.cell_size_ = cell_size > 0.0 ? cell_size : c.length_ / 4000.0;
  if (c.cell_size_ > c.length_ / 200.0)
    throw std::invalid_argument("CurveModel: envelope grid too coarse");
  c.build_envelope();
  return c;
}

CurveModel CurveModel::load(const std::string& path, double cell_size) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("CurveModel: cannot open " + path);
  std::vector<Vec2> pts;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double x, y;
    if (ls >> x >> y) pts.push_back({x, y});
  }
  return build(std::move(pts), cell_size);
}

void CurveModel::validate_simple() const {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a1 = vertices_[i];
    const Vec2& a2 = vertices_[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec2& b1 = vertices_[j];
      const Vec2& b2 = vertices_[(j + 1) % n];
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // Shared endpoint is fine; a fold-back along the same line is not.
        const Vec2 da = sub(a2, a1);
        const Vec2 db = sub(b2, b1);
        if (cross(da, db) == 0.0 && dot(da, db) < 0.0)
          throw std::invalid_argument("CurveModel: curve is not simple");
      } else if (segments_intersect(a1, a2, b1, b2)) {
        throw std::invalid_argument("CurveModel: curve is not simple");
      }
    }
  }
}

Vec2 CurveModel::point_at(double s) const {
  const double r = mod_scalar(s, length_);
  const std::size_t n = vertices_.size();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
  std::size_t idx = static_cast<std::size_t>(it - cumulative_.begin());
  idx = idx == 0 ? 0 : idx - 1;
  if (idx >= n) idx = n - 1;
  const Vec2& a = vertices_[idx];
  const Vec2& b = vertices_[(idx + 1) % n];
  const double seg = cumulative_[idx + 1] - cumulative_[idx];
  const double f = (r - cumulative_[idx]) / seg;
  return {a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)};
}

double CurveModel::euclidean_distance(double s1, double s2) const {
  return norm(sub(point_at(s2), point_at(s1)));
}

// Exact envelope: for every separation cell, the distance between the two
// curve points is, per ordered segment pair, a convex quadratic
// f(s,t) = ||C + t*v - s*u||^2 over the polygon
//   {0 <= s <= Lp, 0 <= t <= Lq, b0 <= t - s <= b1},
// so the max is attained at polygon vertices and the min either at the
// unconstrained stationary point or on an edge.
void CurveModel::build_envelope() {
  const double l = length_;
  const double half = l / 2.0;
  const double dx = cell_size_;
  const std::size_t cells = static_cast<std::size_t>(std::ceil(half / dx));
  dmin_.assign(cells, std::numeric_limits<double>::infinity());
  dmax_.assign(cells, 0.0);

  const std::size_t n = vertices_.size();
  const double tol = 1e-12 * l;

  for (std::size_t p = 0; p < n; ++p) {
    const Vec2 p0 = vertices_[p];
    const Vec2 pd = sub(vertices_[(p + 1) % n], p0);
    const double lp = cumulative_[p + 1] - cumulative_[p];
    const Vec2 u{pd.x / lp, pd.y / lp};
    for (std::size_t q = 0; q < n; ++q) {
      const Vec2 q0 = vertices_[q];
      const Vec2 qd = sub(vertices_[(q + 1) % n], q0);
      const double lq = cumulative_[q + 1] - cumulative_[q];
      const Vec2 v{qd.x / lq, qd.y / lq};
      const Vec2 C = sub(q0, p0);
      const double D = cumulative_[q] - cumulative_[p];
      const double c = dot(u, v);
      const double uC = dot(u, C);
      const double vC = dot(v, C);

      const auto feval = [&](double s, double t) {
        const double wx = C.x + t * v.x - s * u.x;
        const double wy = C.y + t * v.y - s * u.y;
        return wx * wx + wy * wy;
      };

      // Separation x relates to the signed gap t - s via delta = D + t - s,
      // equal to x or x - l on the real line.
      for (const double base : {0.0, -l}) {
        // Reachable gap t - s is [-lp, lq], so delta = D + t - s spans
        // [D - lp, D + lq]; only cells meeting it after the base shift count.
        const double xw_lo = (D - lp) - base;
        const double xw_hi = (D + lq) - base;
        if (xw_hi < -tol || xw_lo > half + tol) continue;
        const std::size_t c_first = static_cast<std::size_t>(
            std::max(0.0, std::floor((xw_lo - tol) / dx)));
        const std::size_t c_last = std::min(
            cells - 1,
            static_cast<std::size_t>(std::max(0.0, (xw_hi + tol) / dx)));
        for (std::size_t cell = c_first; cell <= c_last; ++cell) {
          const double x0 = static_cast<double>(cell) * dx;
          const double x1 = std::min(x0 + dx, half);
          const double b0 = x0 + base - D;  // bounds on t - s
          const double b1 = x1 + base - D;

          std::vector<Pt> poly = {{0.0, 0.0}, {lp, 0.0}, {lp, lq}, {0.0, lq}};
          clip_halfplane(poly, -1.0, 1.0, b1, tol);   //  t - s <= b1
          clip_halfplane(poly, 1.0, -1.0, -b0, tol);  //  t - s >= b0
          if (poly.empty()) continue;

          double fmin = std::numeric_limits<double>::infinity();
          double fmax = 0.0;
          for (const auto& vtx : poly) {
            const double fv = feval(vtx.s, vtx.t);
            fmin = std::min(fmin, fv);
            fmax = std::max(fmax, fv);
          }
          // Edge minima of the 1D quadratic restrictions.
          for (std::size_t i = 0; i < poly.size(); ++i) {
            const Pt& A = poly[i];
            const Pt& B = poly[(i + 1) % poly.size()];
            const double ds = B.s - A.s;
            const double dt = B.t - A.t;
            const double w0x = C.x + A.t * v.x - A.s * u.x;
            const double w0y = C.y + A.t * v.y - A.s * u.y;
            const double w1x = dt * v.x - ds * u.x;
            const double w1y = dt * v.y - ds * u.y;
            const double a2 = w1x * w1x + w1y * w1y;
            if (a2 <= 0.0) continue;
            const double tau =
                std::clamp(-(w0x * w1x + w0y * w1y) / a2, 0.0, 1.0);
            fmin = std::min(fmin, feval(A.s + tau * ds, A.t + tau * dt));
          }
          // Interior stationary point when the Hessian is nonsingular.
          const double det = 1.0 - c * c;
          if (det > 1e-12) {
            const double ts = (c * uC - vC) / det;
            const double ss = uC + c * ts;
            if (ss >= -tol && ss <= lp + tol && ts >= -tol && ts <= lq + tol &&
                ts - ss >= b0 - tol && ts - ss <= b1 + tol) {
              fmin = std::min(fmin, feval(ss, ts));
            }
          }
          dmin_[cell] = std::min(dmin_[cell], std::sqrt(std::max(fmin, 0.0)));
          dmax_[cell] = std::max(dmax_[cell], std::sqrt(fmax));
        }
      }
    }
  }
}

double CurveModel::envelope_min(double x) const {
  const double ax = std::abs(x);
  std::size_t cell = static_cast<std::size_t>(ax / cell_size_);
  if (cell >= dmin_.size()) cell = dmin_.size() - 1;
  return dmin_[cell];
}

double CurveModel::envelope_max(double x) const {
  const double ax = std::abs(x);
  std::size_t cell = static_cast<std::size_t>(ax / cell_size_);
  if (cell >= dmax_.size()) cell = dmax_.size() - 1;
  return dmax_[cell];
}

MultiInterval CurveModel::cells_to_multiinterval(
    const std::vector<char>& pass) const {
  const double half = length_ / 2.0;
  std::vector<Interval> parts;
  std::size_t i = 0;
  while (i < pass.size()) {
    if (!pass[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < pass.size() && pass[j + 1]) ++j;
    const double lo = static_cast<double>(i) * cell_size_;
    const double hi = std::min(static_cast<double>(j + 1) * cell_size_, half);
    parts.emplace_back(lo, hi);
    parts.emplace_back(-hi, -lo);
    i = j + 1;
  }
  return MultiInterval(length_, std::move(parts));
}

MultiInterval CurveModel::invert_measured(const DistanceInterval& m) const {
  const double eps = 1e-12 * (length_ + 1.0);
  std::vector<char> pass(dmin_.size(), 0);
  for (std::size_t c = 0; c < pass.size(); ++c) {
    pass[c] = dmin_[c] <= m.hi + eps && dmax_[c] >= m.lo - eps;
  }
  return cells_to_multiinterval(pass);
}

MultiInterval CurveModel::invert_absent(double r_sure) const {
  if (!(r_sure > 0.0))
    throw std::invalid_argument("invert_absent: r_sure must be > 0");
  std::vector<char> pass(dmax_.size(), 0);
  for (std::size_t c = 0; c < pass.size(); ++c) {
    pass[c] = dmax_[c] > r_sure;
  }
  return cells_to_multiinterval(pass);
}

}  // namespace curveform
