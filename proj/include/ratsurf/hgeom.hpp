#pragma once

// Homogeneous points of the ambient space, affine frames of the parameter
// plane and line, and projection back to affine 3-space.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "ratsurf/error.hpp"

namespace ratsurf {

/// Homogeneous coordinates (u, v, t) of a point of the projective plane.
using Vec3 = std::array<double, 3>;
/// Homogeneous coordinates (x, w) of a point of the projective line.
using Vec2 = std::array<double, 2>;

struct Point2 {
  double u = 0.0;
  double v = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.u + b.u, a.v + b.v}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.u - b.u, a.v - b.v}; }
  friend Point2 operator*(double k, Point2 a) { return {k * a.u, k * a.v}; }
  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 midpoint(Point2 a, Point2 b) { return {0.5 * (a.u + b.u), 0.5 * (a.v + b.v)}; }

/// Embeds a plane point as the weighted point (u, v, 1).
inline Vec3 embed(Point2 p) { return {p.u, p.v, 1.0}; }

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Point3&, const Point3&) = default;
};

inline double distance(const Point3& a, const Point3& b) {
  return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

/// Element of the homogenized ambient space. A nonzero weight w makes it the
/// weighted point (x/w, y/w, z/w); w == 0 makes it a control vector.
struct HPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double w = 0.0;

  /// Builds from the (affine point, weight) listing used by Mathematica-style
  /// net printouts: {x, y, z, w} with w != 0 stands for (w x, w y, w z, w).
  static HPoint from_weighted(double x, double y, double z, double w) {
    if (w == 0.0) return {x, y, z, 0.0};
    return {w * x, w * y, w * z, w};
  }

  HPoint& operator+=(const HPoint& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    w += o.w;
    return *this;
  }
  friend HPoint operator+(HPoint a, const HPoint& b) { return a += b; }
  friend HPoint operator-(const HPoint& a, const HPoint& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z, a.w - b.w};
  }
  friend HPoint operator-(const HPoint& a) { return {-a.x, -a.y, -a.z, -a.w}; }
  friend HPoint operator*(double k, const HPoint& a) { return {k * a.x, k * a.y, k * a.z, k * a.w}; }
  friend bool operator==(const HPoint&, const HPoint&) = default;

  [[nodiscard]] double max_abs() const {
    return std::max({std::abs(x), std::abs(y), std::abs(z), std::abs(w)});
  }
  [[nodiscard]] bool is_zero(double tol = 0.0) const { return max_abs() <= tol; }
  [[nodiscard]] bool is_finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z) && std::isfinite(w);
  }
};

/// Largest componentwise difference, scaled by the larger magnitude (at least 1).
inline double relative_difference(const HPoint& a, const HPoint& b) {
  const double scale = std::max({1.0, a.max_abs(), b.max_abs()});
  return (a - b).max_abs() / scale;
}

/// Affine image of a weighted point. Control vectors and the zero point have
/// no affine image.
inline Point3 project(const HPoint& p) {
  if (p.w == 0.0) {
    throw DomainError("cannot project a point at infinity / control vector (weight 0)");
  }
  return {p.x / p.w, p.y / p.w, p.z / p.w};
}

/// Affine frame (r, s, t) of the parameter plane.
class Frame2 {
 public:
  /// The unit frame r = (1,0), s = (0,1), t = (0,0).
  Frame2() = default;

  Frame2(Point2 r, Point2 s, Point2 t) : r_(r), s_(s), t_(t) {
    const double extent = std::max({std::abs(s.u - r.u), std::abs(s.v - r.v), std::abs(t.u - r.u),
                                    std::abs(t.v - r.v), std::abs(s.u - t.u), std::abs(s.v - t.v)});
    if (!(std::abs(signed_area()) > 1e-14 * extent * extent)) {
      throw DomainError("degenerate frame: r, s, t are affinely dependent");
    }
  }

  [[nodiscard]] Point2 r() const { return r_; }
  [[nodiscard]] Point2 s() const { return s_; }
  [[nodiscard]] Point2 t() const { return t_; }

  /// Twice the signed area of the triangle rst.
  [[nodiscard]] double signed_area() const {
    return (s_.u - r_.u) * (t_.v - r_.v) - (t_.u - r_.u) * (s_.v - r_.v);
  }

  /// Coordinates (lr, ls, lt) with x = lr r + ls s + lt t, lr + ls + lt = 1.
  [[nodiscard]] std::array<double, 3> barycentric(Point2 p) const { return barycentric(embed(p)); }

  /// Same for a homogeneous plane vector; the coordinates then sum to its weight.
  [[nodiscard]] std::array<double, 3> barycentric(const Vec3& h) const {
    // Cramer's rule on [r^ s^ t^] l = h with the frame points embedded at weight 1.
    const double det = signed_area();
    const double qu = h[0] - h[2] * t_.u;
    const double qv = h[1] - h[2] * t_.v;
    const double ar = r_.u - t_.u, br = r_.v - t_.v;
    const double as = s_.u - t_.u, bs = s_.v - t_.v;
    const double lr = (qu * bs - qv * as) / det;
    const double ls = (ar * qv - br * qu) / det;
    return {lr, ls, h[2] - lr - ls};
  }

  [[nodiscard]] Point2 point(const std::array<double, 3>& l) const {
    return {l[0] * r_.u + l[1] * s_.u + l[2] * t_.u, l[0] * r_.v + l[1] * s_.v + l[2] * t_.v};
  }

  friend bool operator==(const Frame2&, const Frame2&) = default;

 private:
  Point2 r_{1.0, 0.0};
  Point2 s_{0.0, 1.0};
  Point2 t_{0.0, 0.0};
};

/// Affine frame (r, s) of the parameter line.
class Frame1 {
 public:
  Frame1() = default;
  Frame1(double r, double s) : r_(r), s_(s) {
    if (!(r != s) || !std::isfinite(r) || !std::isfinite(s)) {
      throw DomainError("degenerate line frame: r == s");
    }
  }

  [[nodiscard]] double r() const { return r_; }
  [[nodiscard]] double s() const { return s_; }

  /// (lr, ls) with x = lr r + ls s and lr + ls = 1.
  [[nodiscard]] std::array<double, 2> barycentric(double x) const { return barycentric(Vec2{x, 1.0}); }
  [[nodiscard]] std::array<double, 2> barycentric(const Vec2& h) const {
    const double ls = (h[0] - r_ * h[1]) / (s_ - r_);
    return {h[1] - ls, ls};
  }

  friend bool operator==(const Frame1&, const Frame1&) = default;

 private:
  double r_ = 0.0;
  double s_ = 1.0;
};

/// The rectangle [r1,s1] x [r2,s2] with corners a, b, c, d and the three
/// triangle frames used by the six-patch split.
struct RectFrames {
  double r1, s1, r2, s2;
  Point2 a, b, c, d;
  Frame2 bca, dac, bad;
};

inline RectFrames rect_frames(double r1, double s1, double r2, double s2) {
  if (!(r1 < s1) || !(r2 < s2)) {
    throw DomainError("rect_frames: need r1 < s1 and r2 < s2");
  }
  const Point2 a{s1, s2}, b{r1, s2}, c{r1, r2}, d{s1, r2};
  return RectFrames{r1, s1, r2, s2, a, b, c, d, Frame2(b, c, a), Frame2(d, a, c), Frame2(b, a, d)};
}

}  // namespace ratsurf
