#pragma once

// Shared test helpers: seeded random sources, tolerant comparisons, the
// reference nets, and substitution oracles that never touch the net code.

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "ratsurf/ratsurf.hpp"

namespace rstest {

using namespace ratsurf;

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed = 20240917) : gen(seed) {}
  double uniform(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  HPoint hpoint() { return {uniform(), uniform(), uniform(), uniform(0.5, 2.0)}; }
  Point2 point(double lo = -1.0, double hi = 1.0) { return {uniform(lo, hi), uniform(lo, hi)}; }
  Vec3 vec3() { return {uniform(), uniform(), uniform()}; }
  Vec2 vec2() { return {uniform(), uniform()}; }

  /// Random point strictly inside the frame's triangle.
  Point2 inside(const Frame2& f) {
    double a = uniform(0.0, 1.0), b = uniform(0.0, 1.0);
    if (a + b > 1.0) a = 1.0 - a, b = 1.0 - b;
    return f.point({a, b, 1.0 - a - b});
  }

  TriNet tri_net(int m, const Frame2& f = Frame2()) {
    return TriNet::generate(m, f, [&](int, int, int) { return hpoint(); });
  }
  RectNet rect_net(int p, int q, Frame1 fu = Frame1(), Frame1 fv = Frame1()) {
    return RectNet::generate(p, q, fu, fv, [&](int, int) { return hpoint(); });
  }
  Poly2 poly(int m) {
    Poly2 f(m);
    for (int i = 0; i <= m; ++i)
      for (int j = 0; i + j <= m; ++j) f.add(i, j, uniform());
    return f;
  }
  RationalMap rational_map(int m) {
    Poly2 w = poly(m);
    w.add(0, 0, 3.0);
    return RationalMap(poly(m), poly(m), poly(m), w);
  }
};

inline bool close(const HPoint& a, const HPoint& b, double tol = 1e-9) { return relative_difference(a, b) <= tol; }

inline double rel3(const Point3& a, const Point3& b) {
  const double scale = std::max({1.0, std::abs(a.x), std::abs(a.y), std::abs(a.z)});
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)}) / scale;
}

/// Projective agreement of two homogeneous points: same projection.
inline double projective_gap(const HPoint& a, const HPoint& b) { return rel3(project(a), project(b)); }

/// Direct substitution into the fractions.
inline Point3 fraction_point(const RationalMap& F, double u, double v) {
  const double w = F.coords[3](u, v);
  return {F.coords[0](u, v) / w, F.coords[1](u, v) / w, F.coords[2](u, v) / w};
}

/// Each reference entry {x, y, z, w} is the point (x, y, z) with weight w.
inline std::vector<HPoint> weighted_rows(std::initializer_list<std::array<double, 4>> rows) {
  std::vector<HPoint> out;
  for (const auto& r : rows) out.push_back(HPoint::from_weighted(r[0], r[1], r[2], r[3]));
  return out;
}

// Ellipsoid c = (4, 3, 2), degree 2.
inline std::vector<HPoint> ref_ellipsoid_net() {
  return weighted_rows({{0, 0, -2, 1}, {0, 3, -2, 1}, {0, 3, 0, 2}, {4, 0, -2, 1}, {4, 3, -2, 1}, {4, 0, 0, 2}});
}

inline std::vector<HPoint> ref_stein1() {
  return weighted_rows({{0, 0, 0, 1}, {1, 0, 0, 1}, {1, 0, 0, 2}, {0, 1, 0, 1}, {1, 1, 1, 1}, {0, 1, 0, 2}});
}

// Torus a = 2, b = 1, c = 1, bidegree (2, 2) over (-1, 1) x (-1, 1).
inline std::vector<HPoint> ref_tornet4() {
  return weighted_rows({{0, -3, 0, 4}, {0, 0, 4, 0}, {0, -1, 0, 4}, {12, 0, 0, 0}, {0, 0, 0, 0}, {4, 0, 0, 0},
                  {0, 3, 0, 4}, {0, 0, 4, 0}, {0, 1, 0, 4}});
}

inline std::vector<HPoint> ref_recelnet3() {
  return weighted_rows({{-8. / 3, -2, 2. / 3, 3}, {-8, 0, -2, 1}, {-8. / 3, 2, 2. / 3, 3}, {0, -6, -2, 1}, {0, 0, 6, -1},
                  {0, 6, -2, 1}, {8. / 3, -2, 2. / 3, 3}, {8, 0, -2, 1}, {8. / 3, 2, 2. / 3, 3}});
}

inline std::vector<HPoint> ref_sqstein3() {
  return weighted_rows({{-2. / 3, -2. / 3, 2. / 3, 3}, {0, -2, 0, 1}, {2. / 3, -2. / 3, -2. / 3, 3}, {-2, 0, 0, 1},
                  {0, 0, 0, -1}, {2, 0, 0, 1}, {-2. / 3, 2. / 3, -2. / 3, 3}, {0, 2, 0, 1},
                  {2. / 3, 2. / 3, 2. / 3, 3}});
}

/// Multiset equality of point lists under a relative tolerance.
inline bool same_multiset(std::vector<HPoint> a, std::vector<HPoint> b, double tol = 1e-12) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& p : a) {
    bool hit = false;
    for (std::size_t i = 0; i < b.size() && !hit; ++i) {
      if (!used[i] && close(p, b[i], tol)) used[i] = hit = true;
    }
    if (!hit) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Reparameterizing maps of the patch families, written out independently.
// ---------------------------------------------------------------------------

/// Homogeneous plane point (u, v, t) -> affine evaluation of F, or nothing if
/// the point is at infinity or near a base point.
inline std::optional<Point3> fraction_at_h(const RationalMap& F, const Vec3& h) {
  if (std::abs(h[2]) < 1e-6) return std::nullopt;
  const double u = h[0] / h[2], v = h[1] / h[2];
  if (std::abs(u) > 1e3 || std::abs(v) > 1e3) return std::nullopt;
  if (std::abs(F.coords[3](u, v)) < 1e-8) return std::nullopt;
  return fraction_point(F, u, v);
}

// Cube projectivities of the square (-1,1)^2 in homogeneous coordinates.
inline Vec3 cube_phi(const Vec3& x) { return {x[1], x[2], x[0]}; }
inline Vec3 cube_psi(const Vec3& x) { return {x[2], x[0], x[1]}; }

/// Octahedron reflections: negate one barycentric coordinate w.r.t. f.
inline Vec3 octa_flip(const Frame2& f, Point2 x, int which) {
  auto l = f.barycentric(x);
  l[static_cast<std::size_t>(which)] = -l[static_cast<std::size_t>(which)];
  const Point2 r = f.r(), s = f.s(), t = f.t();
  return {l[0] * r.u + l[1] * s.u + l[2] * t.u, l[0] * r.v + l[1] * s.v + l[2] * t.v, l[0] + l[1] + l[2]};
}

/// t -> ((s + r) t - 2 r s) / (2 t - (s + r)).
inline double interval_flip(double r, double s, double t) { return ((s + r) * t - 2.0 * r * s) / (2.0 * t - (s + r)); }

}  // namespace rstest
