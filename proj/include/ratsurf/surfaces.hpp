#pragma once

// The classical example surfaces: their rational parameterizations and the
// implicit equations used to check tessellations.

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratsurf/error.hpp"
#include "ratsurf/hgeom.hpp"
#include "ratsurf/polyform.hpp"

namespace ratsurf {

/// Unit sphere by inverse stereographic projection from the north pole.
inline RationalMap sphere_map() {
  return {Poly2(2, {{1, 0, 2.0}}), Poly2(2, {{0, 1, 2.0}}), Poly2(2, {{2, 0, 1.0}, {0, 2, 1.0}, {0, 0, -1.0}}),
          Poly2(2, {{2, 0, 1.0}, {0, 2, 1.0}, {0, 0, 1.0}})};
}

/// Ellipsoid with semi-axes c1, c2, c3 (the sphere, stretched).
inline RationalMap ellipsoid_map(double c1, double c2, double c3) {
  return {Poly2(2, {{1, 0, 2.0 * c1}}), Poly2(2, {{0, 1, 2.0 * c2}}),
          Poly2(2, {{2, 0, c3}, {0, 2, c3}, {0, 0, -c3}}), Poly2(2, {{2, 0, 1.0}, {0, 2, 1.0}, {0, 0, 1.0}})};
}

/// Steiner's Roman surface x^2y^2 + y^2z^2 + x^2z^2 = 2xyz.
inline RationalMap steiner_map() {
  return {Poly2(2, {{0, 1, 2.0}}), Poly2(2, {{1, 0, 2.0}}), Poly2(2, {{1, 1, 2.0}}),
          Poly2(2, {{2, 0, 1.0}, {0, 2, 1.0}, {0, 0, 1.0}})};
}

/// Elliptic torus x = (a - b sin p) cos q, y = (a - b sin p) sin q, z = c cos p
/// with both angles replaced by their half-angle tangents.
inline RationalMap torus_map(double a, double b, double c) {
  // a(1+v^2) - 2bv, times (1-u^2), 2u, and the z and w factors.
  return {Poly2(4, {{0, 0, a}, {0, 1, -2.0 * b}, {0, 2, a}, {2, 0, -a}, {2, 1, 2.0 * b}, {2, 2, -a}}),
          Poly2(4, {{1, 0, 2.0 * a}, {1, 1, -4.0 * b}, {1, 2, 2.0 * a}}),
          Poly2(4, {{0, 0, c}, {0, 2, -c}, {2, 0, c}, {2, 2, -c}}),
          Poly2(4, {{0, 0, 1.0}, {0, 2, 1.0}, {2, 0, 1.0}, {2, 2, 1.0}})};
}

/// An implicit polynomial equation f(x, y, z) = 0.
struct ImplicitSurface {
  std::string name;
  std::function<double(const Point3&)> eval;
};

namespace detail {

inline void expect_params(std::string_view name, std::span<const double> params, std::size_t n) {
  if (params.size() != n) {
    throw DomainError(std::string(name) + " takes " + std::to_string(n) + " parameter(s), got " +
                      std::to_string(params.size()));
  }
}

}  // namespace detail

/// Known names: sphere, ellipsoid (c1 c2 c3), steiner, torus (a b c).
inline ImplicitSurface implicit_surface(std::string_view name, std::span<const double> params = {}) {
  if (name == "sphere") {
    detail::expect_params(name, params, 0);
    return {"sphere", [](const Point3& p) { return p.x * p.x + p.y * p.y + p.z * p.z - 1.0; }};
  }
  if (name == "ellipsoid") {
    detail::expect_params(name, params, 3);
    const double c1 = params[0], c2 = params[1], c3 = params[2];
    return {"ellipsoid", [=](const Point3& p) {
              return (p.x / c1) * (p.x / c1) + (p.y / c2) * (p.y / c2) + (p.z / c3) * (p.z / c3) - 1.0;
            }};
  }
  if (name == "steiner") {
    detail::expect_params(name, params, 0);
    return {"steiner", [](const Point3& p) {
              const double x2 = p.x * p.x, y2 = p.y * p.y, z2 = p.z * p.z;
              return x2 * y2 + y2 * z2 + x2 * z2 - 2.0 * p.x * p.y * p.z;
            }};
  }
  if (name == "torus") {
    detail::expect_params(name, params, 3);
    const double a = params[0], b = params[1], c = params[2];
    if (c == 0.0) throw DomainError("torus: c must be nonzero");
    return {"torus", [=](const Point3& p) {
              const double rho2 = p.x * p.x + p.y * p.y;
              const double lhs = rho2 + a * a - b * b + (b / c) * (b / c) * p.z * p.z;
              return lhs * lhs - 4.0 * a * a * rho2;
            }};
  }
  throw DomainError("unknown surface '" + std::string(name) + "' (expected sphere, ellipsoid, steiner or torus)");
}

/// Rational map for the same names as implicit_surface.
inline RationalMap surface_map(std::string_view name, std::span<const double> params = {}) {
  if (name == "sphere") {
    detail::expect_params(name, params, 0);
    return sphere_map();
  }
  if (name == "ellipsoid") {
    detail::expect_params(name, params, 3);
    return ellipsoid_map(params[0], params[1], params[2]);
  }
  if (name == "steiner") {
    detail::expect_params(name, params, 0);
    return steiner_map();
  }
  if (name == "torus") {
    detail::expect_params(name, params, 3);
    return torus_map(params[0], params[1], params[2]);
  }
  throw DomainError("unknown surface '" + std::string(name) + "' (expected sphere, ellipsoid, steiner or torus)");
}

}  // namespace ratsurf
