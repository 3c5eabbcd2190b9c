#pragma once

// Whole-surface patch families. Every member net is a sign-flipped,
// index-permuted copy of a net of the original surface, so the families cost
// nothing beyond the source nets.

#include <algorithm>
#include <array>
#include <cmath>
#include <string_view>
#include <utility>

#include "ratsurf/error.hpp"
#include "ratsurf/hgeom.hpp"
#include "ratsurf/nets.hpp"

namespace ratsurf {

/// Projective plane cut into the two central triangles of a rectangle and
/// their images under the cube projectivities phi and psi.
///   alpha, theta1, rho1 over frame bca; beta, theta2, rho2 over frame dac.
struct SixPatchFamily {
  TriNet alpha, beta, theta1, theta2, rho1, rho2;

  [[nodiscard]] std::array<std::pair<std::string_view, const TriNet*>, 6> members() const {
    return {{{"alpha", &alpha}, {"beta", &beta}, {"theta1", &theta1}, {"theta2", &theta2}, {"rho1", &rho1},
             {"rho2", &rho2}}};
  }
};

/// Octahedron split: alpha and its three sign flips, all over alpha's frame.
struct FourPatchTriFamily {
  TriNet alpha, theta1, theta2, theta3;

  [[nodiscard]] std::array<std::pair<std::string_view, const TriNet*>, 4> members() const {
    return {{{"alpha", &alpha}, {"theta1", &theta1}, {"theta2", &theta2}, {"theta3", &theta3}}};
  }
};

/// Torus split of RP1 x RP1 into four rectangles.
struct FourPatchRectFamily {
  RectNet alpha, theta1, theta2, theta3;

  [[nodiscard]] std::array<std::pair<std::string_view, const RectNet*>, 4> members() const {
    return {{{"alpha", &alpha}, {"theta1", &theta1}, {"theta2", &theta2}, {"theta3", &theta3}}};
  }
};

namespace detail {

inline double parity_sign(int e) { return (e % 2 == 0) ? 1.0 : -1.0; }

inline bool near(Point2 a, Point2 b, double scale) {
  return std::abs(a.u - b.u) <= 1e-9 * scale && std::abs(a.v - b.v) <= 1e-9 * scale;
}

}  // namespace detail

/// alpha, beta, gamma: nets of one surface over the frames bca, dac and bad
/// of one rectangle.
inline SixPatchFamily six_patch_nets(const TriNet& alpha, const TriNet& beta, const TriNet& gamma) {
  const int m = alpha.degree();
  if (beta.degree() != m || gamma.degree() != m) {
    throw DomainError("six_patch_nets: alpha, beta, gamma must share one degree");
  }
  // alpha over (b, c, a); beta must be over (d, a, c) and gamma over (b, a, d).
  const Point2 b = alpha.frame().r(), c = alpha.frame().s(), a = alpha.frame().t();
  const Point2 d = a + c - b;
  const double scale = std::max({1.0, std::abs(a.u), std::abs(a.v), std::abs(c.u), std::abs(c.v)});
  const Frame2& fb = beta.frame();
  const Frame2& fg = gamma.frame();
  if (!detail::near(fb.r(), d, scale) || !detail::near(fb.s(), a, scale) || !detail::near(fb.t(), c, scale) ||
      !detail::near(fg.r(), b, scale) || !detail::near(fg.s(), a, scale) || !detail::near(fg.t(), d, scale)) {
    throw DomainError("six_patch_nets: beta and gamma frames must be dac and bad of alpha's rectangle");
  }
  using detail::parity_sign;
  return SixPatchFamily{
      alpha,
      beta,
      TriNet::generate(m, alpha.frame(),
                       [&](int i, int j, int k) { return parity_sign(i + j) * beta.at(j, k, i); }),
      TriNet::generate(m, beta.frame(), [&](int i, int j, int k) { return parity_sign(k) * gamma.at(i, j, k); }),
      TriNet::generate(m, alpha.frame(), [&](int i, int j, int k) { return parity_sign(j) * gamma.at(j, k, i); }),
      TriNet::generate(m, beta.frame(),
                       [&](int i, int j, int k) { return parity_sign(i + k) * alpha.at(k, i, j); }),
  };
}

/// Builds beta and gamma from any net of the surface by reparameterization.
inline SixPatchFamily six_patch_nets(const TriNet& net, const RectFrames& rect) {
  return six_patch_nets(tri_reparam(net, rect.bca), tri_reparam(net, rect.dac), tri_reparam(net, rect.bad));
}

inline FourPatchTriFamily four_patch_tri_nets(const TriNet& alpha) {
  const int m = alpha.degree();
  const Frame2& f = alpha.frame();
  using detail::parity_sign;
  return FourPatchTriFamily{
      alpha,
      TriNet::generate(m, f, [&](int i, int j, int k) { return parity_sign(i) * alpha.at(i, j, k); }),
      TriNet::generate(m, f, [&](int i, int j, int k) { return parity_sign(j) * alpha.at(i, j, k); }),
      TriNet::generate(m, f, [&](int i, int j, int k) { return parity_sign(k) * alpha.at(i, j, k); }),
  };
}

inline FourPatchRectFamily four_patch_rect_nets(const RectNet& alpha) {
  const int p = alpha.p(), q = alpha.q();
  using detail::parity_sign;
  auto flipped = [&](auto sign) {
    return RectNet::generate(p, q, alpha.frame_u(), alpha.frame_v(),
                             [&](int i, int j) { return sign(i, j) * alpha.at(i, j); });
  };
  return FourPatchRectFamily{
      alpha,
      flipped([&](int i, int) { return parity_sign(p - i); }),
      flipped([&](int, int j) { return parity_sign(q - j); }),
      flipped([&](int i, int j) { return parity_sign(p + q - i - j); }),
  };
}

/// Moebius map t -> (a t + b) / (c t + d).
struct Mobius {
  double a, b, c, d;

  [[nodiscard]] double operator()(double x) const {
    if (std::isinf(x)) return a / c;
    return (a * x + b) / (c * x + d);
  }
  /// Acts on homogeneous line coordinates (x, w).
  [[nodiscard]] Vec2 operator()(const Vec2& h) const { return {a * h[0] + b * h[1], c * h[0] + d * h[1]}; }
};

/// Involution of RP1 fixing r and s and exchanging [r, s] with its complement.
inline Mobius interval_projectivity(double r, double s) {
  if (!(r != s)) throw DomainError("interval_projectivity: r == s");
  return {s + r, -2.0 * r * s, 2.0, -(s + r)};
}

}  // namespace ratsurf
