#pragma once

// Base points showing up as a corner of zeros in a triangular net, and their
// resolution by blowing the corner up into a boundary curve.
//
// With the zero corner at t, the blow-up reparameterizes the net by
//   (alpha, beta) -> barycentric (alpha (1 - beta), alpha beta, 1 - alpha),
// so t becomes the edge alpha = 0. The bidegree (m, m) net of the composite
// is divisible by alpha^n when the corner has depth n; dividing it out gives
// a bidegree (m - n, m) net without the base point.

#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ratsurf/error.hpp"
#include "ratsurf/hgeom.hpp"
#include "ratsurf/nets.hpp"
#include "ratsurf/polyform.hpp"

namespace ratsurf {

enum class Corner { r, s, t };

inline const char* to_string(Corner c) {
  switch (c) {
    case Corner::r: return "r";
    case Corner::s: return "s";
    case Corner::t: return "t";
  }
  return "?";
}

struct CornerReport {
  Corner corner = Corner::t;
  int depth = 0;   // number of leading zero diagonals at the corner
  int degree = 0;  // net degree m
};

namespace detail {

// Depth of the zero corner at t: largest n with entry (i,j,k) zero for i+j < n.
template <class Entry>
int zero_depth(int m, Entry&& entry, double tol) {
  int n = 0;
  for (; n <= m; ++n) {
    for (int i = 0; i <= n; ++i) {
      if (!entry(i, n - i, m - n).is_zero(tol)) return n;
    }
  }
  return n;
}

}  // namespace detail

inline CornerReport corner_zero_depth(const TriNet& net, double tol = 1e-12) {
  const int m = net.degree();
  bool all_zero = true;
  for (const auto& p : net.points()) all_zero = all_zero && p.is_zero(tol);
  if (all_zero) throw DomainError("corner_zero_depth: net is identically zero");

  const int dt = detail::zero_depth(m, [&](int i, int j, int k) { return net.at(i, j, k); }, tol);
  const int dr = detail::zero_depth(m, [&](int i, int j, int k) { return net.at(k, i, j); }, tol);
  const int ds = detail::zero_depth(m, [&](int i, int j, int k) { return net.at(j, k, i); }, tol);
  CornerReport rep{Corner::t, dt, m};
  if (dr > rep.depth) rep = {Corner::r, dr, m};
  if (ds > rep.depth) rep = {Corner::s, ds, m};
  return rep;
}

/// Relabels the frame so the given corner becomes t. The surface is unchanged.
inline TriNet rotate_corner_to_t(const TriNet& net, Corner corner) {
  const Frame2& f = net.frame();
  switch (corner) {
    case Corner::t: return net;
    case Corner::r:
      return TriNet::generate(net.degree(), Frame2(f.s(), f.t(), f.r()),
                              [&](int i, int j, int k) { return net.at(k, i, j); });
    case Corner::s:
      return TriNet::generate(net.degree(), Frame2(f.t(), f.r(), f.s()),
                              [&](int i, int j, int k) { return net.at(j, k, i); });
  }
  throw DomainError("rotate_corner_to_t: bad corner");
}

/// Blows up a net whose t corner has `depth` zero diagonals into the
/// bidegree (m - depth, m) net over (0,1) x (0,1) in (alpha, beta). For all
/// alpha, beta: alpha^depth * rect_eval(result, alpha, beta) equals the input
/// evaluated at barycentric (alpha (1 - beta), alpha beta, 1 - alpha).
inline RectNet blow_up_to_rect(const TriNet& net, int depth) {
  const int m = net.degree();
  if (depth < 0 || depth > m) throw DomainError("blow_up_to_rect: depth outside [0, m]");
  const double tol = 1e-9 * std::max(1.0, net.max_abs());

  // Net of the composite of bidegree (m, m). Entry (a, j) is the polar form
  // at a ones among the alpha slots and j ones among the beta slots, averaged
  // over all pairings; paired slots land on t when alpha = 0, on r for
  // (1, 0) and on s for (1, 1). Pairings are grouped by the number x of
  // (0, 0) pairs, which is hypergeometric.
  auto full_entry = [&](int a, int j) {
    HPoint sum;
    const double total = binomial(m, m - a);
    for (int x = std::max(0, m - a - j); x <= std::min(m - a, m - j); ++x) {
      const double weight = binomial(m - j, x) * binomial(j, m - a - x) / total;
      sum += weight * net.at(m - j - x, a + j - m + x, m - a);
    }
    return sum;
  };

  for (int a = 0; a < depth; ++a) {
    for (int j = 0; j <= m; ++j) {
      if (!full_entry(a, j).is_zero(tol)) {
        throw DomainError("blow_up_to_rect: corner not resolvable at stated depth " + std::to_string(depth));
      }
    }
  }
  // B^m_a(alpha) / alpha^n = C(m,a) / C(m-n,a-n) * B^(m-n)_(a-n)(alpha).
  return RectNet::generate(m - depth, m, Frame1(0.0, 1.0), Frame1(0.0, 1.0), [&](int i, int j) {
    const int a = i + depth;
    return (binomial(m, a) / binomial(m - depth, i)) * full_entry(a, j);
  });
}

/// Bilinear map of the unit square onto the triangle rst:
///   u = (s1 - r1) alpha beta + (r1 - t1) beta + t1
///   v = (s2 - r2) alpha beta + (r2 - t2) beta + t2
/// beta = 0 collapses to t, (0, 1) goes to r and (1, 1) to s.
class SquareToTriangleMap {
 public:
  explicit SquareToTriangleMap(Frame2 frame) : f_(frame) {}

  [[nodiscard]] const Frame2& frame() const { return f_; }

  [[nodiscard]] Point2 operator()(double alpha, double beta) const {
    const Point2 r = f_.r(), s = f_.s(), t = f_.t();
    return {(s.u - r.u) * alpha * beta + (r.u - t.u) * beta + t.u,
            (s.v - r.v) * alpha * beta + (r.v - t.v) * beta + t.v};
  }

  /// Signed distance-like quantity vanishing on the line through t parallel
  /// to s - r, where the map is not invertible.
  [[nodiscard]] double singular_measure(Point2 p) const {
    const Point2 r = f_.r(), s = f_.s(), t = f_.t();
    return (s.v - r.v) * (p.u - t.u) - (s.u - r.u) * (p.v - t.v);
  }

  [[nodiscard]] std::pair<double, double> inverse(Point2 p) const {
    const Point2 r = f_.r(), s = f_.s(), t = f_.t();
    const double dm = singular_measure(p);
    if (dm == 0.0) throw DomainError("SquareToTriangleMap::inverse: point lies on the singular line");
    const double k = (r.u - t.u) * (s.v - r.v) - (r.v - t.v) * (s.u - r.u);
    const double alpha = ((r.u - t.u) * (p.v - t.v) - (r.v - t.v) * (p.u - t.u)) / dm;
    const double beta = dm / k;
    return {alpha, beta};
  }

 private:
  Frame2 f_;
};

inline SquareToTriangleMap square_to_triangle_map(const Frame2& frame) { return SquareToTriangleMap(frame); }

/// Triangular net of degree p + q with the same surface over the (u, v) plane,
/// obtained by symmetrizing the rectangular polar form over all p-subsets.
inline TriNet rect_to_tri(const RectNet& net, const Frame2& target) {
  const int p = net.p(), q = net.q(), m = p + q;
  const Point2 R = target.r(), S = target.s(), T = target.t();
  const double total = binomial(m, p);
  std::vector<double> us, vs;
  return TriNet::generate(m, target, [&](int i, int j, int k) {
    HPoint sum;
    // a, b, c: how many of the R, S, T arguments feed the u slots.
    for (int a = 0; a <= std::min(i, p); ++a) {
      for (int b = 0; b <= std::min(j, p - a); ++b) {
        const int c = p - a - b;
        if (c > k) continue;
        us.assign(static_cast<std::size_t>(a), R.u);
        us.insert(us.end(), static_cast<std::size_t>(b), S.u);
        us.insert(us.end(), static_cast<std::size_t>(c), T.u);
        vs.assign(static_cast<std::size_t>(i - a), R.v);
        vs.insert(vs.end(), static_cast<std::size_t>(j - b), S.v);
        vs.insert(vs.end(), static_cast<std::size_t>(k - c), T.v);
        const double weight = binomial(i, a) * binomial(j, b) * binomial(k, c) / total;
        sum += weight * rect_blossom(net, us, vs);
      }
    }
    return sum;
  });
}

/// The corner-anchored right triangle with legs twice the rectangle's sides;
/// it contains the whole parameter rectangle.
inline Frame2 covering_triangle(const Frame1& fu, const Frame1& fv) {
  const Point2 t{fu.r(), fv.r()};
  return Frame2({fu.r() + 2.0 * (fu.s() - fu.r()), fv.r()}, {fu.r(), fv.r() + 2.0 * (fv.s() - fv.r())}, t);
}

inline TriNet rect_to_tri(const RectNet& net) { return rect_to_tri(net, covering_triangle(net.frame_u(), net.frame_v())); }

/// Bidegree (m, m) net with the same surface: g(u..., v...) is the average of
/// the triangular polar form over all pairings of u and v arguments.
inline RectNet tri_to_rect(const TriNet& net, const Frame1& fu = Frame1(0.0, 1.0),
                           const Frame1& fv = Frame1(0.0, 1.0)) {
  const int m = net.degree();
  const Point2 A{fu.r(), fv.r()}, B{fu.r(), fv.s()}, C{fu.s(), fv.r()}, D{fu.s(), fv.s()};
  std::vector<Point2> args;
  return RectNet::generate(m, m, fu, fv, [&](int i, int j) {
    HPoint sum;
    const double total = binomial(m, m - i);
    for (int x = std::max(0, m - i - j); x <= std::min(m - i, m - j); ++x) {
      const double weight = binomial(m - j, x) * binomial(j, m - i - x) / total;
      args.assign(static_cast<std::size_t>(x), A);
      args.insert(args.end(), static_cast<std::size_t>(m - i - x), B);
      args.insert(args.end(), static_cast<std::size_t>(m - j - x), C);
      args.insert(args.end(), static_cast<std::size_t>(i + j - m + x), D);
      sum += weight * tri_blossom(net, args);
    }
    return sum;
  });
}

struct ResolvedPatch {
  CornerReport report;
  TriNet source;  // input relabeled so the zero corner sits at t
  RectNet rect;   // bidegree (m - n, m) over (0,1) x (0,1) in (alpha, beta)
  TriNet tri;     // degree 2m - n over covering_triangle of the unit square
  SquareToTriangleMap map;

  /// Parameter point of `source` corresponding to (alpha, beta).
  [[nodiscard]] Point2 source_point(double alpha, double beta) const { return map(beta, alpha); }
};

inline ResolvedPatch resolve_corner(const TriNet& net) {
  const CornerReport rep = corner_zero_depth(net);
  if (rep.depth == 0) throw DomainError("resolve_corner: net has no corner of zeros");
  TriNet src = rotate_corner_to_t(net, rep.corner);
  const int m = rep.degree, n = rep.depth;
  if (src.at(n, 0, m - n).is_zero(1e-12) || src.at(0, n, m - n).is_zero(1e-12)) {
    throw DomainError("resolve_corner: boundary curve has a base point (unsupported)");
  }
  RectNet rect = blow_up_to_rect(src, n);
  bool edge_zero = true;
  for (int j = 0; j <= rect.q(); ++j) edge_zero = edge_zero && rect.at(0, j).is_zero(1e-12);
  if (edge_zero) throw DomainError("resolve_corner: blown-up boundary curve vanishes (unsupported)");
  TriNet tri = rect_to_tri(rect);
  SquareToTriangleMap map(src.frame());
  return ResolvedPatch{rep, std::move(src), std::move(rect), std::move(tri), map};
}

}  // namespace ratsurf
