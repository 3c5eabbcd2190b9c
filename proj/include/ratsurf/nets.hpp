#pragma once

// Triangular and rectangular control nets in the homogenized ambient space.
//
// Canonical entry order:
//   TriNet  - ascending lexicographic in (i, j), k = m - i - j. Entry (i,j,k)
//             is the blossom at i copies of r, j of s and k of t.
//   RectNet - row major, i (u index) major. Entry (i,j) is the blossom at
//             p-i copies of r1, i of s1, q-j of r2 and j of s2.

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ratsurf/error.hpp"
#include "ratsurf/hgeom.hpp"
#include "ratsurf/polyform.hpp"

namespace ratsurf {

using Bary3 = std::array<double, 3>;
using Bary2 = std::array<double, 2>;

class TriNet {
 public:
  TriNet(int degree, Frame2 frame, std::vector<HPoint> points)
      : m_(degree), frame_(frame), points_(std::move(points)) {
    if (degree < 0) throw DomainError("TriNet: negative degree");
    if (points_.size() != size_for(degree)) {
      throw DomainError("TriNet: degree " + std::to_string(degree) + " needs " + std::to_string(size_for(degree)) +
                        " points, got " + std::to_string(points_.size()));
    }
    for (const auto& p : points_) {
      if (!p.is_finite()) throw DomainError("TriNet: non-finite control point");
    }
  }

  /// Builds the net entry by entry from fn(i, j, k).
  template <class Fn>
  static TriNet generate(int degree, Frame2 frame, Fn&& fn) {
    std::vector<HPoint> pts;
    pts.reserve(size_for(degree));
    for (int i = 0; i <= degree; ++i) {
      for (int j = 0; j <= degree - i; ++j) pts.push_back(fn(i, j, degree - i - j));
    }
    return TriNet(degree, frame, std::move(pts));
  }

  static constexpr std::size_t size_for(int m) { return static_cast<std::size_t>((m + 1) * (m + 2) / 2); }
  static constexpr std::size_t index(int m, int i, int j) {
    return static_cast<std::size_t>(i * (m + 1) - i * (i - 1) / 2 + j);
  }

  [[nodiscard]] int degree() const { return m_; }
  [[nodiscard]] const Frame2& frame() const { return frame_; }
  [[nodiscard]] const std::vector<HPoint>& points() const { return points_; }

  [[nodiscard]] const HPoint& at(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0 || i + j + k != m_) {
      throw DomainError("TriNet::at: index (" + std::to_string(i) + "," + std::to_string(j) + "," +
                        std::to_string(k) + ") is not in the degree-" + std::to_string(m_) + " simplex");
    }
    return points_[index(m_, i, j)];
  }

  [[nodiscard]] double max_abs() const {
    double r = 0.0;
    for (const auto& p : points_) r = std::max(r, p.max_abs());
    return r;
  }

  friend bool operator==(const TriNet&, const TriNet&) = default;

 private:
  int m_;
  Frame2 frame_;
  std::vector<HPoint> points_;
};

class RectNet {
 public:
  RectNet(int p, int q, Frame1 fu, Frame1 fv, std::vector<HPoint> points)
      : p_(p), q_(q), fu_(fu), fv_(fv), points_(std::move(points)) {
    if (p < 0 || q < 0) throw DomainError("RectNet: negative bidegree");
    if (points_.size() != static_cast<std::size_t>((p + 1) * (q + 1))) {
      throw DomainError("RectNet: bidegree (" + std::to_string(p) + "," + std::to_string(q) + ") needs " +
                        std::to_string((p + 1) * (q + 1)) + " points, got " + std::to_string(points_.size()));
    }
    for (const auto& pt : points_) {
      if (!pt.is_finite()) throw DomainError("RectNet: non-finite control point");
    }
  }

  template <class Fn>
  static RectNet generate(int p, int q, Frame1 fu, Frame1 fv, Fn&& fn) {
    std::vector<HPoint> pts;
    pts.reserve(static_cast<std::size_t>((p + 1) * (q + 1)));
    for (int i = 0; i <= p; ++i) {
      for (int j = 0; j <= q; ++j) pts.push_back(fn(i, j));
    }
    return RectNet(p, q, fu, fv, std::move(pts));
  }

  [[nodiscard]] int p() const { return p_; }
  [[nodiscard]] int q() const { return q_; }
  [[nodiscard]] const Frame1& frame_u() const { return fu_; }
  [[nodiscard]] const Frame1& frame_v() const { return fv_; }
  [[nodiscard]] const std::vector<HPoint>& points() const { return points_; }

  [[nodiscard]] const HPoint& at(int i, int j) const {
    if (i < 0 || j < 0 || i > p_ || j > q_) throw DomainError("RectNet::at: index out of range");
    return points_[static_cast<std::size_t>(i * (q_ + 1) + j)];
  }

  [[nodiscard]] double max_abs() const {
    double r = 0.0;
    for (const auto& pt : points_) r = std::max(r, pt.max_abs());
    return r;
  }

  friend bool operator==(const RectNet&, const RectNet&) = default;

 private:
  int p_, q_;
  Frame1 fu_, fv_;
  std::vector<HPoint> points_;
};

// ---------------------------------------------------------------------------
// Construction from fractions
// ---------------------------------------------------------------------------

inline TriNet tri_net_from_fractions(const RationalMap& F, int m, const Frame2& frame) {
  std::array<HPoly3, 4> h;
  for (int c = 0; c < 4; ++c) h[c] = homogenize_total(F.coords[c], m);
  const Vec3 r = embed(frame.r()), s = embed(frame.s()), t = embed(frame.t());
  std::vector<Vec3> args(static_cast<std::size_t>(m));
  return TriNet::generate(m, frame, [&](int i, int j, int k) {
    std::fill_n(args.begin(), i, r);
    std::fill_n(args.begin() + i, j, s);
    std::fill_n(args.begin() + i + j, k, t);
    return HPoint{blossom3(h[0], args), blossom3(h[1], args), blossom3(h[2], args), blossom3(h[3], args)};
  });
}

inline RectNet rect_net_from_fractions(const RationalMap& F, int p, int q, const Frame1& fu, const Frame1& fv) {
  std::array<HPoly22, 4> h;
  for (int c = 0; c < 4; ++c) h[c] = homogenize_bidegree(F.coords[c], p, q);
  std::vector<Vec2> ua(static_cast<std::size_t>(p)), va(static_cast<std::size_t>(q));
  return RectNet::generate(p, q, fu, fv, [&](int i, int j) {
    std::fill_n(ua.begin(), p - i, Vec2{fu.r(), 1.0});
    std::fill_n(ua.begin() + (p - i), i, Vec2{fu.s(), 1.0});
    std::fill_n(va.begin(), q - j, Vec2{fv.r(), 1.0});
    std::fill_n(va.begin() + (q - j), j, Vec2{fv.s(), 1.0});
    return HPoint{blossom22(h[0], ua, va), blossom22(h[1], ua, va), blossom22(h[2], ua, va),
                  blossom22(h[3], ua, va)};
  });
}

// ---------------------------------------------------------------------------
// Blossoms and evaluation (de Casteljau)
// ---------------------------------------------------------------------------

/// Multi-argument de Casteljau: layer l interpolates with the barycentric
/// coordinates of argument l. Arguments may be homogeneous (coordinates need
/// not sum to one).
inline HPoint tri_blossom_bary(const TriNet& net, std::span<const Bary3> args) {
  const int m = net.degree();
  if (static_cast<int>(args.size()) != m) {
    throw DomainError("tri_blossom: expected " + std::to_string(m) + " arguments, got " +
                      std::to_string(args.size()));
  }
  std::vector<HPoint> work = net.points();
  for (int l = 0; l < m; ++l) {
    const int d = m - l;
    const auto [lr, ls, lt] = args[static_cast<std::size_t>(l)];
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d - i; ++j) {
        work[TriNet::index(d - 1, i, j)] = lr * work[TriNet::index(d, i + 1, j)] +
                                           ls * work[TriNet::index(d, i, j + 1)] +
                                           lt * work[TriNet::index(d, i, j)];
      }
    }
  }
  return work[0];
}

inline HPoint tri_blossom(const TriNet& net, std::span<const Point2> args) {
  std::vector<Bary3> bary;
  bary.reserve(args.size());
  for (const auto& a : args) bary.push_back(net.frame().barycentric(a));
  return tri_blossom_bary(net, bary);
}

/// Surface point of the homogeneous parameter (u, v, t).
inline HPoint tri_eval_h(const TriNet& net, const Vec3& h) {
  const std::vector<Bary3> args(static_cast<std::size_t>(net.degree()), net.frame().barycentric(h));
  return tri_blossom_bary(net, args);
}

inline HPoint tri_eval(const TriNet& net, Point2 x) { return tri_eval_h(net, embed(x)); }

namespace detail {

inline void casteljau_line(std::vector<HPoint>& work, std::span<const Bary2> args) {
  const int n = static_cast<int>(args.size());
  for (int l = 0; l < n; ++l) {
    const auto [lr, ls] = args[static_cast<std::size_t>(l)];
    for (int j = 0; j < n - l; ++j) work[j] = lr * work[j] + ls * work[j + 1];
  }
}

}  // namespace detail

inline HPoint rect_blossom_h(const RectNet& net, std::span<const Vec2> uargs, std::span<const Vec2> vargs) {
  const int p = net.p(), q = net.q();
  if (static_cast<int>(uargs.size()) != p || static_cast<int>(vargs.size()) != q) {
    throw DomainError("rect_blossom: expected " + std::to_string(p) + " u-arguments and " + std::to_string(q) +
                      " v-arguments");
  }
  std::vector<Bary2> bu, bv;
  for (const auto& a : uargs) bu.push_back(net.frame_u().barycentric(a));
  for (const auto& a : vargs) bv.push_back(net.frame_v().barycentric(a));
  std::vector<HPoint> column(static_cast<std::size_t>(p + 1));
  std::vector<HPoint> row(static_cast<std::size_t>(q + 1));
  for (int i = 0; i <= p; ++i) {
    for (int j = 0; j <= q; ++j) row[j] = net.at(i, j);
    detail::casteljau_line(row, bv);
    column[i] = row[0];
  }
  detail::casteljau_line(column, bu);
  return column[0];
}

inline HPoint rect_blossom(const RectNet& net, std::span<const double> us, std::span<const double> vs) {
  std::vector<Vec2> hu, hv;
  for (double u : us) hu.push_back({u, 1.0});
  for (double v : vs) hv.push_back({v, 1.0});
  return rect_blossom_h(net, hu, hv);
}

inline HPoint rect_eval_h(const RectNet& net, const Vec2& u, const Vec2& v) {
  const std::vector<Vec2> us(static_cast<std::size_t>(net.p()), u), vs(static_cast<std::size_t>(net.q()), v);
  return rect_blossom_h(net, us, vs);
}

inline HPoint rect_eval(const RectNet& net, double u, double v) { return rect_eval_h(net, {u, 1.0}, {v, 1.0}); }

// ---------------------------------------------------------------------------
// Reparameterization and subdivision
// ---------------------------------------------------------------------------

/// Control net of the same surface over another frame.
inline TriNet tri_reparam(const TriNet& net, const Frame2& target) {
  const int m = net.degree();
  const Bary3 r = net.frame().barycentric(target.r());
  const Bary3 s = net.frame().barycentric(target.s());
  const Bary3 t = net.frame().barycentric(target.t());
  std::vector<Bary3> args(static_cast<std::size_t>(m));
  return TriNet::generate(m, target, [&](int i, int j, int k) {
    std::fill_n(args.begin(), i, r);
    std::fill_n(args.begin() + i, j, s);
    std::fill_n(args.begin() + i + j, k, t);
    return tri_blossom_bary(net, args);
  });
}

inline RectNet rect_reparam(const RectNet& net, const Frame1& fu, const Frame1& fv) {
  const int p = net.p(), q = net.q();
  std::vector<double> ua(static_cast<std::size_t>(p)), va(static_cast<std::size_t>(q));
  return RectNet::generate(p, q, fu, fv, [&](int i, int j) {
    std::fill_n(ua.begin(), p - i, fu.r());
    std::fill_n(ua.begin() + (p - i), i, fu.s());
    std::fill_n(va.begin(), q - j, fv.r());
    std::fill_n(va.begin() + (q - j), j, fv.s());
    return rect_blossom(net, ua, va);
  });
}

/// Midpoint split into the corner triangles at r, s, t and the central
/// (inverted) triangle, in that order.
inline std::array<TriNet, 4> tri_subdivide(const TriNet& net) {
  const Frame2& f = net.frame();
  const Point2 mrs = midpoint(f.r(), f.s()), mrt = midpoint(f.r(), f.t()), mst = midpoint(f.s(), f.t());
  return {tri_reparam(net, Frame2(f.r(), mrs, mrt)), tri_reparam(net, Frame2(mrs, f.s(), mst)),
          tri_reparam(net, Frame2(mrt, mst, f.t())), tri_reparam(net, Frame2(mst, mrt, mrs))};
}

/// Split at the parameter midpoints; children ordered (lo,lo), (hi,lo), (lo,hi), (hi,hi) in (u,v).
inline std::array<RectNet, 4> rect_subdivide(const RectNet& net) {
  const Frame1& fu = net.frame_u();
  const Frame1& fv = net.frame_v();
  const double mu = 0.5 * (fu.r() + fu.s()), mv = 0.5 * (fv.r() + fv.s());
  const Frame1 ulo(fu.r(), mu), uhi(mu, fu.s()), vlo(fv.r(), mv), vhi(mv, fv.s());
  return {rect_reparam(net, ulo, vlo), rect_reparam(net, uhi, vlo), rect_reparam(net, ulo, vhi),
          rect_reparam(net, uhi, vhi)};
}

}  // namespace ratsurf
