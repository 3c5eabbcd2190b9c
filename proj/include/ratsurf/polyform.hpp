#pragma once

// Bivariate polynomials, their homogenizations (total degree and bidegree)
// and polar forms (blossoms) of the homogeneous results.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ratsurf/error.hpp"
#include "ratsurf/hgeom.hpp"

namespace ratsurf {

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

inline double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Polynomial in (u, v); exponent pair (i, j) -> coefficient of u^i v^j.
class Poly2 {
 public:
  explicit Poly2(int degree_bound = 0) : bound_(degree_bound) {
    if (degree_bound < 0) throw DomainError("Poly2: negative degree bound");
  }
  Poly2(int degree_bound, std::initializer_list<std::tuple<int, int, double>> terms) : Poly2(degree_bound) {
    for (auto [i, j, c] : terms) add(i, j, c);
  }

  /// Adds c u^i v^j; the term must respect the declared total degree bound.
  Poly2& add(int i, int j, double c) {
    if (i < 0 || j < 0 || i + j > bound_) {
      throw DomainError("Poly2: monomial u^" + std::to_string(i) + " v^" + std::to_string(j) +
                        " exceeds total degree bound " + std::to_string(bound_));
    }
    if (c == 0.0) return *this;
    double& slot = coeffs_[{i, j}];
    slot += c;
    if (slot == 0.0) coeffs_.erase({i, j});
    return *this;
  }

  [[nodiscard]] int bound() const { return bound_; }
  [[nodiscard]] const std::map<std::pair<int, int>, double>& terms() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

  [[nodiscard]] double coefficient(int i, int j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? 0.0 : it->second;
  }

  [[nodiscard]] int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : coeffs_) d = std::max(d, e.first + e.second);
    return d;
  }
  [[nodiscard]] int degree_u() const {
    int d = 0;
    for (const auto& [e, c] : coeffs_) d = std::max(d, e.first);
    return d;
  }
  [[nodiscard]] int degree_v() const {
    int d = 0;
    for (const auto& [e, c] : coeffs_) d = std::max(d, e.second);
    return d;
  }

  [[nodiscard]] double operator()(double u, double v) const {
    double sum = 0.0;
    for (const auto& [e, c] : coeffs_) sum += c * std::pow(u, e.first) * std::pow(v, e.second);
    return sum;
  }

  friend bool operator==(const Poly2& a, const Poly2& b) { return a.coeffs_ == b.coeffs_; }

 private:
  int bound_;
  std::map<std::pair<int, int>, double> coeffs_;
};

/// Homogeneous polynomial of degree m in (u, v, t), keyed by (i, j, k), i+j+k = m.
class HPoly3 {
 public:
  explicit HPoly3(int degree = 0) : m_(degree) {}

  HPoly3& add(int i, int j, int k, double c) {
    if (i < 0 || j < 0 || k < 0 || i + j + k != m_) {
      throw DomainError("HPoly3: exponents must sum to the degree");
    }
    if (c != 0.0) coeffs_[{i, j, k}] += c;
    return *this;
  }

  [[nodiscard]] int degree() const { return m_; }
  [[nodiscard]] const std::map<std::array<int, 3>, double>& terms() const { return coeffs_; }

  [[nodiscard]] double coefficient(int i, int j, int k) const {
    auto it = coeffs_.find({i, j, k});
    return it == coeffs_.end() ? 0.0 : it->second;
  }

  [[nodiscard]] double operator()(const Vec3& a) const {
    double sum = 0.0;
    for (const auto& [e, c] : coeffs_) {
      sum += c * std::pow(a[0], e[0]) * std::pow(a[1], e[1]) * std::pow(a[2], e[2]);
    }
    return sum;
  }

 private:
  int m_;
  std::map<std::array<int, 3>, double> coeffs_;
};

/// Polynomial of bidegree (p, q), separately homogeneous in (u, t1) and
/// (v, t2). Key (i, j) stands for u^i t1^(p-i) v^j t2^(q-j).
class HPoly22 {
 public:
  HPoly22(int p = 0, int q = 0) : p_(p), q_(q) {}

  HPoly22& add(int i, int j, double c) {
    if (i < 0 || j < 0 || i > p_ || j > q_) throw DomainError("HPoly22: exponent outside bidegree");
    if (c != 0.0) coeffs_[{i, j}] += c;
    return *this;
  }

  [[nodiscard]] int p() const { return p_; }
  [[nodiscard]] int q() const { return q_; }
  [[nodiscard]] const std::map<std::array<int, 2>, double>& terms() const { return coeffs_; }

  /// Full exponent tuple (i, k1, j, k2) of a stored key.
  [[nodiscard]] std::array<int, 4> exponents(const std::array<int, 2>& key) const {
    return {key[0], p_ - key[0], key[1], q_ - key[1]};
  }

  [[nodiscard]] double coefficient(int i, int j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? 0.0 : it->second;
  }

  [[nodiscard]] double operator()(const Vec2& ut, const Vec2& vt) const {
    double sum = 0.0;
    for (const auto& [e, c] : coeffs_) {
      sum += c * std::pow(ut[0], e[0]) * std::pow(ut[1], p_ - e[0]) * std::pow(vt[0], e[1]) *
             std::pow(vt[1], q_ - e[1]);
    }
    return sum;
  }

 private:
  int p_, q_;
  std::map<std::array<int, 2>, double> coeffs_;
};

/// A rational surface given by numerators x, y, z and denominator w.
struct RationalMap {
  std::array<Poly2, 4> coords;  // x, y, z, w

  RationalMap(Poly2 x, Poly2 y, Poly2 z, Poly2 w) : coords{std::move(x), std::move(y), std::move(z), std::move(w)} {
    if (coords[3].is_zero()) throw DomainError("RationalMap: denominator is identically zero");
  }

  /// Numerators and denominator at (u, v), as a homogeneous point.
  [[nodiscard]] HPoint operator()(double u, double v) const {
    return {coords[0](u, v), coords[1](u, v), coords[2](u, v), coords[3](u, v)};
  }

  [[nodiscard]] int total_degree() const {
    int d = 0;
    for (const auto& c : coords) d = std::max(d, c.total_degree());
    return d;
  }
  [[nodiscard]] int degree_u() const {
    int d = 0;
    for (const auto& c : coords) d = std::max(d, c.degree_u());
    return d;
  }
  [[nodiscard]] int degree_v() const {
    int d = 0;
    for (const auto& c : coords) d = std::max(d, c.degree_v());
    return d;
  }
};

inline HPoly3 homogenize_total(const Poly2& f, int m) {
  if (m < 0 || f.total_degree() > m) {
    throw DomainError("homogenize_total: total degree " + std::to_string(f.total_degree()) + " exceeds " +
                      std::to_string(m));
  }
  HPoly3 h(m);
  for (const auto& [e, c] : f.terms()) h.add(e.first, e.second, m - e.first - e.second, c);
  return h;
}

inline HPoly22 homogenize_bidegree(const Poly2& f, int p, int q) {
  if (p < 0 || q < 0 || f.degree_u() > p || f.degree_v() > q) {
    throw DomainError("homogenize_bidegree: polynomial exceeds bidegree (" + std::to_string(p) + ", " +
                      std::to_string(q) + ")");
  }
  HPoly22 h(p, q);
  for (const auto& [e, c] : f.terms()) h.add(e.first, e.second, c);
  return h;
}

/// Sets t = 1.
inline Poly2 dehomogenize(const HPoly3& h) {
  Poly2 f(h.degree());
  for (const auto& [e, c] : h.terms()) f.add(e[0], e[1], c);
  return f;
}

/// Sets t1 = t2 = 1.
inline Poly2 dehomogenize(const HPoly22& h) {
  Poly2 f(h.p() + h.q());
  for (const auto& [e, c] : h.terms()) f.add(e[0], e[1], c);
  return f;
}

namespace detail {

// Sum over all ways of sending i of the arguments to the first coordinate,
// j to the second and the rest to the third, of the product of the chosen
// coordinates. dp[a][b] after l arguments holds the partial sum with a
// arguments used on slot 0 and b on slot 1.
inline double slot_assignment_sum3(std::span<const Vec3> args, int i, int j) {
  const int m = static_cast<int>(args.size());
  const int k = m - i - j;
  std::vector<double> dp((i + 1) * (j + 1), 0.0), next(dp.size());
  auto at = [j](std::vector<double>& v, int a, int b) -> double& { return v[a * (j + 1) + b]; };
  at(dp, 0, 0) = 1.0;
  for (int l = 0; l < m; ++l) {
    std::fill(next.begin(), next.end(), 0.0);
    for (int a = 0; a <= std::min(i, l); ++a) {
      for (int b = 0; b <= std::min(j, l - a); ++b) {
        const double cur = at(dp, a, b);
        if (cur == 0.0) continue;
        const int c = l - a - b;
        if (a < i) at(next, a + 1, b) += cur * args[l][0];
        if (b < j) at(next, a, b + 1) += cur * args[l][1];
        if (c < k) at(next, a, b) += cur * args[l][2];
      }
    }
    std::swap(dp, next);
  }
  return at(dp, i, j);
}

inline double slot_assignment_sum2(std::span<const Vec2> args, int i) {
  const int n = static_cast<int>(args.size());
  std::vector<double> dp(i + 1, 0.0), next(i + 1);
  dp[0] = 1.0;
  for (int l = 0; l < n; ++l) {
    std::fill(next.begin(), next.end(), 0.0);
    for (int a = 0; a <= std::min(i, l); ++a) {
      if (dp[a] == 0.0) continue;
      if (a < i) next[a + 1] += dp[a] * args[l][0];
      if (l - a < n - i) next[a] += dp[a] * args[l][1];
    }
    std::swap(dp, next);
  }
  return dp[i];
}

}  // namespace detail

/// Symmetric multilinear polar form of a degree-m homogeneous polynomial.
/// Each monomial u^i v^j t^k contributes the average, over the m!/(i!j!k!)
/// distinct slot assignments, of the product of the assigned coordinates.
inline double blossom3(const HPoly3& f, std::span<const Vec3> args) {
  const int m = f.degree();
  if (static_cast<int>(args.size()) != m) {
    throw DomainError("blossom3: expected " + std::to_string(m) + " arguments, got " + std::to_string(args.size()));
  }
  double sum = 0.0;
  for (const auto& [e, c] : f.terms()) {
    const double count = factorial(m) / (factorial(e[0]) * factorial(e[1]) * factorial(e[2]));
    sum += c * detail::slot_assignment_sum3(args, e[0], e[1]) / count;
  }
  return sum;
}

/// (p, q)-symmetric multilinear polar form of a bidegree (p, q) polynomial.
inline double blossom22(const HPoly22& f, std::span<const Vec2> uargs, std::span<const Vec2> vargs) {
  if (static_cast<int>(uargs.size()) != f.p() || static_cast<int>(vargs.size()) != f.q()) {
    throw DomainError("blossom22: expected " + std::to_string(f.p()) + " u-arguments and " + std::to_string(f.q()) +
                      " v-arguments");
  }
  double sum = 0.0;
  for (const auto& [e, c] : f.terms()) {
    const double su = detail::slot_assignment_sum2(uargs, e[0]) / binomial(f.p(), e[0]);
    if (su == 0.0) continue;
    const double sv = detail::slot_assignment_sum2(vargs, e[1]) / binomial(f.q(), e[1]);
    sum += c * su * sv;
  }
  return sum;
}

}  // namespace ratsurf
