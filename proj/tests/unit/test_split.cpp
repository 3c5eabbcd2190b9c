#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace ratsurf;
using rstest::close;

namespace {

const RectFrames kSquare = rect_frames(-1, 1, -1, 1);

// Compares a family member against F composed with a projective map of the
// plane, over random points of the member's frame. Returns the number of
// accepted samples.
template <class Map>
int check_member(const TriNet& member, const RationalMap& F, Map&& map, rstest::Rng& rng, int wanted = 100) {
  int accepted = 0;
  for (int n = 0; n < 50 * wanted && accepted < wanted; ++n) {
    const Point2 x = rng.inside(member.frame());
    const HPoint h = tri_eval(member, x);
    if (std::abs(h.w) < 1e-8) continue;
    const auto expect = rstest::fraction_at_h(F, map(x));
    if (!expect) continue;
    ++accepted;
    CHECK(rstest::rel3(project(h), *expect) <= 1e-9);
  }
  return accepted;
}

}  // namespace

TEST_CASE("six-patch degree-1 formula", "[split]") {
  rstest::Rng rng;
  const RationalMap F = rng.rational_map(1);
  const SixPatchFamily fam = six_patch_nets(tri_net_from_fractions(F, 1, kSquare.bca), kSquare);
  CHECK(fam.theta1.at(1, 0, 0) == -fam.beta.at(0, 0, 1));
  CHECK(fam.theta1.at(0, 1, 0) == -fam.beta.at(1, 0, 0));
  CHECK(fam.theta1.at(0, 0, 1) == fam.beta.at(0, 1, 0));
}

TEST_CASE("six-patch frames", "[split]") {
  const SixPatchFamily fam = six_patch_nets(tri_net_from_fractions(steiner_map(), 2, Frame2()), kSquare);
  CHECK(fam.alpha.frame() == kSquare.bca);
  CHECK(fam.theta1.frame() == kSquare.bca);
  CHECK(fam.rho1.frame() == kSquare.bca);
  CHECK(fam.beta.frame() == kSquare.dac);
  CHECK(fam.theta2.frame() == kSquare.dac);
  CHECK(fam.rho2.frame() == kSquare.dac);
}

TEST_CASE("six-patch input validation", "[split]") {
  const TriNet a = tri_net_from_fractions(steiner_map(), 2, kSquare.bca);
  const TriNet b = tri_net_from_fractions(steiner_map(), 2, kSquare.dac);
  const TriNet g = tri_net_from_fractions(steiner_map(), 2, kSquare.bad);
  CHECK_NOTHROW(six_patch_nets(a, b, g));
  CHECK_THROWS_AS(six_patch_nets(a, b, tri_net_from_fractions(steiner_map(), 3, kSquare.bad)), DomainError);
  CHECK_THROWS_AS(six_patch_nets(a, g, b), DomainError);
}

TEST_CASE("six-patch semantic oracle", "[split][oracle]") {
  rstest::Rng rng(5);
  for (const RationalMap& F : {sphere_map(), ellipsoid_map(4, 3, 2), steiner_map(), torus_map(2, 1, 1)}) {
    const int m = F.total_degree();
    const SixPatchFamily fam = six_patch_nets(tri_net_from_fractions(F, m, kSquare.bca), kSquare);
    auto id = [](Point2 x) { return embed(x); };
    auto phi = [](Point2 x) { return rstest::cube_phi(embed(x)); };
    auto psi = [](Point2 x) { return rstest::cube_psi(embed(x)); };
    CHECK(check_member(fam.alpha, F, id, rng) == 100);
    CHECK(check_member(fam.beta, F, id, rng) == 100);
    CHECK(check_member(fam.theta1, F, phi, rng) == 100);
    CHECK(check_member(fam.theta2, F, phi, rng) == 100);
    CHECK(check_member(fam.rho1, F, psi, rng) == 100);
    CHECK(check_member(fam.rho2, F, psi, rng) == 100);
  }
}

TEST_CASE("cube projectivities fix a and permute the square's corners", "[split]") {
  // The maps used by the oracle: phi(a)=a, phi(b)=-c, phi(c)=-d; psi(a)=a, psi(b)=d, psi(c)=-b.
  auto neg = [](Vec3 v) { return Vec3{-v[0], -v[1], -v[2]}; };
  CHECK(rstest::cube_phi(embed(kSquare.a)) == embed(kSquare.a));
  CHECK(rstest::cube_phi(embed(kSquare.b)) == neg(embed(kSquare.c)));
  CHECK(rstest::cube_phi(embed(kSquare.c)) == neg(embed(kSquare.d)));
  CHECK(rstest::cube_psi(embed(kSquare.a)) == embed(kSquare.a));
  CHECK(rstest::cube_psi(embed(kSquare.b)) == embed(kSquare.d));
  CHECK(rstest::cube_psi(embed(kSquare.c)) == neg(embed(kSquare.b)));
}

TEST_CASE("four-triangle sign patterns", "[split]") {
  rstest::Rng rng;
  const TriNet a = rng.tri_net(2);
  const FourPatchTriFamily fam = four_patch_tri_nets(a);
  CHECK(fam.theta3.at(0, 0, 2) == a.at(0, 0, 2));
  CHECK(fam.theta3.at(1, 0, 1) == -a.at(1, 0, 1));
  CHECK(fam.theta3.at(0, 2, 0) == a.at(0, 2, 0));
  CHECK(fam.theta1.at(1, 1, 0) == -a.at(1, 1, 0));
  CHECK(fam.theta2.at(1, 1, 0) == -a.at(1, 1, 0));
  for (const auto& [name, member] : fam.members()) {
    CHECK(four_patch_tri_nets(*member).alpha == *member);
    if (name == "alpha") continue;
    CHECK(member->frame() == a.frame());
  }
  CHECK(four_patch_tri_nets(fam.theta1).theta1 == a);
  CHECK(four_patch_tri_nets(fam.theta2).theta2 == a);
  CHECK(four_patch_tri_nets(fam.theta3).theta3 == a);
}

TEST_CASE("four-triangle semantic oracle", "[split][oracle]") {
  rstest::Rng rng(9);
  const Frame2 canonical;
  for (const RationalMap& F : {sphere_map(), steiner_map(), ellipsoid_map(4, 3, 2)}) {
    const FourPatchTriFamily fam = four_patch_tri_nets(tri_net_from_fractions(F, 2, canonical));
    for (int which = 0; which < 3; ++which) {
      const TriNet& member = which == 0 ? fam.theta1 : which == 1 ? fam.theta2 : fam.theta3;
      auto flip = [&](Point2 x) { return rstest::octa_flip(canonical, x, which); };
      CHECK(check_member(member, F, flip, rng) == 100);
    }
  }
}

TEST_CASE("four-rectangle sign patterns", "[split][reference]") {
  const Frame1 sq(-1, 1);
  const RectNet tor(2, 2, sq, sq, rstest::ref_tornet4());
  const FourPatchRectFamily fam = four_patch_rect_nets(tor);
  CHECK(fam.theta1.at(0, 0) == HPoint::from_weighted(0, -3, 0, 4));
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; j <= 2; ++j) {
      const double sign = (i + j) % 2 ? -1.0 : 1.0;
      CHECK(fam.theta3.at(i, j) == sign * tor.at(i, j));
    }
  }
  CHECK(four_patch_rect_nets(fam.theta2).theta2 == tor);
}

TEST_CASE("four-rectangle semantic oracle", "[split][oracle]") {
  rstest::Rng rng(13);
  struct Case {
    RationalMap F;
    double r1, s1, r2, s2;
  };
  for (const Case& c : {Case{torus_map(2, 1, 1), -1, 1, -1, 1}, Case{torus_map(3, 1, 0.5), -0.5, 2, 0, 1.5},
                        Case{ellipsoid_map(4, 3, 2), -1, 1, -1, 1}}) {
    const Frame1 fu(c.r1, c.s1), fv(c.r2, c.s2);
    const FourPatchRectFamily fam = four_patch_rect_nets(rect_net_from_fractions(c.F, 2, 2, fu, fv));
    const std::array<const RectNet*, 3> members{&fam.theta1, &fam.theta2, &fam.theta3};
    for (int which = 0; which < 3; ++which) {
      int accepted = 0;
      for (int n = 0; n < 5000 && accepted < 100; ++n) {
        const double u = rng.uniform(c.r1, c.s1), v = rng.uniform(c.r2, c.s2);
        const HPoint h = rect_eval(*members[which], u, v);
        if (std::abs(h.w) < 1e-8) continue;
        const double fu2 = which == 1 ? u : rstest::interval_flip(c.r1, c.s1, u);
        const double fv2 = which == 0 ? v : rstest::interval_flip(c.r2, c.s2, v);
        if (std::abs(fu2) > 1e3 || std::abs(fv2) > 1e3 || std::abs(c.F.coords[3](fu2, fv2)) < 1e-8) continue;
        ++accepted;
        CHECK(rstest::rel3(project(h), rstest::fraction_point(c.F, fu2, fv2)) <= 1e-9);
      }
      CHECK(accepted == 100);
    }
  }
}

TEST_CASE("interval projectivity", "[split]") {
  const Mobius recip = interval_projectivity(-1, 1);
  rstest::Rng rng;
  for (int n = 0; n < 20; ++n) {
    const double t = rng.uniform(0.1, 5);
    CHECK(std::abs(recip(t) - 1.0 / t) < 1e-15);
  }
  const Mobius phi = interval_projectivity(-0.5, 3);
  CHECK(std::abs(phi(-0.5) + 0.5) < 1e-15);
  CHECK(std::abs(phi(3.0) - 3.0) < 1e-15);
  CHECK(std::abs(phi(INFINITY) - 1.25) < 1e-15);
  for (int n = 0; n < 20; ++n) {
    const double t = rng.uniform(-10, 10);
    CHECK(std::abs(phi(phi(t)) - t) < 1e-9 * std::max(1.0, std::abs(t)));
    CHECK(std::abs(phi(t) - rstest::interval_flip(-0.5, 3, t)) < 1e-12 * std::max(1.0, std::abs(phi(t))));
  }
  CHECK_THROWS_AS(interval_projectivity(2, 2), DomainError);
}
