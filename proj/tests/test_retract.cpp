#include <doctest.h>

#include <cmath>
#include <numbers>

#include "su2comm/retract.hpp"

using namespace su2comm;

namespace {
constexpr double kPi = std::numbers::pi;
const GroupElement kOne = GroupElement::from_zw({1, 0}, {0, 0});
const GroupElement kI = GroupElement::from_zw({0, 1}, {0, 0});
const GroupElement kJ = GroupElement::from_zw({0, 0}, {1, 0});

GroupPair level_pair(HaarSampler& rng, double theta) {
  return phi_inv(theta, projectivize(rng()));
}
}  // namespace

TEST_CASE("level retraction r") {
  HaarSampler rng(101);
  for (int i = 0; i < 200; ++i) {
    const double theta = rng.uniform(0.1, kPi);
    const auto [g, h] = level_pair(rng, theta);

    const auto [g1, h1] = retract_r(g, h, theta, 1.0);
    CHECK(dist(g.q, g1.q) == 0.0);
    CHECK(dist(h.q, h1.q) == 0.0);

    const auto [g0, h0] = retract_r(g, h, theta, 0.0);
    CHECK(dist(commutator(g0, h0).q, kOne.q) < 1e-7);

    const double t = rng.uniform(0.05, 0.95);
    const auto [gt, ht] = retract_r(g, h, theta, t);
    CHECK(level_residual(t * theta, gt, ht) < 1e-7);
  }
  // half-way from the top level
  const auto [g, h] = level_pair(rng, kPi);
  const auto [gm, hm] = retract_r(g, h, kPi, 0.5);
  CHECK(level_residual(kPi / 2, gm, hm) < 1e-7);
}

TEST_CASE("level retraction r-prime") {
  HaarSampler rng(103);
  for (int i = 0; i < 200; ++i) {
    const double theta = rng.uniform(0.1, kPi);
    const auto [g, h] = level_pair(rng, theta);
    const auto [g1, h1] = retract_r_prime(g, h, theta, 1.0);
    CHECK(dist(g.q, g1.q) == 0.0);
    const double t = rng.uniform(0.0, 1.0);
    const auto [gt, ht] = retract_r_prime(g, h, theta, t);
    CHECK(level_residual(t * theta + (1 - t) * kPi, gt, ht) < 1e-7);
  }
  const auto [g, h] = level_pair(rng, kPi / 3);
  const auto [g0, h0] = retract_r_prime(g, h, kPi / 3, 0.0);
  CHECK(dist(commutator(g0, h0).q, -kOne.q) < 1e-7);
}

TEST_CASE("commutator diagonalization") {
  HaarSampler rng(107);
  for (int i = 0; i < 300; ++i) {
    const GroupElement x = rng(), y = rng();
    const GroupElement c = commutator(x, y);
    if (std::abs(c.trace()) > 2 - 1e-6) continue;
    const CommutatorDiag d = diagonalize_commutator(x, y);
    CHECK(d.theta > 0);
    CHECK(d.theta < kPi);
    const GroupElement conj_c = conjugate(d.u, c);
    CHECK(dist(conj_c.q, TorusElement(d.theta).element().q) < 1e-9);
  }
  // axis already +i: u is the identity
  const auto [gg, hh] = phi_inv(1.1, projectivize(rng()));
  const CommutatorDiag d = diagonalize_commutator(gg, hh);
  CHECK(dist(d.u.q, kOne.q) < 1e-9);
  CHECK(d.theta == doctest::Approx(1.1).epsilon(1e-9));
  // commuting pair
  CHECK_THROWS_AS((void)diagonalize_commutator(kI, kI), CentralCommutator);
}

TEST_CASE("equivariant retractions on W-levels") {
  HaarSampler rng(109);
  for (int i = 0; i < 200; ++i) {
    const GroupElement x = rng(), y = rng();
    if (std::abs(commutator(x, y).trace()) > 2 - 1e-3) continue;

    const auto [x1, y1] = retract_rw(x, y, 1.0);
    CHECK(dist(x.q, x1.q) < 1e-9);
    CHECK(dist(y.q, y1.q) < 1e-9);

    const auto [x0, y0] = retract_rw(x, y, 0.0);
    CHECK(dist(commutator(x0, y0).q, kOne.q) < 1e-6);

    const auto [xp, yp] = retract_rw_prime(x, y, 0.0);
    CHECK(dist(commutator(xp, yp).q, -kOne.q) < 1e-6);

    // conjugation-equivariance
    const GroupElement u = rng();
    const double t = rng.uniform(0, 1);
    const auto direct = retract_rw(conjugate(u, x), conjugate(u, y), t);
    const auto moved = retract_rw(x, y, t);
    CHECK(dist(direct.first.q, conjugate(u, moved.first).q) < 1e-6);
    CHECK(dist(direct.second.q, conjugate(u, moved.second).q) < 1e-6);
  }
}

TEST_CASE("deformation rho") {
  HaarSampler rng(113);
  for (int i = 0; i < 50; ++i) {
    const double theta = rng.uniform(0.15, kPi - 0.15);
    const auto [x, y] = level_pair(rng, theta);
    const auto [xp, yp] = level_pair(rng, kPi - theta);
    const APoint ap = make_apoint(x, y, xp, yp);
    REQUIRE(mu_residual(ap) < 1e-9);
    CHECK(ap.theta() == doctest::Approx(theta).epsilon(1e-9));

    CHECK(class_distance(rho(ap, 1.0), ap) < 1e-7);

    const APoint end = rho(ap, 0.0);
    CHECK(dist(commutator(end.reps[0], end.reps[1]).q, kOne.q) < 1e-6);
    CHECK(dist(commutator(end.reps[2], end.reps[3]).q, -kOne.q) < 1e-6);

    for (int k = 0; k <= 50; ++k)
      CHECK(mu_residual(rho(ap, k / 50.0)) < 1e-6);
  }
  // endpoint strata: rho itself refuses, the total wrapper is the identity
  const auto [x, y] = level_pair(rng, kPi);
  const auto [xp, yp] = phi_inv(kPi, projectivize(rng()));
  GroupElement xc = TorusElement(0.4).element(), yc = TorusElement(1.9).element();
  const APoint central = make_apoint(xc, yc, xp, yp);
  CHECK_THROWS_AS((void)rho(central, 0.5), CentralCommutator);
  CHECK(class_distance(rho_extended(central, 0.3), central) < 1e-9);
}

TEST_CASE("centralizer homotopy") {
  HaarSampler rng(127);
  auto [g0, one] = centralizer_homotopy_j1(rng(), 0.0);
  CHECK(dist(one.q, kOne.q) < 1e-12);

  const auto [gi, mi] = centralizer_homotopy_j1(kI, 1.0);
  CHECK(dist(gi.q, kI.q) == 0.0);
  CHECK(dist(mi.q, -kOne.q) < 1e-12);

  for (int i = 0; i < 100; ++i) {
    const GroupElement g = rng();
    if (std::abs(g.trace()) > 2 - 1e-3) continue;
    for (int k = 0; k <= 10; ++k) {
      const auto [a, b] = centralizer_homotopy_j1(g, k / 10.0);
      CHECK(dist(commutator(a, b).q, kOne.q) < 1e-10);
    }
  }
}

TEST_CASE("transition function") {
  HaarSampler rng(131);
  for (int i = 0; i < 200; ++i) {
    const double theta = rng.uniform(0.15, kPi - 0.15);
    const auto [x, y] = level_pair(rng, theta);
    const auto [xp, yp] = level_pair(rng, kPi - theta);
    const APoint ap = make_apoint(x, y, xp, yp);

    const TorusElement t(rng.uniform(0, 2 * kPi));
    const GroupElement u = t.element();
    const APoint moved = make_apoint(conjugate(u, x), conjugate(u, y),
                                     conjugate(u, xp), conjugate(u, yp));
    CHECK(rp3_distance(transition_tau(ap), transition_tau(moved)) < 1e-6);
    CHECK(rp3_distance(transition_tau_homotoped(ap), transition_tau_homotoped(moved)) < 1e-6);
  }
  // homotoped form unwinds to the projective quotient of the two inputs
  const double theta = 1.0;
  const ProjectivePoint p = projectivize(rng()), pp = projectivize(rng());
  const auto [x, y] = phi_inv(theta, p);
  const auto [xp, yp] = phi_inv(kPi - theta, pp);
  const APoint ap = make_apoint(x, y, xp, yp);
  const ProjectivePoint got = transition_tau_homotoped(ap);
  const ProjectivePoint want = projectivize(mul(pp.rep.inverse(), p.rep));
  CHECK(rp3_distance(got, want) < 1e-6);
}

TEST_CASE("class distance") {
  HaarSampler rng(137);
  const double theta = 1.2;
  const auto [x, y] = level_pair(rng, theta);
  const auto [xp, yp] = level_pair(rng, kPi - theta);
  const APoint a = make_apoint(x, y, xp, yp);
  CHECK(class_distance(a, a) < 1e-9);

  const GroupElement u = rng();
  const APoint conj = make_apoint(conjugate(u, x), conjugate(u, y),
                                  conjugate(u, xp), conjugate(u, yp));
  CHECK(class_distance(a, conj) < 1e-4);

  const auto [x2, y2] = level_pair(rng, theta);
  const auto [xp2, yp2] = level_pair(rng, kPi - theta);
  const APoint b = make_apoint(x2, y2, xp2, yp2);
  CHECK(class_distance(a, b) > 1e-2);
}
