#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "su2comm/waves.hpp"

using namespace su2comm;

namespace {
constexpr double kPi = std::numbers::pi;

double hausdorff(const std::vector<SpherePoint>& a, const std::vector<SpherePoint>& b) {
  double h = 0;
  for (const auto& p : a) {
    double best = 1e300;
    for (const auto& q : b) best = std::min(best, sphere_dist(p, q));
    h = std::max(h, best);
  }
  for (const auto& q : b) {
    double best = 1e300;
    for (const auto& p : a) best = std::min(best, sphere_dist(p, q));
    h = std::max(h, best);
  }
  return h;
}

std::vector<SpherePoint> sample_wave(const WaveId& w, int n) {
  const ArcTable& tab = arc_table(w);
  std::vector<SpherePoint> pts;
  for (int i = 0; i < n; ++i) pts.push_back(project_to_sphere(eval_arc(tab, 2 * kPi * i / n)));
  return pts;
}
}  // namespace

TEST_CASE("wave_q delegates and guards") {
  const double r2 = 1 / std::sqrt(2.0);
  CHECK(wave_q({1.2, ExtendedP::nonzero(r2)}, 0.0) == doctest::Approx(r2));
  for (double phi : {0.0, 1.0, 2.0, 5.0})
    CHECK(wave_q({0.7, ExtendedP::nonzero(1.0)}, phi) == 0.0);
  // near-polar P stays close to the axis
  for (double phi : {0.1, 1.3, 3.0, 4.4})
    CHECK(std::abs(wave_q({kPi, ExtendedP::nonzero(0.99)}, phi)) < 0.15);
  CHECK_THROWS_AS((void)wave_q({kPi, ExtendedP::zero_plus()}, 1.0), SquareWaveRequested);
  CHECK_THROWS_AS((void)wave_q({0.0, ExtendedP::nonzero(0.5)}, 1.0), SquareWaveRequested);
}

TEST_CASE("sphere projection") {
  auto north = project_to_sphere({2.7, 1.0});
  CHECK(north[2] == doctest::Approx(1.0));
  CHECK(std::abs(north[0]) + std::abs(north[1]) < 1e-12);
  auto eq = project_to_sphere({0.0, 0.0});
  CHECK(eq[0] == doctest::Approx(1.0));
  auto p = project_to_sphere({kPi / 2, 0.6});
  CHECK(p[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(p[1] == doctest::Approx(0.8));
  CHECK(p[2] == doctest::Approx(0.6));
}

TEST_CASE("equator table for P = 1") {
  const ArcTable& tab = arc_table({0.9, ExtendedP::nonzero(1.0)});
  CHECK(tab.total_length == doctest::Approx(2 * kPi).epsilon(1e-6));
  for (double s : {0.0, 0.5, 2.0, 4.0, 6.0}) {
    const CylinderPoint c = eval_arc(tab, s);
    CHECK(std::abs(c.q) < 1e-9);
    CHECK(circular_distance(c.phi, normalize_angle(0.45 - s)) < 1e-6);
  }
}

TEST_CASE("square wave table") {
  const ArcTable& tab = arc_table({kPi, ExtendedP::zero_plus()});
  CHECK(tab.square);
  CHECK(tab.total_length == doctest::Approx(2 * kPi));
  const CylinderPoint start = eval_arc(tab, 0.0);
  CHECK(circular_distance(start.phi, normalize_angle(kPi / 2)) < 1e-12);
  CHECK(start.q == doctest::Approx(0.0));
  // halfway point is the antipodal zero crossing
  const CylinderPoint mid = eval_arc(tab, kPi);
  CHECK(std::abs(mid.q) < 1e-12);
  CHECK(circular_distance(mid.phi, normalize_angle(3 * kPi / 2)) < 1e-12);
  // quarter points are the poles
  CHECK(eval_arc(tab, kPi / 2).q == doctest::Approx(1.0));
  CHECK(eval_arc(tab, 3 * kPi / 2).q == doctest::Approx(-1.0));
  CHECK_THROWS_AS((void)build_arc_table({0.0, ExtendedP::nonzero(1.0)}), DegenerateWave);
}

TEST_CASE("eval and param invert each other") {
  HaarSampler rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    const double theta = rng.uniform(0.2, kPi);
    const double P = (trial % 2 ? -1 : 1) * rng.uniform(0.1, 0.9);
    const ArcTable& tab = arc_table({theta, ExtendedP::nonzero(P)});
    for (int i = 0; i < 40; ++i) {
      const double s = rng.uniform(0, 2 * kPi);
      const CylinderPoint c = eval_arc(tab, s);
      const double s2 = arc_param(tab, c);
      CHECK(circular_distance(s, s2) < 1e-6);
    }
  }
}

TEST_CASE("waves pass through both zero crossings") {
  HaarSampler rng(53);
  for (int i = 0; i < 1000; ++i) {
    const double theta = rng.uniform(0.1, kPi);
    const double P = (i % 2 ? -1 : 1) * rng.uniform(0.05, 0.95);
    const WaveId w{theta, ExtendedP::nonzero(P)};
    CHECK(std::abs(wave_q(w, theta / 2)) < 1e-12);
    CHECK(std::abs(wave_q(w, theta / 2 + kPi)) < 1e-12);
  }
}

TEST_CASE("antipodal crossing sits at half the arc length") {
  const ArcTable& tab = arc_table({kPi, ExtendedP::nonzero(0.5)});
  const double s = arc_param(tab, {normalize_angle(kPi / 2 + kPi), 0.0});
  CHECK(std::abs(s - kPi) < 1e-4);
}

TEST_CASE("table refinement is converged") {
  const WaveId w{2.0, ExtendedP::nonzero(0.6)};
  const ArcTable t1 = build_arc_table(w, 1024);
  const ArcTable t2 = build_arc_table(w, 2048);
  CHECK(std::abs(t1.total_length - t2.total_length) < 1e-6);
}

TEST_CASE("signed-zero limits share one sphere image") {
  for (double theta : {0.8, kPi / 2, kPi}) {
    const auto plus = sample_wave({theta, ExtendedP::zero_plus()}, 400);
    const auto minus = sample_wave({theta, ExtendedP::zero_minus()}, 400);
    CHECK(hausdorff(plus, minus) < 1e-6);
  }
}

TEST_CASE("orientation by the sign of P") {
  // Arc length sweeps phi downward for P > 0 and upward for P < 0, matching
  // the seam behavior of the level-set parametrization (phi ~ -s near the
  // north pole, phi ~ +s near the south pole).
  for (double P : {0.5, -0.5}) {
    const WaveId w{kPi / 2, ExtendedP::nonzero(P)};
    const ArcTable& tab = arc_table(w);
    double swept = 0;
    CylinderPoint prev = eval_arc(tab, 0);
    for (int i = 1; i <= 400; ++i) {
      const CylinderPoint cur = eval_arc(tab, 2 * kPi * i / 400);
      double dphi = cur.phi - prev.phi;
      while (dphi > kPi) dphi -= 2 * kPi;
      while (dphi < -kPi) dphi += 2 * kPi;
      swept += dphi;
      prev = cur;
    }
    CHECK(std::signbit(swept) != std::signbit(P));
    CHECK(std::abs(swept) == doctest::Approx(2 * kPi).epsilon(1e-3));
  }
}

TEST_CASE("psi reparametrization") {
  const WaveId w1{1.4, ExtendedP::nonzero(0.4)};
  const WaveId w2{2.6, ExtendedP::nonzero(0.4)};
  const WaveId w3{0.6, ExtendedP::nonzero(0.4)};
  // identity
  const CylinderPoint c0 = eval_arc(arc_table(w1), 1.234);
  const CylinderPoint cid = psi_map(w1, w1, c0);
  CHECK(circular_distance(c0.phi, cid.phi) < 1e-6);
  CHECK(std::abs(c0.q - cid.q) < 1e-6);
  // base point goes to base point
  const CylinderPoint base = psi_map(w1, w2, {normalize_angle(w1.theta / 2), 0.0});
  CHECK(circular_distance(base.phi, normalize_angle(w2.theta / 2)) < 1e-9);
  CHECK(std::abs(base.q) < 1e-9);
  // functoriality
  for (double s : {0.3, 1.7, 3.3, 5.1}) {
    const CylinderPoint c = eval_arc(arc_table(w1), s);
    const CylinderPoint direct = psi_map(w1, w3, c);
    const CylinderPoint via = psi_map(w2, w3, psi_map(w1, w2, c));
    CHECK(circular_distance(direct.phi, via.phi) < 1e-5);
    CHECK(std::abs(direct.q - via.q) < 1e-5);
  }
  // off-curve input
  CHECK_THROWS_AS((void)arc_param(arc_table(w1), CylinderPoint{0.1, 0.9}), NotOnWave);
}
