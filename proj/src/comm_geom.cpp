#include "su2comm/comm_geom.hpp"

#include <cmath>

namespace su2comm {

ExtendedP ExtendedP::nonzero(double v) {
  if (std::abs(v) <= tol().eps_alg || std::abs(v) > 1 + tol().eps_alg)
    throw Error("ExtendedP::nonzero payload out of range");
  return {Kind::NonZero, std::clamp(v, -1.0, 1.0)};
}

std::pair<GroupElement, GroupElement> ThetaCoords::reconstruct() const {
  const std::complex<double> half{std::cos(theta / 2), std::sin(theta / 2)};
  const GroupElement g = GroupElement::from_zw(P * half, R() * a.value());
  const GroupElement h = GroupElement::from_zw(Q * std::conj(half), S() * b.value());
  return {g, h};
}

double level_residual(double theta, const GroupElement& g, const GroupElement& h) {
  const GroupElement c = commutator(g, h);
  const Quaternion target{std::cos(theta), std::sin(theta), 0, 0};
  return dist(c.q, target);
}

ThetaCoords to_coords(double theta, const GroupElement& g, const GroupElement& h) {
  if (level_residual(theta, g, h) > tol().eps_rel)
    throw NotOnLevelSet("pair is not on X_theta");

  const std::complex<double> half{std::cos(theta / 2), std::sin(theta / 2)};
  ThetaCoords c;
  c.theta = theta;
  c.P = std::clamp((g.q.zc() * std::conj(half)).real(), -1.0, 1.0);
  c.Q = std::clamp((h.q.zc() * half).real(), -1.0, 1.0);
  const std::complex<double> wg = g.q.wc(), wh = h.q.wc();
  if (std::abs(wg) >= tol().eps_alg) {
    c.a = TorusElement(std::arg(wg));
  } else {
    c.a = TorusElement(0.0);
    c.a_defined = false;
  }
  if (std::abs(wh) >= tol().eps_alg) {
    c.b = TorusElement(std::arg(wh));
  } else {
    c.b = TorusElement(0.0);
    c.b_defined = false;
  }
  return c;
}

std::complex<double> canonical_residual(const ThetaCoords& c) {
  const std::complex<double> e{std::cos(c.theta), std::sin(c.theta)};
  const std::complex<double> v = c.v();
  const double PQ = c.P * c.Q, RS = c.R() * c.S();
  return (PQ - v * RS) - e * (PQ - std::conj(v) * RS);
}

double k_factor(double phi, double theta) {
  return std::cos(phi) - std::sin(phi) * std::cos(theta / 2) / std::sin(theta / 2);
}

double k_factor_ratio(double phi, double theta) {
  return std::sin(theta / 2 - phi) / std::sin(theta / 2);
}

double q_of(double P, double phi, double theta) {
  if (std::abs(P) <= tol().eps_alg)
    throw AmbiguousAtPZero("Q formula is ambiguous at P = 0; use the square-wave limit");
  if (std::abs(P) >= 1 - tol().eps_alg) return 0.0;
  const double d = std::sin(theta / 2 - phi);
  if (std::abs(d) <= tol().eps_alg) return 0.0;  // removable singularity, limit 0
  const double R2 = 1 - P * P;
  const double num = P * std::sin(theta / 2);
  const double mag = 1.0 / std::sqrt(1 + num * num / (R2 * d * d));
  const double sign = (P > 0 ? 1.0 : -1.0) * (d > 0 ? 1.0 : -1.0);
  return sign * mag;
}

std::array<double, 3> y_sphere_chart(double theta, const GroupElement& g) {
  const std::complex<double> half{std::cos(theta / 2), std::sin(theta / 2)};
  const std::complex<double> ze = g.q.zc() * std::conj(half);
  if (std::abs(ze.imag()) > tol().eps_rel)
    throw NotInYTheta("complex part of g is not +-|z| e^{i theta/2}");
  const double P = ze.real();
  const std::complex<double> w = g.q.wc();
  return {w.real(), w.imag(), P};
}

bool p_zero_fiber_check(const TorusElement& a, const GroupElement& h, double theta) {
  const GroupElement g = GroupElement::from_zw(0.0, a.value());  // a j
  return level_residual(theta, g, h) < tol().eps_rel;
}

}  // namespace su2comm
