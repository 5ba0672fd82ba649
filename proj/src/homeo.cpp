#include "su2comm/homeo.hpp"

#include <cmath>

namespace su2comm {

namespace {
// Below this the representative is treated as lying on the zw = 0 seam.
constexpr double kSeam = 1e-9;

std::complex<double> unit(double angle) { return {std::cos(angle), std::sin(angle)}; }
}  // namespace

PolarRP3 PolarRP3::of(const ProjectivePoint& p) {
  const std::complex<double> z = p.rep.q.zc(), w = p.rep.q.wc();
  PolarRP3 r;
  r.Z = std::abs(z);
  r.W = std::abs(w);
  if (r.Z >= tol().eps_alg) r.zeta = std::arg(z); else r.zeta_defined = false;
  if (r.W >= tol().eps_alg) r.omega = std::arg(w); else r.omega_defined = false;
  return r;
}

std::pair<GroupElement, GroupElement> phi_inv(double theta, const ProjectivePoint& p) {
  const std::complex<double> z = p.rep.q.zc(), w = p.rep.q.wc();
  const double Z = std::abs(z), W = std::abs(w);
  const std::complex<double> half = unit(theta / 2);

  if (W < kSeam) {  // w = 0: (e^{i theta/2}, e^{i(2 zeta + pi)} j)
    const double beta = 2 * std::arg(z) + M_PI;
    return {GroupElement::from_zw(half, 0.0), GroupElement::from_zw(0.0, unit(beta))};
  }
  if (Z < kSeam) {  // z = 0: (-e^{i theta/2}, e^{i(2 omega + pi)} j)
    const double beta = 2 * std::arg(w) + M_PI;
    return {GroupElement::from_zw(-half, 0.0), GroupElement::from_zw(0.0, unit(beta))};
  }

  const double P_raw = Z * Z - W * W;
  const bool p_zero = std::abs(P_raw) <= tol().eps_alg;
  const double P = p_zero ? 0.0 : P_raw;
  const std::complex<double> ra = -2.0 * half * z * w;  // = R a
  const double a_angle = std::arg(ra);
  const double s = normalize_angle(std::arg(z / w));

  const WaveId wv{theta, p_zero ? ExtendedP::zero_plus() : ExtendedP::nonzero(P)};
  const CylinderPoint c = eval_arc(arc_table(wv), s);

  ThetaCoords tc;
  tc.theta = theta;
  tc.P = P;
  tc.Q = c.q;
  tc.a = TorusElement(a_angle);
  tc.b = TorusElement(a_angle - c.phi);
  return tc.reconstruct();
}

ProjectivePoint phi_fwd(double theta, const GroupElement& g, const GroupElement& h) {
  const ThetaCoords tc = to_coords(theta, g, h);
  const double P = tc.P;
  const double Z = std::sqrt(std::max(0.0, (1 + P) / 2));
  const double W = std::sqrt(std::max(0.0, (1 - P) / 2));

  if (tc.R() < kSeam) {  // zw = 0 seam; b carries the surviving angle
    const double half_angle = (tc.b.angle - M_PI) / 2;
    if (P > 0) return projectivize(GroupElement::from_zw(unit(half_angle), 0.0));
    return projectivize(GroupElement::from_zw(0.0, unit(half_angle)));
  }

  const bool p_zero = std::abs(P) <= tol().eps_alg;
  const WaveId wv{theta, p_zero ? ExtendedP::zero_plus() : ExtendedP::nonzero(P)};
  double s;
  if (!tc.b_defined) {
    // |Q| = 1 forces P = 0; these are the square-wave poles.
    s = tc.Q > 0 ? M_PI / 2 : 3 * M_PI / 2;
  } else {
    s = arc_param(arc_table(wv), {tc.phi(), tc.Q});
  }
  const double sigma = tc.a.angle - theta / 2 - M_PI;  // = zeta + omega
  const double zeta = (sigma + s) / 2, omega = (sigma - s) / 2;
  return projectivize(GroupElement::from_zw(Z * unit(zeta), W * unit(omega)));
}

double t_equivariance_defect(double theta, const TorusElement& t, const ProjectivePoint& p) {
  const auto lhs = phi_inv(theta, torus_translate(t, p));
  const auto base = phi_inv(theta, p);
  const GroupElement u = t.element();
  const auto c1 = conjugate(u, base.first);
  const auto c2 = conjugate(u, base.second);
  return std::max(dist(lhs.first.q, c1.q), dist(lhs.second.q, c2.q));
}

std::pair<GroupElement, GroupElement> phi_pi_orbit(
    const std::pair<GroupElement, GroupElement>& base, const GroupElement& g) {
  if (level_residual(M_PI, base.first, base.second) > tol().eps_rel)
    throw NotOnLevelSet("basepoint is not in X_pi");
  return {conjugate(g, base.first), conjugate(g, base.second)};
}

}  // namespace su2comm
