#include "su2comm/retract.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace su2comm {

namespace {

// Move a level-set point between levels, preserving (P, a) and the normalized
// arc-length position on its wave.
GroupPair level_move(const GroupElement& g, const GroupElement& h,
                     double theta_from, double theta_to) {
  const ThetaCoords tc = to_coords(theta_from, g, h);
  if (std::abs(theta_from - theta_to) < 1e-15) return {g, h};

  const double P = tc.P;
  if (std::abs(P) >= 1 - tol().eps_alg) {
    // R = 0: the wave is the flat equator at every level; only the phases move.
    ThetaCoords out = tc;
    out.theta = theta_to;
    out.P = P > 0 ? 1.0 : -1.0;
    out.Q = 0;
    out.b = TorusElement(tc.b.angle + (theta_from - theta_to) / 2);
    return out.reconstruct();
  }

  const bool p_zero = std::abs(P) <= tol().eps_alg;
  const ExtendedP ep = p_zero ? ExtendedP::zero_plus() : ExtendedP::nonzero(P);
  const WaveId from{theta_from, ep}, to{theta_to, ep};
  double s;
  if (!tc.b_defined) {
    s = tc.Q > 0 ? M_PI / 2 : 3 * M_PI / 2;  // square-wave poles
  } else {
    s = arc_param(arc_table(from), {tc.phi(), tc.Q});
  }
  const CylinderPoint c = eval_arc(arc_table(to), s);

  ThetaCoords out;
  out.theta = theta_to;
  out.P = p_zero ? 0.0 : P;
  out.Q = c.q;
  out.a = tc.a;
  out.a_defined = tc.a_defined;
  out.b = TorusElement(tc.a.angle - c.phi);
  return out.reconstruct();
}

void check_t(double t) {
  if (t < -1e-12 || t > 1 + 1e-12) throw Error("homotopy parameter outside [0,1]");
}

}  // namespace

GroupPair retract_r(const GroupElement& g, const GroupElement& h, double theta, double t) {
  check_t(t);
  if (t == 1.0) {
    if (level_residual(theta, g, h) > tol().eps_rel) throw NotOnLevelSet("pair not on X_theta");
    return {g, h};
  }
  return level_move(g, h, theta, t * theta);
}

GroupPair retract_r_prime(const GroupElement& g, const GroupElement& h, double theta, double t) {
  check_t(t);
  const double target = t * theta + (1 - t) * M_PI;
  if (t == 1.0 || std::abs(target - theta) < 1e-15) {
    if (level_residual(theta, g, h) > tol().eps_rel) throw NotOnLevelSet("pair not on X_theta");
    return {g, h};
  }
  return level_move(g, h, theta, target);
}

CommutatorDiag diagonalize_commutator(const GroupElement& x, const GroupElement& y) {
  const GroupElement k = commutator(x, y);
  const double c = std::clamp(k.q.re, -1.0, 1.0);
  if (std::abs(c) >= 1 - tol().eps_alg)
    throw CentralCommutator("commutator is central");
  LieVector n{k.q.x, k.q.y, k.q.z};
  const double nn = n.norm();
  const double theta = std::atan2(nn, c);  // in (0, pi)
  n = n * (1 / nn);

  GroupElement u;  // identity when the axis is already +i
  const double dot = n.x;
  if (dot <= -1 + 1e-12) {
    u = GroupElement(Quaternion{0, 0, 1, 0});  // conjugation by j flips -i to +i
  } else if (dot < 1 - 1e-15) {
    LieVector m{0, n.z, -n.y};  // n x i = (0, z, -y)
    m = m * (1 / m.norm());
    const double psi = std::acos(std::clamp(dot, -1.0, 1.0));
    u = exp(m * (psi / 2));
  }
  return {u, theta};
}

namespace {
GroupPair rw_impl(const GroupElement& x, const GroupElement& y, double t, bool prime) {
  const CommutatorDiag d = diagonalize_commutator(x, y);
  const GroupElement x0 = conjugate(d.u, x), y0 = conjugate(d.u, y);
  const GroupPair r = prime ? retract_r_prime(x0, y0, d.theta, t)
                            : retract_r(x0, y0, d.theta, t);
  const GroupElement ui = d.u.inverse();
  return {conjugate(ui, r.first), conjugate(ui, r.second)};
}
}  // namespace

GroupPair retract_rw(const GroupElement& x, const GroupElement& y, double t) {
  return rw_impl(x, y, t, false);
}

GroupPair retract_rw_prime(const GroupElement& x, const GroupElement& y, double t) {
  return rw_impl(x, y, t, true);
}

double APoint::theta() const {
  const GroupElement k = commutator(reps[0], reps[1]);
  return std::acos(std::clamp(k.q.re, -1.0, 1.0));
}

double mu_residual(const APoint& ap) {
  const GroupElement m =
      mul(commutator(ap.reps[0], ap.reps[1]), commutator(ap.reps[2], ap.reps[3]));
  return dist(m.q, Quaternion{-1, 0, 0, 0});
}

APoint make_apoint(const GroupElement& x, const GroupElement& y,
                   const GroupElement& xp, const GroupElement& yp) {
  APoint ap{{x, y, xp, yp}};
  if (mu_residual(ap) > tol().eps_rel)
    throw NotOnLevelSet("quadruple does not satisfy mu = -1");
  return ap;
}

namespace {
// Normalized representative: quadruple conjugated so [x,y] = e^{i theta}.
struct Normalized {
  std::array<GroupElement, 4> q;
  GroupElement u;
  double theta;
};

Normalized normalize(const APoint& ap) {
  const CommutatorDiag d = diagonalize_commutator(ap.reps[0], ap.reps[1]);
  Normalized n;
  n.u = d.u;
  n.theta = d.theta;
  for (int i = 0; i < 4; ++i) n.q[i] = conjugate(d.u, ap.reps[i]);
  return n;
}
}  // namespace

APoint rho(const APoint& ap, double t) {
  check_t(t);
  const Normalized n = normalize(ap);
  const GroupPair r1 = retract_r(n.q[0], n.q[1], n.theta, t);
  const GroupPair r2 = retract_r_prime(n.q[2], n.q[3], M_PI - n.theta, t);
  const GroupElement ui = n.u.inverse();
  return APoint{{conjugate(ui, r1.first), conjugate(ui, r1.second),
                 conjugate(ui, r2.first), conjugate(ui, r2.second)}};
}

APoint rho_extended(const APoint& ap, double t) {
  const double c = commutator(ap.reps[0], ap.reps[1]).q.re;
  if (std::abs(c) >= 1 - tol().eps_alg) return ap;  // identity on the endpoint strata
  return rho(ap, t);
}

GroupPair centralizer_homotopy_j1(const GroupElement& g, double t) {
  check_t(t);
  LieVector axis{1, 0, 0};
  if (std::abs(g.q.re) < 1 - tol().eps_alg) {
    const LieVector xi = log(g);
    axis = xi * (1 / xi.norm());
  }
  return {g, exp(axis * (M_PI * t))};
}

ProjectivePoint transition_tau(const APoint& ap) {
  const Normalized n = normalize(ap);
  const GroupPair a = retract_r_prime(n.q[0], n.q[1], n.theta, 0.0);
  const GroupPair b = retract_r_prime(n.q[2], n.q[3], M_PI - n.theta, 0.0);
  const ProjectivePoint pa = phi_fwd(M_PI, a.first, a.second);
  const ProjectivePoint pb = phi_fwd(M_PI, b.first, b.second);
  return projectivize(mul(pb.rep.inverse(), pa.rep));
}

ProjectivePoint transition_tau_homotoped(const APoint& ap) {
  const Normalized n = normalize(ap);
  const ProjectivePoint pa = phi_fwd(n.theta, n.q[0], n.q[1]);
  const ProjectivePoint pb = phi_fwd(M_PI - n.theta, n.q[2], n.q[3]);
  return projectivize(mul(pb.rep.inverse(), pa.rep));
}

namespace {
Eigen::Matrix4d left_mat(const Quaternion& q) {
  Eigen::Matrix4d m;
  // columns: q * e_k for e_k = 1, i, j, k
  m << q.re, -q.x, -q.y, -q.z,
       q.x,  q.re, -q.z,  q.y,
       q.y,  q.z,  q.re, -q.x,
       q.z, -q.y,  q.x,  q.re;
  return m;
}

Eigen::Matrix4d right_mat(const Quaternion& q) {
  Eigen::Matrix4d m;
  // columns: e_k * q
  m << q.re, -q.x, -q.y, -q.z,
       q.x,  q.re,  q.z, -q.y,
       q.y, -q.z,  q.re,  q.x,
       q.z,  q.y, -q.x,  q.re;
  return m;
}
}  // namespace

double class_distance(const APoint& a, const APoint& b) {
  // Best conjugator u with u a_i u^{-1} ~ b_i, i.e. minimizing sum |b_i u - u a_i|^2:
  // smallest eigenvector of sum (R(a_i) - L(b_i))^T (R(a_i) - L(b_i)).
  Eigen::Matrix4d M = Eigen::Matrix4d::Zero();
  for (int i = 0; i < 4; ++i) {
    const Eigen::Matrix4d D = right_mat(a.reps[i].q) - left_mat(b.reps[i].q);
    M += D.transpose() * D;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(M);
  const Eigen::Vector4d v = es.eigenvectors().col(0);
  const GroupElement u(Quaternion{v[0], v[1], v[2], v[3]});
  double worst = 0;
  for (int i = 0; i < 4; ++i)
    worst = std::max(worst, dist(b.reps[i].q, conjugate(u, a.reps[i]).q));
  return worst;
}

}  // namespace su2comm
