#pragma once

#include <utility>

#include "su2comm/waves.hpp"

namespace su2comm {

// Polar data of an RP^3 representative z + w j: z = Z e^{i zeta}, w = W e^{i omega}.
struct PolarRP3 {
  double Z = 0, W = 0;
  double zeta = 0, omega = 0;
  bool zeta_defined = true, omega_defined = true;

  double delta() const { return zeta - omega; }
  static PolarRP3 of(const ProjectivePoint& p);
};

// The explicit inverse homeomorphism RP^3 -> X_theta (total on RP^3).
std::pair<GroupElement, GroupElement> phi_inv(double theta, const ProjectivePoint& p);

// Forward map X_theta -> RP^3; throws NotOnLevelSet.
ProjectivePoint phi_fwd(double theta, const GroupElement& g, const GroupElement& h);

// Distance between phi_inv(theta, t.p) and the componentwise conjugate of
// phi_inv(theta, p) by t (translation upstairs vs conjugation downstairs).
double t_equivariance_defect(double theta, const TorusElement& t, const ProjectivePoint& p);

// Orbit map of the transitive conjugation action on X_pi.
std::pair<GroupElement, GroupElement> phi_pi_orbit(
    const std::pair<GroupElement, GroupElement>& base, const GroupElement& g);

}  // namespace su2comm
