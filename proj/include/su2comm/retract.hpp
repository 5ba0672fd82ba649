#pragma once

#include <array>
#include <utility>

#include "su2comm/homeo.hpp"

namespace su2comm {

using GroupPair = std::pair<GroupElement, GroupElement>;

// Deformation retraction r: moves a level-theta pair to level t*theta along the
// arc-length reparametrization of its wave; t = 1 is the identity.
GroupPair retract_r(const GroupElement& g, const GroupElement& h, double theta, double t);

// r': target level t*theta + (1-t)*pi (lands in X_pi at t = 0).
GroupPair retract_r_prime(const GroupElement& g, const GroupElement& h, double theta, double t);

// Canonical diagonalization of a non-central commutator: u [x,y] u^{-1} =
// e^{i theta} with theta in (0, pi); u rotates the commutator axis to +i along
// the geodesic, with a j-conjugation tie-break at the antipode.
struct CommutatorDiag {
  GroupElement u;
  double theta;
};
CommutatorDiag diagonalize_commutator(const GroupElement& x, const GroupElement& y);

// Conjugation-equivariant extensions of r and r' to W-levels.
GroupPair retract_rw(const GroupElement& x, const GroupElement& y, double t);
GroupPair retract_rw_prime(const GroupElement& x, const GroupElement& y, double t);

// A point of the Atiyah space: a representative quadruple with
// [x,y][x',y'] = -1.
struct APoint {
  std::array<GroupElement, 4> reps;

  double theta() const;  // arccos of half the trace of [x,y]
};

APoint make_apoint(const GroupElement& x, const GroupElement& y,
                   const GroupElement& xp, const GroupElement& yp);
double mu_residual(const APoint& ap);

// The deformation rho on A_(0,pi); throws CentralCommutator at the strata
// theta in {0, pi}.
APoint rho(const APoint& ap, double t);
// Total wrapper: identity on the endpoint strata.
APoint rho_extended(const APoint& ap, double t);

// J1((g, I), t) = (g, exp(pi t xi/|xi|)); default axis i at g = +-1.
GroupPair centralizer_homotopy_j1(const GroupElement& g, double t);

// Transition function of the circle bundle, in the definitional form
// (Phi_pi(r'(x',y',0)))^{-1} Phi_pi(r'(x,y,0)) ...
ProjectivePoint transition_tau(const APoint& ap);
// ... and the homotoped form (Phi_{pi-theta}(x',y'))^{-1} Phi_theta(x,y).
ProjectivePoint transition_tau_homotoped(const APoint& ap);

// Conjugation-orbit distance between representative quadruples (0 iff the
// same class, up to the alignment accuracy).
double class_distance(const APoint& a, const APoint& b);

}  // namespace su2comm
