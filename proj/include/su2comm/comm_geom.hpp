#pragma once

#include <array>
#include <complex>
#include <utility>

#include "su2comm/quat.hpp"

namespace su2comm {

// P value extended with the formal signed zeros 0+ and 0- used by the
// square-wave limits.
struct ExtendedP {
  enum class Kind { NonZero, ZeroPlus, ZeroMinus };
  Kind kind = Kind::NonZero;
  double value = 1.0;  // payload for NonZero only

  static ExtendedP nonzero(double v);
  static ExtendedP zero_plus() { return {Kind::ZeroPlus, 0.0}; }
  static ExtendedP zero_minus() { return {Kind::ZeroMinus, 0.0}; }

  bool is_zero() const { return kind != Kind::NonZero; }
  // +1 for positive P and 0+, -1 for negative P and 0-.
  int sign() const {
    if (kind == Kind::ZeroPlus) return 1;
    if (kind == Kind::ZeroMinus) return -1;
    return value > 0 ? 1 : -1;
  }
};

// The (P, R, a, Q, S, b; theta) parametrization of a point
// (P e^{i theta/2} + R a j, Q e^{-i theta/2} + S b j) of X_theta.
struct ThetaCoords {
  double theta = 0;
  double P = 0, Q = 0;
  TorusElement a, b;
  bool a_defined = true, b_defined = true;

  double R() const { return std::sqrt(std::max(0.0, 1 - P * P)); }
  double S() const { return std::sqrt(std::max(0.0, 1 - Q * Q)); }
  std::complex<double> v() const {  // a * conj(b)
    return a.value() * std::conj(b.value());
  }
  double phi() const { return normalize_angle(a.angle - b.angle); }

  std::pair<GroupElement, GroupElement> reconstruct() const;
};

// Decompose a level-set pair into ThetaCoords; throws NotOnLevelSet when
// [g,h] differs from e^{i theta} beyond eps_rel.
ThetaCoords to_coords(double theta, const GroupElement& g, const GroupElement& h);

// (PQ - vRS) - e^{i theta}(PQ - conj(v) RS); zero iff the coords satisfy the
// canonical relation.
std::complex<double> canonical_residual(const ThetaCoords& c);

// K(phi) = cos(phi) - cot(theta/2) sin(phi) ...
double k_factor(double phi, double theta);
// ... which equals sin(theta/2 - phi)/sin(theta/2).
double k_factor_ratio(double phi, double theta);

// The closed form for Q on the wave through (P, phi) at level theta.
// Returns 0 at |P| = 1 and at the removable singularities phi = theta/2 + k pi;
// throws AmbiguousAtPZero at P = 0 (square-wave limits live in module waves).
double q_of(double P, double phi, double theta);

// Y_theta ~= S^2 chart: g = P e^{i theta/2} + R a j |-> (R cos a, R sin a, P).
std::array<double, 3> y_sphere_chart(double theta, const GroupElement& g);

// True iff [a j, h] = e^{i theta} within eps_rel (the P = 0 fiber condition;
// equivalent to S = 0 or a^2 = b^2 e^{i theta}).
bool p_zero_fiber_check(const TorusElement& a, const GroupElement& h, double theta);

// Residual of [g,h] against e^{i theta}, as a quaternion distance.
double level_residual(double theta, const GroupElement& g, const GroupElement& h);

}  // namespace su2comm
