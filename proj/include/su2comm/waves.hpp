#pragma once

#include <array>
#include <vector>

#include "su2comm/comm_geom.hpp"

namespace su2comm {

struct WaveId {
  double theta = 0;     // in [0, pi]
  ExtendedP p;

  // Square-wave limits: P = 0+- at any level, or theta = 0 with P != 0.
  bool is_square() const { return p.is_zero() || theta < 1e-12; }
};

struct CylinderPoint {
  double phi = 0;  // mod 2pi
  double q = 0;    // in [-1, 1]
};

using SpherePoint = std::array<double, 3>;

// pi(phi, Q) = (sqrt(1-Q^2) e^{i phi}, Q); collapses Q = +-1 to the poles.
SpherePoint project_to_sphere(const CylinderPoint& c);

double sphere_dist(const SpherePoint& a, const SpherePoint& b);

struct ArcKnot {
  double u;        // curve parameter: phi = phi0 + dir*u
  double s;        // normalized arc length in [0, 2pi]
  CylinderPoint c;
  SpherePoint x;
};

// Normalized arc-length data for the sphere image of one wave, traced over a
// full period from pi(theta/2, 0).  Square waves are stored analytically
// (knots sampled for inspection; eval/param use closed forms).
struct ArcTable {
  WaveId wave;
  bool square = false;
  double phi0 = 0;            // theta/2
  int dir = 1;                // dphi/du: -1 for P > 0 and 0+, +1 for P < 0 and 0-
  double total_length = 0;    // true spherical length of one period
  std::vector<ArcKnot> knots; // empty for square waves
};

// Q on the smooth wave (delegates to q_of); throws SquareWaveRequested for
// square-wave ids.
double wave_q(const WaveId& w, double phi);

ArcTable build_arc_table(const WaveId& w, int n_knots = 1024);

// Cached lookup keyed by (theta, P) rounded to 1e-12.
const ArcTable& arc_table(const WaveId& w);

CylinderPoint eval_arc(const ArcTable& tab, double s);
double arc_param(const ArcTable& tab, const CylinderPoint& c);

// Arc-length-ratio-preserving reparametrization between two waves with the
// same P.
CylinderPoint psi_map(const WaveId& w_from, const WaveId& w_to, const CylinderPoint& c);

}  // namespace su2comm
