#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "su2comm/errors.hpp"
#include "su2comm/tol.hpp"

namespace su2comm {

// General quaternion re + x i + y j + z k.  Equivalently zc + wc j with
// zc = re + x i and wc = y + z i (note i j = k, so (y + z i) j = y j + z k).
struct Quaternion {
  double re = 0, x = 0, y = 0, z = 0;

  std::complex<double> zc() const { return {re, x}; }
  std::complex<double> wc() const { return {y, z}; }
  static Quaternion from_zw(std::complex<double> zz, std::complex<double> ww) {
    return {zz.real(), zz.imag(), ww.real(), ww.imag()};
  }

  Quaternion conj() const { return {re, -x, -y, -z}; }
  double norm2() const { return re * re + x * x + y * y + z * z; }
  double norm() const;

  Quaternion operator+(const Quaternion& o) const { return {re + o.re, x + o.x, y + o.y, z + o.z}; }
  Quaternion operator-(const Quaternion& o) const { return {re - o.re, x - o.x, y - o.y, z - o.z}; }
  Quaternion operator-() const { return {-re, -x, -y, -z}; }
  Quaternion operator*(double s) const { return {re * s, x * s, y * s, z * s}; }
  Quaternion operator*(const Quaternion& o) const;
};

inline double dist(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

// Unit quaternion = element of SU(2).  Renormalized on construction.
struct GroupElement {
  Quaternion q;

  GroupElement() : q{1, 0, 0, 0} {}
  explicit GroupElement(const Quaternion& raw);
  static GroupElement from_zw(std::complex<double> z, std::complex<double> w) {
    return GroupElement(Quaternion::from_zw(z, w));
  }

  GroupElement inverse() const { GroupElement g; g.q = q.conj(); return g; }
  double trace() const { return 2 * q.re; }  // tr of the 2x2 matrix
};

GroupElement mul(const GroupElement& a, const GroupElement& b);
GroupElement commutator(const GroupElement& g, const GroupElement& h);
GroupElement conjugate(const GroupElement& u, const GroupElement& g);  // u g u^{-1}

// Pure imaginary quaternion xi = x i + y j + z k.
struct LieVector {
  double x = 0, y = 0, z = 0;
  double norm() const;
  LieVector operator+(const LieVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
  LieVector operator-(const LieVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
  LieVector operator-() const { return {-x, -y, -z}; }
  LieVector operator*(double s) const { return {x * s, y * s, z * s}; }
  Quaternion quat() const { return {0, x, y, z}; }
  static LieVector imag_part(const Quaternion& q) { return {q.x, q.y, q.z}; }
};

// exp(xi) = cos|xi| + sin|xi| xi/|xi|
GroupElement exp(const LieVector& xi);
// Inverse of exp on the punctured open ball 0 < |xi| < pi; throws
// DegenerateElement at g = +-1.
LieVector log(const GroupElement& g);
// Ad(g) xi = g xi g^{-1}
LieVector ad(const GroupElement& g, const LieVector& xi);

// e^{i angle}, angle normalized into [0, 2pi).
struct TorusElement {
  double angle = 0;

  TorusElement() = default;
  explicit TorusElement(double a);
  GroupElement element() const { return GroupElement::from_zw({std::cos(angle), std::sin(angle)}, 0.0); }
  std::complex<double> value() const { return {std::cos(angle), std::sin(angle)}; }
  TorusElement operator*(const TorusElement& o) const { return TorusElement(angle + o.angle); }
};

double circular_distance(double a, double b);  // distance of angles mod 2pi
double normalize_angle(double a);              // into [0, 2pi)

// Point of RP^3 with a canonical representative: the first coordinate in the
// order (re, x, y, z) whose magnitude exceeds eps_alg is made positive.
struct ProjectivePoint {
  GroupElement rep;

  ProjectivePoint() = default;
  explicit ProjectivePoint(const GroupElement& g);
};

ProjectivePoint projectivize(const GroupElement& g);
ProjectivePoint torus_translate(const TorusElement& t, const ProjectivePoint& p);
double rp3_distance(const ProjectivePoint& p, const ProjectivePoint& q);

// Deterministic Haar sampling: normalized 4-dim Gaussian.
struct HaarSampler {
  std::mt19937_64 rng;
  explicit HaarSampler(std::uint64_t seed) : rng(seed) {}
  GroupElement operator()();
  LieVector tangent(double scale = 1.0);  // isotropic Gaussian in the Lie algebra
  double uniform(double lo, double hi);
};

GroupElement haar_sample(std::uint64_t rng_seed);

}  // namespace su2comm
