#include "su2comm/quat.hpp"

#include <cmath>

namespace su2comm {

Tolerances& tol() {
  static Tolerances t;
  return t;
}

double Quaternion::norm() const { return std::sqrt(norm2()); }

Quaternion Quaternion::operator*(const Quaternion& o) const {
  return {re * o.re - x * o.x - y * o.y - z * o.z,
          re * o.x + x * o.re + y * o.z - z * o.y,
          re * o.y - x * o.z + y * o.re + z * o.x,
          re * o.z + x * o.y - y * o.x + z * o.re};
}

GroupElement::GroupElement(const Quaternion& raw) {
  const double n = raw.norm();
  if (n == 0) throw DegenerateElement("cannot normalize zero quaternion");
  q = raw * (1.0 / n);
}

GroupElement mul(const GroupElement& a, const GroupElement& b) {
  return GroupElement(a.q * b.q);
}

GroupElement commutator(const GroupElement& g, const GroupElement& h) {
  return mul(mul(g, h), mul(g.inverse(), h.inverse()));
}

GroupElement conjugate(const GroupElement& u, const GroupElement& g) {
  return mul(mul(u, g), u.inverse());
}

double LieVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

GroupElement exp(const LieVector& xi) {
  const double n = xi.norm();
  if (n < 1e-300) return GroupElement();
  const double c = std::cos(n), s = std::sin(n) / n;
  return GroupElement(Quaternion{c, s * xi.x, s * xi.y, s * xi.z});
}

LieVector log(const GroupElement& g) {
  // g = cos t + sin t n, 0 < t < pi
  const double c = g.q.re;
  if (std::abs(c) >= 1.0 - tol().eps_alg)
    throw DegenerateElement("log undefined at +-1");
  const LieVector im{g.q.x, g.q.y, g.q.z};
  const double s = im.norm();
  const double t = std::atan2(s, c);  // in (0, pi)
  return im * (t / s);
}

LieVector ad(const GroupElement& g, const LieVector& xi) {
  const Quaternion r = g.q * xi.quat() * g.q.conj();
  return LieVector::imag_part(r);
}

double normalize_angle(double a) {
  const double two_pi = 2 * M_PI;
  double r = std::fmod(a, two_pi);
  if (r < 0) r += two_pi;
  if (r >= two_pi) r = 0;
  return r;
}

double circular_distance(double a, double b) {
  const double d = std::abs(normalize_angle(a) - normalize_angle(b));
  return std::min(d, 2 * M_PI - d);
}

TorusElement::TorusElement(double a) : angle(normalize_angle(a)) {}

ProjectivePoint::ProjectivePoint(const GroupElement& g) : rep(g) {
  const double c[4] = {g.q.re, g.q.x, g.q.y, g.q.z};
  for (double v : c) {
    if (std::abs(v) > tol().eps_alg) {
      if (v < 0) rep.q = -rep.q;
      break;
    }
  }
}

ProjectivePoint projectivize(const GroupElement& g) { return ProjectivePoint(g); }

ProjectivePoint torus_translate(const TorusElement& t, const ProjectivePoint& p) {
  return ProjectivePoint(mul(t.element(), p.rep));
}

double rp3_distance(const ProjectivePoint& p, const ProjectivePoint& q) {
  return std::min(dist(p.rep.q, q.rep.q), dist(p.rep.q, -q.rep.q));
}

GroupElement HaarSampler::operator()() {
  std::normal_distribution<double> n(0.0, 1.0);
  Quaternion q;
  do {
    q = {n(rng), n(rng), n(rng), n(rng)};
  } while (q.norm2() < 1e-12);
  return GroupElement(q);
}

LieVector HaarSampler::tangent(double scale) {
  std::normal_distribution<double> n(0.0, scale);
  return {n(rng), n(rng), n(rng)};
}

double HaarSampler::uniform(double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return u(rng);
}

GroupElement haar_sample(std::uint64_t rng_seed) {
  HaarSampler s(rng_seed);
  return s();
}

}  // namespace su2comm
