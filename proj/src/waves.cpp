#include "su2comm/waves.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace su2comm {

SpherePoint project_to_sphere(const CylinderPoint& c) {
  const double r = std::sqrt(std::max(0.0, 1 - c.q * c.q));
  return {r * std::cos(c.phi), r * std::sin(c.phi), c.q};
}

double sphere_dist(const SpherePoint& a, const SpherePoint& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double wave_q(const WaveId& w, double phi) {
  if (w.is_square())
    throw SquareWaveRequested("square-wave ids have no graph Q(phi)");
  return q_of(w.p.value, phi, w.theta);
}

namespace {

void validate(const WaveId& w) {
  if (w.theta < -1e-12 || w.theta > M_PI + 1e-12)
    throw Error("wave level out of [0, pi]");
  if (w.theta < 1e-12 && !w.p.is_zero() && std::abs(w.p.value) >= 1 - tol().eps_alg)
    throw DegenerateWave("wave (theta=0, |P|=1) degenerates");
}

// One period of the smooth wave sampled at n+1 uniform parameter values,
// with cumulative chordal length of the sphere image.
double polyline_length(const WaveId& w, int n, std::vector<ArcKnot>* out) {
  const double du = 2 * M_PI / n;
  if (out) out->clear();
  double total = 0;
  SpherePoint prev{};
  for (int k = 0; k <= n; ++k) {
    const double u = du * k;
    const double phi = w.theta / 2 - w.p.sign() * u;
    CylinderPoint c{normalize_angle(phi), wave_q(w, phi)};
    SpherePoint x = project_to_sphere(c);
    if (k > 0) total += sphere_dist(prev, x);
    if (out) out->push_back({u, total, c, x});
    prev = x;
  }
  return total;
}

// Closed-form square wave: meridian theta/2 up to the north pole, meridian
// theta/2 + pi from north to south, meridian theta/2 back to the start.
CylinderPoint square_eval(const ArcTable& tab, double s) {
  const double phi_a = normalize_angle(tab.phi0);
  const double phi_b = normalize_angle(tab.phi0 + M_PI);
  if (s <= M_PI / 2) return {phi_a, std::sin(s)};
  if (s <= 3 * M_PI / 2) return {phi_b, std::cos(s - M_PI / 2)};
  return {phi_a, -std::cos(s - 3 * M_PI / 2)};
}

double square_param(const ArcTable& tab, const CylinderPoint& c) {
  const double e = tol().eps_on;
  if (c.q >= 1 - e) return M_PI / 2;
  if (c.q <= -1 + e) return 3 * M_PI / 2;
  const double da = circular_distance(c.phi, tab.phi0);
  const double db = circular_distance(c.phi, tab.phi0 + M_PI);
  if (std::min(da, db) > e) throw NotOnWave("point is on neither meridian of the square wave");
  if (da <= db) {
    // meridian phi0: ascending branch for Q >= 0, final descent for Q < 0
    if (c.q >= 0) return std::asin(c.q);
    return 3 * M_PI / 2 + std::acos(std::clamp(-c.q, -1.0, 1.0));
  }
  return M_PI / 2 + std::acos(std::clamp(c.q, -1.0, 1.0));
}

}  // namespace

ArcTable build_arc_table(const WaveId& w, int n_knots) {
  validate(w);
  ArcTable tab;
  tab.wave = w;
  tab.phi0 = w.theta / 2;
  tab.dir = -w.p.sign();
  if (w.is_square()) {
    tab.square = true;
    tab.total_length = 2 * M_PI;
    return tab;
  }
  int n = std::max(64, n_knots);
  double len = polyline_length(w, n, nullptr);
  const int n_cap = 1 << 15;
  while (n < n_cap) {
    const double len2 = polyline_length(w, 2 * n, nullptr);
    if (std::abs(len2 - len) < tol().eps_arc) {
      len = len2;
      n *= 2;
      break;
    }
    len = len2;
    n *= 2;
  }
  const double total = polyline_length(w, n, &tab.knots);
  tab.total_length = total;
  for (auto& k : tab.knots) k.s = 2 * M_PI * k.s / total;
  tab.knots.back().s = 2 * M_PI;  // guard against rounding
  return tab;
}

const ArcTable& arc_table(const WaveId& w) {
  validate(w);
  using Key = std::tuple<long long, int, long long>;
  // Bounded LRU: callers get short-lived references, so entries are only
  // evicted once they have fallen well behind the most recent lookups.
  static constexpr size_t kCapacity = 96;
  struct Entry {
    std::unique_ptr<ArcTable> tab;
    std::uint64_t stamp = 0;
  };
  static std::map<Key, Entry> cache;
  static std::uint64_t clock_ = 0;
  static std::shared_mutex mtx;
  const Key key{std::llround(w.theta * 1e12), static_cast<int>(w.p.kind),
                w.p.is_zero() ? 0 : std::llround(w.p.value * 1e12)};
  {
    std::unique_lock lk(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) {
      it->second.stamp = ++clock_;
      return *it->second.tab;
    }
  }
  auto tab = std::make_unique<ArcTable>(build_arc_table(w));
  std::unique_lock lk(mtx);
  while (cache.size() >= kCapacity) {
    auto victim = cache.begin();
    for (auto it = cache.begin(); it != cache.end(); ++it)
      if (it->second.stamp < victim->second.stamp) victim = it;
    cache.erase(victim);
  }
  auto [it, inserted] = cache.try_emplace(key, Entry{std::move(tab), ++clock_});
  if (!inserted) it->second.stamp = ++clock_;
  return *it->second.tab;
}

CylinderPoint eval_arc(const ArcTable& tab, double s) {
  s = normalize_angle(s);
  if (tab.square) return square_eval(tab, s);
  const auto& ks = tab.knots;
  auto it = std::upper_bound(ks.begin(), ks.end(), s,
                             [](double v, const ArcKnot& k) { return v < k.s; });
  if (it == ks.begin()) return ks.front().c;
  if (it == ks.end()) return ks.back().c;
  const ArcKnot& hi = *it;
  const ArcKnot& lo = *(it - 1);
  const double f = (hi.s - lo.s > 0) ? (s - lo.s) / (hi.s - lo.s) : 0.0;
  const double u = lo.u + f * (hi.u - lo.u);
  const double phi = tab.phi0 + tab.dir * u;
  return {normalize_angle(phi), wave_q(tab.wave, phi)};
}

double arc_param(const ArcTable& tab, const CylinderPoint& c) {
  if (tab.square) return square_param(tab, c);
  if (std::abs(c.q - wave_q(tab.wave, c.phi)) > tol().eps_on)
    throw NotOnWave("point does not lie on the wave");
  const double u = normalize_angle(tab.dir * (c.phi - tab.phi0));
  const int n = static_cast<int>(tab.knots.size()) - 1;
  const double du = 2 * M_PI / n;
  const int k = std::min(n - 1, static_cast<int>(u / du));
  const double f = (u - k * du) / du;
  const double s = tab.knots[k].s + f * (tab.knots[k + 1].s - tab.knots[k].s);
  return s >= 2 * M_PI ? s - 2 * M_PI : s;
}

CylinderPoint psi_map(const WaveId& w_from, const WaveId& w_to, const CylinderPoint& c) {
  if (w_from.p.kind != w_to.p.kind ||
      (!w_from.p.is_zero() && std::abs(w_from.p.value - w_to.p.value) > 1e-12))
    throw Error("psi_map requires matching P");
  return eval_arc(arc_table(w_to), arc_param(arc_table(w_from), c));
}

}  // namespace su2comm
