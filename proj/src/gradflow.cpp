#include "su2comm/gradflow.hpp"

#include <cmath>

namespace su2comm {

double TangentPair::norm() const {
  return std::sqrt(u.x * u.x + u.y * u.y + u.z * u.z +
                   v.x * v.x + v.y * v.y + v.z * v.z);
}

double f_value(const GroupElement& g, const GroupElement& h) {
  return 2 * commutator(g, h).q.re;
}

LieVector dnu(const GroupElement& g, const GroupElement& h, const TangentPair& tp) {
  const LieVector inner =
      ad(h.inverse(), tp.u) - tp.u + tp.v - ad(g.inverse(), tp.v);
  return ad(mul(h, g), inner);
}

TangentPair grad_f(const GroupElement& g, const GroupElement& h) {
  // In the basis {i,j,k} per slot, B(e_k, e_k) = 2 and tr = 2 Re cancel:
  // (grad_u)_k = Re(nu * dnu(e_k, 0)), likewise for the v slot.
  const Quaternion nu = commutator(g, h).q;
  const LieVector basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  TangentPair out;
  double* uu[3] = {&out.u.x, &out.u.y, &out.u.z};
  double* vv[3] = {&out.v.x, &out.v.y, &out.v.z};
  for (int k = 0; k < 3; ++k) {
    *uu[k] = (nu * dnu(g, h, {basis[k], {}}).quat()).re;
    *vv[k] = (nu * dnu(g, h, {{}, basis[k]}).quat()).re;
  }
  return out;
}

namespace {
std::pair<GroupElement, GroupElement> step_to(const GroupElement& g, const GroupElement& h,
                                              const TangentPair& d, double st) {
  return {mul(g, exp(d.u * st)), mul(h, exp(d.v * st))};
}
}  // namespace

FlowTrace flow(const GroupElement& g0, const GroupElement& h0, const FlowConfig& cfg) {
  FlowTrace trace;
  GroupElement g = g0, h = h0;
  const double sign = cfg.direction == FlowDirection::Ascend ? 1.0 : -1.0;
  const double target = cfg.direction == FlowDirection::Ascend ? 2.0 : -2.0;

  double f = f_value(g, h);
  TangentPair grad = grad_f(g, h);
  trace.states.push_back({g, h, f, grad.norm()});

  for (int step = 0; step < cfg.max_steps; ++step) {
    if (std::abs(f - target) < cfg.f_tol) {
      trace.terminated_by = FlowStop::FTol;
      return trace;
    }
    if (grad.norm() < cfg.grad_tol) {
      trace.terminated_by = FlowStop::GradTol;
      return trace;
    }

    TangentPair dir{grad.u * sign, grad.v * sign};
    if (cfg.use_rk4) {
      // Classical RK4 on the group via exponential steps.
      const double st = cfg.step;
      auto vf = [&](const GroupElement& a, const GroupElement& b) {
        TangentPair t = grad_f(a, b);
        return TangentPair{t.u * sign, t.v * sign};
      };
      const TangentPair k1 = dir;
      auto p2 = step_to(g, h, k1, st / 2);
      const TangentPair k2 = vf(p2.first, p2.second);
      auto p3 = step_to(g, h, k2, st / 2);
      const TangentPair k3 = vf(p3.first, p3.second);
      auto p4 = step_to(g, h, k3, st);
      const TangentPair k4 = vf(p4.first, p4.second);
      dir = {(k1.u + k2.u * 2 + k3.u * 2 + k4.u) * (1.0 / 6),
             (k1.v + k2.v * 2 + k3.v * 2 + k4.v) * (1.0 / 6)};
    }

    double st = cfg.step;
    bool accepted = false;
    while (st > 1e-14) {
      auto [gn, hn] = step_to(g, h, dir, st);
      const double fn = f_value(gn, hn);
      if (sign * (fn - f) >= -1e-12) {  // monotone acceptance
        g = gn;
        h = hn;
        f = fn;
        accepted = true;
        break;
      }
      st /= 2;
    }
    if (!accepted) {
      trace.terminated_by = FlowStop::GradTol;  // stuck at numerical resolution
      return trace;
    }
    grad = grad_f(g, h);
    trace.states.push_back({g, h, f, grad.norm()});
  }
  trace.terminated_by = FlowStop::MaxSteps;
  return trace;
}

}  // namespace su2comm
