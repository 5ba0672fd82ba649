#pragma once

#include <utility>
#include <vector>

#include "su2comm/quat.hpp"

namespace su2comm {

struct TangentPair {
  LieVector u, v;
  double norm() const;
};

// f = 2 Re of the commutator.
double f_value(const GroupElement& g, const GroupElement& h);

// dnu_(g,h)(u,v) = (u^{h^-1} - u + v - v^{g^-1})^{hg}, with u^g = Ad(g) u.
LieVector dnu(const GroupElement& g, const GroupElement& h, const TangentPair& tp);

// Gradient of f with respect to the bi-invariant metric B(u,v) = -2 Re(uv):
// B(grad f, (u,v)) = tr(nu * dnu(u,v)).
TangentPair grad_f(const GroupElement& g, const GroupElement& h);

enum class FlowDirection { Ascend, Descend };
enum class FlowStop { GradTol, FTol, MaxSteps };

struct FlowConfig {
  double step = 0.02;
  int max_steps = 50000;
  double grad_tol = 1e-8;
  double f_tol = 1e-8;
  FlowDirection direction = FlowDirection::Ascend;
  bool use_rk4 = false;
};

struct FlowState {
  GroupElement g, h;
  double f;
  double grad_norm;
};

struct FlowTrace {
  std::vector<FlowState> states;
  FlowStop terminated_by;

  const FlowState& final() const { return states.back(); }
};

FlowTrace flow(const GroupElement& g, const GroupElement& h, const FlowConfig& cfg);

}  // namespace su2comm
