#pragma once

namespace su2comm {

// Global tolerance knobs. Defaults match the library contracts; the CLI may
// override them at startup (before any concurrent use).
struct Tolerances {
  double eps_alg = 1e-12;  // algebraic identities, unit-norm drift
  double eps_rel = 1e-9;   // level-set membership residuals
  double eps_arc = 1e-6;   // arc-table refinement target
  double eps_on = 1e-6;    // "lies on the wave" test
};

Tolerances& tol();

}  // namespace su2comm
