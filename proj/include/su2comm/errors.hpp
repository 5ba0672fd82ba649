#pragma once

#include <stdexcept>
#include <string>

namespace su2comm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// quat_core
struct DegenerateElement : Error { using Error::Error; };

// comm_geom
struct NotOnLevelSet : Error { using Error::Error; };
struct NotInYTheta : Error { using Error::Error; };
struct AmbiguousAtPZero : Error { using Error::Error; };

// waves
struct SquareWaveRequested : Error { using Error::Error; };
struct DegenerateWave : Error { using Error::Error; };
struct NotOnWave : Error { using Error::Error; };

// retract
struct CentralCommutator : Error { using Error::Error; };

// gradflow (reported, not usually thrown)
struct NonConvergence : Error { using Error::Error; };

// homalg
struct InconsistentScenario : Error { using Error::Error; };
struct UnresolvedExtension : Error { using Error::Error; };
struct DualityFailure : Error { using Error::Error; };

}  // namespace su2comm
