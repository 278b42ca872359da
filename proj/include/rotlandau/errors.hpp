#pragma once

#include <stdexcept>
#include <string>

namespace rotlandau {

/// Regular-branch construction requested for a mode with E0 = -Mc^2,
/// where the usual elimination of the lower spinor is singular.
struct DegenerateBranch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two objects built from different physical configurations were combined.
struct ConfigMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An eigenpair handed to a phase computation does not satisfy its
/// residual contract.
struct ResidualTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The adaptive integrator could not meet the local tolerance.
struct StepFailure : std::runtime_error {
  double last_good_t;
  StepFailure(const std::string& what, double t)
      : std::runtime_error(what), last_good_t(t) {}
};

}  // namespace rotlandau
