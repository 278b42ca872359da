#pragma once

#include <string>

#include "rotlandau/dirac_pauli.hpp"
#include "rotlandau/operator_matrices.hpp"

namespace rotlandau {

struct Tolerances {
  double leakage = 1e-6;
  double residual = 1e-9;
  double integrator = 1e-10;
  void validate() const;
};

/// One batch run.  Parsed from a flat key = value file whose keys are
/// exactly the dotted field names below; unknown keys are errors.
///
///   physical.b, physical.charge_sign, physical.theta_B, physical.omega,
///   physical.d,
///   truncation.n_z_max, truncation.n_rho_max, truncation.m_abs_max,
///   truncation.include_negative_energy,
///   pauli.mu_a, pauli.charge,
///   tolerances.leakage, tolerances.residual, tolerances.integrator,
///   seed
struct RunConfig {
  PhysicalConfig physical;
  double pauli_mu_a = 0.0;
  int pauli_charge = +1;
  BasisTruncation truncation;
  Tolerances tolerances;
  std::string output_dir;      // empty: stdout
  std::string format = "csv";  // csv | json
  unsigned long long seed = 1;

  PauliConfig pauli() const {
    return PauliConfig{physical, pauli_mu_a, pauli_charge};
  }
  void validate() const;
};

/// Throws std::runtime_error with a line-tagged message on unknown keys or
/// malformed values (CLI maps that to exit code 1).
RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text);

/// The declared reduction branch for all reported phases.
inline constexpr const char* phase_branch_label = "(-pi,pi]";

}  // namespace rotlandau
