#pragma once

#include "rotlandau/operator_matrices.hpp"

namespace rotlandau {

/// Anomalous-moment configuration.  mu_a is the product (anomalous moment)
/// times (field magnitude) in units Mc^2; that product is the only
/// combination entering the Hamiltonian.  charge 0 selects a neutral
/// particle; the charged Landau modes of `base` are then used purely as an
/// orthonormal computational basis.
struct PauliConfig {
  PhysicalConfig base;
  double mu_a = 0.0;
  int charge = +1;  // +1, -1, or 0 (neutral)

  bool charged() const { return charge != 0; }
  void validate() const;
};

/// Precomputed pieces of the Dirac-Pauli Hamiltonian
///   H(t) = [alpha.(p - q A(t)) + gamma^0]  (q-coupling dropped if neutral)
///          - mu_a gamma^0 Sigma.n(t) + i mu_a gamma.e(t),
/// with e(t) = E(t)/B = -(1/2) dn/dt x r.
struct PauliModel {
  PauliConfig pcfg;
  BasisTruncation trunc;
  std::vector<LandauMode> basis;
  Eigen::MatrixXcd plain_h0;  // charged: rotation-route H0_eff; neutral: alpha.p + gamma^0
  std::array<Eigen::MatrixXcd, 3> spin_terms;    // gamma^0 Sigma_l
  std::array<Eigen::MatrixXcd, 3> efield_terms;  // i G_a, G_a = sum eps_{kab} gamma_k r_b
  OperatorMatrix jz;
  TruncationDiagnostics diag;

  int dim() const { return static_cast<int>(basis.size()); }
};

PauliModel build_pauli_model(const PauliConfig& pcfg, const BasisTruncation& trunc,
                             double leakage_tolerance = 1e-6);

OperatorMatrix h_pauli_matrix(double t, const PauliModel& model);

/// Contract-shaped overload; assembles the pieces on every call.
OperatorMatrix h_pauli_matrix(double t, const std::vector<LandauMode>& basis,
                              const PauliConfig& pcfg);

/// max_t || W^dag(t) H(t) W(t) - H(0) ||_max over the sampled times.
double verify_pauli_invariance(const std::vector<double>& times,
                               const PauliModel& model);

/// Spectrum of H_pauli(0) - omega J_z in the truncated basis.  Exploratory:
/// no closed-form reference exists for mu_a != 0.
EigenSolution diagonalize_pauli_heff(const PauliModel& model);

}  // namespace rotlandau
