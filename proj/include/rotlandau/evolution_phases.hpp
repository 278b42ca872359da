#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "rotlandau/operator_matrices.hpp"

namespace rotlandau {

/// Diagonal of W(t) = exp(-i omega t j_z) over the basis labels.
Eigen::VectorXcd w_diagonal(double t, const std::vector<QuantumNumbers>& labels,
                            double omega);

/// W(t) as an operator matrix (diagonal unitary).
OperatorMatrix w_matrix(double t, const std::vector<QuantumNumbers>& labels,
                        double omega);

/// psi(t) = W(t) exp(-i H_eff t) psi0, using the spectral decomposition of
/// the Hermitian H_eff.  Chronological-product free.
Eigen::VectorXcd evolve_closed_form(const Eigen::VectorXcd& psi0, double t,
                                    const EigenSolution& h_eff_eigen,
                                    const std::vector<QuantumNumbers>& labels,
                                    double omega);

struct IntegratorStats {
  long accepted = 0;
  long rejected = 0;
  double min_step = 0.0;
};

/// Independent oracle: adaptive embedded Dormand-Prince 5(4) with PI step
/// control on i dpsi/dt = H(t) psi, H(t) = W(t) H(0) W(t)^dag rebuilt from
/// diagonal conjugation at every stage.  Throws StepFailure if the
/// controller cannot meet the local tolerance.
Eigen::VectorXcd brute_force_evolve(const Eigen::VectorXcd& psi0, double t_end,
                                    const Eigen::MatrixXcd& h0,
                                    const std::vector<QuantumNumbers>& labels,
                                    double omega, double local_tol = 1e-10,
                                    IntegratorStats* stats = nullptr);

/// Cyclic-solution phases over one period T = 2 pi / omega, all reduced
/// phases on the declared branch (-pi, pi].
struct PhaseReport {
  double E_i = 0.0;
  double jz_expect = 0.0;
  double T = 0.0;
  double delta = 0.0;            // total phase, reduced
  double beta_unreduced = 0.0;   // dynamic phase before reduction
  double beta = 0.0;             // reduced
  double gamma = 0.0;            // delta - beta, reduced
  double solid_angle = 0.0;      // Omega_B = 2 pi (1 - cos theta_B)
  double m_j_label = 0.0;        // m_j of the tracked label
  double gamma_solid_angle = 0.0;  // -m_j Omega_B, reduced
  double defect = 0.0;             // |gamma - gamma_solid_angle|, reduced
  double h_expect = 0.0;           // E_i + omega <j_z>
  double h_expect_deviation = 0.0;  // max_t |<H(t)> - h_expect| over samples
  double cyclic_defect = 0.0;       // ||psi(T) - e^{i delta} psi(0)||
};

/// Build the report for one eigenpair (E, v) of H_eff.  Throws
/// ResidualTooLarge if the pair does not satisfy its residual contract.
/// The t-independence of <H(t)> and the cyclic defect are measured along
/// the closed-form trajectory using H(t) = W(t) H(0) W(t)^dag.
PhaseReport phase_report(const OperatorMatrix& h_eff, const OperatorMatrix& jz,
                         const Eigen::MatrixXcd& h0, double E,
                         const Eigen::VectorXcd& v,
                         const EigenSolution& h_eff_eigen,
                         const PhysicalConfig& cfg, double m_j_label);

/// -m_j Omega_B reduced to (-pi, pi], Omega_B = 2 pi (1 - cos theta_B).
double solid_angle_phase(double m_j, double theta_B);

struct TrajectorySample {
  double t = 0.0;
  Eigen::VectorXcd state;
  Eigen::Vector3d j_expect = Eigen::Vector3d::Zero();
  double h_expect = 0.0;
  double norm = 0.0;
};

std::vector<TrajectorySample> j_trajectory(
    const Eigen::VectorXcd& psi0, const std::vector<double>& times,
    const EffectiveModel& model);

}  // namespace rotlandau
