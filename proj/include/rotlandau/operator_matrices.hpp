#pragma once

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rotlandau/landau_modes.hpp"
#include "rotlandau/spinor_algebra.hpp"

namespace rotlandau {

struct BasisTruncation {
  int n_z_max = 1;
  int n_rho_max = 1;
  int m_abs_max = 1;
  bool include_negative_energy = true;

  int size() const {
    return (2 * n_z_max + 1) * (n_rho_max + 1) * (2 * m_abs_max + 1) * 2 *
           (include_negative_energy ? 2 : 1);
  }
  bool contains(const QuantumNumbers& qn) const;
};

/// Deterministic enumeration, lexicographic in
/// (energy_sign, n_z, m_j, m_s, n_rho); special-branch members substituted
/// where their labels dictate.
std::vector<LandauMode> enumerate_basis(const BasisTruncation& trunc,
                                        const PhysicalConfig& cfg);

struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  std::vector<QuantumNumbers> labels;
  bool hermitian = true;
  int dim() const { return static_cast<int>(entries.rows()); }
  double hermiticity_defect() const;
};

struct EigenSolution {
  Eigen::VectorXd values;    // ascending
  Eigen::MatrixXcd vectors;  // columns
  double residual_max = 0.0;
};

EigenSolution eigensolve(const OperatorMatrix& op);

/// Scalar one-body factors the element engine supports.  A full operator
/// element factorizes into an in-plane (rho, phi) part and an axial part,
/// sandwiched between spinor slots with a constant 4x4 matrix.
enum class PlaneOp { One, X, Y, Px, Py };
enum class AxialOp { One, Z, Pz };

/// Exact matrix elements over a mode basis.  phi and z integrals are closed
/// form; radial integrals are Gauss-Laguerre, exact for the polynomial
/// integrands.  Results are the exact compression P O P of the operator.
class MatrixAssembler {
 public:
  MatrixAssembler(const std::vector<LandauMode>& basis, const PhysicalConfig& cfg);
  ~MatrixAssembler();
  MatrixAssembler(const MatrixAssembler&) = delete;
  MatrixAssembler& operator=(const MatrixAssembler&) = delete;

  Eigen::MatrixXcd sandwich(const Matrix4cd& mat, PlaneOp pop, AxialOp zop) const;
  const std::vector<LandauMode>& basis() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Exact box integral (1/d) int z e^{i dk z} dz between plane waves.
complexd z_plane_wave_element(int n_z_row, int n_z_col, double d);

OperatorMatrix jz_matrix(const std::vector<LandauMode>& basis);

/// J_x, J_y with orbital part l_x = y p_z - z p_y, l_y = z p_x - x p_z and
/// spin part Sigma/2.
std::pair<OperatorMatrix, OperatorMatrix> jxy_matrices(
    const std::vector<LandauMode>& basis, const PhysicalConfig& cfg);
std::pair<OperatorMatrix, OperatorMatrix> jxy_matrices(const MatrixAssembler& asmb);

/// Orbital angular momentum about z; diagonal per slot (the modes carry
/// explicit e^{i m phi} factors).  Used as a cross-check of jz_matrix.
OperatorMatrix lz_matrix(const std::vector<LandauMode>& basis);

/// Time-independent pieces of the directly assembled field Hamiltonian
///   H(t) = alpha.(p - q A(t)) + gamma^0
///        = kinetic_mass - (eps_q b / 2) sum_l n_l(t) (r x alpha)_l
/// For a neutral particle only kinetic_mass applies.
struct FieldPieces {
  Eigen::MatrixXcd kinetic_mass;
  std::array<Eigen::MatrixXcd, 3> r_cross_alpha;
  std::vector<QuantumNumbers> labels;
};
FieldPieces build_field_pieces(const MatrixAssembler& asmb);

/// Rotating field direction n(t) and its time derivative.
Eigen::Vector3d field_direction(const PhysicalConfig& cfg, double t);
Eigen::Vector3d field_direction_dot(const PhysicalConfig& cfg, double t);

/// Direct (engine) compression of H(t); charged = couple the field.
OperatorMatrix h_field_matrix(const FieldPieces& pieces, const PhysicalConfig& cfg,
                              double t, bool charged = true);

struct TruncationDiagnostics {
  double unitarity_defect = 0.0;  // ||R^dag R - I||_max
  double rotation_gap = 0.0;      // probe-block gap, rotation route vs direct
  double tolerance = 1e-6;
  bool exceeded = false;
};

/// R = exp(-i theta_B J_y) by eigendecomposition of the Hermitian J_y.
Eigen::MatrixXcd rotation_matrix_y(const OperatorMatrix& jy, double theta_B);

/// H0_eff = R diag(E0) R^dag (rotation route, Eq.-21 structure).
OperatorMatrix h0_eff_matrix(const std::vector<LandauMode>& basis,
                             const PhysicalConfig& cfg,
                             const OperatorMatrix& jy,
                             TruncationDiagnostics* diag = nullptr);

/// H_eff = H0_eff - omega J_z.
OperatorMatrix h_eff_matrix(const OperatorMatrix& h0_eff,
                            const OperatorMatrix& jz, double omega);

/// First-order level, Eq.-(33) form: E0 - m_j omega cos(theta_B).
double perturbative_energy(const QuantumNumbers& qn, const PhysicalConfig& cfg);

/// phi0_i(r) = S(theta_B) zeta_i(R_y(-theta_B) r), the pointwise rotated
/// eigenstate; independent of the matrix-exponential route.
DiracSpinor rotated_eigenstate_pointwise(const LandauMode& mode, double theta_B,
                                         const Eigen::Vector3d& point);

/// Max entrywise gap between the rotation-route and directly assembled
/// H(0) over a probe block; the operative truncation-leakage measure
/// (the unitarity defect of R is zero by construction for an exponential
/// of a Hermitian compression).
double rotation_route_gap(const OperatorMatrix& h0_rroute,
                          const OperatorMatrix& h0_direct,
                          const std::vector<int>& probe);

/// Indices of basis members whose labels fall inside `probe_trunc`.
std::vector<int> probe_indices(const std::vector<QuantumNumbers>& labels,
                               const BasisTruncation& probe_trunc);

/// Exact diagonalization of the perturbation inside each degenerate E0
/// multiplet, compared against the nondegenerate first-order formula.
struct DegenerateBlockInfo {
  double energy0 = 0.0;
  std::vector<int> indices;
  double max_offdiag = 0.0;        // of R^dag J_z R inside the block
  double max_eig_vs_diag = 0.0;    // block eigenvalues vs diagonal entries
};
std::vector<DegenerateBlockInfo> degenerate_blocks(
    const std::vector<LandauMode>& basis, const Eigen::MatrixXcd& rotation,
    const OperatorMatrix& jz);

/// Everything the CLI and the evolution layer need for one configuration,
/// built once: basis, J matrices, both H(0) routes, H_eff and its spectrum.
struct EffectiveModel {
  PhysicalConfig cfg;
  BasisTruncation trunc;
  std::vector<LandauMode> basis;
  OperatorMatrix jx, jy, jz;
  OperatorMatrix h0_eff;        // rotation route
  OperatorMatrix h0_direct;     // engine compression of H(0)
  OperatorMatrix h_eff;
  Eigen::MatrixXcd rotation;    // R = exp(-i theta_B J_y)
  FieldPieces pieces;
  EigenSolution h_eff_eigen;
  TruncationDiagnostics diag;

  int dim() const { return static_cast<int>(basis.size()); }
};
EffectiveModel build_effective_model(const PhysicalConfig& cfg,
                                     const BasisTruncation& trunc,
                                     double leakage_tolerance = 1e-6,
                                     const BasisTruncation* probe = nullptr);

/// Overlap-based matching of eigenvectors to rotated mode labels:
/// match[i] = eigencolumn with maximal |<R e_i | v_k>|, plus the overlap.
struct StateMatch {
  int column = -1;
  double overlap = 0.0;
};
std::vector<StateMatch> match_states(const EffectiveModel& model);

}  // namespace rotlandau
