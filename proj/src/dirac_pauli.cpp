#include "rotlandau/dirac_pauli.hpp"

#include "rotlandau/evolution_phases.hpp"

namespace rotlandau {

void PauliConfig::validate() const {
  base.validate();
  if (charge != +1 && charge != -1 && charge != 0)
    throw std::invalid_argument("PauliConfig: charge must be +1, -1 or 0");
  if (charge != 0 && charge != base.charge_sign)
    throw std::invalid_argument(
        "PauliConfig: charged case must match the basis charge sign");
  if (!std::isfinite(mu_a))
    throw std::invalid_argument("PauliConfig: mu_a must be finite");
}

namespace {

struct PauliTerms {
  std::array<Eigen::MatrixXcd, 3> spin;
  std::array<Eigen::MatrixXcd, 3> efield;
};

PauliTerms assemble_pauli_terms(const MatrixAssembler& asmb) {
  const auto& d = dirac_matrices();
  PauliTerms t;
  for (int l = 0; l < 3; ++l)
    t.spin[l] = asmb.sandwich(d.gamma0 * d.Sigma[l], PlaneOp::One, AxialOp::One);

  // G_a = sum_{kb} eps_{kab} gamma_k r_b; element pieces are Hermitian with
  // the factor i folded into the constant matrix.
  const Matrix4cd ig1 = iu * d.gamma[0];
  const Matrix4cd ig2 = iu * d.gamma[1];
  const Matrix4cd ig3 = iu * d.gamma[2];
  t.efield[0] = asmb.sandwich(ig3, PlaneOp::Y, AxialOp::One) -
                asmb.sandwich(ig2, PlaneOp::One, AxialOp::Z);
  t.efield[1] = asmb.sandwich(ig1, PlaneOp::One, AxialOp::Z) -
                asmb.sandwich(ig3, PlaneOp::X, AxialOp::One);
  t.efield[2] = asmb.sandwich(ig2, PlaneOp::X, AxialOp::One) -
                asmb.sandwich(ig1, PlaneOp::Y, AxialOp::One);
  return t;
}

Eigen::MatrixXcd pauli_h_at(const PauliModel& model, double t) {
  const PhysicalConfig& cfg = model.pcfg.base;
  Eigen::MatrixXcd h;
  if (model.pcfg.charged()) {
    const Eigen::VectorXcd w = w_diagonal(t, model.jz.labels, cfg.omega);
    h = w.asDiagonal() * model.plain_h0 * w.conjugate().asDiagonal();
  } else {
    h = model.plain_h0;
  }
  const Eigen::Vector3d n = field_direction(cfg, t);
  const Eigen::Vector3d ndot = field_direction_dot(cfg, t);
  for (int l = 0; l < 3; ++l) {
    h -= model.pcfg.mu_a * n(l) * model.spin_terms[l];
    h -= 0.5 * model.pcfg.mu_a * ndot(l) * model.efield_terms[l];
  }
  return h;
}

}  // namespace

PauliModel build_pauli_model(const PauliConfig& pcfg, const BasisTruncation& trunc,
                             double leakage_tolerance) {
  pcfg.validate();
  PauliModel model;
  model.pcfg = pcfg;
  model.trunc = trunc;
  model.basis = enumerate_basis(trunc, pcfg.base);
  model.jz = jz_matrix(model.basis);

  MatrixAssembler asmb(model.basis, pcfg.base);
  PauliTerms terms = assemble_pauli_terms(asmb);
  model.spin_terms = std::move(terms.spin);
  model.efield_terms = std::move(terms.efield);

  model.diag.tolerance = leakage_tolerance;
  if (pcfg.charged()) {
    auto [jx, jy] = jxy_matrices(asmb);
    model.plain_h0 =
        h0_eff_matrix(model.basis, pcfg.base, jy, &model.diag).entries;
  } else {
    const auto& d = dirac_matrices();
    model.plain_h0 = asmb.sandwich(d.gamma0, PlaneOp::One, AxialOp::One) +
                     asmb.sandwich(d.alpha[0], PlaneOp::Px, AxialOp::One) +
                     asmb.sandwich(d.alpha[1], PlaneOp::Py, AxialOp::One) +
                     asmb.sandwich(d.alpha[2], PlaneOp::One, AxialOp::Pz);
  }
  return model;
}

OperatorMatrix h_pauli_matrix(double t, const PauliModel& model) {
  OperatorMatrix op;
  op.entries = pauli_h_at(model, t);
  op.labels = model.jz.labels;
  op.hermitian = true;
  return op;
}

OperatorMatrix h_pauli_matrix(double t, const std::vector<LandauMode>& basis,
                              const PauliConfig& pcfg) {
  pcfg.validate();
  if (basis.empty()) throw std::invalid_argument("h_pauli_matrix: empty basis");
  BasisTruncation trunc;  // only used for bookkeeping in the model
  trunc.n_z_max = trunc.n_rho_max = trunc.m_abs_max = 0;
  PauliModel model;
  model.pcfg = pcfg;
  model.basis = basis;
  model.jz = jz_matrix(basis);
  MatrixAssembler asmb(basis, pcfg.base);
  PauliTerms terms = assemble_pauli_terms(asmb);
  model.spin_terms = std::move(terms.spin);
  model.efield_terms = std::move(terms.efield);
  if (pcfg.charged()) {
    auto [jx, jy] = jxy_matrices(asmb);
    model.plain_h0 = h0_eff_matrix(basis, pcfg.base, jy, nullptr).entries;
  } else {
    const auto& d = dirac_matrices();
    model.plain_h0 = asmb.sandwich(d.gamma0, PlaneOp::One, AxialOp::One) +
                     asmb.sandwich(d.alpha[0], PlaneOp::Px, AxialOp::One) +
                     asmb.sandwich(d.alpha[1], PlaneOp::Py, AxialOp::One) +
                     asmb.sandwich(d.alpha[2], PlaneOp::One, AxialOp::Pz);
  }
  return h_pauli_matrix(t, model);
}

double verify_pauli_invariance(const std::vector<double>& times,
                               const PauliModel& model) {
  const Eigen::MatrixXcd h0 = pauli_h_at(model, 0.0);
  double residual = 0.0;
  for (double t : times) {
    const Eigen::VectorXcd w =
        w_diagonal(t, model.jz.labels, model.pcfg.base.omega);
    const Eigen::MatrixXcd ht = pauli_h_at(model, t);
    const Eigen::MatrixXcd back =
        w.conjugate().asDiagonal() * ht * w.asDiagonal();
    residual = std::max(residual, (back - h0).cwiseAbs().maxCoeff());
  }
  return residual;
}

EigenSolution diagonalize_pauli_heff(const PauliModel& model) {
  OperatorMatrix heff;
  heff.entries =
      pauli_h_at(model, 0.0) - model.pcfg.base.omega * model.jz.entries;
  heff.labels = model.jz.labels;
  heff.hermitian = true;
  return eigensolve(heff);
}

}  // namespace rotlandau
