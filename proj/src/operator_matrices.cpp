#include "rotlandau/operator_matrices.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

namespace rotlandau {

bool BasisTruncation::contains(const QuantumNumbers& qn) const {
  if (std::abs(qn.n_z) > n_z_max) return false;
  if (qn.n_rho > n_rho_max) return false;
  if (std::abs(qn.m) > m_abs_max) return false;
  if (!include_negative_energy && qn.energy_sign < 0) return false;
  return true;
}

std::vector<LandauMode> enumerate_basis(const BasisTruncation& trunc,
                                        const PhysicalConfig& cfg) {
  cfg.validate();
  if (trunc.n_z_max < 0 || trunc.n_rho_max < 0 || trunc.m_abs_max < 0)
    throw std::invalid_argument("enumerate_basis: truncation bounds must be >= 0");

  std::vector<QuantumNumbers> labels;
  labels.reserve(trunc.size());
  const int sign_lo = trunc.include_negative_energy ? -1 : +1;
  for (int sign = sign_lo; sign <= +1; sign += 2)
    for (int nz = -trunc.n_z_max; nz <= trunc.n_z_max; ++nz)
      for (int m = -trunc.m_abs_max; m <= trunc.m_abs_max; ++m)
        for (int tms = -1; tms <= +1; tms += 2)
          for (int nr = 0; nr <= trunc.n_rho_max; ++nr)
            labels.push_back(QuantumNumbers{nz, nr, m, tms, sign});

  auto key = [](const QuantumNumbers& q) {
    return std::make_tuple(q.energy_sign, q.n_z, q.twice_mj(), q.twice_ms, q.n_rho);
  };
  std::sort(labels.begin(), labels.end(),
            [&](const QuantumNumbers& a, const QuantumNumbers& b) {
              return key(a) < key(b);
            });

  std::vector<LandauMode> basis;
  basis.reserve(labels.size());
  for (const QuantumNumbers& qn : labels) basis.push_back(build_mode(qn, cfg));
  return basis;
}

double OperatorMatrix::hermiticity_defect() const {
  if (entries.size() == 0) return 0.0;
  return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

EigenSolution eigensolve(const OperatorMatrix& op) {
  Eigen::MatrixXcd sym = 0.5 * (op.entries + op.entries.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym);
  EigenSolution sol;
  sol.values = es.eigenvalues();
  sol.vectors = es.eigenvectors();
  sol.residual_max = 0.0;
  for (int k = 0; k < sol.values.size(); ++k) {
    const double r =
        (op.entries * sol.vectors.col(k) - sol.values(k) * sol.vectors.col(k))
            .norm();
    sol.residual_max = std::max(sol.residual_max, r);
  }
  return sol;
}

complexd z_plane_wave_element(int n_z_row, int n_z_col, double d) {
  const int dn = n_z_col - n_z_row;
  if (dn == 0) return {0.0, 0.0};
  const double sign = (std::abs(dn) % 2 == 0) ? 1.0 : -1.0;
  return complexd{0.0, -1.0} * sign * d / (2.0 * pi * dn);
}

// ---------------------------------------------------------------------------
// Element engine
// ---------------------------------------------------------------------------

struct MatrixAssembler::Impl {
  const std::vector<LandauMode>* basis = nullptr;
  PhysicalConfig cfg;
  double alpha = 0.0;

  std::vector<RadialProfile> profiles;
  std::map<std::pair<int, std::vector<double>>, int> prof_ids;

  struct TermRef {
    complexd coeff;
    int prof = -1;
    int m_ang = 0;
  };
  struct SlotTerms {
    std::vector<TermRef> terms;
    std::vector<TermRef> ladder_plus;   // bare p_+ image, aligned with terms
    std::vector<TermRef> ladder_minus;  // bare p_- image
  };
  struct ModeRef {
    int n_z = 0;
    int t2mj = 0;
    double kz = 0.0;
    std::array<SlotTerms, 4> slots;
  };
  std::vector<ModeRef> modes;

  mutable std::unordered_map<std::uint64_t, double> cache0;  // rho drho
  mutable std::unordered_map<std::uint64_t, double> cache1;  // rho^2 drho

  int intern(const RadialProfile& p) {
    auto key = std::make_pair(p.power, p.poly);
    auto it = prof_ids.find(key);
    if (it != prof_ids.end()) return it->second;
    const int id = static_cast<int>(profiles.size());
    profiles.push_back(p);
    prof_ids.emplace(std::move(key), id);
    return id;
  }

  TermRef make_ref(const SpinorTerm& t) {
    return TermRef{t.coeff, intern(t.prof), t.m_ang};
  }

  double radial(int ida, int idb, int extra) const {
    const int lo = std::min(ida, idb);
    const int hi = std::max(ida, idb);
    const std::uint64_t key =
        (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint64_t>(hi);
    auto& cache = extra == 0 ? cache0 : cache1;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const double v = radial_integral(profiles[lo], profiles[hi], extra, alpha);
    cache.emplace(key, v);
    return v;
  }
};

MatrixAssembler::MatrixAssembler(const std::vector<LandauMode>& basis,
                                 const PhysicalConfig& cfg)
    : impl_(std::make_unique<Impl>()) {
  cfg.validate();
  impl_->basis = &basis;
  impl_->cfg = cfg;
  impl_->alpha = cfg.alpha();
  impl_->modes.reserve(basis.size());
  for (const LandauMode& mode : basis) {
    if (!mode.cfg.same_modes(cfg))
      throw ConfigMismatch("MatrixAssembler: mode built with a different configuration");
    Impl::ModeRef ref;
    ref.n_z = mode.qn.n_z;
    ref.t2mj = mode.qn.twice_mj();
    ref.kz = mode.k_z();
    for (int c = 0; c < 4; ++c) {
      for (const SpinorTerm& t : mode.comps[c]) {
        ref.slots[c].terms.push_back(impl_->make_ref(t));
        ref.slots[c].ladder_plus.push_back(
            impl_->make_ref(apply_ladder(t, +1, 0, impl_->alpha)));
        ref.slots[c].ladder_minus.push_back(
            impl_->make_ref(apply_ladder(t, -1, 0, impl_->alpha)));
      }
    }
    impl_->modes.push_back(std::move(ref));
  }
}

MatrixAssembler::~MatrixAssembler() = default;

const std::vector<LandauMode>& MatrixAssembler::basis() const {
  return *impl_->basis;
}

namespace {

constexpr int slot_spin(int slot) { return (slot % 2 == 0) ? +1 : -1; }

}  // namespace

Eigen::MatrixXcd MatrixAssembler::sandwich(const Matrix4cd& mat, PlaneOp pop,
                                           AxialOp zop) const {
  const Impl& im = *impl_;
  const int n = static_cast<int>(im.modes.size());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);

  // Nonzero slot couplings of the constant 4x4 factor.
  struct SlotPair {
    int j, jp;
    complexd w;
  };
  std::vector<SlotPair> pairs;
  for (int j = 0; j < 4; ++j)
    for (int jp = 0; jp < 4; ++jp)
      if (mat(j, jp) != complexd{0.0, 0.0}) pairs.push_back({j, jp, mat(j, jp)});

  // Exact selection rule on 2*m_j for a quick pair screen.
  std::set<int> allowed;
  const bool plane_shift = (pop != PlaneOp::One);
  for (const SlotPair& sp : pairs) {
    const int sdiff = slot_spin(sp.j) - slot_spin(sp.jp);
    if (plane_shift) {
      allowed.insert(2 + sdiff);
      allowed.insert(-2 + sdiff);
    } else {
      allowed.insert(sdiff);
    }
  }

  const complexd half{0.5, 0.0};
  const complexd m_i_half{0.0, -0.5};  // 1/(2i)

  for (int arow = 0; arow < n; ++arow) {
    const Impl::ModeRef& A = im.modes[arow];
    for (int bcol = 0; bcol < n; ++bcol) {
      const Impl::ModeRef& B = im.modes[bcol];
      if (!allowed.count(A.t2mj - B.t2mj)) continue;

      complexd zf{0.0, 0.0};
      switch (zop) {
        case AxialOp::One:
          if (A.n_z != B.n_z) continue;
          zf = 1.0;
          break;
        case AxialOp::Pz:
          if (A.n_z != B.n_z) continue;
          zf = B.kz;
          break;
        case AxialOp::Z:
          zf = z_plane_wave_element(A.n_z, B.n_z, im.cfg.d);
          if (zf == complexd{0.0, 0.0}) continue;
          break;
      }

      complexd acc{0.0, 0.0};
      for (const SlotPair& sp : pairs) {
        const auto& sa = A.slots[sp.j];
        const auto& sb = B.slots[sp.jp];
        for (const auto& ta : sa.terms) {
          switch (pop) {
            case PlaneOp::One:
              for (const auto& tb : sb.terms) {
                if (ta.m_ang != tb.m_ang) continue;
                acc += sp.w * std::conj(ta.coeff) * tb.coeff *
                       im.radial(ta.prof, tb.prof, 0);
              }
              break;
            case PlaneOp::X:
              for (const auto& tb : sb.terms) {
                if (std::abs(ta.m_ang - tb.m_ang) != 1) continue;
                acc += sp.w * std::conj(ta.coeff) * tb.coeff * half *
                       im.radial(ta.prof, tb.prof, 1);
              }
              break;
            case PlaneOp::Y:
              for (const auto& tb : sb.terms) {
                if (std::abs(ta.m_ang - tb.m_ang) != 1) continue;
                const complexd w = (ta.m_ang == tb.m_ang + 1) ? m_i_half : -m_i_half;
                acc += sp.w * std::conj(ta.coeff) * tb.coeff * w *
                       im.radial(ta.prof, tb.prof, 1);
              }
              break;
            case PlaneOp::Px:
              for (const auto& lt : sb.ladder_plus) {
                if (ta.m_ang != lt.m_ang) continue;
                acc += sp.w * std::conj(ta.coeff) * lt.coeff * half *
                       im.radial(ta.prof, lt.prof, 0);
              }
              for (const auto& lt : sb.ladder_minus) {
                if (ta.m_ang != lt.m_ang) continue;
                acc += sp.w * std::conj(ta.coeff) * lt.coeff * half *
                       im.radial(ta.prof, lt.prof, 0);
              }
              break;
            case PlaneOp::Py:
              for (const auto& lt : sb.ladder_plus) {
                if (ta.m_ang != lt.m_ang) continue;
                acc += sp.w * std::conj(ta.coeff) * lt.coeff * m_i_half *
                       im.radial(ta.prof, lt.prof, 0);
              }
              for (const auto& lt : sb.ladder_minus) {
                if (ta.m_ang != lt.m_ang) continue;
                acc -= sp.w * std::conj(ta.coeff) * lt.coeff * m_i_half *
                       im.radial(ta.prof, lt.prof, 0);
              }
              break;
          }
        }
      }
      out(arow, bcol) = acc * zf;
    }
  }
  // phi integral contributes 2 pi, z integral d; coefficients carry
  // 1/sqrt(2 pi d) each.
  out *= 2.0 * pi * im.cfg.d;
  return out;
}

// ---------------------------------------------------------------------------
// Operator assemblies
// ---------------------------------------------------------------------------

namespace {

std::vector<QuantumNumbers> collect_labels(const std::vector<LandauMode>& basis) {
  std::vector<QuantumNumbers> labels;
  labels.reserve(basis.size());
  for (const auto& m : basis) labels.push_back(m.qn);
  return labels;
}

}  // namespace

OperatorMatrix jz_matrix(const std::vector<LandauMode>& basis) {
  if (basis.empty()) throw std::invalid_argument("jz_matrix: empty basis");
  const int n = static_cast<int>(basis.size());
  OperatorMatrix op;
  op.entries = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) op.entries(i, i) = basis[i].qn.m_j();
  op.labels = collect_labels(basis);
  op.hermitian = true;
  return op;
}

OperatorMatrix lz_matrix(const std::vector<LandauMode>& basis) {
  // Modes are exact j_z eigenstates, so l_z = j_z - Sigma_z/2 compresses to
  // m_j I minus the spin sandwich.
  if (basis.empty()) throw std::invalid_argument("lz_matrix: empty basis");
  const int n = static_cast<int>(basis.size());
  MatrixAssembler asmb(basis, basis.front().cfg);
  OperatorMatrix op;
  op.entries = -asmb.sandwich(0.5 * dirac_matrices().Sigma[2], PlaneOp::One,
                              AxialOp::One);
  for (int i = 0; i < n; ++i) op.entries(i, i) += basis[i].qn.m_j();
  op.labels = collect_labels(basis);
  op.hermitian = true;
  return op;
}

std::pair<OperatorMatrix, OperatorMatrix> jxy_matrices(const MatrixAssembler& asmb) {
  const auto& d = dirac_matrices();
  const Matrix4cd I4 = Matrix4cd::Identity();

  Eigen::MatrixXcd jx = asmb.sandwich(I4, PlaneOp::Y, AxialOp::Pz) -
                        asmb.sandwich(I4, PlaneOp::Py, AxialOp::Z) +
                        asmb.sandwich(0.5 * d.Sigma[0], PlaneOp::One, AxialOp::One);
  Eigen::MatrixXcd jy = asmb.sandwich(I4, PlaneOp::Px, AxialOp::Z) -
                        asmb.sandwich(I4, PlaneOp::X, AxialOp::Pz) +
                        asmb.sandwich(0.5 * d.Sigma[1], PlaneOp::One, AxialOp::One);

  OperatorMatrix ox, oy;
  ox.entries = std::move(jx);
  oy.entries = std::move(jy);
  ox.labels = oy.labels = collect_labels(asmb.basis());
  ox.hermitian = oy.hermitian = true;
  return {std::move(ox), std::move(oy)};
}

std::pair<OperatorMatrix, OperatorMatrix> jxy_matrices(
    const std::vector<LandauMode>& basis, const PhysicalConfig& cfg) {
  MatrixAssembler asmb(basis, cfg);
  return jxy_matrices(asmb);
}

FieldPieces build_field_pieces(const MatrixAssembler& asmb) {
  const auto& d = dirac_matrices();
  FieldPieces p;
  p.labels = collect_labels(asmb.basis());
  p.kinetic_mass = asmb.sandwich(d.gamma0, PlaneOp::One, AxialOp::One) +
                   asmb.sandwich(d.alpha[0], PlaneOp::Px, AxialOp::One) +
                   asmb.sandwich(d.alpha[1], PlaneOp::Py, AxialOp::One) +
                   asmb.sandwich(d.alpha[2], PlaneOp::One, AxialOp::Pz);
  // (r x alpha)_l
  p.r_cross_alpha[0] = asmb.sandwich(d.alpha[2], PlaneOp::Y, AxialOp::One) -
                       asmb.sandwich(d.alpha[1], PlaneOp::One, AxialOp::Z);
  p.r_cross_alpha[1] = asmb.sandwich(d.alpha[0], PlaneOp::One, AxialOp::Z) -
                       asmb.sandwich(d.alpha[2], PlaneOp::X, AxialOp::One);
  p.r_cross_alpha[2] = asmb.sandwich(d.alpha[1], PlaneOp::X, AxialOp::One) -
                       asmb.sandwich(d.alpha[0], PlaneOp::Y, AxialOp::One);
  return p;
}

Eigen::Vector3d field_direction(const PhysicalConfig& cfg, double t) {
  const double st = std::sin(cfg.theta_B);
  return {st * std::cos(cfg.omega * t), st * std::sin(cfg.omega * t),
          std::cos(cfg.theta_B)};
}

Eigen::Vector3d field_direction_dot(const PhysicalConfig& cfg, double t) {
  const double st = std::sin(cfg.theta_B);
  return {-cfg.omega * st * std::sin(cfg.omega * t),
          cfg.omega * st * std::cos(cfg.omega * t), 0.0};
}

OperatorMatrix h_field_matrix(const FieldPieces& pieces, const PhysicalConfig& cfg,
                              double t, bool charged) {
  OperatorMatrix op;
  op.entries = pieces.kinetic_mass;
  if (charged) {
    const Eigen::Vector3d nvec = field_direction(cfg, t);
    const double pref = cfg.charge_sign * cfg.b / 2.0;
    for (int l = 0; l < 3; ++l)
      op.entries -= pref * nvec(l) * pieces.r_cross_alpha[l];
  }
  op.labels = pieces.labels;
  op.hermitian = true;
  return op;
}

Eigen::MatrixXcd rotation_matrix_y(const OperatorMatrix& jy, double theta_B) {
  Eigen::MatrixXcd sym = 0.5 * (jy.entries + jy.entries.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym);
  const int n = jy.dim();
  Eigen::VectorXcd phases(n);
  for (int k = 0; k < n; ++k)
    phases(k) = std::exp(complexd{0.0, -theta_B * es.eigenvalues()(k)});
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

OperatorMatrix h0_eff_matrix(const std::vector<LandauMode>& basis,
                             const PhysicalConfig& cfg, const OperatorMatrix& jy,
                             TruncationDiagnostics* diag) {
  const int n = static_cast<int>(basis.size());
  Eigen::MatrixXcd R = rotation_matrix_y(jy, cfg.theta_B);
  if (diag) {
    diag->unitarity_defect =
        (R.adjoint() * R - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
    diag->exceeded = diag->unitarity_defect > diag->tolerance;
  }
  Eigen::VectorXd e(n);
  for (int i = 0; i < n; ++i) e(i) = basis[i].energy;
  OperatorMatrix op;
  op.entries = R * e.asDiagonal() * R.adjoint();
  op.labels = collect_labels(basis);
  op.hermitian = true;
  return op;
}

OperatorMatrix h_eff_matrix(const OperatorMatrix& h0_eff, const OperatorMatrix& jz,
                            double omega) {
  OperatorMatrix op;
  op.entries = h0_eff.entries - omega * jz.entries;
  op.labels = h0_eff.labels;
  op.hermitian = true;
  return op;
}

double perturbative_energy(const QuantumNumbers& qn, const PhysicalConfig& cfg) {
  return energy0(qn, cfg) - qn.m_j() * cfg.omega * std::cos(cfg.theta_B);
}

DiracSpinor rotated_eigenstate_pointwise(const LandauMode& mode, double theta_B,
                                         const Eigen::Vector3d& point) {
  const double c = std::cos(theta_B);
  const double s = std::sin(theta_B);
  // R_y(-theta) r
  const double xr = c * point.x() - s * point.z();
  const double yr = point.y();
  const double zr = s * point.x() + c * point.z();
  return spin_rotation_y(theta_B) * mode.evaluate_cartesian(xr, yr, zr);
}

double rotation_route_gap(const OperatorMatrix& h0_rroute,
                          const OperatorMatrix& h0_direct,
                          const std::vector<int>& probe) {
  double gap = 0.0;
  for (int i : probe)
    for (int j : probe)
      gap = std::max(gap,
                     std::abs(h0_rroute.entries(i, j) - h0_direct.entries(i, j)));
  return gap;
}

std::vector<int> probe_indices(const std::vector<QuantumNumbers>& labels,
                               const BasisTruncation& probe_trunc) {
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    if (probe_trunc.contains(labels[i])) idx.push_back(i);
  return idx;
}

std::vector<DegenerateBlockInfo> degenerate_blocks(
    const std::vector<LandauMode>& basis, const Eigen::MatrixXcd& rotation,
    const OperatorMatrix& jz) {
  std::map<double, std::vector<int>> groups;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    groups[basis[i].energy].push_back(i);

  const Eigen::MatrixXcd rotated_jz =
      rotation.adjoint() * jz.entries * rotation;

  std::vector<DegenerateBlockInfo> out;
  for (const auto& [e, idx] : groups) {
    if (idx.size() < 2) continue;
    DegenerateBlockInfo info;
    info.energy0 = e;
    info.indices = idx;
    const int k = static_cast<int>(idx.size());
    Eigen::MatrixXcd block(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) block(a, b) = rotated_jz(idx[a], idx[b]);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (a != b) info.max_offdiag = std::max(info.max_offdiag, std::abs(block(a, b)));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block);
    Eigen::VectorXd diag(k);
    for (int a = 0; a < k; ++a) diag(a) = block(a, a).real();
    std::sort(diag.data(), diag.data() + k);
    for (int a = 0; a < k; ++a)
      info.max_eig_vs_diag =
          std::max(info.max_eig_vs_diag, std::abs(es.eigenvalues()(a) - diag(a)));
    out.push_back(std::move(info));
  }
  return out;
}

EffectiveModel build_effective_model(const PhysicalConfig& cfg,
                                     const BasisTruncation& trunc,
                                     double leakage_tolerance,
                                     const BasisTruncation* probe) {
  EffectiveModel model;
  model.cfg = cfg;
  model.trunc = trunc;
  model.basis = enumerate_basis(trunc, cfg);

  MatrixAssembler asmb(model.basis, cfg);
  std::tie(model.jx, model.jy) = jxy_matrices(asmb);
  model.jz = jz_matrix(model.basis);
  model.pieces = build_field_pieces(asmb);
  model.h0_direct = h_field_matrix(model.pieces, cfg, 0.0, true);

  model.diag.tolerance = leakage_tolerance;
  model.rotation = rotation_matrix_y(model.jy, cfg.theta_B);
  const int n = model.dim();
  model.diag.unitarity_defect =
      (model.rotation.adjoint() * model.rotation -
       Eigen::MatrixXcd::Identity(n, n))
          .cwiseAbs()
          .maxCoeff();

  Eigen::VectorXd e(n);
  for (int i = 0; i < n; ++i) e(i) = model.basis[i].energy;
  model.h0_eff.entries = model.rotation * e.asDiagonal() * model.rotation.adjoint();
  model.h0_eff.labels = model.jz.labels;
  model.h0_eff.hermitian = true;

  std::vector<int> probe_idx;
  if (probe)
    probe_idx = probe_indices(model.h0_eff.labels, *probe);
  else {
    probe_idx.resize(n);
    for (int i = 0; i < n; ++i) probe_idx[i] = i;
  }
  model.diag.rotation_gap =
      rotation_route_gap(model.h0_eff, model.h0_direct, probe_idx);
  model.diag.exceeded = model.diag.unitarity_defect > leakage_tolerance;

  model.h_eff = h_eff_matrix(model.h0_eff, model.jz, cfg.omega);
  model.h_eff_eigen = eigensolve(model.h_eff);
  return model;
}

std::vector<StateMatch> match_states(const EffectiveModel& model) {
  const Eigen::MatrixXcd overlaps =
      model.rotation.adjoint() * model.h_eff_eigen.vectors;
  std::vector<StateMatch> match(model.dim());
  for (int i = 0; i < model.dim(); ++i) {
    for (int k = 0; k < model.dim(); ++k) {
      const double o = std::abs(overlaps(i, k));
      if (o > match[i].overlap) {
        match[i].overlap = o;
        match[i].column = k;
      }
    }
  }
  return match;
}

}  // namespace rotlandau
