#include "rotlandau/spinor_algebra.hpp"

namespace rotlandau {

namespace {

Eigen::Matrix2cd pauli(int i) {
  Eigen::Matrix2cd s;
  switch (i) {
    case 0: s << 0, 1, 1, 0; break;
    case 1: s << 0, -iu, iu, 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

Matrix4cd blocks(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b,
                 const Eigen::Matrix2cd& c, const Eigen::Matrix2cd& d) {
  Matrix4cd m;
  m.block<2, 2>(0, 0) = a;
  m.block<2, 2>(0, 2) = b;
  m.block<2, 2>(2, 0) = c;
  m.block<2, 2>(2, 2) = d;
  return m;
}

}  // namespace

DiracMatrixSet build_dirac_matrices() {
  DiracMatrixSet s;
  const Eigen::Matrix2cd I2 = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd Z2 = Eigen::Matrix2cd::Zero();

  s.gamma0 = blocks(I2, Z2, Z2, -I2);
  for (int i = 0; i < 3; ++i) {
    s.gamma[i] = blocks(Z2, pauli(i), -pauli(i), Z2);
    s.alpha[i] = s.gamma0 * s.gamma[i];
  }
  // Sigma^i = (i/2) eps_{ijk} gamma^j gamma^k
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    s.Sigma[i] = iu * s.gamma[j] * s.gamma[k];  // (i/2) * 2 gamma^j gamma^k
  }
  auto gamma_mu = [&](int mu) -> const Matrix4cd& {
    return mu == 0 ? s.gamma0 : s.gamma[mu - 1];
  };
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      s.sigma_munu[mu][nu] =
          iu * 0.5 * (gamma_mu(mu) * gamma_mu(nu) - gamma_mu(nu) * gamma_mu(mu));
  return s;
}

const DiracMatrixSet& dirac_matrices() {
  static const DiracMatrixSet instance = build_dirac_matrices();
  return instance;
}

Matrix4cd spin_rotation_y(double theta) {
  // Sigma_y^2 = I, so the exponential closes after one term.
  const DiracMatrixSet& d = dirac_matrices();
  return std::cos(theta / 2.0) * Matrix4cd::Identity() -
         iu * std::sin(theta / 2.0) * d.Sigma[1];
}

double metric(int mu, int nu) {
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

}  // namespace rotlandau
