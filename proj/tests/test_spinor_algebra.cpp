#include <doctest.h>

#include "oracle_helpers.hpp"
#include "rotlandau/spinor_algebra.hpp"

using namespace rotlandau;

namespace {

double max_abs(const Matrix4cd& m) { return m.cwiseAbs().maxCoeff(); }

const Matrix4cd& gamma_mu(const DiracMatrixSet& d, int mu) {
  return mu == 0 ? d.gamma0 : d.gamma[mu - 1];
}

}  // namespace

TEST_SUITE("spinor_algebra") {

TEST_CASE("Clifford anticommutators match the metric") {
  const auto d = build_dirac_matrices();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Matrix4cd anti =
          gamma_mu(d, mu) * gamma_mu(d, nu) + gamma_mu(d, nu) * gamma_mu(d, mu);
      const Matrix4cd expected = 2.0 * metric(mu, nu) * Matrix4cd::Identity();
      CHECK(max_abs(anti - expected) <= 1e-14);
    }
  // (gamma^0)^2 = I, (gamma^1)^2 = -I
  CHECK(max_abs(d.gamma0 * d.gamma0 - Matrix4cd::Identity()) <= 1e-14);
  CHECK(max_abs(d.gamma[0] * d.gamma[0] + Matrix4cd::Identity()) <= 1e-14);
}

TEST_CASE("representation anchors") {
  const auto& d = dirac_matrices();
  Eigen::Vector4cd diag = d.gamma0.diagonal();
  CHECK(diag(0).real() == doctest::Approx(1.0));
  CHECK(diag(1).real() == doctest::Approx(1.0));
  CHECK(diag(2).real() == doctest::Approx(-1.0));
  CHECK(diag(3).real() == doctest::Approx(-1.0));
  CHECK(max_abs(d.gamma0 - d.gamma0.diagonal().asDiagonal().toDenseMatrix()) <= 1e-14);

  // Sigma_z = diag(1,-1,1,-1), computed independently from the epsilon sum.
  Matrix4cd sigma_z_oracle = iu * 0.5 *
      (d.gamma[0] * d.gamma[1] - d.gamma[1] * d.gamma[0]);
  Matrix4cd expect = Eigen::Vector4cd(1, -1, 1, -1).asDiagonal();
  CHECK(max_abs(d.Sigma[2] - expect) <= 1e-14);
  CHECK(max_abs(sigma_z_oracle - expect) <= 1e-14);
}

TEST_CASE("alpha, Sigma and sigma_munu identities") {
  const auto& d = dirac_matrices();
  for (int i = 0; i < 3; ++i) {
    CHECK(max_abs(d.alpha[i] - d.gamma0 * d.gamma[i]) <= 1e-14);
    // gamma^0 Hermitian, gamma^i anti-Hermitian, Sigma^i Hermitian
    CHECK(max_abs(d.gamma[i] + d.gamma[i].adjoint()) <= 1e-14);
    CHECK(max_abs(d.Sigma[i] - d.Sigma[i].adjoint()) <= 1e-14);
    // Sigma^i has eigenvalues +-1
    CHECK(max_abs(d.Sigma[i] * d.Sigma[i] - Matrix4cd::Identity()) <= 1e-14);
  }
  CHECK(max_abs(d.gamma0 - d.gamma0.adjoint()) <= 1e-14);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Matrix4cd comm = gamma_mu(d, mu) * gamma_mu(d, nu) -
                             gamma_mu(d, nu) * gamma_mu(d, mu);
      CHECK(max_abs(d.sigma_munu[mu][nu] - iu * 0.5 * comm) <= 1e-14);
      CHECK(max_abs(d.sigma_munu[mu][nu] + d.sigma_munu[nu][mu]) <= 1e-14);
    }
}

TEST_CASE("spin rotation about y: anchors and series oracle") {
  const auto& d = dirac_matrices();
  CHECK(max_abs(spin_rotation_y(0.0) - Matrix4cd::Identity()) <= 1e-14);
  // spinor double cover
  CHECK(max_abs(spin_rotation_y(2.0 * pi) + Matrix4cd::Identity()) <= 1e-13);

  // theta = pi/2 against the independent Taylor exponential of the generator
  for (double theta : {pi / 2, 0.31, -1.7, 4.0}) {
    const Matrix4cd series = oracle::expm_taylor(-iu * theta * 0.5 * d.Sigma[1]);
    CHECK(max_abs(spin_rotation_y(theta) - series) <= 1e-13);
  }
  // explicit pi/2 block pattern: cos(pi/4) I -+ i sin(pi/4) sigma_y blocks
  const Matrix4cd r = spin_rotation_y(pi / 2);
  const double c = std::cos(pi / 4), s = std::sin(pi / 4);
  Eigen::Matrix2cd expected;
  expected << c, -s, s, c;  // cos I - i sin sigma_y is real rotation
  CHECK((r.block<2, 2>(0, 0) - expected).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((r.block<2, 2>(2, 2) - expected).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK(r.block<2, 2>(0, 2).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK(r.block<2, 2>(2, 0).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("spin rotation group law and generator commutation") {
  const auto& d = dirac_matrices();
  std::vector<std::pair<double, double>> pairs{{0.3, 1.1}, {-2.0, 0.7}, {5.0, -3.3}};
  for (auto [a, b] : pairs) {
    CHECK(max_abs(spin_rotation_y(a) * spin_rotation_y(b) - spin_rotation_y(a + b)) <=
          1e-12);
  }
  for (double theta : {0.4, 2.9}) {
    const Matrix4cd r = spin_rotation_y(theta);
    CHECK(max_abs(d.Sigma[1] * r - r * d.Sigma[1]) <= 1e-14);
    CHECK(max_abs(r * r.adjoint() - Matrix4cd::Identity()) <= 1e-14);
    CHECK(std::abs(r.determinant() - complexd{1.0, 0.0}) <= 1e-13);
  }
  // period 4 pi
  CHECK(max_abs(spin_rotation_y(4.0 * pi) - Matrix4cd::Identity()) <= 1e-12);
}

}  // TEST_SUITE
