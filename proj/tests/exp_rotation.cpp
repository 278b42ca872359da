// scratch experiment: rotation-route convergence study
#include <cstdio>

#include "rotlandau/evolution_phases.hpp"
#include "rotlandau/operator_matrices.hpp"

using namespace rotlandau;

int main() {
  for (double theta : {pi / 12, pi / 6, pi / 3}) {
    for (double d : {pi, 2 * pi, 10.0}) {
      for (int nz : {2, 4, 6, 8}) {
        PhysicalConfig cfg;
        cfg.b = 0.5;
        cfg.theta_B = theta;
        cfg.omega = 0.01;
        cfg.d = d;
        BasisTruncation trunc{nz, 2, 4, true};
        auto basis = enumerate_basis(trunc, cfg);
        auto [jx, jy] = jxy_matrices(basis, cfg);
        auto jz = jz_matrix(basis);
        Eigen::MatrixXcd rotp = rotation_matrix_y(jy, theta);
        Eigen::MatrixXcd rotm = rotation_matrix_y(jy, -theta);

        // ground +1/2 state index
        int idx = -1;
        for (int i = 0; i < (int)basis.size(); ++i) {
          const auto& qn = basis[i].qn;
          if (qn.n_z == 0 && qn.n_rho == 0 && qn.m == 0 && qn.twice_ms == 1 &&
              qn.energy_sign > 0)
            idx = i;
        }
        auto jz_exp = [&](const Eigen::MatrixXcd& r) {
          Eigen::VectorXcd v = r.col(idx);
          return (v.adjoint() * jz.entries * v)(0, 0).real();
        };
        auto jx_exp = [&](const Eigen::MatrixXcd& r) {
          Eigen::VectorXcd v = r.col(idx);
          return (v.adjoint() * jx.entries * v)(0, 0).real();
        };
        // rotation gap both signs
        MatrixAssembler asmb(basis, cfg);
        auto pieces = build_field_pieces(asmb);
        auto h0d = h_field_matrix(pieces, cfg, 0.0, true);
        Eigen::VectorXd e(basis.size());
        for (int i = 0; i < (int)basis.size(); ++i) e(i) = basis[i].energy;
        Eigen::MatrixXcd hp = rotp * e.asDiagonal() * rotp.adjoint();
        Eigen::MatrixXcd hm = rotm * e.asDiagonal() * rotm.adjoint();
        BasisTruncation probe{1, 1, 1, true};
        auto pidx = probe_indices(h0d.labels, probe);
        double gapp = 0, gapm = 0;
        for (int i : pidx)
          for (int j : pidx) {
            gapp = std::max(gapp, std::abs(hp(i, j) - h0d.entries(i, j)));
            gapm = std::max(gapm, std::abs(hm(i, j) - h0d.entries(i, j)));
          }
        std::printf(
            "theta=%5.3f d=%6.3f nz=%d dim=%3d | jz+ %+8.5f jz- %+8.5f "
            "(want %+8.5f) jx+ %+8.5f (want %+8.5f) | gap+ %.3e gap- %.3e\n",
            theta, d, nz, (int)basis.size(), jz_exp(rotp), jz_exp(rotm),
            0.5 * std::cos(theta), jx_exp(rotp), 0.5 * std::sin(theta), gapp,
            gapm);
      }
    }
  }
  return 0;
}
