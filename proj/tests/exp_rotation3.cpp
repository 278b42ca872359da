// scratch experiment 3: who gets matched, and what J1 do they carry
#include <cstdio>

#include "rotlandau/evolution_phases.hpp"
#include "rotlandau/operator_matrices.hpp"

using namespace rotlandau;

int main() {
  PhysicalConfig cfg;
  cfg.b = 0.5;
  cfg.theta_B = pi / 3;
  cfg.omega = 0.01;
  cfg.d = 1.0;
  BasisTruncation trunc{2, 2, 4, true};
  auto basis = enumerate_basis(trunc, cfg);
  auto [jx, jy] = jxy_matrices(basis, cfg);
  auto jz = jz_matrix(basis);
  auto h0 = h0_eff_matrix(basis, cfg, jy);
  Eigen::MatrixXcd rot = rotation_matrix_y(jy, cfg.theta_B);

  for (double omega : {0.02, 0.01, 0.005}) {
    auto heff = h_eff_matrix(h0, jz, omega);
    auto sol = eigensolve(heff);
    for (int i = 0; i < (int)basis.size(); ++i) {
      const auto& qn = basis[i].qn;
      if (!(qn.n_z == 0 && qn.n_rho == 0 && qn.m == 0 && qn.energy_sign > 0))
        continue;
      Eigen::VectorXcd target = rot.col(i);
      int best = 0;
      double bover = 0.0;
      for (int k = 0; k < (int)basis.size(); ++k) {
        const double o = std::abs((target.adjoint() * sol.vectors.col(k))(0, 0));
        if (o > bover) {
          bover = o;
          best = k;
        }
      }
      const double tgt_jz = (target.adjoint() * jz.entries * target)(0, 0).real();
      const Eigen::VectorXcd v = sol.vectors.col(best);
      const double v_jz = (v.adjoint() * jz.entries * v)(0, 0).real();
      PhysicalConfig c2 = cfg;
      c2.omega = omega;
      std::printf(
          "omega=%.3f ms=%+d: overlap %.6f  E_exact %.10f E_pert %.10f "
          "defect %.3e | jz(target) %+.6f jz(matched) %+.6f\n",
          omega, qn.twice_ms, bover, sol.values(best),
          perturbative_energy(qn, c2), std::abs(sol.values(best) - perturbative_energy(qn, c2)),
          tgt_jz, v_jz);
    }
  }
  return 0;
}
