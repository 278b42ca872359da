// scratch experiment 2: m != 0 rotated expectations, commutator-defect
// ladder, and the omega^2 scaling window
#include <cstdio>

#include "rotlandau/evolution_phases.hpp"
#include "rotlandau/operator_matrices.hpp"

using namespace rotlandau;

int main(int argc, char** argv) {
  const int mode = argc > 1 ? std::atoi(argv[1]) : 0;

  if (mode == 0) {
    // m=+-1 rotated <J_z> convergence in (m_abs, n_rho) at fixed small d
    for (double d : {1.0, pi / 2, pi}) {
      for (int ma : {4, 6, 8}) {
        for (int nr : {2, 3, 4}) {
          PhysicalConfig cfg;
          cfg.b = 0.5;
          cfg.theta_B = pi / 3;
          cfg.omega = 0.01;
          cfg.d = d;
          BasisTruncation trunc{2, nr, ma, true};
          auto basis = enumerate_basis(trunc, cfg);
          auto [jx, jy] = jxy_matrices(basis, cfg);
          auto jz = jz_matrix(basis);
          Eigen::MatrixXcd rot = rotation_matrix_y(jy, cfg.theta_B);
          std::printf("d=%5.3f ma=%d nr=%d dim=%4d |", d, ma, nr,
                      (int)basis.size());
          for (int m : {1, -1}) {
            for (int tms : {+1, -1}) {
              int idx = -1;
              for (int i = 0; i < (int)basis.size(); ++i) {
                const auto& qn = basis[i].qn;
                if (qn.n_z == 0 && qn.n_rho == 0 && qn.m == m &&
                    qn.twice_ms == tms && qn.energy_sign > 0)
                  idx = i;
              }
              Eigen::VectorXcd v = rot.col(idx);
              const double jzv = (v.adjoint() * jz.entries * v)(0, 0).real();
              const double want =
                  basis[idx].qn.m_j() * std::cos(cfg.theta_B);
              std::printf(" m=%+d ms=%+d: %+8.5f(want %+8.5f)", m, tms, jzv,
                          want);
            }
          }
          std::printf("\n");
        }
      }
    }
  }

  if (mode == 1) {
    // commutator-defect ladder on a fixed probe block
    PhysicalConfig cfg;
    cfg.b = 0.5;
    cfg.theta_B = pi / 3;
    cfg.omega = 0.01;
    cfg.d = pi;
    BasisTruncation probe{1, 1, 1, true};
    for (const BasisTruncation trunc :
         {BasisTruncation{2, 2, 3, true}, BasisTruncation{3, 3, 4, true},
          BasisTruncation{4, 3, 5, true}, BasisTruncation{5, 4, 6, true},
          BasisTruncation{6, 4, 7, true}}) {
      auto basis = enumerate_basis(trunc, cfg);
      auto [jx, jy] = jxy_matrices(basis, cfg);
      auto jz = jz_matrix(basis);
      Eigen::MatrixXcd defect = jx.entries * jy.entries -
                                jy.entries * jx.entries - iu * jz.entries;
      auto pidx = probe_indices(jz.labels, probe);
      double dmax = 0;
      for (int i : pidx)
        for (int j : pidx) dmax = std::max(dmax, std::abs(defect(i, j)));
      std::printf("trunc (%d,%d,%d) dim=%4d probe-commutator-defect %.4e\n",
                  trunc.n_z_max, trunc.n_rho_max, trunc.m_abs_max,
                  (int)basis.size(), dmax);
    }
  }

  if (mode == 2) {
    // omega^2 window: defect vs Eq-33 for the ground pair, block offdiags
    for (double d : {1.0, pi}) {
      for (int ma : {4, 6}) {
        PhysicalConfig cfg;
        cfg.b = 0.5;
        cfg.theta_B = pi / 3;
        cfg.omega = 0.01;
        cfg.d = d;
        BasisTruncation trunc{2, 2, ma, true};
        auto basis = enumerate_basis(trunc, cfg);
        auto [jx, jy] = jxy_matrices(basis, cfg);
        auto jz = jz_matrix(basis);
        auto h0 = h0_eff_matrix(basis, cfg, jy);
        Eigen::MatrixXcd rot = rotation_matrix_y(jy, cfg.theta_B);
        auto blocks = degenerate_blocks(basis, rot, jz);
        double blk_off_e1 = 0;
        for (auto& blk : blocks)
          if (std::abs(blk.energy0 - 1.0) < 1e-12) blk_off_e1 = blk.max_offdiag;

        auto defect_at = [&](double omega) {
          auto heff = h_eff_matrix(h0, jz, omega);
          auto sol = eigensolve(heff);
          double worst = 0.0;
          for (int i = 0; i < (int)basis.size(); ++i) {
            const auto& qn = basis[i].qn;
            if (!(qn.n_z == 0 && qn.n_rho == 0 && qn.m == 0 && qn.energy_sign > 0))
              continue;
            Eigen::VectorXcd target = rot.col(i);
            int best = 0;
            double bover = 0.0;
            for (int k = 0; k < (int)basis.size(); ++k) {
              const double o =
                  std::abs((target.adjoint() * sol.vectors.col(k))(0, 0));
              if (o > bover) {
                bover = o;
                best = k;
              }
            }
            PhysicalConfig c2 = cfg;
            c2.omega = omega;
            worst = std::max(worst,
                             std::abs(sol.values(best) - perturbative_energy(qn, c2)));
          }
          return worst;
        };
        const double d1 = defect_at(0.02), d2 = defect_at(0.01), d3 = defect_at(0.005);
        std::printf(
            "d=%5.3f ma=%d: blockoff(E=1) %.3e defects %.3e %.3e %.3e ratios "
            "%.2f %.2f\n",
            d, ma, blk_off_e1, d1, d2, d3, d1 / d2, d2 / d3);
      }
    }
  }
  return 0;
}
