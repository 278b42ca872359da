#include "rotlandau/evolution_phases.hpp"

#include <cmath>

namespace rotlandau {

Eigen::VectorXcd w_diagonal(double t, const std::vector<QuantumNumbers>& labels,
                            double omega) {
  Eigen::VectorXcd w(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    w(i) = std::exp(complexd{0.0, -omega * t * labels[i].m_j()});
  return w;
}

OperatorMatrix w_matrix(double t, const std::vector<QuantumNumbers>& labels,
                        double omega) {
  OperatorMatrix op;
  op.entries = w_diagonal(t, labels, omega).asDiagonal();
  op.labels = labels;
  op.hermitian = false;
  return op;
}

Eigen::VectorXcd evolve_closed_form(const Eigen::VectorXcd& psi0, double t,
                                    const EigenSolution& h_eff_eigen,
                                    const std::vector<QuantumNumbers>& labels,
                                    double omega) {
  const int n = static_cast<int>(psi0.size());
  Eigen::VectorXcd phases(n);
  for (int k = 0; k < n; ++k)
    phases(k) = std::exp(complexd{0.0, -h_eff_eigen.values(k) * t});
  Eigen::VectorXcd psi =
      h_eff_eigen.vectors *
      (phases.array() * (h_eff_eigen.vectors.adjoint() * psi0).array()).matrix();
  return (w_diagonal(t, labels, omega).array() * psi.array()).matrix();
}

namespace {

// H(t) psi = W(t) H0 W(t)^dag psi, with W diagonal.
Eigen::VectorXcd apply_h_of_t(const Eigen::MatrixXcd& h0,
                              const Eigen::VectorXcd& wdiag,
                              const Eigen::VectorXcd& psi) {
  Eigen::VectorXcd tmp = (wdiag.array().conjugate() * psi.array()).matrix();
  tmp = h0 * tmp;
  return (wdiag.array() * tmp.array()).matrix();
}

}  // namespace

Eigen::VectorXcd brute_force_evolve(const Eigen::VectorXcd& psi0, double t_end,
                                    const Eigen::MatrixXcd& h0,
                                    const std::vector<QuantumNumbers>& labels,
                                    double omega, double local_tol,
                                    IntegratorStats* stats) {
  // Dormand-Prince 5(4), FSAL, PI step-size control.
  static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static const double a21 = 1.0 / 5;
  static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                      a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                      a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                      a65 = -5103.0 / 18656;
  static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                      b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static const double e1 = 35.0 / 384 - 5179.0 / 57600,
                      e3 = 500.0 / 1113 - 7571.0 / 16695,
                      e4 = 125.0 / 192 - 393.0 / 640,
                      e5 = -2187.0 / 6784 + 92097.0 / 339200,
                      e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

  if (t_end < 0.0) throw std::invalid_argument("brute_force_evolve: t_end < 0");
  auto f = [&](double t, const Eigen::VectorXcd& y) {
    return (-iu) * apply_h_of_t(h0, w_diagonal(t, labels, omega), y);
  };

  Eigen::VectorXcd y = psi0;
  double t = 0.0;
  if (t_end == 0.0) return y;

  double h = std::min(1e-3, t_end);
  double err_old = 1e-4;
  const double hmin = 1e-14 * std::max(1.0, t_end);
  Eigen::VectorXcd k1 = f(t, y);
  IntegratorStats local_stats;
  local_stats.min_step = h;

  while (t < t_end) {
    h = std::min(h, t_end - t);
    const Eigen::VectorXcd k2 = f(t + c2 * h, y + h * (a21 * k1));
    const Eigen::VectorXcd k3 = f(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
    const Eigen::VectorXcd k4 =
        f(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const Eigen::VectorXcd k5 =
        f(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Eigen::VectorXcd k6 = f(
        t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Eigen::VectorXcd ynew =
        y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Eigen::VectorXcd k7 = f(t + h, ynew);  // FSAL
    const Eigen::VectorXcd errv =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double err2 = 0.0;
    for (int i = 0; i < y.size(); ++i) {
      const double sc =
          local_tol + local_tol * std::max(std::abs(y(i)), std::abs(ynew(i)));
      const double r = std::abs(errv(i)) / sc;
      err2 += r * r;
    }
    const double err = std::sqrt(err2 / y.size());

    if (err <= 1.0) {
      t += h;
      y = ynew;
      k1 = k7;
      ++local_stats.accepted;
      err_old = std::max(err, 1e-4);
    } else {
      ++local_stats.rejected;
    }
    const double fac =
        0.9 * std::pow(std::max(err, 1e-16), -0.17) * std::pow(err_old, 0.04);
    h *= std::clamp(fac, 0.2, 5.0);
    local_stats.min_step = std::min(local_stats.min_step, h);
    if (h < hmin)
      throw StepFailure("brute_force_evolve: step size underflow", t);
  }
  if (stats) *stats = local_stats;
  return y;
}

double solid_angle_phase(double m_j, double theta_B) {
  const double omega_b = 2.0 * pi * (1.0 - std::cos(theta_B));
  return reduce_phase(-m_j * omega_b);
}

PhaseReport phase_report(const OperatorMatrix& h_eff, const OperatorMatrix& jz,
                         const Eigen::MatrixXcd& h0, double E,
                         const Eigen::VectorXcd& v,
                         const EigenSolution& h_eff_eigen,
                         const PhysicalConfig& cfg, double m_j_label) {
  const double scale = 1.0 + h_eff.entries.cwiseAbs().maxCoeff();
  const double residual = (h_eff.entries * v - E * v).norm();
  if (residual > 1e-9 * scale)
    throw ResidualTooLarge("phase_report: eigenpair residual " +
                           std::to_string(residual));

  PhaseReport rep;
  rep.E_i = E;
  rep.T = cfg.period();
  rep.jz_expect = (v.adjoint() * jz.entries * v)(0, 0).real();
  rep.delta = reduce_phase(-E * rep.T - pi);
  rep.beta_unreduced = -E * rep.T - 2.0 * pi * rep.jz_expect;
  rep.beta = reduce_phase(rep.beta_unreduced);
  rep.gamma = reduce_phase(rep.delta - rep.beta);
  rep.solid_angle = 2.0 * pi * (1.0 - std::cos(cfg.theta_B));
  rep.m_j_label = m_j_label;
  rep.gamma_solid_angle = solid_angle_phase(m_j_label, cfg.theta_B);
  rep.defect = std::abs(reduce_phase(rep.gamma - rep.gamma_solid_angle));
  rep.h_expect = E + cfg.omega * rep.jz_expect;

  // <H(t)> along the closed-form trajectory and the cyclic defect.
  const int nsamples = 8;
  for (int k = 0; k <= nsamples; ++k) {
    const double t = rep.T * k / nsamples;
    const Eigen::VectorXcd psi =
        evolve_closed_form(v, t, h_eff_eigen, h_eff.labels, cfg.omega);
    const Eigen::VectorXcd wdiag = w_diagonal(t, h_eff.labels, cfg.omega);
    const double h_t =
        (psi.adjoint() * apply_h_of_t(h0, wdiag, psi))(0, 0).real();
    rep.h_expect_deviation =
        std::max(rep.h_expect_deviation, std::abs(h_t - rep.h_expect));
    if (k == nsamples) {
      const complexd phase = std::exp(complexd{0.0, rep.delta});
      rep.cyclic_defect = (psi - phase * v).norm();
    }
  }
  return rep;
}

std::vector<TrajectorySample> j_trajectory(const Eigen::VectorXcd& psi0,
                                           const std::vector<double>& times,
                                           const EffectiveModel& model) {
  std::vector<TrajectorySample> out;
  out.reserve(times.size());
  for (double t : times) {
    TrajectorySample s;
    s.t = t;
    s.state = evolve_closed_form(psi0, t, model.h_eff_eigen, model.h_eff.labels,
                                 model.cfg.omega);
    s.norm = s.state.norm();
    s.j_expect(0) = (s.state.adjoint() * model.jx.entries * s.state)(0, 0).real();
    s.j_expect(1) = (s.state.adjoint() * model.jy.entries * s.state)(0, 0).real();
    s.j_expect(2) = (s.state.adjoint() * model.jz.entries * s.state)(0, 0).real();
    const Eigen::VectorXcd wdiag =
        w_diagonal(t, model.h_eff.labels, model.cfg.omega);
    s.h_expect = (s.state.adjoint() *
                  apply_h_of_t(model.h0_eff.entries, wdiag, s.state))(0, 0)
                     .real();
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace rotlandau
