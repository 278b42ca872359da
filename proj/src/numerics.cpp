#include "rotlandau/numerics.hpp"

#include <Eigen/Dense>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace rotlandau {

double laguerre(int n, int a, double x) {
  if (n < 0 || a < 0) throw std::invalid_argument("laguerre: n, a must be >= 0");
  if (n == 0) return 1.0;
  double lm1 = 1.0;            // L_0
  double l = 1.0 + a - x;      // L_1
  for (int k = 1; k < n; ++k) {
    const double lp1 = ((2.0 * k + 1.0 + a - x) * l - (k + a) * lm1) / (k + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

std::vector<double> laguerre_coeffs(int n, int a) {
  if (n < 0 || a < 0) throw std::invalid_argument("laguerre_coeffs: n, a must be >= 0");
  std::vector<double> lm1{1.0};
  if (n == 0) return lm1;
  std::vector<double> l{1.0 + a, -1.0};
  for (int k = 1; k < n; ++k) {
    // (k+1) L_{k+1} = (2k+1+a - x) L_k - (k+a) L_{k-1}
    std::vector<double> next = poly_scale(l, 2.0 * k + 1.0 + a);
    next = poly_add(next, poly_scale(poly_mul_x(l), -1.0));
    next = poly_add(next, poly_scale(lm1, -(k + (double)a)));
    next = poly_scale(next, 1.0 / (k + 1.0));
    lm1 = std::move(l);
    l = std::move(next);
  }
  return l;
}

double poly_eval(const std::vector<double>& coeffs, double x) {
  double v = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
  return v;
}

std::vector<double> poly_derivative(const std::vector<double>& coeffs) {
  if (coeffs.size() <= 1) return {0.0};
  std::vector<double> d(coeffs.size() - 1);
  for (std::size_t k = 1; k < coeffs.size(); ++k) d[k - 1] = k * coeffs[k];
  return d;
}

std::vector<double> poly_mul_x(const std::vector<double>& coeffs) {
  std::vector<double> r(coeffs.size() + 1, 0.0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) r[k + 1] = coeffs[k];
  return r;
}

std::vector<double> poly_add(const std::vector<double>& p,
                             const std::vector<double>& q) {
  std::vector<double> r(std::max(p.size(), q.size()), 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) r[k] += p[k];
  for (std::size_t k = 0; k < q.size(); ++k) r[k] += q[k];
  return r;
}

std::vector<double> poly_scale(const std::vector<double>& p, double s) {
  std::vector<double> r(p);
  for (auto& c : r) c *= s;
  return r;
}

int poly_degree(const std::vector<double>& coeffs) {
  for (int k = (int)coeffs.size() - 1; k >= 0; --k)
    if (coeffs[k] != 0.0) return k;
  return 0;
}

GaussLaguerreRule gauss_laguerre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: n must be >= 1");
  // Golub-Welsch on the Jacobi matrix of the Laguerre recurrence:
  // diag a_k = 2k+1, offdiag b_k = k.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    J(k, k) = 2.0 * k + 1.0;
    if (k + 1 < n) {
      J(k, k + 1) = k + 1.0;
      J(k + 1, k) = k + 1.0;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  GaussLaguerreRule rule;
  rule.node.resize(n);
  rule.weight.resize(n);
  for (int k = 0; k < n; ++k) {
    rule.node[k] = es.eigenvalues()(k);
    const double v0 = es.eigenvectors()(0, k);
    rule.weight[k] = v0 * v0;  // mu_0 = Gamma(1) = 1
  }
  return rule;
}

double reduce_phase(double x) {
  double r = std::remainder(x, 2.0 * pi);
  if (r <= -pi) r += 2.0 * pi;
  return r;
}

}  // namespace rotlandau
