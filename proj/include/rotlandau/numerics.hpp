#pragma once

#include <complex>
#include <numbers>
#include <vector>

namespace rotlandau {

using complexd = std::complex<double>;
inline constexpr double pi = std::numbers::pi;
inline constexpr complexd iu{0.0, 1.0};

/// Associated Laguerre polynomial L_n^a(x), by the three-term recurrence in n.
double laguerre(int n, int a, double x);

/// Coefficient vector of L_n^a in the monomial basis, coeffs[k] * x^k.
std::vector<double> laguerre_coeffs(int n, int a);

double poly_eval(const std::vector<double>& coeffs, double x);
std::vector<double> poly_derivative(const std::vector<double>& coeffs);
std::vector<double> poly_mul_x(const std::vector<double>& coeffs);
std::vector<double> poly_add(const std::vector<double>& p,
                             const std::vector<double>& q);
std::vector<double> poly_scale(const std::vector<double>& p, double s);
int poly_degree(const std::vector<double>& coeffs);

/// Gauss-Laguerre rule for weight e^{-x} on [0, inf): exact for polynomials
/// of degree <= 2n-1. Nodes ascending.
struct GaussLaguerreRule {
  std::vector<double> node;
  std::vector<double> weight;
};
GaussLaguerreRule gauss_laguerre(int n);

/// Reduce a phase to the declared branch (-pi, pi].
double reduce_phase(double x);

}  // namespace rotlandau
