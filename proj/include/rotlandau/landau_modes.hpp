#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "rotlandau/errors.hpp"
#include "rotlandau/numerics.hpp"

namespace rotlandau {

using Vector4cd = Eigen::Vector4cd;
using DiracSpinor = Eigen::Vector4cd;

/// Dimensionless physical parameters, units hbar = c = M = 1.
///   b       : |q| B  (field strength, > 0)
///   charge_sign : sign of q (+1 or -1)
///   theta_B : tilt of the rotation cone, in [0, pi]
///   omega   : rotation rate of the field
///   d       : box length along z (> 0), periodic boundary conditions
struct PhysicalConfig {
  double b = 0.5;
  int charge_sign = +1;
  double theta_B = 0.0;
  double omega = 0.01;
  double d = 2.0 * pi;

  double alpha() const { return std::sqrt(b / 2.0); }  // inverse magnetic length
  double period() const { return 2.0 * pi / omega; }
  void validate() const;
  bool same_modes(const PhysicalConfig& o) const {
    return b == o.b && charge_sign == o.charge_sign && d == o.d;
  }
};

/// Mode labels. m_s is stored doubled (twice_ms = +-1) so all branch
/// predicates are exact integer arithmetic.
struct QuantumNumbers {
  int n_z = 0;
  int n_rho = 0;
  int m = 0;
  int twice_ms = +1;
  int energy_sign = +1;

  double m_s() const { return 0.5 * twice_ms; }
  int twice_mj() const { return 2 * m + twice_ms; }
  double m_j() const { return 0.5 * twice_mj(); }

  /// 2 n_rho + |m| + 1 - eps(q) (m + 2 m_s); a nonnegative even integer.
  int landau_bracket(int charge_sign) const;

  /// The E0 = -Mc^2 family: negative sign, n_z = 0, vanishing bracket.
  bool special_branch(int charge_sign) const;

  void validate() const;
  bool operator==(const QuantumNumbers&) const = default;
};

/// Landau-level energy in units Mc^2 (exact closed form).
/// Returns -1 exactly on the special branch.
double energy0(const QuantumNumbers& qn, const PhysicalConfig& cfg);

/// One radial factor of a spinor component:
///   value(rho) = e^{-x/2} (alpha rho)^power * poly(x),  x = alpha^2 rho^2.
struct RadialProfile {
  int power = 0;
  std::vector<double> poly{1.0};
  double eval(double rho, double alpha) const;
  bool is_zero() const;
};

/// One term of a spinor component: coeff * profile(rho) * e^{i m_ang phi}.
/// The common plane-wave factor e^{i k_z z} / sqrt(2 pi d) is handled by
/// the owning mode.
struct SpinorTerm {
  complexd coeff{0.0, 0.0};
  RadialProfile prof;
  int m_ang = 0;
};

/// In-plane ladder operators acting on a term:
///   s = +1:  p_+ (or pi_+),  s = -1:  p_- (or pi_-)
/// field_eps = 0 gives the bare momentum ladder p_s; field_eps = +-1 gives
/// pi_s = p_s -+ ... with the linear vector-potential term of charge sign
/// field_eps.  The angular index shifts by s; the radial profile stays in
/// closed polynomial form.
SpinorTerm apply_ladder(const SpinorTerm& t, int s, int field_eps, double alpha);

/// A closed-form Landau mode: four components, each a list of terms,
/// sharing the plane-wave factor in z.  Immutable after construction.
struct LandauMode {
  QuantumNumbers qn;
  PhysicalConfig cfg;
  double energy = 0.0;       // E0 in units Mc^2
  double norm_const = 0.0;   // N_i or N'
  std::array<std::vector<SpinorTerm>, 4> comps;

  double k_z() const { return 2.0 * pi * qn.n_z / cfg.d; }
  DiracSpinor evaluate(double rho, double phi, double z) const;
  DiracSpinor evaluate_cartesian(double x, double y, double z) const;
};

/// Closed-form construction; dispatches to the regular (Eq.-26/27/28 style)
/// or special (E0 = -Mc^2) branch automatically.
LandauMode build_mode(const QuantumNumbers& qn, const PhysicalConfig& cfg);

/// Regular branch only; throws DegenerateBranch on a special-branch label.
LandauMode build_regular_mode(const QuantumNumbers& qn, const PhysicalConfig& cfg);

/// Special branch only; the upper spinor is the ladder image of the lower
/// one with prefactor -1/2, which vanishes identically.
LandauMode build_special_mode(const QuantumNumbers& qn, const PhysicalConfig& cfg);

/// Box inner product <a|b>.  z and phi integrals are exact Kronecker
/// selections; the radial integral is a Gauss-Laguerre quadrature that is
/// exact for the polynomial-times-Gaussian integrands.
complexd inner_product(const LandauMode& a, const LandauMode& b,
                       const PhysicalConfig& cfg);

/// Radial integrals between two profiles with a common alpha:
///   extra_rho_power = 0 : int_0^inf Ra Rb rho drho
///   extra_rho_power = 1 : int_0^inf Ra Rb rho^2 drho
double radial_integral(const RadialProfile& a, const RadialProfile& b,
                       int extra_rho_power, double alpha);

}  // namespace rotlandau
