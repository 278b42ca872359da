#include "rotlandau/landau_modes.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace rotlandau {

void PhysicalConfig::validate() const {
  if (!(b > 0.0)) throw std::invalid_argument("PhysicalConfig: b must be > 0");
  if (!(d > 0.0)) throw std::invalid_argument("PhysicalConfig: d must be > 0");
  if (charge_sign != +1 && charge_sign != -1)
    throw std::invalid_argument("PhysicalConfig: charge_sign must be +-1");
  if (!(theta_B >= 0.0 && theta_B <= pi))
    throw std::invalid_argument("PhysicalConfig: theta_B must be in [0, pi]");
  if (!std::isfinite(omega))
    throw std::invalid_argument("PhysicalConfig: omega must be finite");
}

int QuantumNumbers::landau_bracket(int charge_sign) const {
  return 2 * n_rho + std::abs(m) + 1 - charge_sign * (m + twice_ms);
}

bool QuantumNumbers::special_branch(int charge_sign) const {
  return energy_sign < 0 && n_z == 0 && landau_bracket(charge_sign) == 0;
}

void QuantumNumbers::validate() const {
  if (n_rho < 0) throw std::invalid_argument("QuantumNumbers: n_rho must be >= 0");
  if (twice_ms != +1 && twice_ms != -1)
    throw std::invalid_argument("QuantumNumbers: m_s must be +-1/2");
  if (energy_sign != +1 && energy_sign != -1)
    throw std::invalid_argument("QuantumNumbers: energy_sign must be +-1");
}

double energy0(const QuantumNumbers& qn, const PhysicalConfig& cfg) {
  qn.validate();
  cfg.validate();
  const int bracket = qn.landau_bracket(cfg.charge_sign);
  // Cannot be negative for valid labels; guard the formula anyway.
  if (bracket < 0 || bracket % 2 != 0)
    throw std::logic_error("energy0: Landau bracket must be a nonnegative even integer");
  const double kz = 2.0 * pi * qn.n_z / cfg.d;
  return qn.energy_sign * std::sqrt(1.0 + kz * kz + cfg.b * bracket);
}

double RadialProfile::eval(double rho, double alpha) const {
  const double x = alpha * alpha * rho * rho;
  double p = 1.0;
  for (int k = 0; k < power; ++k) p *= alpha * rho;
  return std::exp(-0.5 * x) * p * poly_eval(poly, x);
}

bool RadialProfile::is_zero() const {
  for (double c : poly)
    if (c != 0.0) return false;
  return true;
}

SpinorTerm apply_ladder(const SpinorTerm& t, int s, int field_eps, double alpha) {
  assert(s == +1 || s == -1);
  const int p = t.prof.power;
  // p_s [ C e^{-x/2} (ar)^p P(x) e^{im phi} ]
  //   = -i a C e^{i(m+s) phi} e^{-x/2}
  //     [ (p - s m)(ar)^{p-1} P + (ar)^{p+1} ((s eps - 1) P + 2 P') ]
  const double cfield = static_cast<double>(s * field_eps) - 1.0;
  std::vector<double> core =
      poly_add(poly_scale(t.prof.poly, cfield),
               poly_scale(poly_derivative(t.prof.poly), 2.0));
  SpinorTerm out;
  out.coeff = t.coeff * (-iu) * alpha;
  out.m_ang = t.m_ang + s;
  const int low = p - s * t.m_ang;
  if (low == 0) {
    out.prof.power = p + 1;
    out.prof.poly = std::move(core);
  } else {
    assert(p >= 1 && "ladder would produce a negative radial power");
    out.prof.power = p - 1;
    out.prof.poly =
        poly_add(poly_scale(t.prof.poly, static_cast<double>(low)), poly_mul_x(core));
  }
  return out;
}

namespace {

void push_term(std::vector<SpinorTerm>& comp, SpinorTerm t) {
  if (t.coeff == complexd{0.0, 0.0} || t.prof.is_zero()) return;
  comp.push_back(std::move(t));
}

}  // namespace

LandauMode build_regular_mode(const QuantumNumbers& qn, const PhysicalConfig& cfg) {
  qn.validate();
  cfg.validate();
  if (qn.special_branch(cfg.charge_sign))
    throw DegenerateBranch(
        "regular-branch construction requested for an E0 = -Mc^2 label");

  LandauMode mode;
  mode.qn = qn;
  mode.cfg = cfg;
  mode.energy = energy0(qn, cfg);

  const double E = mode.energy;
  const double alpha = cfg.alpha();
  const int a = std::abs(qn.m);
  const int n = qn.n_rho;

  const double ratio = (E + 1.0) / E;
  assert(ratio > 0.0);
  mode.norm_const = alpha * std::sqrt(ratio) *
                    std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + a + 1.0)));

  const double kz = mode.k_z();
  const complexd box = 1.0 / std::sqrt(2.0 * pi * cfg.d);

  SpinorTerm u;
  u.coeff = mode.norm_const * box;
  u.prof = RadialProfile{a, laguerre_coeffs(n, a)};
  u.m_ang = qn.m;

  const int upper = (qn.twice_ms > 0) ? 0 : 1;
  push_term(mode.comps[upper], u);

  // v = sigma.(p - qA_z) u / (E + 1): one term proportional to u from the
  // k_z part, one ladder term with the angular factor shifted by +-1 and
  // the spin flipped.
  const double inv = 1.0 / (E + 1.0);
  if (qn.twice_ms > 0) {
    SpinorTerm vz = u;
    vz.coeff *= kz * inv;
    push_term(mode.comps[2], vz);
    SpinorTerm vl = apply_ladder(u, +1, cfg.charge_sign, alpha);
    vl.coeff *= inv;
    push_term(mode.comps[3], vl);
  } else {
    SpinorTerm vl = apply_ladder(u, -1, cfg.charge_sign, alpha);
    vl.coeff *= inv;
    push_term(mode.comps[2], vl);
    SpinorTerm vz = u;
    vz.coeff *= -kz * inv;
    push_term(mode.comps[3], vz);
  }
  return mode;
}

LandauMode build_special_mode(const QuantumNumbers& qn, const PhysicalConfig& cfg) {
  qn.validate();
  cfg.validate();
  if (!qn.special_branch(cfg.charge_sign))
    throw std::invalid_argument("build_special_mode: label is not on the special branch");

  LandauMode mode;
  mode.qn = qn;
  mode.cfg = cfg;
  mode.energy = -1.0;

  const double alpha = cfg.alpha();
  const int a = std::abs(qn.m);
  mode.norm_const = std::sqrt(2.0) * alpha * std::exp(-0.5 * std::lgamma(a + 1.0));

  const complexd box = 1.0 / std::sqrt(2.0 * pi * cfg.d);

  SpinorTerm v;
  v.coeff = mode.norm_const * box;
  v.prof = RadialProfile{a, {1.0}};
  v.m_ang = qn.m;

  const int lower = (qn.twice_ms > 0) ? 2 : 3;
  push_term(mode.comps[lower], v);

  // u = -(1/2) sigma.(p - qA_z) v.  k_z = 0 here, and the ladder
  // annihilates the profile, so this is identically zero; the construction
  // is kept literal and the zero terms are pruned.
  if (qn.twice_ms > 0) {
    SpinorTerm ul = apply_ladder(v, +1, cfg.charge_sign, alpha);
    ul.coeff *= -0.5;
    push_term(mode.comps[1], ul);
  } else {
    SpinorTerm ul = apply_ladder(v, -1, cfg.charge_sign, alpha);
    ul.coeff *= -0.5;
    push_term(mode.comps[0], ul);
  }
  return mode;
}

LandauMode build_mode(const QuantumNumbers& qn, const PhysicalConfig& cfg) {
  return qn.special_branch(cfg.charge_sign) ? build_special_mode(qn, cfg)
                                            : build_regular_mode(qn, cfg);
}

DiracSpinor LandauMode::evaluate(double rho, double phi, double z) const {
  const double alpha = cfg.alpha();
  const complexd zfac = std::exp(iu * (k_z() * z));
  DiracSpinor out = DiracSpinor::Zero();
  for (int c = 0; c < 4; ++c) {
    complexd acc{0.0, 0.0};
    for (const SpinorTerm& t : comps[c])
      acc += t.coeff * t.prof.eval(rho, alpha) *
             std::exp(iu * (static_cast<double>(t.m_ang) * phi));
    out(c) = acc * zfac;
  }
  return out;
}

DiracSpinor LandauMode::evaluate_cartesian(double x, double y, double z) const {
  return evaluate(std::hypot(x, y), std::atan2(y, x), z);
}

double radial_integral(const RadialProfile& a, const RadialProfile& b,
                       int extra_rho_power, double alpha) {
  const int psum = a.power + b.power + extra_rho_power;
  if (psum % 2 != 0)
    throw std::logic_error("radial_integral: odd combined radial power");
  const int half = psum / 2;
  const int degree = half + poly_degree(a.poly) + poly_degree(b.poly);

  static const GaussLaguerreRule fixed = gauss_laguerre(64);
  const GaussLaguerreRule* rule = &fixed;
  GaussLaguerreRule local;
  if (2 * (int)fixed.node.size() - 1 < degree) {
    local = gauss_laguerre(degree / 2 + 2);
    rule = &local;
  }

  double sum = 0.0;
  for (std::size_t i = 0; i < rule->node.size(); ++i) {
    const double x = rule->node[i];
    double xp = 1.0;
    for (int k = 0; k < half; ++k) xp *= x;
    sum += rule->weight[i] * xp * poly_eval(a.poly, x) * poly_eval(b.poly, x);
  }
  double scale = 1.0 / (2.0 * alpha * alpha);
  for (int k = 0; k < extra_rho_power; ++k) scale /= alpha;
  return sum * scale;
}

complexd inner_product(const LandauMode& a, const LandauMode& b,
                       const PhysicalConfig& cfg) {
  if (!a.cfg.same_modes(cfg) || !b.cfg.same_modes(cfg))
    throw ConfigMismatch("inner_product: modes built with a different configuration");
  if (a.qn.n_z != b.qn.n_z) return {0.0, 0.0};
  const double alpha = cfg.alpha();
  complexd acc{0.0, 0.0};
  for (int c = 0; c < 4; ++c)
    for (const SpinorTerm& ta : a.comps[c])
      for (const SpinorTerm& tb : b.comps[c]) {
        if (ta.m_ang != tb.m_ang) continue;
        acc += std::conj(ta.coeff) * tb.coeff *
               radial_integral(ta.prof, tb.prof, 0, alpha);
      }
  // The phi integral gives 2 pi, the z integral gives d; the term
  // coefficients each carry the 1/sqrt(2 pi d) box factor.
  return acc * (2.0 * pi * cfg.d);
}

}  // namespace rotlandau
