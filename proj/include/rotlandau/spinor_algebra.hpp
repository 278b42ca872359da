#pragma once

#include <Eigen/Dense>
#include <array>

#include "rotlandau/numerics.hpp"

namespace rotlandau {

using Matrix4cd = Eigen::Matrix4cd;

/// Standard (Dirac) representation of the gamma matrices and the spin
/// operators derived from them.  gamma0 is block-diagonal (+1,+1,-1,-1),
/// the spatial gammas carry the Pauli matrices in off-diagonal blocks.
struct DiracMatrixSet {
  Matrix4cd gamma0;
  std::array<Matrix4cd, 3> gamma;   // gamma^1..gamma^3
  std::array<Matrix4cd, 3> alpha;   // alpha^i = gamma^0 gamma^i
  std::array<Matrix4cd, 3> Sigma;   // Sigma^i = (i/2) eps_{ijk} gamma^j gamma^k
  Matrix4cd sigma_munu[4][4];       // i [gamma^mu, gamma^nu] / 2
};

DiracMatrixSet build_dirac_matrices();

/// Shared immutable instance; safe for concurrent reads.
const DiracMatrixSet& dirac_matrices();

/// exp(-i theta Sigma_y / 2): the spin-half factor of a rotation about y.
/// Unitary, det 1, period 4*pi.
Matrix4cd spin_rotation_y(double theta);

/// Minkowski metric, signature (+,-,-,-).
double metric(int mu, int nu);

}  // namespace rotlandau
