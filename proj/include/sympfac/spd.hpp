#pragma once

#include <cstddef>

#include "sympfac/symplectic.hpp"

namespace sympfac {

/// True iff M is symmetric within tol, positive definite, and symplectic
/// within tol. Never throws; wrong shapes simply return false. Negative tol
/// selects symp_tol_default(M).
bool is_spd_symplectic(const Mat& m, double tol = -1.0);

enum class SpdShape { UpperLowerUpper, LowerUpperLower };

/// Result of the three-factor split of a symmetric positive definite
/// symplectic H: a unit triangular L with H = L^T L. For the default shape,
/// L = U(S) L(T) U(U); the mirrored shape produces L = L(S) U(T) L(U) and is
/// computed by factoring the form-conjugated input J^T H J.
struct SpdFactors {
  SpdShape shape;
  SymMat s;
  SymMat t;
  SymMat u;
  double t_asymmetry;
  double u_asymmetry;
  double residual;  // ||L^T L - H||_F at factor time

  Mat l() const;
  Mat reconstruct() const;  // L^T L
};

/// With P the upper-left and A the upper-right block of H:
///   S = sqrt(P + P^{-1} - I)   (positive definite for valid input)
///   T = (P - S)(P + P^{-1})^{-1}
///   U = P^{-1} A - I
/// T and U are symmetric in exact arithmetic; their numerical asymmetry is
/// measured and must stay below 1e-9 * max(1, ||.||_F), otherwise
/// NumericalFailure is raised rather than silently symmetrizing further.
/// Non-SPD input raises NotPositiveDefinite, non-symplectic input
/// NotSymplectic.
SpdFactors factor_spd(const Mat& h, SpdShape shape = SpdShape::UpperLowerUpper);

/// diag(I/2, 2I): a symmetric positive definite symplectic matrix that cannot
/// be written with one triangular factor per side; it exercises the full
/// three-factor path and is kept as a regression fixture.
Mat two_factor_counterexample(std::size_t d);

}  // namespace sympfac
