#pragma once

#include <cstdint>

#include "sympfac/symplectic.hpp"

namespace sympfac {

struct Nonsingularized {
  DiagShift shift;   // exactly d - rank(A) entries equal to 1
  SympMat shifted;   // [[I, -diag(shift)], [0, I]] * H, nonsingular upper left
};

/// Make the upper-left block of a symplectic H nonsingular with a diagonal
/// 0/1 shift: deltas are 0 on a greedy maximal independent set of rows of A
/// and 1 elsewhere. `tol` is the absolute threshold for both row selection
/// and the final nonsingularity check (negative selects
/// 1e-12 * 2d * max|entry of H|). A failed check retries once with tol * 10,
/// then throws NonsingularizationFailed.
Nonsingularized nonsingularize(const SympMat& h, double tol = -1.0);

struct LambdaShift {
  SymMat s;         // the symmetric shift derived from a rank split of A
  SympMat shifted;  // [[I, -lambda*S], [0, I]] * H
};

/// Rank-split variant: with A = P diag(I_r, 0) Q, the shift
/// S = P diag(0_r, I_{d-r}) P^T makes the upper-left block of the shifted
/// matrix nonsingular for every lambda != 0.
LambdaShift nonsingularize_lambda(const SympMat& h, double lambda,
                                  double tol = -1.0);

/// Four-factor split L(S) U(T) L(U) U(V) of a symplectic H whose upper-left
/// block A is nonsingular. The seed feeds the symmetric two-factor split of
/// A (see two_symmetric_factors); with A = P1 P2,
///   S = C A^{-1} + P1^{-1} A^{-1} - P1^{-1}
///   T = P1
///   U = P2 - P1^{-1}
///   V = A^{-1} B - P2^{-1}
FactorChain factor_unit_triangular_nonsingular(const SympMat& h,
                                               std::uint64_t seed);

/// Full factorization of any symplectic H into at most five unit triangular
/// factors: a diagonal 0/1 shift (always present in the chain, possibly zero)
/// followed by the four-factor split of the shifted matrix. Membership is
/// checked first at `tol` (negative selects symp_tol_default) and failure
/// raises NotSymplectic.
FactorChain factor_unit_triangular(const SympMat& h, std::uint64_t seed,
                                   double tol = -1.0);

}  // namespace sympfac
