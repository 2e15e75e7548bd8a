#pragma once

#include <cstdint>

#include "sympfac/mat.hpp"

namespace sympfac {

struct TwoSymmetricFactors {
  SymMat first;            // P1
  SymMat second;           // P2, with A = dense(P1) * dense(P2)
  double second_asymmetry; // asymmetry discarded when packing P2
  double cond_first;       // conditioning diagnostic for P1
};

/// Split a nonsingular A into a product of two symmetric matrices.
///
/// A symmetric Y with A^T Y = Y A turns the pair (Y^{-1}, Y A) into such a
/// split, and a nonsingular Y of this kind always exists. The intertwining
/// equation is linear in the packed coordinates of Y, so we assemble that
/// system, take a null-space basis, and draw seeded random combinations until
/// one is acceptably far from singular (32 draws, then one fresh-stream retry
/// round, then NonsingularSolutionNotFound). Among accepted draws the Y with
/// the best smin/||Y|| ratio wins. Exactly symmetric A short-circuits to
/// (A, I).
///
/// The same (A, seed) always produces bit-identical output. Conditioning of
/// the factors is reported, not guaranteed.
TwoSymmetricFactors two_symmetric_factors(const Mat& a, std::uint64_t seed);

}  // namespace sympfac
