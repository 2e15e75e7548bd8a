#pragma once

#include <cstddef>
#include <vector>

#include "sympfac/mat.hpp"

namespace sympfac {

/// Scale-relative pivot threshold: 1e-12 * max(rows, cols) * max|entry|.
double pivot_threshold(const Mat& a);

/// Solve A X = B by LU with partial pivoting. Throws SingularMatrix when a
/// pivot falls below pivot_threshold(A).
Mat lu_solve(const Mat& a, const Mat& b);

Mat inverse(const Mat& a);

/// Solve X A = B (i.e. X = B A^{-1}) through the transposed system.
Mat solve_right(const Mat& b, const Mat& a);

/// Determinant by elimination; exactly-zero pivot columns give 0 rather than
/// an error.
double det(const Mat& a);

/// Indices of a maximal set of linearly independent rows, greedy in
/// increasing row order (the first maximal independent subset). `tol` is the
/// absolute residual threshold a candidate row must exceed after projecting
/// out the rows already selected.
std::vector<std::size_t> independent_rows(const Mat& a, double tol);
/// Same with tol = pivot_threshold(a).
std::vector<std::size_t> independent_rows(const Mat& a);

struct RankFactor {
  Mat p;             // nonsingular
  std::size_t rank;  // numerical rank r
  Mat q;             // nonsingular
};

/// Factor a square A as P * diag(I_r, 0) * Q by full-pivot elimination,
/// accumulating the inverse row/column operations into P and Q. `tol` is
/// relative to max|entry|; pass a negative value for the default 1e-12 * d.
RankFactor rank_factor(const Mat& a, double tol = -1.0);

struct SymEig {
  std::vector<double> values;  // ascending
  Mat vectors;                 // orthogonal; column k pairs with values[k]
};

/// Cyclic Jacobi eigendecomposition. Sweeps until the off-diagonal Frobenius
/// norm drops below 1e-14 * ||S||_F; throws NoConvergence after 100 sweeps.
SymEig sym_eig(const SymMat& s);

/// Symmetric positive definite square root via sym_eig. Throws
/// NotPositiveDefinite when the smallest eigenvalue is not safely positive.
SymMat spd_sqrt(const SymMat& m);

struct SingularRange {
  double smin;
  double smax;
};

/// Extreme singular values through the Gram matrix of the smaller dimension.
SingularRange singular_value_range(const Mat& a);
double min_singular_value(const Mat& a);
/// smax / smin; +inf when smin underflows to zero.
double cond_estimate(const Mat& a);

}  // namespace sympfac
