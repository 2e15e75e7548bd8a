#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sympfac/mat.hpp"

namespace sympfac {

/// The 2d x 2d symplectic form J = [[0, I], [-I, 0]].
Mat symplectic_form(std::size_t d);

/// Default membership tolerance: 1e-10 * ||M||_F^2.
double symp_tol_default(const Mat& m);

struct SympCheck {
  bool ok;
  double residual;  // ||M^T J M - J||_F
};

/// Symplectic membership test. Throws OddDimension unless M is square with an
/// even side. `tol` is an absolute bound on the residual; a negative value
/// selects symp_tol_default(M).
SympCheck is_symplectic(const Mat& m, double tol = -1.0);

/// A 2d x 2d matrix treated as symplectic. Construction only enforces the
/// shape and records the membership residual; callers pick their own
/// strictness via require(), so slightly perturbed inputs stay usable.
class SympMat {
public:
  explicit SympMat(Mat m);

  const Mat& mat() const noexcept { return m_; }
  std::size_t d() const noexcept { return d_; }
  double symp_residual() const noexcept { return residual_; }

  /// Throws NotSymplectic when the stored residual exceeds tol
  /// (negative tol selects symp_tol_default).
  void require(double tol = -1.0) const;

  // Block accessors for the partition [[A, B], [C, D]].
  Mat upper_left() const { return m_.block(0, 0, d_, d_); }
  Mat upper_right() const { return m_.block(0, d_, d_, d_); }
  Mat lower_left() const { return m_.block(d_, 0, d_, d_); }
  Mat lower_right() const { return m_.block(d_, d_, d_, d_); }

private:
  Mat m_;
  std::size_t d_ = 0;
  double residual_ = 0.0;
};

/// Residuals of the three block conditions equivalent to membership, for the
/// partition [[A, B], [C, D]]:
///   aa = ||A^T C - C^T A||_F         (symmetry of A^T C)
///   bb = ||B^T D - D^T B||_F         (symmetry of B^T D)
///   ab = ||A^T D - C^T B - I||_F     (pairing condition)
struct BlockResiduals {
  double aa;
  double bb;
  double ab;
};

BlockResiduals check_block_conditions(const SympMat& h);

enum class TriKind { Upper, Lower };

/// Unit triangular symplectic factor: [[I, S], [0, I]] (Upper) or
/// [[I, 0], [S, I]] (Lower) with S symmetric. Densification is exactly
/// symplectic: the membership residual of dense() is zero to the last bit.
struct UnitTriFactor {
  TriKind kind;
  SymMat s;

  Mat dense() const;
};

/// Diagonal 0/1 shift: the factor [[I, diag(deltas)], [0, I]].
struct DiagShift {
  std::vector<int> deltas;  // each entry 0 or 1

  std::size_t d() const noexcept { return deltas.size(); }
  bool any() const;
  Mat diag_dense() const;             // d x d
  Mat dense() const;                  // 2d x 2d upper factor
  Mat dense_negated() const;          // [[I, -diag(deltas)], [0, I]]
};

/// Product of unit triangular factors, optionally led by a diagonal shift.
/// Factors are listed leftmost first; reconstruct() multiplies them in that
/// order, so the rightmost listed factor is the one applied first.
struct FactorChain {
  std::optional<DiagShift> shift;
  std::vector<UnitTriFactor> factors;

  std::size_t d() const;
  Mat reconstruct() const;
};

enum class LduVariant { LeftDiag, CenterDiag, RightDiag };

/// Triangular-diagonal splits of a symplectic H with nonsingular upper-left
/// block A, writing Db(P) for [[P, 0], [0, P^-T]], L(S) for a lower and U(T)
/// for an upper unit factor:
///   LeftDiag:    H = Db(P) L(S) U(T),   S = A^T C,    T = A^{-1} B,  P = A
///   CenterDiag:  H = L(S) Db(P) U(T),   S = C A^{-1}, T = A^{-1} B,  P = A
///   RightDiag:   H = L(S) U(T) Db(P),   S = C A^{-1}, T = B A^T,     P = A
struct LduResult {
  LduVariant variant;
  SymMat s;
  SymMat t;
  Mat p;
  double s_asymmetry;  // asymmetry discarded when packing S
  double t_asymmetry;
  double residual;     // ||reconstruct() - H||_F at factor time

  Mat reconstruct() const;
};

/// Throws SingularUpperLeftBlock when the upper-left block fails the pivot
/// test. Two calls on the same input produce bit-identical results.
LduResult ldu(const SympMat& h, LduVariant variant);

/// Unit upper-lower-upper split H = U(S) L(T) U(U) Db(P) for a caller-chosen
/// S. T, U and P are uniquely determined by H and S once the shifted matrix
/// [[I, -S], [0, I]] H has a nonsingular upper-left block; otherwise
/// SingularAfterShift is thrown.
struct UluResult {
  SymMat s;  // the shift that was supplied
  SymMat t;
  SymMat u;
  Mat p;
  double t_asymmetry;
  double u_asymmetry;
  double residual;

  Mat reconstruct() const;
};

UluResult ulu_factor(const SympMat& h, const SymMat& s);

}  // namespace sympfac
