#pragma once

#include <array>

#include "sympfac/symplectic.hpp"

namespace sympfac {

/// Recipe for a symplectic matrix with det(H - I) = 0.
///
/// H = Q * F6 F5 F4 F3 F2 F1 * Q^{-1}, where the odd factors are full upper
/// unit factors U(S1), U(S3), U(S5) and the even factors are lower unit
/// factors whose blocks are embedded as diag(0, S2), diag(0, S4), diag(0, S6)
/// with each S_even of size (d-1) x (d-1). The zero leading entry of every
/// even block pins a common fixed vector of the inner product, which is what
/// forces H - I to be singular. For d = 1 the even factors degenerate to the
/// identity.
struct SingularSpec {
  std::size_t d = 0;
  std::array<SymMat, 3> upper_blocks;  // S1, S3, S5 (d x d)
  std::array<SymMat, 3> lower_blocks;  // S2, S4, S6 ((d-1) x (d-1))
  Mat q;                               // symplectic conjugator, 2d x 2d

  static SingularSpec zero(std::size_t d);  // all blocks zero, q = I
};

/// Build H from the spec. The conjugator is inverted through the form
/// (Q^{-1} = -J Q^T J), so exact symplecticity of q keeps H exactly
/// symplectic up to roundoff.
SympMat generate_singular(const SingularSpec& spec);

struct SingularCheck {
  bool ok;                // symplectic and H - I singular
  bool symplectic_ok;
  double symp_residual;
  double shift_min_sv;    // smallest singular value of M - I
};

/// Membership test for the singular set. `tol` bounds the symplectic residual
/// and, scaled by ||M||_F, the smallest singular value of M - I. A negative
/// tol selects symp_tol_default for the first role and 1e-8 for the second.
/// Never throws; wrong shapes return ok = false.
SingularCheck check_singular_symplectic(const Mat& m, double tol = -1.0);

}  // namespace sympfac
