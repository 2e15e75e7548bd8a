#include "sympfac/singular.hpp"

#include <string>

#include "sympfac/error.hpp"
#include "sympfac/linalg.hpp"

namespace sympfac {

namespace {

/// Embed a (d-1) x (d-1) symmetric block as diag(0, S).
SymMat embed_tail(const SymMat& s, std::size_t d) {
  SymMat out(d);
  for (std::size_t i = 0; i + 1 < d; ++i)
    for (std::size_t j = 0; j <= i; ++j) out.at(i + 1, j + 1) = s(i, j);
  return out;
}

}  // namespace

SingularSpec SingularSpec::zero(std::size_t d) {
  if (d == 0) {
    raise(ErrorCode::InvalidArgument, "dimension must be positive");
  }
  SingularSpec spec;
  spec.d = d;
  for (auto& s : spec.upper_blocks) s = SymMat(d);
  for (auto& s : spec.lower_blocks) s = SymMat(d - 1);
  spec.q = Mat::identity(2 * d);
  return spec;
}

SympMat generate_singular(const SingularSpec& spec) {
  const std::size_t d = spec.d;
  if (d == 0) {
    raise(ErrorCode::InvalidArgument, "dimension must be positive");
  }
  for (const auto& s : spec.upper_blocks) {
    if (s.dim() != d) {
      raise(ErrorCode::InvalidArgument, "upper block dimension mismatch");
    }
  }
  for (const auto& s : spec.lower_blocks) {
    if (s.dim() + 1 != d) {
      raise(ErrorCode::InvalidArgument, "lower block dimension mismatch");
    }
  }
  if (spec.q.rows() != 2 * d || spec.q.cols() != 2 * d) {
    raise(ErrorCode::InvalidArgument, "conjugator shape mismatch");
  }

  // F6 F5 F4 F3 F2 F1, leftmost applied last; every even factor has a zero
  // leading diagonal entry, which leaves (e1, 0) fixed by the whole product
  const UnitTriFactor f1{TriKind::Upper, spec.upper_blocks[0]};
  const UnitTriFactor f2{TriKind::Lower, embed_tail(spec.lower_blocks[0], d)};
  const UnitTriFactor f3{TriKind::Upper, spec.upper_blocks[1]};
  const UnitTriFactor f4{TriKind::Lower, embed_tail(spec.lower_blocks[1], d)};
  const UnitTriFactor f5{TriKind::Upper, spec.upper_blocks[2]};
  const UnitTriFactor f6{TriKind::Lower, embed_tail(spec.lower_blocks[2], d)};
  const Mat inner = f6.dense() * f5.dense() * f4.dense() * f3.dense() *
                    f2.dense() * f1.dense();

  // Q^{-1} through the form keeps the conjugation exactly symplectic up to
  // roundoff: Q^{-1} = -J Q^T J  whenever Q is symplectic
  const Mat j = symplectic_form(d);
  const Mat q_inv = -1.0 * (j * spec.q.transposed() * j);
  return SympMat(spec.q * inner * q_inv);
}

SingularCheck check_singular_symplectic(const Mat& m, double tol) {
  SingularCheck out{false, false, 0.0, 0.0};
  if (!m.square() || m.rows() % 2 != 0 || m.rows() == 0) return out;

  const double symp_bound = tol < 0.0 ? symp_tol_default(m) : tol;
  const SympCheck sc = is_symplectic(m, symp_bound);
  out.symplectic_ok = sc.ok;
  out.symp_residual = sc.residual;

  const Mat shift = m - Mat::identity(m.rows());
  out.shift_min_sv = min_singular_value(shift);
  const double sing_rel = tol < 0.0 ? 1e-8 : tol;
  out.ok = sc.ok && out.shift_min_sv <= sing_rel * frob_norm(m);
  return out;
}

}  // namespace sympfac
