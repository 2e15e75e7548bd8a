#include "sympfac/spd.hpp"

#include <cmath>
#include <string>

#include "sympfac/error.hpp"
#include "sympfac/linalg.hpp"

namespace sympfac {

namespace {

double pd_floor(const Mat& m) { return 1e-12 * frob_norm(m); }

}  // namespace

bool is_spd_symplectic(const Mat& m, double tol) {
  if (!m.square() || m.rows() % 2 != 0 || m.rows() == 0) return false;
  const double bound = tol < 0.0 ? symp_tol_default(m) : tol;
  if (asymmetry(m) > bound) return false;
  const SymEig eig = sym_eig(SymMat::from_dense(m));
  if (eig.values.front() <= pd_floor(m)) return false;
  return is_symplectic(m, bound).ok;
}

Mat SpdFactors::l() const {
  const TriKind a = shape == SpdShape::UpperLowerUpper ? TriKind::Upper
                                                       : TriKind::Lower;
  const TriKind b = shape == SpdShape::UpperLowerUpper ? TriKind::Lower
                                                       : TriKind::Upper;
  const UnitTriFactor f1{a, s};
  const UnitTriFactor f2{b, t};
  const UnitTriFactor f3{a, u};
  return f1.dense() * f2.dense() * f3.dense();
}

Mat SpdFactors::reconstruct() const {
  const Mat lm = l();
  return lm.transposed() * lm;
}

SpdFactors factor_spd(const Mat& h, SpdShape shape) {
  if (!h.square() || h.rows() % 2 != 0 || h.rows() == 0) {
    raise(ErrorCode::OddDimension,
          "factor_spd needs a square matrix with even, nonzero side");
  }
  const std::size_t d = h.rows() / 2;

  if (shape == SpdShape::LowerUpperLower) {
    // Conjugating by the form swaps the roles of the two diagonal blocks and
    // flips every triangular factor, so the mirrored split falls out of the
    // primary one: with Hc = J^T H J = Lc^T Lc, L = J Lc J^T turns each
    // U(S) into L(-S) and vice versa.
    const Mat j = symplectic_form(d);
    const Mat jt = j.transposed();
    const Mat hc = jt * h * j;
    const SpdFactors inner = factor_spd(hc, SpdShape::UpperLowerUpper);
    SpdFactors out;
    out.shape = SpdShape::LowerUpperLower;
    out.s = SymMat::from_dense(-1.0 * inner.s.dense());
    out.t = SymMat::from_dense(-1.0 * inner.t.dense());
    out.u = SymMat::from_dense(-1.0 * inner.u.dense());
    out.t_asymmetry = inner.t_asymmetry;
    out.u_asymmetry = inner.u_asymmetry;
    out.residual = frob_norm(out.reconstruct() - h);
    return out;
  }

  // membership: symmetric positive definite first, then symplectic
  const double bound = symp_tol_default(h);
  if (asymmetry(h) > bound) {
    raise(ErrorCode::NotPositiveDefinite,
          "input is not symmetric (asymmetry " + num_str(asymmetry(h)) +
              ")");
  }
  const SymEig heig = sym_eig(SymMat::from_dense(h));
  if (heig.values.front() <= pd_floor(h)) {
    raise(ErrorCode::NotPositiveDefinite,
          "smallest eigenvalue " + num_str(heig.values.front()) +
              " is not safely positive");
  }
  const SympCheck sc = is_symplectic(h, bound);
  if (!sc.ok) {
    raise(ErrorCode::NotSymplectic,
          "membership residual " + num_str(sc.residual) +
              " exceeds tolerance " + num_str(bound));
  }

  const Mat p = h.block(0, 0, d, d);
  const Mat a = h.block(0, d, d, d);
  const Mat p_inv = inverse(p);
  const Mat w = p + p_inv;  // symmetric positive definite, eigenvalues >= 2

  // S^2 = P + P^{-1} - I; positive definite whenever H really is a symmetric
  // positive definite symplectic matrix, so a failure here means bad input
  const SymMat s = spd_sqrt(SymMat::from_dense(w - Mat::identity(d)));

  SpdFactors out;
  out.shape = SpdShape::UpperLowerUpper;
  out.s = s;

  const Mat t_raw = (p - s.dense()) * inverse(w);
  out.t = SymMat::from_dense(t_raw, &out.t_asymmetry);
  const double t_scale = std::max(1.0, frob_norm(t_raw));
  if (out.t_asymmetry > 1e-9 * t_scale) {
    raise(ErrorCode::NumericalFailure,
          "middle factor lost symmetry: asymmetry " +
              num_str(out.t_asymmetry));
  }

  const Mat u_raw = p_inv * a - Mat::identity(d);
  out.u = SymMat::from_dense(u_raw, &out.u_asymmetry);
  const double u_scale = std::max(1.0, frob_norm(u_raw));
  if (out.u_asymmetry > 1e-9 * u_scale) {
    raise(ErrorCode::NumericalFailure,
          "trailing factor lost symmetry: asymmetry " +
              num_str(out.u_asymmetry));
  }

  out.residual = frob_norm(out.reconstruct() - h);
  return out;
}

Mat two_factor_counterexample(std::size_t d) {
  if (d == 0) {
    raise(ErrorCode::InvalidArgument, "dimension must be positive");
  }
  Mat m(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) = 0.5;
    m(d + i, d + i) = 2.0;
  }
  return m;
}

}  // namespace sympfac
