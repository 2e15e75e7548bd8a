#include "sympfac/symplectic.hpp"

#include <string>

#include "sympfac/error.hpp"
#include "sympfac/linalg.hpp"

namespace sympfac {

namespace {

void require_even_square(const Mat& m, const char* who) {
  if (!m.square() || m.rows() % 2 != 0 || m.rows() == 0) {
    raise(ErrorCode::OddDimension,
          std::string(who) + " needs a square matrix with even, nonzero side; got " +
              std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

/// [[P, 0], [0, P^-T]]
Mat block_diag_symplectic(const Mat& p) {
  const Mat pinv_t = inverse(p).transposed();
  const std::size_t d = p.rows();
  Mat m(2 * d, 2 * d);
  m.set_block(0, 0, p);
  m.set_block(d, d, pinv_t);
  return m;
}

}  // namespace

Mat symplectic_form(std::size_t d) {
  Mat j(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    j(i, d + i) = 1.0;
    j(d + i, i) = -1.0;
  }
  return j;
}

double symp_tol_default(const Mat& m) {
  const double norm = frob_norm(m);
  return 1e-10 * norm * norm;
}

SympCheck is_symplectic(const Mat& m, double tol) {
  require_even_square(m, "is_symplectic");
  const Mat j = symplectic_form(m.rows() / 2);
  const double residual = frob_norm(m.transposed() * j * m - j);
  const double bound = tol < 0.0 ? symp_tol_default(m) : tol;
  return SympCheck{residual <= bound, residual};
}

SympMat::SympMat(Mat m) : m_(std::move(m)) {
  require_even_square(m_, "SympMat");
  d_ = m_.rows() / 2;
  residual_ = is_symplectic(m_, 0.0).residual;
}

void SympMat::require(double tol) const {
  const double bound = tol < 0.0 ? symp_tol_default(m_) : tol;
  if (residual_ > bound) {
    raise(ErrorCode::NotSymplectic,
          "membership residual " + num_str(residual_) +
              " exceeds tolerance " + num_str(bound));
  }
}

BlockResiduals check_block_conditions(const SympMat& h) {
  const Mat a = h.upper_left();
  const Mat b = h.upper_right();
  const Mat c = h.lower_left();
  const Mat d = h.lower_right();
  const Mat at = a.transposed();
  const Mat bt = b.transposed();
  const Mat ct = c.transposed();
  const Mat dt = d.transposed();
  return BlockResiduals{
      frob_norm(at * c - ct * a),
      frob_norm(bt * d - dt * b),
      frob_norm(at * d - ct * b - Mat::identity(h.d())),
  };
}

Mat UnitTriFactor::dense() const {
  const std::size_t d = s.dim();
  Mat m = Mat::identity(2 * d);
  const Mat sd = s.dense();
  if (kind == TriKind::Upper) {
    m.set_block(0, d, sd);
  } else {
    m.set_block(d, 0, sd);
  }
  return m;
}

bool DiagShift::any() const {
  for (int x : deltas)
    if (x != 0) return true;
  return false;
}

Mat DiagShift::diag_dense() const {
  const std::size_t n = deltas.size();
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = static_cast<double>(deltas[i]);
  return m;
}

Mat DiagShift::dense() const {
  const std::size_t n = deltas.size();
  Mat m = Mat::identity(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, n + i) = static_cast<double>(deltas[i]);
  return m;
}

Mat DiagShift::dense_negated() const {
  const std::size_t n = deltas.size();
  Mat m = Mat::identity(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, n + i) = -static_cast<double>(deltas[i]);
  return m;
}

std::size_t FactorChain::d() const {
  if (shift.has_value()) return shift->d();
  if (!factors.empty()) return factors.front().s.dim();
  raise(ErrorCode::InvalidArgument, "empty factor chain has no dimension");
}

Mat FactorChain::reconstruct() const {
  Mat acc = shift.has_value() ? shift->dense() : Mat::identity(2 * d());
  for (const UnitTriFactor& f : factors) acc = acc * f.dense();
  return acc;
}

Mat LduResult::reconstruct() const {
  const Mat db = block_diag_symplectic(p);
  const UnitTriFactor lower{TriKind::Lower, s};
  const UnitTriFactor upper{TriKind::Upper, t};
  switch (variant) {
    case LduVariant::LeftDiag:
      return db * lower.dense() * upper.dense();
    case LduVariant::CenterDiag:
      return lower.dense() * db * upper.dense();
    case LduVariant::RightDiag:
      return lower.dense() * upper.dense() * db;
  }
  raise(ErrorCode::InvalidArgument, "unknown variant");
}

LduResult ldu(const SympMat& h, LduVariant variant) {
  const Mat a = h.upper_left();
  const Mat b = h.upper_right();
  const Mat c = h.lower_left();

  Mat s_raw, t_raw;
  try {
    switch (variant) {
      case LduVariant::LeftDiag:
        s_raw = a.transposed() * c;
        t_raw = lu_solve(a, b);
        break;
      case LduVariant::CenterDiag:
        s_raw = solve_right(c, a);
        t_raw = lu_solve(a, b);
        break;
      case LduVariant::RightDiag:
        s_raw = solve_right(c, a);
        t_raw = b * a.transposed();
        break;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularMatrix) {
      raise(ErrorCode::SingularUpperLeftBlock,
            std::string("upper-left block is singular: ") + e.what());
    }
    throw;
  }

  LduResult out;
  out.variant = variant;
  out.s = SymMat::from_dense(s_raw, &out.s_asymmetry);
  out.t = SymMat::from_dense(t_raw, &out.t_asymmetry);
  out.p = a;
  out.residual = frob_norm(out.reconstruct() - h.mat());
  return out;
}

Mat UluResult::reconstruct() const {
  const UnitTriFactor us{TriKind::Upper, s};
  const UnitTriFactor lt{TriKind::Lower, t};
  const UnitTriFactor uu{TriKind::Upper, u};
  return us.dense() * lt.dense() * uu.dense() * block_diag_symplectic(p);
}

UluResult ulu_factor(const SympMat& h, const SymMat& s) {
  if (s.dim() != h.d()) {
    raise(ErrorCode::InvalidArgument, "shift dimension mismatch");
  }
  const UnitTriFactor neg_shift{
      TriKind::Upper, SymMat::from_dense(-1.0 * s.dense())};
  const SympMat shifted(neg_shift.dense() * h.mat());

  UluResult out;
  out.s = s;
  try {
    // the shifted matrix carries the remaining L(T) U(U) Db(P) split
    const LduResult rest = ldu(shifted, LduVariant::RightDiag);
    out.t = rest.s;
    out.u = rest.t;
    out.p = rest.p;
    out.t_asymmetry = rest.s_asymmetry;
    out.u_asymmetry = rest.t_asymmetry;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularUpperLeftBlock) {
      raise(ErrorCode::SingularAfterShift,
            "shifted matrix has a singular upper-left block; pick another S");
    }
    throw;
  }
  out.residual = frob_norm(out.reconstruct() - h.mat());
  return out;
}

}  // namespace sympfac
