#include "sympfac/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "sympfac/error.hpp"

namespace sympfac {

namespace {

struct LuFactors {
  Mat lu;                        // unit-lower multipliers below, U on and above
  std::vector<std::size_t> perm; // row permutation applied to the input
  int sign = 1;
};

LuFactors lu_decompose(const Mat& a) {
  if (!a.square()) {
    raise(ErrorCode::InvalidArgument, "lu_solve needs a square matrix");
  }
  const std::size_t n = a.rows();
  const double tol = pivot_threshold(a);

  LuFactors f;
  f.lu = a;
  f.perm.resize(n);
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::fabs(f.lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::fabs(f.lu(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0 || best < tol) {
      raise(ErrorCode::SingularMatrix,
            "pivot " + num_str(best) + " below threshold " +
                num_str(tol) + " at column " + std::to_string(k));
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(f.lu(k, j), f.lu(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
      f.sign = -f.sign;
    }
    const double pivot = f.lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = f.lu(i, k) / pivot;
      f.lu(i, k) = m;
      for (std::size_t j = k + 1; j < n; ++j) {
        f.lu(i, j) -= m * f.lu(k, j);
      }
    }
  }
  return f;
}

Mat lu_apply(const LuFactors& f, const Mat& b) {
  const std::size_t n = f.lu.rows();
  if (b.rows() != n) {
    raise(ErrorCode::InvalidArgument, "right-hand side row count mismatch");
  }
  Mat x(n, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    // forward substitution on the permuted right-hand side
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      double acc = b(f.perm[i], c);
      for (std::size_t j = 0; j < i; ++j) acc -= f.lu(i, j) * y[j];
      y[i] = acc;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      double acc = y[ii];
      for (std::size_t j = ii + 1; j < n; ++j) acc -= f.lu(ii, j) * x(j, c);
      x(ii, c) = acc / f.lu(ii, ii);
    }
  }
  return x;
}

double off_diag_norm(const Mat& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) acc += a(i, j) * a(i, j);
  return std::sqrt(acc);
}

}  // namespace

double pivot_threshold(const Mat& a) {
  const double dim = static_cast<double>(std::max(a.rows(), a.cols()));
  return 1e-12 * dim * max_abs(a);
}

Mat lu_solve(const Mat& a, const Mat& b) { return lu_apply(lu_decompose(a), b); }

Mat inverse(const Mat& a) { return lu_solve(a, Mat::identity(a.rows())); }

Mat solve_right(const Mat& b, const Mat& a) {
  return lu_solve(a.transposed(), b.transposed()).transposed();
}

double det(const Mat& a) {
  if (!a.square()) {
    raise(ErrorCode::InvalidArgument, "det needs a square matrix");
  }
  const std::size_t n = a.rows();
  Mat w = a;
  double sign = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::fabs(w(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::fabs(w(i, k)) > best) {
        best = std::fabs(w(i, k));
        piv = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = w(i, k) / w(k, k);
      for (std::size_t j = k; j < n; ++j) w(i, j) -= m * w(k, j);
    }
  }
  double d = sign;
  for (std::size_t k = 0; k < n; ++k) d *= w(k, k);
  return d;
}

std::vector<std::size_t> independent_rows(const Mat& a, double tol) {
  if (tol < 0.0) {
    raise(ErrorCode::InvalidArgument, "independent_rows needs tol >= 0");
  }
  const std::size_t n = a.cols();
  std::vector<std::vector<double>> basis;  // orthonormal rows selected so far
  std::vector<std::size_t> picks;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<double> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = a(i, j);
    // two projection passes keep the residual orthogonal even for nearly
    // dependent rows
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        double dot = 0.0;
        for (std::size_t j = 0; j < n; ++j) dot += q[j] * r[j];
        for (std::size_t j = 0; j < n; ++j) r[j] -= dot * q[j];
      }
    }
    double norm = 0.0;
    for (double x : r) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > tol) {
      for (double& x : r) x /= norm;
      basis.push_back(std::move(r));
      picks.push_back(i);
    }
  }
  return picks;
}

std::vector<std::size_t> independent_rows(const Mat& a) {
  return independent_rows(a, pivot_threshold(a));
}

RankFactor rank_factor(const Mat& a, double tol) {
  if (!a.square()) {
    raise(ErrorCode::InvalidArgument, "rank_factor needs a square matrix");
  }
  const std::size_t n = a.rows();
  const double rel = tol < 0.0 ? 1e-12 * static_cast<double>(n) : tol;
  const double thr = rel * max_abs(a);

  Mat w = a;
  Mat p = Mat::identity(n);
  Mat q = Mat::identity(n);
  std::size_t r = 0;

  for (std::size_t k = 0; k < n; ++k) {
    // full pivot search over the trailing block
    std::size_t bi = k, bj = k;
    double best = 0.0;
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        if (std::fabs(w(i, j)) > best) {
          best = std::fabs(w(i, j));
          bi = i;
          bj = j;
        }
      }
    }
    if (best == 0.0 || best <= thr) break;

    // row swap W <- R W compensated by P <- P R (columns of P)
    if (bi != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(bi, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(p(i, k), p(i, bi));
    }
    // column swap W <- W C compensated by Q <- C Q (rows of Q)
    if (bj != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(w(i, k), w(i, bj));
      for (std::size_t j = 0; j < n; ++j) std::swap(q(k, j), q(bj, j));
    }

    // scale the pivot row to 1; P absorbs the inverse scaling
    const double pivot = w(k, k);
    for (std::size_t j = k; j < n; ++j) w(k, j) /= pivot;
    for (std::size_t i = 0; i < n; ++i) p(i, k) *= pivot;

    // clear the pivot column below; P absorbs the inverse row operations
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = w(i, k);
      if (m == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) w(i, j) -= m * w(k, j);
      for (std::size_t row = 0; row < n; ++row) p(row, k) += m * p(row, i);
    }
    // clear the pivot row to the right; Q absorbs the inverse column
    // operations (only row k is live in column k at this point)
    for (std::size_t j = k + 1; j < n; ++j) {
      const double m = w(k, j);
      if (m == 0.0) continue;
      w(k, j) = 0.0;
      for (std::size_t col = 0; col < n; ++col) q(k, col) += m * q(j, col);
    }
    r = k + 1;
  }
  return RankFactor{std::move(p), r, std::move(q)};
}

SymEig sym_eig(const SymMat& s) {
  const std::size_t n = s.dim();
  Mat a = s.dense();
  Mat v = Mat::identity(n);
  const double off_tol = 1e-14 * frob_norm(a);
  constexpr int kMaxSweeps = 100;

  bool converged = off_diag_norm(a) <= off_tol;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) /
            (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        const double tau = sn / (1.0 + c);

        const double app = a(p, p);
        const double aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = a(i, p);
          const double aiq = a(i, q);
          a(i, p) = aip - sn * (aiq + tau * aip);
          a(i, q) = aiq + sn * (aip - tau * aiq);
          a(p, i) = a(i, p);
          a(q, i) = a(i, q);
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vip = v(i, p);
          const double viq = v(i, q);
          v(i, p) = vip - sn * (viq + tau * vip);
          v(i, q) = viq + sn * (vip - tau * viq);
        }
      }
    }
    converged = off_diag_norm(a) <= off_tol;
  }
  if (!converged) {
    raise(ErrorCode::NoConvergence,
          "eigensolver did not converge within 100 sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) {
                     return a(x, x) < a(y, y);
                   });
  SymEig out;
  out.values.resize(n);
  out.vectors = Mat(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

SymMat spd_sqrt(const SymMat& m) {
  const SymEig eig = sym_eig(m);
  const double pd_tol = 1e-12 * frob_norm(m.dense());
  if (m.dim() == 0 || eig.values.front() <= pd_tol) {
    raise(ErrorCode::NotPositiveDefinite,
          "smallest eigenvalue " +
              (m.dim() ? num_str(eig.values.front()) : std::string("n/a")) +
              " is not safely positive");
  }
  const std::size_t n = m.dim();
  Mat scaled(n, n);  // V * diag(sqrt(lambda))
  for (std::size_t k = 0; k < n; ++k) {
    const double root = std::sqrt(eig.values[k]);
    for (std::size_t i = 0; i < n; ++i)
      scaled(i, k) = eig.vectors(i, k) * root;
  }
  return SymMat::from_dense(scaled * eig.vectors.transposed());
}

SingularRange singular_value_range(const Mat& a) {
  if (a.rows() == 0 || a.cols() == 0) return {0.0, 0.0};
  const Mat gram = a.rows() <= a.cols() ? a * a.transposed()
                                        : a.transposed() * a;
  const SymEig eig = sym_eig(SymMat::from_dense(gram));
  const double lo = std::max(eig.values.front(), 0.0);
  const double hi = std::max(eig.values.back(), 0.0);
  return {std::sqrt(lo), std::sqrt(hi)};
}

double min_singular_value(const Mat& a) { return singular_value_range(a).smin; }

double cond_estimate(const Mat& a) {
  const SingularRange r = singular_value_range(a);
  if (r.smin == 0.0) return std::numeric_limits<double>::infinity();
  return r.smax / r.smin;
}

}  // namespace sympfac
