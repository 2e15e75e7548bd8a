#include "sympfac/triangular.hpp"

#include <cmath>
#include <string>

#include "sympfac/error.hpp"
#include "sympfac/linalg.hpp"
#include "sympfac/symprod.hpp"

namespace sympfac {

namespace {

double default_shift_tol(const SympMat& h) {
  return 1e-12 * static_cast<double>(2 * h.d()) * max_abs(h.mat());
}

/// Apply [[I, -D], [0, I]] with D = diag(deltas in {0,1}) by exact row
/// operations: top row i loses delta_i times bottom row i.
Mat apply_diag_shift(const Mat& m, const std::vector<int>& deltas) {
  const std::size_t d = deltas.size();
  Mat out = m;
  for (std::size_t i = 0; i < d; ++i) {
    if (deltas[i] == 0) continue;
    for (std::size_t j = 0; j < 2 * d; ++j) out(i, j) -= m(d + i, j);
  }
  return out;
}

}  // namespace

Nonsingularized nonsingularize(const SympMat& h, double tol) {
  const std::size_t d = h.d();
  const Mat a = h.upper_left();
  const double base = tol < 0.0 ? default_shift_tol(h) : tol;

  double attempt_tol = base;
  for (int attempt = 0; attempt < 2; ++attempt, attempt_tol *= 10.0) {
    const auto picks = independent_rows(a, attempt_tol);
    std::vector<int> deltas(d, 1);
    for (std::size_t i : picks) deltas[i] = 0;

    const Mat shifted = apply_diag_shift(h.mat(), deltas);
    const Mat shifted_a = shifted.block(0, 0, d, d);
    if (min_singular_value(shifted_a) > attempt_tol) {
      return Nonsingularized{DiagShift{std::move(deltas)}, SympMat(shifted)};
    }
  }
  raise(ErrorCode::NonsingularizationFailed,
        "diagonal shift did not produce a nonsingular upper-left block");
}

LambdaShift nonsingularize_lambda(const SympMat& h, double lambda, double tol) {
  if (lambda == 0.0) {
    raise(ErrorCode::InvalidArgument, "lambda must be nonzero");
  }
  const std::size_t d = h.d();
  const Mat a = h.upper_left();
  const double base = tol < 0.0 ? default_shift_tol(h) : tol;

  double rank_rel = -1.0;  // default relative threshold on the first pass
  double attempt_tol = base;
  for (int attempt = 0; attempt < 2; ++attempt, attempt_tol *= 10.0) {
    const RankFactor rf = rank_factor(a, rank_rel);
    rank_rel = (rank_rel < 0.0 ? 1e-12 * static_cast<double>(d) : rank_rel) * 10.0;

    // S = P diag(0_r, I_{d-r}) P^T kills nothing on the retained range and
    // routes the rank-deficient part through the lower-left block
    Mat tail = Mat(d, d);
    for (std::size_t i = rf.rank; i < d; ++i) tail(i, i) = 1.0;
    const SymMat s = SymMat::from_dense(rf.p * tail * rf.p.transposed());

    Mat shift = Mat::identity(2 * d);
    const Mat sd = s.dense();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) shift(i, d + j) = -lambda * sd(i, j);

    const Mat shifted = shift * h.mat();
    if (min_singular_value(shifted.block(0, 0, d, d)) > attempt_tol) {
      return LambdaShift{s, SympMat(shifted)};
    }
  }
  raise(ErrorCode::NonsingularizationFailed,
        "rank-split shift did not produce a nonsingular upper-left block");
}

FactorChain factor_unit_triangular_nonsingular(const SympMat& h,
                                               std::uint64_t seed) {
  const Mat a = h.upper_left();
  const Mat b = h.upper_right();
  const Mat c = h.lower_left();

  Mat a_inv;
  try {
    a_inv = inverse(a);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularMatrix) {
      raise(ErrorCode::SingularUpperLeftBlock,
            std::string("upper-left block is singular: ") + e.what());
    }
    throw;
  }

  const TwoSymmetricFactors split = two_symmetric_factors(a, seed);
  const Mat p1 = split.first.dense();
  const Mat p2 = split.second.dense();
  const Mat p1_inv = inverse(p1);
  const Mat p2_inv = inverse(p2);

  const SymMat s = SymMat::from_dense(c * a_inv + p1_inv * a_inv - p1_inv);
  const SymMat t = split.first;
  const SymMat u = SymMat::from_dense(p2 - p1_inv);
  const SymMat v = SymMat::from_dense(a_inv * b - p2_inv);

  FactorChain chain;
  chain.factors = {UnitTriFactor{TriKind::Lower, s},
                   UnitTriFactor{TriKind::Upper, t},
                   UnitTriFactor{TriKind::Lower, u},
                   UnitTriFactor{TriKind::Upper, v}};
  return chain;
}

FactorChain factor_unit_triangular(const SympMat& h, std::uint64_t seed,
                                   double tol) {
  h.require(tol);
  Nonsingularized ns = nonsingularize(h);
  FactorChain chain = factor_unit_triangular_nonsingular(ns.shifted, seed);
  chain.shift = std::move(ns.shift);
  return chain;
}

}  // namespace sympfac
