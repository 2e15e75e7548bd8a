#include "sympfac/symprod.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "sympfac/error.hpp"
#include "sympfac/linalg.hpp"
#include "sympfac/rng.hpp"

namespace sympfac {

namespace {

constexpr int kDrawsPerRound = 32;
constexpr double kAcceptRatio = 1e-8;

bool exactly_symmetric(const Mat& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

/// Null-space basis of a p x m matrix by reduced row echelon form with full
/// pivoting; rank decisions use the threshold `thr`.
std::vector<std::vector<double>> null_space(Mat k, double thr) {
  const std::size_t p = k.rows();
  const std::size_t m = k.cols();
  std::vector<std::size_t> col_perm(m);
  for (std::size_t j = 0; j < m; ++j) col_perm[j] = j;

  std::size_t rank = 0;
  const std::size_t steps = std::min(p, m);
  for (std::size_t r = 0; r < steps; ++r) {
    std::size_t bi = r, bj = r;
    double best = 0.0;
    for (std::size_t i = r; i < p; ++i) {
      for (std::size_t j = r; j < m; ++j) {
        if (std::fabs(k(i, j)) > best) {
          best = std::fabs(k(i, j));
          bi = i;
          bj = j;
        }
      }
    }
    if (best == 0.0 || best <= thr) break;
    if (bi != r)
      for (std::size_t j = 0; j < m; ++j) std::swap(k(r, j), k(bi, j));
    if (bj != r) {
      for (std::size_t i = 0; i < p; ++i) std::swap(k(i, r), k(i, bj));
      std::swap(col_perm[r], col_perm[bj]);
    }
    const double pivot = k(r, r);
    for (std::size_t j = r; j < m; ++j) k(r, j) /= pivot;
    for (std::size_t i = 0; i < p; ++i) {
      if (i == r) continue;
      const double f = k(i, r);
      if (f == 0.0) continue;
      for (std::size_t j = r; j < m; ++j) k(i, j) -= f * k(r, j);
    }
    rank = r + 1;
  }

  std::vector<std::vector<double>> basis;
  basis.reserve(m - rank);
  for (std::size_t free = rank; free < m; ++free) {
    std::vector<double> x(m, 0.0);
    x[col_perm[free]] = 1.0;
    for (std::size_t i = 0; i < rank; ++i) x[col_perm[i]] = -k(i, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Matrix of the map Y -> A^T Y - Y A over packed symmetric coordinates.
/// The output is skew, so only entries above the diagonal are kept as rows.
Mat intertwining_matrix(const Mat& a) {
  const std::size_t d = a.rows();
  const std::size_t m = d * (d + 1) / 2;
  const std::size_t p = d * (d - 1) / 2;
  const Mat at = a.transposed();

  Mat k(p, m);
  std::size_t col = 0;
  for (std::size_t bi = 0; bi < d; ++bi) {
    for (std::size_t bj = 0; bj <= bi; ++bj, ++col) {
      SymMat basis(d);
      basis.at(bi, bj) = 1.0;
      const Mat bd = basis.dense();
      const Mat image = at * bd - bd * a;
      std::size_t row = 0;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j, ++row) k(row, col) = image(i, j);
    }
  }
  return k;
}

struct Draw {
  SymMat y;
  double ratio = -1.0;  // smin / ||Y||, -1 when nothing accepted yet
  double smax = 0.0;
};

/// One round of seeded draws; keeps the accepted Y with the best ratio.
Draw best_draw(const std::vector<std::vector<double>>& basis, std::size_t d,
               SeededRng& rng) {
  Draw best;
  const std::size_t m = d * (d + 1) / 2;
  for (int trial = 0; trial < kDrawsPerRound; ++trial) {
    std::vector<double> packed(m, 0.0);
    for (const auto& b : basis) {
      const double c = rng.uniform(-1.0, 1.0);
      for (std::size_t k = 0; k < m; ++k) packed[k] += c * b[k];
    }
    SymMat y = SymMat::from_packed(d, packed);
    const Mat yd = y.dense();
    const double norm = frob_norm(yd);
    if (norm == 0.0) continue;
    const SingularRange sv = singular_value_range(yd);
    const double dety = det(yd);
    if (std::fabs(dety) <= kAcceptRatio * norm || sv.smin <= kAcceptRatio * norm)
      continue;
    const double ratio = sv.smin / norm;
    if (ratio > best.ratio) {
      best.y = std::move(y);
      best.ratio = ratio;
      best.smax = sv.smax;
    }
  }
  return best;
}

}  // namespace

TwoSymmetricFactors two_symmetric_factors(const Mat& a, std::uint64_t seed) {
  if (!a.square() || a.rows() == 0) {
    raise(ErrorCode::InvalidArgument,
          "two_symmetric_factors needs a nonempty square matrix");
  }
  // the nonsingularity precondition, checked up front for a clean error
  lu_solve(a, Mat::identity(a.rows()));

  if (exactly_symmetric(a)) {
    // A = A * I is already a two-symmetric split
    TwoSymmetricFactors out;
    out.first = SymMat::from_dense(a);
    out.second = SymMat::identity(a.rows());
    out.second_asymmetry = 0.0;
    out.cond_first = cond_estimate(a);
    return out;
  }

  const std::size_t d = a.rows();
  const Mat k = intertwining_matrix(a);
  const auto basis = null_space(k, pivot_threshold(k));
  if (basis.empty()) {
    raise(ErrorCode::NonsingularSolutionNotFound,
          "intertwining system has no null space at working precision");
  }

  SeededRng rng(seed);
  Draw best = best_draw(basis, d, rng);
  if (best.ratio < 0.0) {
    SeededRng retry = rng.fork();
    best = best_draw(basis, d, retry);
  }
  if (best.ratio < 0.0) {
    raise(ErrorCode::NonsingularSolutionNotFound,
          "no acceptably nonsingular symmetric solution in " +
              std::to_string(2 * kDrawsPerRound) + " draws");
  }

  const Mat yd = best.y.dense();
  TwoSymmetricFactors out;
  out.first = SymMat::from_dense(inverse(yd));
  out.second = SymMat::from_dense(yd * a, &out.second_asymmetry);
  // cond(P1) = cond(Y); smin = ratio * ||Y||
  out.cond_first = best.smax / (best.ratio * frob_norm(yd));
  return out;
}

}  // namespace sympfac
