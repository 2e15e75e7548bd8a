#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "sympfac/error.hpp"
#include "sympfac/generate.hpp"
#include "sympfac/linalg.hpp"
#include "sympfac/mat.hpp"
#include "sympfac/rng.hpp"

using namespace sympfac;
using testutil::diff;
using testutil::from_rows;

TEST_CASE("matrix basics") {
  CHECK(frob_norm(Mat::identity(2)) == doctest::Approx(std::sqrt(2.0)));

  const Mat j = from_rows({{0.0, 1.0}, {-1.0, 0.0}});
  CHECK(det(j) == doctest::Approx(1.0));

  CHECK(min_singular_value(from_rows({{3.0, 0.0}, {0.0, 0.0}})) ==
        doctest::Approx(0.0));

  SUBCASE("construction rejects non-finite entries") {
    const double bad[] = {1.0, std::nan(""), 0.0, 1.0};
    CHECK_THROWS_AS(Mat::from_data(2, 2, bad), Error);
  }

  SUBCASE("packed symmetric round trip") {
    const double packed[] = {1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
    const SymMat s = SymMat::from_packed(3, packed);
    CHECK(s(0, 0) == 1.0);
    CHECK(s(1, 0) == 2.0);
    CHECK(s(0, 1) == 2.0);  // mirrored
    CHECK(s(2, 1) == 5.0);
    const Mat d = s.dense();
    CHECK(asymmetry(d) == 0.0);  // exactly symmetric by construction
    double asym = -1.0;
    const SymMat back = SymMat::from_dense(d, &asym);
    CHECK(asym == 0.0);
    for (std::size_t k = 0; k < 6; ++k) CHECK(back.packed()[k] == packed[k]);
  }
}

TEST_CASE("lu_solve") {
  CHECK(diff(lu_solve(Mat::identity(2), Mat::identity(2)),
             Mat::identity(2)) == 0.0);

  const Mat a = from_rows({{2.0, 0.0}, {0.0, 4.0}});
  const Mat b = from_rows({{1.0}, {1.0}});
  CHECK(diff(lu_solve(a, b), from_rows({{0.5}, {0.25}})) == 0.0);

  const Mat a2 = from_rows({{1.0, 1.0}, {0.0, 1.0}});
  const Mat b2 = from_rows({{2.0}, {1.0}});
  CHECK(diff(lu_solve(a2, b2), from_rows({{1.0}, {1.0}})) == 0.0);

  SUBCASE("singular input raises") {
    CHECK_THROWS_AS(lu_solve(from_rows({{1.0, 1.0}, {1.0, 1.0}}),
                             Mat::identity(2)),
                    Error);
  }

  SUBCASE("random nonsingular inverse residual") {
    SeededRng rng(1234);
    for (int rep = 0; rep < 20; ++rep) {
      const std::size_t n = 1 + rep % 16;
      const Mat a3 = random_mat(n, n, rng, 1.0);
      const Mat x = lu_solve(a3, a3);
      CHECK(diff(x, Mat::identity(n)) <= 1e-10 * cond_estimate(a3));
    }
  }
}

TEST_CASE("independent_rows") {
  CHECK(independent_rows(Mat::identity(2)) ==
        std::vector<std::size_t>{0, 1});
  CHECK(independent_rows(from_rows({{1.0, 2.0}, {2.0, 4.0}})) ==
        std::vector<std::size_t>{0});
  CHECK(independent_rows(from_rows({{1.0, 0.0}, {0.0, 0.0}})) ==
        std::vector<std::size_t>{0});
  CHECK(independent_rows(Mat(3, 3), 1e-12).empty());

  SUBCASE("selected rows stay independent, excluded rows are dependent") {
    SeededRng rng(77);
    for (int rep = 0; rep < 10; ++rep) {
      const std::size_t d = 3 + rep % 4;
      const std::size_t r = 1 + rep % (d - 1);
      const Mat a = random_mat(d, r, rng, 1.0) * random_mat(r, d, rng, 1.0);
      const double tol = pivot_threshold(a);
      const auto rows = independent_rows(a, tol);
      CHECK(rows.size() == r);
      Mat sel(rows.size(), d);
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t jj = 0; jj < d; ++jj) sel(i, jj) = a(rows[i], jj);
      CHECK(min_singular_value(sel) > tol);
      for (std::size_t k = 0; k < d; ++k) {
        bool selected = false;
        for (auto idx : rows) selected = selected || idx == k;
        if (selected) continue;
        Mat ext(rows.size() + 1, d);
        ext.set_block(0, 0, sel);
        for (std::size_t jj = 0; jj < d; ++jj) ext(rows.size(), jj) = a(k, jj);
        // the Gram-matrix route resolves tiny singular values only to about
        // sqrt(eps) * scale, so test against that floor rather than tol
        CHECK(min_singular_value(ext) <= 1e-7 * (1.0 + frob_norm(a)));
      }
    }
  }
}

TEST_CASE("rank_factor") {
  const auto check_residual = [](const Mat& a, const RankFactor& rf) {
    const std::size_t d = a.rows();
    Mat core(d, d);
    for (std::size_t i = 0; i < rf.rank; ++i) core(i, i) = 1.0;
    return diff(rf.p * core * rf.q, a);
  };

  SUBCASE("identity") {
    const RankFactor rf = rank_factor(Mat::identity(3));
    CHECK(rf.rank == 3);
    CHECK(check_residual(Mat::identity(3), rf) <= 1e-14);
  }
  SUBCASE("zero matrix") {
    const RankFactor rf = rank_factor(Mat(2, 2));
    CHECK(rf.rank == 0);
    CHECK(std::abs(det(rf.p)) > 0.0);
    CHECK(std::abs(det(rf.q)) > 0.0);
    CHECK(check_residual(Mat(2, 2), rf) == 0.0);
  }
  SUBCASE("rank one") {
    const Mat a = from_rows({{1.0, 1.0}, {1.0, 1.0}});
    const RankFactor rf = rank_factor(a);
    CHECK(rf.rank == 1);
    CHECK(check_residual(a, rf) <= 1e-12 * frob_norm(a));
  }
  SUBCASE("random low rank") {
    SeededRng rng(5150);
    for (int rep = 0; rep < 12; ++rep) {
      const std::size_t d = 2 + rep % 6;
      const std::size_t r = rep % (d + 1);
      Mat a = r == 0 ? Mat(d, d)
                     : random_mat(d, r, rng, 1.0) * random_mat(r, d, rng, 1.0);
      const RankFactor rf = rank_factor(a);
      CHECK(rf.rank == r);
      CHECK(check_residual(a, rf) <= 1e-10 * (1.0 + frob_norm(a)));
    }
  }
}

TEST_CASE("sym_eig") {
  SUBCASE("diagonal") {
    const double dvals[] = {3.0, 1.0};
    const SymEig e = sym_eig(SymMat::diagonal(dvals));
    CHECK(e.values[0] == doctest::Approx(1.0));
    CHECK(e.values[1] == doctest::Approx(3.0));
  }
  SUBCASE("hand example") {
    const double packed[] = {2.0, 1.0, 2.0};
    const SymEig e = sym_eig(SymMat::from_packed(2, packed));
    CHECK(e.values[0] == doctest::Approx(1.0));
    CHECK(e.values[1] == doctest::Approx(3.0));
  }
  SUBCASE("zero matrix") {
    const SymEig e = sym_eig(SymMat(2));
    CHECK(e.values[0] == 0.0);
    CHECK(e.values[1] == 0.0);
    CHECK(diff(e.vectors, Mat::identity(2)) == 0.0);
  }
  SUBCASE("decomposition and orthogonality residuals") {
    SeededRng rng(99);
    for (int rep = 0; rep < 10; ++rep) {
      const std::size_t d = 1 + rep % 8;
      const SymMat s = random_sym(d, rng, 2.0);
      const SymEig e = sym_eig(s);
      const Mat lam = Mat::diagonal(e.values);
      CHECK(diff(s.dense() * e.vectors, e.vectors * lam) <=
            1e-13 * (1.0 + frob_norm(s.dense())));
      CHECK(diff(e.vectors.transposed() * e.vectors, Mat::identity(d)) <=
            1e-13);
      for (std::size_t k = 1; k < d; ++k)
        CHECK(e.values[k - 1] <= e.values[k]);
    }
  }
}

TEST_CASE("spd_sqrt") {
  CHECK(diff(spd_sqrt(SymMat::identity(2)).dense(), Mat::identity(2)) <=
        1e-15);

  const double dvals[] = {4.0, 9.0};
  CHECK(diff(spd_sqrt(SymMat::diagonal(dvals)).dense(),
             from_rows({{2.0, 0.0}, {0.0, 3.0}})) <= 1e-14);

  const double packed[] = {2.0, 1.0, 2.0};
  const Mat r = spd_sqrt(SymMat::from_packed(2, packed)).dense();
  // eigenvalues 1 and 3: root entries (sqrt(3)+1)/2 and (sqrt(3)-1)/2
  CHECK(r(0, 0) == doctest::Approx(1.3660254037844386));
  CHECK(r(1, 0) == doctest::Approx(0.36602540378443865));
  CHECK(diff(r * r, SymMat::from_packed(2, packed).dense()) <= 1e-14);

  SUBCASE("not positive definite raises") {
    const double neg[] = {-1.0};
    CHECK_THROWS_AS(spd_sqrt(SymMat::diagonal(neg)), Error);
    CHECK_THROWS_AS(spd_sqrt(SymMat(2)), Error);  // zero matrix
  }

  SUBCASE("random spd squares back") {
    SeededRng rng(2024);
    for (int rep = 0; rep < 100; ++rep) {
      const std::size_t d = 1 + rep % 6;
      const Mat g = random_mat(d, d, rng, 1.0);
      const Mat m = g.transposed() * g + 0.1 * Mat::identity(d);
      const SymMat sm = SymMat::from_dense(m);
      const Mat root = spd_sqrt(sm).dense();
      CHECK(diff(root * root, sm.dense()) <= 1e-12 * (1.0 + frob_norm(m)));
      CHECK(asymmetry(root) == 0.0);
    }
  }
}

TEST_CASE("determinant and singular values") {
  CHECK(det(from_rows({{1.0, 1.0}, {1.0, 1.0}})) == 0.0);
  CHECK(det(from_rows({{2.0, 0.0}, {0.0, 3.0}})) == doctest::Approx(6.0));
  const Mat a = from_rows({{3.0, 0.0}, {0.0, 0.5}});
  const SingularRange sr = singular_value_range(a);
  CHECK(sr.smin == doctest::Approx(0.5));
  CHECK(sr.smax == doctest::Approx(3.0));
  CHECK(cond_estimate(a) == doctest::Approx(6.0));
  CHECK(std::isinf(cond_estimate(Mat(2, 2))));
}

TEST_CASE("seeded rng is reproducible and uniform draws stay in range") {
  SeededRng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    const double x = a.uniform(-1.0, 1.0);
    CHECK(x == b.uniform(-1.0, 1.0));
    CHECK(x >= -1.0);
    CHECK(x < 1.0);
  }
  SeededRng c(42);
  SeededRng fork = c.fork();
  CHECK(fork.uniform(0.0, 1.0) != c.uniform(0.0, 1.0));
}
