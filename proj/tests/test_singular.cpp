#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "sympfac/generate.hpp"
#include "sympfac/linalg.hpp"
#include "sympfac/singular.hpp"

using namespace sympfac;
using testutil::diff;
using testutil::from_rows;

TEST_CASE("zero spec builds the identity exactly") {
  for (std::size_t d = 1; d <= 4; ++d) {
    const SympMat h = generate_singular(SingularSpec::zero(d));
    CHECK(diff(h.mat(), Mat::identity(2 * d)) == 0.0);
    CHECK(check_singular_symplectic(h.mat()).ok);
  }
}

TEST_CASE("one-dimensional specs sum their upper blocks") {
  SingularSpec spec = SingularSpec::zero(1);
  spec.upper_blocks[0].at(0, 0) = 0.25;
  spec.upper_blocks[1].at(0, 0) = 0.5;
  spec.upper_blocks[2].at(0, 0) = 1.5;
  const SympMat h = generate_singular(spec);
  // the three upper factors compose exactly: U(0.25) U(0.5) U(1.5) = U(2.25)
  CHECK(diff(h.mat(), from_rows({{1.0, 2.25}, {0.0, 1.0}})) == 0.0);
  const SingularCheck c = check_singular_symplectic(h.mat());
  CHECK(c.ok);
  CHECK(c.shift_min_sv == 0.0);
}

TEST_CASE("even blocks embed with a zero leading entry") {
  SingularSpec spec = SingularSpec::zero(2);
  spec.lower_blocks[0].at(0, 0) = 1.0;  // S2 = [1], embedded as diag(0, 1)
  const SympMat h = generate_singular(spec);
  const Mat expect = from_rows({{1.0, 0.0, 0.0, 0.0},
                                {0.0, 1.0, 0.0, 0.0},
                                {0.0, 0.0, 1.0, 0.0},
                                {0.0, 1.0, 0.0, 1.0}});
  CHECK(diff(h.mat(), expect) == 0.0);
  CHECK(check_singular_symplectic(h.mat()).ok);
}

TEST_CASE("conjugation preserves both membership and singularity") {
  SeededRng rng(404);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const std::size_t d = 1 + seed % 3;
    SingularSpec spec = SingularSpec::zero(d);
    for (auto& b : spec.upper_blocks) b = random_sym(d, rng, 0.5);
    if (d > 1)
      for (auto& b : spec.lower_blocks) b = random_sym(d - 1, rng, 0.5);
    spec.q = random_symplectic(d, seed, 0.5);
    const SympMat h = generate_singular(spec);
    const SingularCheck c = check_singular_symplectic(h.mat());
    CHECK(c.symplectic_ok);
    CHECK(c.ok);
    CHECK(c.shift_min_sv <= 1e-8 * frob_norm(h.mat()));
  }
}

TEST_CASE("seeded generator is deterministic and in the target set") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const std::size_t d = 1 + seed % 4;
    const Mat a = random_singular_symplectic(d, seed, 0.5);
    const Mat b = random_singular_symplectic(d, seed, 0.5);
    CHECK(a.data() == b.data());
    const SingularCheck c = check_singular_symplectic(a);
    CHECK(c.ok);
    CHECK(c.symp_residual <= symp_tol_default(a));
  }
}

TEST_CASE("membership test separates the singular set") {
  SUBCASE("identity is in the set") {
    const SingularCheck c = check_singular_symplectic(Mat::identity(4));
    CHECK(c.ok);
    CHECK(c.symplectic_ok);
    CHECK(c.shift_min_sv == 0.0);
  }
  SUBCASE("the form matrix is symplectic but not in the set") {
    const SingularCheck c = check_singular_symplectic(symplectic_form(1));
    CHECK_FALSE(c.ok);
    CHECK(c.symplectic_ok);
    CHECK(c.shift_min_sv == doctest::Approx(std::sqrt(2.0)));
  }
  SUBCASE("non-symplectic input fails on membership") {
    const SingularCheck c =
        check_singular_symplectic(from_rows({{2.0, 0.0}, {0.0, 2.0}}));
    CHECK_FALSE(c.ok);
    CHECK_FALSE(c.symplectic_ok);
  }
  SUBCASE("wrong shapes return false without throwing") {
    CHECK_FALSE(check_singular_symplectic(Mat::identity(3)).ok);
    CHECK_FALSE(check_singular_symplectic(Mat(2, 4)).ok);
    CHECK_FALSE(check_singular_symplectic(Mat()).ok);
  }
}
