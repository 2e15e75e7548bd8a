#include "sympfac/generate.hpp"

#include "sympfac/error.hpp"

namespace sympfac {

Mat random_mat(std::size_t rows, std::size_t cols, SeededRng& rng,
               double scale) {
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rng.uniform(-scale, scale);
  return m;
}

SymMat random_sym(std::size_t dim, SeededRng& rng, double scale) {
  SymMat s(dim);
  for (double& x : s.packed()) x = rng.uniform(-scale, scale);
  return s;
}

ParamVector random_theta(std::size_t d, SeededRng& rng, double scale) {
  ParamVector theta = ParamVector::zero(d);
  for (double& x : theta.v) x = rng.uniform(-scale, scale);
  for (auto& s : theta.s) s = random_sym(d, rng, scale);
  return theta;
}

Mat random_symplectic(std::size_t d, std::uint64_t seed, double scale) {
  SeededRng rng(seed);
  return build_symplectic(random_theta(d, rng, scale));
}

Mat random_spd_symplectic(std::size_t d, std::uint64_t seed, double scale) {
  SeededRng rng(seed);
  const UnitTriFactor f1{TriKind::Upper, random_sym(d, rng, scale)};
  const UnitTriFactor f2{TriKind::Lower, random_sym(d, rng, scale)};
  const UnitTriFactor f3{TriKind::Upper, random_sym(d, rng, scale)};
  const Mat l = f1.dense() * f2.dense() * f3.dense();
  return l.transposed() * l;
}

Mat random_singular_symplectic(std::size_t d, std::uint64_t seed,
                               double scale) {
  if (d == 0) {
    raise(ErrorCode::InvalidArgument, "dimension must be positive");
  }
  SeededRng rng(seed);
  SingularSpec spec = SingularSpec::zero(d);
  // blocks drawn in subscript order S1..S6, conjugator last
  for (int k = 0; k < 3; ++k) {
    spec.upper_blocks[k] = random_sym(d, rng, scale);
    spec.lower_blocks[k] = random_sym(d - 1, rng, scale);
  }
  spec.q = build_symplectic(random_theta(d, rng, scale));
  return generate_singular(spec).mat();
}

}  // namespace sympfac
