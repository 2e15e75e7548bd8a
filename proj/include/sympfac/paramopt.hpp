#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sympfac/symplectic.hpp"

namespace sympfac {

/// Unconstrained coordinates for the symplectic group: d free diagonal
/// entries v plus four packed symmetric blocks, 2d^2 + 3d reals in total.
/// The flat layout is (v, packed(S1), packed(S2), packed(S3), packed(S4)).
struct ParamVector {
  std::size_t d = 0;
  std::vector<double> v;        // d entries, unconstrained reals
  std::array<SymMat, 4> s;      // s[0] = S1 ... s[3] = S4

  static ParamVector zero(std::size_t d);
  static ParamVector from_flat(std::size_t d, std::span<const double> flat);
  std::vector<double> to_flat() const;
  std::size_t size() const;     // 2d^2 + 3d
};

std::size_t param_count(std::size_t d);

/// H(theta) = U(diag(v)) L(S4) U(S3) L(S2) U(S1): a product of five unit
/// triangular factors, so the result is symplectic for every theta, and every
/// symplectic matrix is reachable (repack_chain turns a factorization into
/// the theta that rebuilds it).
Mat build_symplectic(const ParamVector& theta);

/// Repack a five-slot factor chain (diagonal shift + L,U,L,U) into theta,
/// with v taking the 0/1 shift entries. build_symplectic on the result
/// reproduces chain.reconstruct() bit-for-bit.
ParamVector repack_chain(const FactorChain& chain);

/// Objective over matrices. `gradient`, when present, returns df/dX
/// entrywise; when absent it is replaced by central finite differences with
/// step 1e-6 * (1 + |x|) per entry.
struct Objective {
  std::function<double(const Mat&)> value;
  std::function<Mat(const Mat&)> gradient;  // may be empty
};

/// Exact derivative of theta -> f(H(theta)) by the product rule: prefix and
/// suffix products of the five factors are cached once per evaluation, and
/// each parameter's partial is read off one or two entries of
/// prefix^T * df/dX * suffix^T.
ParamVector parameter_gradient(const ParamVector& theta, const Objective& obj);

struct MinimizeOptions {
  std::size_t max_iters = 500;
  double grad_tol = 1e-12;     // stop when ||grad|| drops below
  double armijo_c = 1e-4;
  double backtrack = 0.5;
  double initial_step = 1.0;
  double min_step = 1e-20;     // below this the line search gives up
};

struct MinimizeResult {
  ParamVector theta;
  Mat h;                       // build_symplectic(theta)
  std::vector<double> trace;   // objective values, initial point included
  std::size_t iterations = 0;  // accepted descent steps
  bool line_search_failed = false;
};

/// Gradient descent with Armijo backtracking over the unconstrained
/// coordinates. The trace is non-increasing by construction. A failed line
/// search returns the best iterate so far with line_search_failed set rather
/// than throwing.
MinimizeResult minimize(const Objective& obj, std::size_t d,
                        const ParamVector& init,
                        const MinimizeOptions& opts = {});

}  // namespace sympfac
