#pragma once

#include <cstdint>

#include "sympfac/paramopt.hpp"
#include "sympfac/rng.hpp"
#include "sympfac/singular.hpp"

namespace sympfac {

/// Uniform entries in [-scale, scale], drawn in row-major order.
Mat random_mat(std::size_t rows, std::size_t cols, SeededRng& rng,
               double scale);

/// Uniform packed entries in [-scale, scale], drawn in packed order.
SymMat random_sym(std::size_t dim, SeededRng& rng, double scale);

/// Draws v first, then S1..S4 in packed order.
ParamVector random_theta(std::size_t d, SeededRng& rng, double scale);

/// Structurally symplectic: build_symplectic over a random theta.
Mat random_symplectic(std::size_t d, std::uint64_t seed, double scale);

/// Structurally symmetric positive definite symplectic: L^T L for a random
/// three-factor unit triangular L = U(S) L(T) U(U); S, T, U drawn in that
/// order.
Mat random_spd_symplectic(std::size_t d, std::uint64_t seed, double scale);

/// Structurally singular-symplectic: generate_singular over a random spec;
/// blocks S1..S6 are drawn in subscript order, then the conjugator's theta.
Mat random_singular_symplectic(std::size_t d, std::uint64_t seed,
                               double scale);

}  // namespace sympfac
