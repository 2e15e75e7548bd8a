#include "sympfac/error.hpp"

namespace sympfac {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::SingularMatrix: return "singular_matrix";
    case ErrorCode::NoConvergence: return "no_convergence";
    case ErrorCode::NotPositiveDefinite: return "not_positive_definite";
    case ErrorCode::OddDimension: return "odd_dimension";
    case ErrorCode::NotSymplectic: return "not_symplectic";
    case ErrorCode::SingularUpperLeftBlock: return "singular_upper_left_block";
    case ErrorCode::SingularAfterShift: return "singular_after_shift";
    case ErrorCode::NonsingularizationFailed: return "nonsingularization_failed";
    case ErrorCode::NonsingularSolutionNotFound:
      return "nonsingular_solution_not_found";
    case ErrorCode::NumericalFailure: return "numerical_failure";
  }
  return "unknown";
}

}  // namespace sympfac
