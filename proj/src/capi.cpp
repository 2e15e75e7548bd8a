// C interface of the shared library: thin translation between the opaque
// handles / status codes of sympfac.h and the C++ core. Every entry point
// catches, records the message in a thread-local buffer, and returns a status;
// exceptions never cross the boundary.

#include "sympfac.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <span>
#include <string>

#include "sympfac/error.hpp"
#include "sympfac/generate.hpp"
#include "sympfac/linalg.hpp"
#include "sympfac/mat.hpp"
#include "sympfac/paramopt.hpp"
#include "sympfac/singular.hpp"
#include "sympfac/spd.hpp"
#include "sympfac/symplectic.hpp"
#include "sympfac/triangular.hpp"

struct sympfac_mat {
  sympfac::Mat m;
};

struct sympfac_chain {
  sympfac::FactorChain chain;
  double residual = 0.0;
};

struct sympfac_opt_result {
  sympfac::MinimizeResult res;
};

namespace {

thread_local std::string g_last_error;

sympfac_status map_code(sympfac::ErrorCode code) {
  using sympfac::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return SYMPFAC_ERR_INVALID_ARGUMENT;
    case ErrorCode::SingularMatrix: return SYMPFAC_ERR_SINGULAR_MATRIX;
    case ErrorCode::NoConvergence: return SYMPFAC_ERR_NO_CONVERGENCE;
    case ErrorCode::NotPositiveDefinite:
      return SYMPFAC_ERR_NOT_POSITIVE_DEFINITE;
    case ErrorCode::OddDimension: return SYMPFAC_ERR_ODD_DIMENSION;
    case ErrorCode::NotSymplectic: return SYMPFAC_ERR_NOT_SYMPLECTIC;
    case ErrorCode::SingularUpperLeftBlock:
      return SYMPFAC_ERR_SINGULAR_UPPER_LEFT;
    case ErrorCode::SingularAfterShift:
      return SYMPFAC_ERR_SINGULAR_AFTER_SHIFT;
    case ErrorCode::NonsingularizationFailed:
      return SYMPFAC_ERR_NONSINGULARIZATION_FAILED;
    case ErrorCode::NonsingularSolutionNotFound:
      return SYMPFAC_ERR_FACTOR_SEARCH_EXHAUSTED;
    case ErrorCode::NumericalFailure: return SYMPFAC_ERR_NUMERICAL;
  }
  return SYMPFAC_ERR_INTERNAL;
}

template <typename Fn>
sympfac_status guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SYMPFAC_OK;
  } catch (const sympfac::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SYMPFAC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return SYMPFAC_ERR_INTERNAL;
  }
}

void require_arg(bool cond, const char* message) {
  if (!cond) sympfac::raise(sympfac::ErrorCode::InvalidArgument, message);
}

void copy_dense(const sympfac::Mat& m, double* out) {
  std::copy(m.data().begin(), m.data().end(), out);
}

sympfac_mat* wrap(sympfac::Mat m) { return new sympfac_mat{std::move(m)}; }

sympfac::SympMat as_symp(const sympfac_mat* h) {
  require_arg(h != nullptr, "null matrix handle");
  return sympfac::SympMat(h->m);
}

// Dense d x d buffer -> symmetric block, averaging away any asymmetry.
sympfac::SymMat sym_from_buffer(std::size_t d, const double* buf) {
  return sympfac::SymMat::from_dense(
      sympfac::Mat::from_data(d, d, std::span<const double>(buf, d * d)));
}

sympfac::Objective make_objective(sympfac_objective_fn f,
                                  sympfac_objective_grad_fn g, void* ctx) {
  sympfac::Objective obj;
  obj.value = [f, ctx](const sympfac::Mat& x) {
    return f(x.data().data(), static_cast<int64_t>(x.rows()), ctx);
  };
  if (g != nullptr) {
    obj.gradient = [g, ctx](const sympfac::Mat& x) {
      sympfac::Mat grad(x.rows(), x.cols());
      g(x.data().data(), static_cast<int64_t>(x.rows()), grad.data().data(),
        ctx);
      return grad;
    };
  }
  return obj;
}

}  // namespace

extern "C" {

const char* sympfac_status_name(sympfac_status status) {
  switch (status) {
    case SYMPFAC_OK: return "ok";
    case SYMPFAC_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case SYMPFAC_ERR_SINGULAR_MATRIX: return "singular_matrix";
    case SYMPFAC_ERR_NO_CONVERGENCE: return "no_convergence";
    case SYMPFAC_ERR_NOT_POSITIVE_DEFINITE: return "not_positive_definite";
    case SYMPFAC_ERR_ODD_DIMENSION: return "odd_dimension";
    case SYMPFAC_ERR_NOT_SYMPLECTIC: return "not_symplectic";
    case SYMPFAC_ERR_SINGULAR_UPPER_LEFT: return "singular_upper_left";
    case SYMPFAC_ERR_SINGULAR_AFTER_SHIFT: return "singular_after_shift";
    case SYMPFAC_ERR_NONSINGULARIZATION_FAILED:
      return "nonsingularization_failed";
    case SYMPFAC_ERR_FACTOR_SEARCH_EXHAUSTED:
      return "factor_search_exhausted";
    case SYMPFAC_ERR_NUMERICAL: return "numerical";
    case SYMPFAC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* sympfac_last_error(void) { return g_last_error.c_str(); }

const char* sympfac_version(void) { return "1.0.0"; }

/* ---- matrices ---------------------------------------------------------- */

sympfac_status sympfac_mat_create(int64_t rows, int64_t cols,
                                  const double* data, sympfac_mat** out) {
  return guard([&] {
    require_arg(out != nullptr, "null output pointer");
    require_arg(rows > 0 && cols > 0, "matrix dimensions must be positive");
    require_arg(data != nullptr, "null data pointer");
    const auto r = static_cast<std::size_t>(rows);
    const auto c = static_cast<std::size_t>(cols);
    *out = wrap(sympfac::Mat::from_data(
        r, c, std::span<const double>(data, r * c)));
  });
}

void sympfac_mat_destroy(sympfac_mat* m) { delete m; }

int64_t sympfac_mat_rows(const sympfac_mat* m) {
  return m == nullptr ? 0 : static_cast<int64_t>(m->m.rows());
}

int64_t sympfac_mat_cols(const sympfac_mat* m) {
  return m == nullptr ? 0 : static_cast<int64_t>(m->m.cols());
}

sympfac_status sympfac_mat_copy_data(const sympfac_mat* m, double* out) {
  return guard([&] {
    require_arg(m != nullptr, "null matrix handle");
    require_arg(out != nullptr, "null output pointer");
    copy_dense(m->m, out);
  });
}

/* ---- membership checks ------------------------------------------------- */

sympfac_status sympfac_check_symplectic(const sympfac_mat* m, double tol,
                                        int* is_symplectic, double* residual) {
  return guard([&] {
    require_arg(m != nullptr, "null matrix handle");
    const auto check = sympfac::is_symplectic(m->m, tol);
    if (is_symplectic != nullptr) *is_symplectic = check.ok ? 1 : 0;
    if (residual != nullptr) *residual = check.residual;
  });
}

sympfac_status sympfac_check_spd(const sympfac_mat* m, double tol, int* is_spd,
                                 double* min_eigenvalue) {
  return guard([&] {
    require_arg(m != nullptr, "null matrix handle");
    if (is_spd != nullptr)
      *is_spd = sympfac::is_spd_symplectic(m->m, tol) ? 1 : 0;
    if (min_eigenvalue != nullptr) {
      if (m->m.square() && m->m.rows() > 0) {
        const auto eig = sympfac::sym_eig(sympfac::SymMat::from_dense(m->m));
        *min_eigenvalue = eig.values.front();
      } else {
        *min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
      }
    }
  });
}

sympfac_status sympfac_check_singular(const sympfac_mat* m, double tol,
                                      int* is_singular_symplectic,
                                      double* shift_min_sv) {
  return guard([&] {
    require_arg(m != nullptr, "null matrix handle");
    const auto check = sympfac::check_singular_symplectic(m->m, tol);
    if (is_singular_symplectic != nullptr)
      *is_singular_symplectic = check.ok ? 1 : 0;
    if (shift_min_sv != nullptr) *shift_min_sv = check.shift_min_sv;
  });
}

/* ---- factor chains ----------------------------------------------------- */

sympfac_status sympfac_factor_utf5(const sympfac_mat* h, uint64_t seed,
                                   double tol, sympfac_chain** out) {
  return guard([&] {
    require_arg(out != nullptr, "null output pointer");
    const auto hs = as_symp(h);
    auto chain = sympfac::factor_unit_triangular(hs, seed, tol);
    const double residual = sympfac::frob_norm(chain.reconstruct() - h->m);
    *out = new sympfac_chain{std::move(chain), residual};
  });
}

void sympfac_chain_destroy(sympfac_chain* c) { delete c; }

int64_t sympfac_chain_dim(const sympfac_chain* c) {
  return c == nullptr ? 0 : static_cast<int64_t>(c->chain.d());
}

int64_t sympfac_chain_size(const sympfac_chain* c) {
  return c == nullptr ? 0 : static_cast<int64_t>(c->chain.factors.size());
}

int sympfac_chain_has_shift(const sympfac_chain* c) {
  return (c != nullptr && c->chain.shift.has_value()) ? 1 : 0;
}

sympfac_status sympfac_chain_shift(const sympfac_chain* c, int* out) {
  return guard([&] {
    require_arg(c != nullptr, "null chain handle");
    require_arg(out != nullptr, "null output pointer");
    require_arg(c->chain.shift.has_value(), "chain has no diagonal shift");
    const auto& deltas = c->chain.shift->deltas;
    std::copy(deltas.begin(), deltas.end(), out);
  });
}

sympfac_status sympfac_chain_factor(const sympfac_chain* c, int64_t index,
                                    int* kind, double* s) {
  return guard([&] {
    require_arg(c != nullptr, "null chain handle");
    require_arg(index >= 0 &&
                    index < static_cast<int64_t>(c->chain.factors.size()),
                "factor index out of range");
    const auto& factor = c->chain.factors[static_cast<std::size_t>(index)];
    if (kind != nullptr)
      *kind = factor.kind == sympfac::TriKind::Upper ? SYMPFAC_FACTOR_UPPER
                                                     : SYMPFAC_FACTOR_LOWER;
    if (s != nullptr) copy_dense(factor.s.dense(), s);
  });
}

double sympfac_chain_residual(const sympfac_chain* c) {
  return c == nullptr ? std::numeric_limits<double>::quiet_NaN() : c->residual;
}

sympfac_status sympfac_chain_reconstruct(const sympfac_chain* c,
                                         sympfac_mat** out) {
  return guard([&] {
    require_arg(c != nullptr, "null chain handle");
    require_arg(out != nullptr, "null output pointer");
    *out = wrap(c->chain.reconstruct());
  });
}

/* ---- triangular-diagonal splits ---------------------------------------- */

sympfac_status sympfac_factor_ldu(const sympfac_mat* h, int variant,
                                  double* s, double* t, double* p,
                                  double* residual) {
  return guard([&] {
    require_arg(s != nullptr && t != nullptr && p != nullptr,
                "null output buffer");
    sympfac::LduVariant v;
    switch (variant) {
      case SYMPFAC_LDU_LEFT: v = sympfac::LduVariant::LeftDiag; break;
      case SYMPFAC_LDU_CENTER: v = sympfac::LduVariant::CenterDiag; break;
      case SYMPFAC_LDU_RIGHT: v = sympfac::LduVariant::RightDiag; break;
      default:
        sympfac::raise(sympfac::ErrorCode::InvalidArgument,
                       "unknown triangular-diagonal variant");
    }
    const auto res = sympfac::ldu(as_symp(h), v);
    copy_dense(res.s.dense(), s);
    copy_dense(res.t.dense(), t);
    copy_dense(res.p, p);
    if (residual != nullptr) *residual = res.residual;
  });
}

sympfac_status sympfac_factor_ulu(const sympfac_mat* h, const double* s_in,
                                  double* s_used, double* t, double* u,
                                  double* p, double* residual) {
  return guard([&] {
    require_arg(t != nullptr && u != nullptr && p != nullptr,
                "null output buffer");
    const auto hs = as_symp(h);
    sympfac::SymMat shift;
    if (s_in != nullptr) {
      shift = sym_from_buffer(hs.d(), s_in);
    } else {
      const auto nonsing = sympfac::nonsingularize(hs);
      std::vector<double> diag(nonsing.shift.deltas.begin(),
                               nonsing.shift.deltas.end());
      shift = sympfac::SymMat::diagonal(diag);
    }
    const auto res = sympfac::ulu_factor(hs, shift);
    if (s_used != nullptr) copy_dense(res.s.dense(), s_used);
    copy_dense(res.t.dense(), t);
    copy_dense(res.u.dense(), u);
    copy_dense(res.p, p);
    if (residual != nullptr) *residual = res.residual;
  });
}

/* ---- symmetric positive definite input --------------------------------- */

sympfac_status sympfac_factor_spd(const sympfac_mat* h, int shape, double* s,
                                  double* t, double* u, double* residual) {
  return guard([&] {
    require_arg(h != nullptr, "null matrix handle");
    require_arg(s != nullptr && t != nullptr && u != nullptr,
                "null output buffer");
    sympfac::SpdShape sh;
    switch (shape) {
      case SYMPFAC_SPD_ULU: sh = sympfac::SpdShape::UpperLowerUpper; break;
      case SYMPFAC_SPD_LUL: sh = sympfac::SpdShape::LowerUpperLower; break;
      default:
        sympfac::raise(sympfac::ErrorCode::InvalidArgument,
                       "unknown three-factor shape");
    }
    const auto res = sympfac::factor_spd(h->m, sh);
    copy_dense(res.s.dense(), s);
    copy_dense(res.t.dense(), t);
    copy_dense(res.u.dense(), u);
    if (residual != nullptr) *residual = res.residual;
  });
}

/* ---- generators -------------------------------------------------------- */

sympfac_status sympfac_random_symplectic(int64_t d, uint64_t seed,
                                         double scale, sympfac_mat** out) {
  return guard([&] {
    require_arg(out != nullptr, "null output pointer");
    require_arg(d > 0, "dimension must be positive");
    require_arg(std::isfinite(scale), "scale must be finite");
    *out = wrap(
        sympfac::random_symplectic(static_cast<std::size_t>(d), seed, scale));
  });
}

sympfac_status sympfac_random_spd(int64_t d, uint64_t seed, double scale,
                                  sympfac_mat** out) {
  return guard([&] {
    require_arg(out != nullptr, "null output pointer");
    require_arg(d > 0, "dimension must be positive");
    require_arg(std::isfinite(scale), "scale must be finite");
    *out = wrap(sympfac::random_spd_symplectic(static_cast<std::size_t>(d),
                                               seed, scale));
  });
}

sympfac_status sympfac_random_singular(int64_t d, uint64_t seed, double scale,
                                       sympfac_mat** out) {
  return guard([&] {
    require_arg(out != nullptr, "null output pointer");
    require_arg(d > 0, "dimension must be positive");
    require_arg(std::isfinite(scale), "scale must be finite");
    *out = wrap(sympfac::random_singular_symplectic(
        static_cast<std::size_t>(d), seed, scale));
  });
}

/* ---- unconstrained parameterization and descent ------------------------ */

int64_t sympfac_param_count(int64_t d) {
  if (d <= 0) return 0;
  return static_cast<int64_t>(
      sympfac::param_count(static_cast<std::size_t>(d)));
}

sympfac_status sympfac_param_build(int64_t d, const double* theta,
                                   sympfac_mat** out) {
  return guard([&] {
    require_arg(out != nullptr, "null output pointer");
    require_arg(d > 0, "dimension must be positive");
    require_arg(theta != nullptr, "null parameter pointer");
    const auto dd = static_cast<std::size_t>(d);
    const auto tv = sympfac::ParamVector::from_flat(
        dd, std::span<const double>(theta, sympfac::param_count(dd)));
    *out = wrap(sympfac::build_symplectic(tv));
  });
}

sympfac_status sympfac_param_gradient(int64_t d, const double* theta,
                                      sympfac_objective_fn f,
                                      sympfac_objective_grad_fn g, void* ctx,
                                      double* grad_out) {
  return guard([&] {
    require_arg(d > 0, "dimension must be positive");
    require_arg(theta != nullptr, "null parameter pointer");
    require_arg(f != nullptr, "null objective callback");
    require_arg(grad_out != nullptr, "null output pointer");
    const auto dd = static_cast<std::size_t>(d);
    const auto tv = sympfac::ParamVector::from_flat(
        dd, std::span<const double>(theta, sympfac::param_count(dd)));
    const auto grad =
        sympfac::parameter_gradient(tv, make_objective(f, g, ctx));
    const auto flat = grad.to_flat();
    std::copy(flat.begin(), flat.end(), grad_out);
  });
}

void sympfac_opt_options_default(sympfac_opt_options* opts) {
  if (opts == nullptr) return;
  const sympfac::MinimizeOptions defaults;
  opts->max_iters = static_cast<int64_t>(defaults.max_iters);
  opts->grad_tol = defaults.grad_tol;
  opts->armijo_c = defaults.armijo_c;
  opts->backtrack = defaults.backtrack;
  opts->initial_step = defaults.initial_step;
}

sympfac_status sympfac_minimize(int64_t d, sympfac_objective_fn f,
                                sympfac_objective_grad_fn g, void* ctx,
                                const double* theta0,
                                const sympfac_opt_options* opts,
                                sympfac_opt_result** out) {
  return guard([&] {
    require_arg(out != nullptr, "null output pointer");
    require_arg(d > 0, "dimension must be positive");
    require_arg(f != nullptr, "null objective callback");
    const auto dd = static_cast<std::size_t>(d);
    auto init = theta0 == nullptr
                    ? sympfac::ParamVector::zero(dd)
                    : sympfac::ParamVector::from_flat(
                          dd, std::span<const double>(
                                  theta0, sympfac::param_count(dd)));
    sympfac::MinimizeOptions mo;
    if (opts != nullptr) {
      require_arg(opts->max_iters >= 0, "max_iters must be nonnegative");
      mo.max_iters = static_cast<std::size_t>(opts->max_iters);
      mo.grad_tol = opts->grad_tol;
      mo.armijo_c = opts->armijo_c;
      mo.backtrack = opts->backtrack;
      mo.initial_step = opts->initial_step;
    }
    auto res = sympfac::minimize(make_objective(f, g, ctx), dd, init, mo);
    *out = new sympfac_opt_result{std::move(res)};
  });
}

void sympfac_opt_result_destroy(sympfac_opt_result* r) { delete r; }

int64_t sympfac_opt_result_dim(const sympfac_opt_result* r) {
  return r == nullptr ? 0 : static_cast<int64_t>(r->res.theta.d);
}

int64_t sympfac_opt_result_iterations(const sympfac_opt_result* r) {
  return r == nullptr ? 0 : static_cast<int64_t>(r->res.iterations);
}

int sympfac_opt_result_line_search_failed(const sympfac_opt_result* r) {
  return (r != nullptr && r->res.line_search_failed) ? 1 : 0;
}

double sympfac_opt_result_objective(const sympfac_opt_result* r) {
  if (r == nullptr || r->res.trace.empty())
    return std::numeric_limits<double>::quiet_NaN();
  return r->res.trace.back();
}

sympfac_status sympfac_opt_result_theta(const sympfac_opt_result* r,
                                        double* out) {
  return guard([&] {
    require_arg(r != nullptr, "null result handle");
    require_arg(out != nullptr, "null output pointer");
    const auto flat = r->res.theta.to_flat();
    std::copy(flat.begin(), flat.end(), out);
  });
}

sympfac_status sympfac_opt_result_matrix(const sympfac_opt_result* r,
                                         sympfac_mat** out) {
  return guard([&] {
    require_arg(r != nullptr, "null result handle");
    require_arg(out != nullptr, "null output pointer");
    *out = wrap(r->res.h);
  });
}

int64_t sympfac_opt_result_trace_size(const sympfac_opt_result* r) {
  return r == nullptr ? 0 : static_cast<int64_t>(r->res.trace.size());
}

sympfac_status sympfac_opt_result_trace(const sympfac_opt_result* r,
                                        double* out) {
  return guard([&] {
    require_arg(r != nullptr, "null result handle");
    require_arg(out != nullptr, "null output pointer");
    std::copy(r->res.trace.begin(), r->res.trace.end(), out);
  });
}

} /* extern "C" */
