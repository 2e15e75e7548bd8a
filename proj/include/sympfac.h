/* sympfac: factorizations of real symplectic matrices.
 *
 * C interface to the shared library. All matrices cross this boundary as
 * row-major double buffers or as opaque handles; every fallible call returns
 * a sympfac_status and writes results through out-parameters. Handles are
 * created by the library and must be released with the matching _destroy
 * function. The library never reads OS entropy: all randomness comes from the
 * 64-bit seeds passed in.
 */

#ifndef SYMPFAC_H
#define SYMPFAC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sympfac_status {
  SYMPFAC_OK = 0,
  SYMPFAC_ERR_INVALID_ARGUMENT = 1,
  SYMPFAC_ERR_SINGULAR_MATRIX = 2,
  SYMPFAC_ERR_NO_CONVERGENCE = 3,
  SYMPFAC_ERR_NOT_POSITIVE_DEFINITE = 4,
  SYMPFAC_ERR_ODD_DIMENSION = 5,
  SYMPFAC_ERR_NOT_SYMPLECTIC = 6,
  SYMPFAC_ERR_SINGULAR_UPPER_LEFT = 7,
  SYMPFAC_ERR_SINGULAR_AFTER_SHIFT = 8,
  SYMPFAC_ERR_NONSINGULARIZATION_FAILED = 9,
  SYMPFAC_ERR_FACTOR_SEARCH_EXHAUSTED = 10,
  SYMPFAC_ERR_NUMERICAL = 11,
  SYMPFAC_ERR_INTERNAL = 12
} sympfac_status;

/* Stable name for a status code, e.g. "not_symplectic". */
const char* sympfac_status_name(sympfac_status status);

/* Message describing the most recent failure on this thread; empty when the
 * last call succeeded. The buffer is owned by the library. */
const char* sympfac_last_error(void);

const char* sympfac_version(void);

/* ---- matrices ---------------------------------------------------------- */

typedef struct sympfac_mat sympfac_mat;

/* Copies `data` (rows*cols doubles, row-major). Rejects NaN/Inf entries. */
sympfac_status sympfac_mat_create(int64_t rows, int64_t cols,
                                  const double* data, sympfac_mat** out);
void sympfac_mat_destroy(sympfac_mat* m);

int64_t sympfac_mat_rows(const sympfac_mat* m);
int64_t sympfac_mat_cols(const sympfac_mat* m);
/* `out` must hold rows*cols doubles. */
sympfac_status sympfac_mat_copy_data(const sympfac_mat* m, double* out);

/* ---- membership checks ------------------------------------------------- */

/* Symplectic membership. tol < 0 selects the default 1e-10 * ||M||_F^2.
 * Both out-parameters may be NULL. */
sympfac_status sympfac_check_symplectic(const sympfac_mat* m, double tol,
                                        int* is_symplectic, double* residual);

/* Symmetric positive definite symplectic membership; min_eigenvalue reports
 * the smallest eigenvalue of the symmetrized input (NULL allowed). */
sympfac_status sympfac_check_spd(const sympfac_mat* m, double tol, int* is_spd,
                                 double* min_eigenvalue);

/* Symplectic with M - I singular; shift_min_sv reports the smallest singular
 * value of M - I (NULL allowed). */
sympfac_status sympfac_check_singular(const sympfac_mat* m, double tol,
                                      int* is_singular_symplectic,
                                      double* shift_min_sv);

/* ---- factor chains ----------------------------------------------------- */

typedef struct sympfac_chain sympfac_chain;

#define SYMPFAC_FACTOR_UPPER 0
#define SYMPFAC_FACTOR_LOWER 1

/* Factor a symplectic 2d x 2d matrix into a diagonal 0/1 shift followed by
 * four unit triangular factors (lower, upper, lower, upper). The seed drives
 * the symmetric two-factor search inside; the same (matrix, seed) always
 * yields bit-identical output. tol < 0 selects the default membership
 * tolerance; failing it is SYMPFAC_ERR_NOT_SYMPLECTIC. */
sympfac_status sympfac_factor_utf5(const sympfac_mat* h, uint64_t seed,
                                   double tol, sympfac_chain** out);

void sympfac_chain_destroy(sympfac_chain* c);

int64_t sympfac_chain_dim(const sympfac_chain* c);        /* d */
int64_t sympfac_chain_size(const sympfac_chain* c);       /* factor count */
int sympfac_chain_has_shift(const sympfac_chain* c);
/* `out` must hold d ints; entries are 0 or 1. */
sympfac_status sympfac_chain_shift(const sympfac_chain* c, int* out);
/* kind receives SYMPFAC_FACTOR_UPPER/LOWER (NULL allowed); s must hold d*d
 * doubles for the symmetric block (NULL allowed). */
sympfac_status sympfac_chain_factor(const sympfac_chain* c, int64_t index,
                                    int* kind, double* s);
/* ||product of the chain - source matrix||_F, fixed at factor time. */
double sympfac_chain_residual(const sympfac_chain* c);
sympfac_status sympfac_chain_reconstruct(const sympfac_chain* c,
                                         sympfac_mat** out);

/* ---- triangular-diagonal splits ---------------------------------------- */

#define SYMPFAC_LDU_LEFT 0   /* H = Db(P) L(S) U(T) */
#define SYMPFAC_LDU_CENTER 1 /* H = L(S) Db(P) U(T) */
#define SYMPFAC_LDU_RIGHT 2  /* H = L(S) U(T) Db(P) */

/* Split H into two unit triangular factors around the block-diagonal
 * Db(P) = [[P, 0], [0, P^-T]]. Requires a nonsingular upper-left block
 * (SYMPFAC_ERR_SINGULAR_UPPER_LEFT otherwise). s, t, p each receive d*d
 * doubles; residual may be NULL. */
sympfac_status sympfac_factor_ldu(const sympfac_mat* h, int variant,
                                  double* s, double* t, double* p,
                                  double* residual);

/* Unit upper-lower-upper split H = U(S) L(T) U(U) Db(P). When s_in is NULL
 * the diagonal 0/1 shift from the nonsingularization step is used as S.
 * s_used/t/u/p each receive d*d doubles (s_used may be NULL). */
sympfac_status sympfac_factor_ulu(const sympfac_mat* h, const double* s_in,
                                  double* s_used, double* t, double* u,
                                  double* p, double* residual);

/* ---- symmetric positive definite input --------------------------------- */

#define SYMPFAC_SPD_ULU 0 /* L = U(S) L(T) U(U) */
#define SYMPFAC_SPD_LUL 1 /* L = L(S) U(T) L(U) */

/* Three-factor split H = L^T L of a symmetric positive definite symplectic
 * matrix. s, t, u each receive d*d doubles; residual may be NULL. */
sympfac_status sympfac_factor_spd(const sympfac_mat* h, int shape, double* s,
                                  double* t, double* u, double* residual);

/* ---- generators -------------------------------------------------------- */

/* Structurally symplectic matrix from a seeded random five-factor chain;
 * free parameters are uniform in [-scale, scale]. */
sympfac_status sympfac_random_symplectic(int64_t d, uint64_t seed,
                                         double scale, sympfac_mat** out);
/* L^T L over a random three-factor chain: symmetric positive definite. */
sympfac_status sympfac_random_spd(int64_t d, uint64_t seed, double scale,
                                  sympfac_mat** out);
/* Symplectic with H - I singular, by construction. */
sympfac_status sympfac_random_singular(int64_t d, uint64_t seed, double scale,
                                       sympfac_mat** out);

/* ---- unconstrained parameterization and descent ------------------------ */

/* Number of free coordinates: 2d^2 + 3d. */
int64_t sympfac_param_count(int64_t d);

/* Build the symplectic matrix for theta (sympfac_param_count(d) doubles laid
 * out as d diagonal entries followed by four packed symmetric blocks, each
 * packed as the lower triangle in row order). out receives 2d x 2d. */
sympfac_status sympfac_param_build(int64_t d, const double* theta,
                                   sympfac_mat** out);

/* Objective callbacks receive the current 2d x 2d matrix (row-major, side =
 * 2d) and the user context. The gradient callback, when non-NULL, must fill
 * df/dX entrywise (side*side doubles); a NULL gradient selects central finite
 * differences. */
typedef double (*sympfac_objective_fn)(const double* x, int64_t side,
                                       void* ctx);
typedef void (*sympfac_objective_grad_fn)(const double* x, int64_t side,
                                          double* grad, void* ctx);

/* Derivative of theta -> f(H(theta)); grad_out receives
 * sympfac_param_count(d) doubles. */
sympfac_status sympfac_param_gradient(int64_t d, const double* theta,
                                      sympfac_objective_fn f,
                                      sympfac_objective_grad_fn g, void* ctx,
                                      double* grad_out);

typedef struct sympfac_opt_options {
  int64_t max_iters;   /* default 500 */
  double grad_tol;     /* default 1e-12 */
  double armijo_c;     /* default 1e-4 */
  double backtrack;    /* default 0.5 */
  double initial_step; /* default 1.0 */
} sympfac_opt_options;

void sympfac_opt_options_default(sympfac_opt_options* opts);

typedef struct sympfac_opt_result sympfac_opt_result;

/* Gradient descent with Armijo backtracking over the free coordinates.
 * theta0 may be NULL for the zero start; opts may be NULL for defaults. A
 * stalled line search still returns SYMPFAC_OK with the best iterate and the
 * line_search_failed flag set. */
sympfac_status sympfac_minimize(int64_t d, sympfac_objective_fn f,
                                sympfac_objective_grad_fn g, void* ctx,
                                const double* theta0,
                                const sympfac_opt_options* opts,
                                sympfac_opt_result** out);

void sympfac_opt_result_destroy(sympfac_opt_result* r);

int64_t sympfac_opt_result_dim(const sympfac_opt_result* r);
int64_t sympfac_opt_result_iterations(const sympfac_opt_result* r);
int sympfac_opt_result_line_search_failed(const sympfac_opt_result* r);
double sympfac_opt_result_objective(const sympfac_opt_result* r);
/* theta out: sympfac_param_count(d) doubles. */
sympfac_status sympfac_opt_result_theta(const sympfac_opt_result* r,
                                        double* out);
sympfac_status sympfac_opt_result_matrix(const sympfac_opt_result* r,
                                         sympfac_mat** out);
int64_t sympfac_opt_result_trace_size(const sympfac_opt_result* r);
sympfac_status sympfac_opt_result_trace(const sympfac_opt_result* r,
                                        double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SYMPFAC_H */
