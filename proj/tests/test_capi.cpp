// Exercises the shared-library C interface through sympfac.h alone: no
// internal headers, so this binary doubles as a link check for the exported
// surface.
#include <cmath>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "sympfac.h"

namespace {

struct MatHandle {
  sympfac_mat* m = nullptr;
  ~MatHandle() { sympfac_mat_destroy(m); }
};

struct ChainHandle {
  sympfac_chain* c = nullptr;
  ~ChainHandle() { sympfac_chain_destroy(c); }
};

struct OptHandle {
  sympfac_opt_result* r = nullptr;
  ~OptHandle() { sympfac_opt_result_destroy(r); }
};

std::vector<double> dump(const sympfac_mat* m) {
  const auto n = static_cast<std::size_t>(sympfac_mat_rows(m) *
                                          sympfac_mat_cols(m));
  std::vector<double> out(n);
  REQUIRE(sympfac_mat_copy_data(m, out.data()) == SYMPFAC_OK);
  return out;
}

double diff_data(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

double nearest_identity_value(const double* x, int64_t side, void*) {
  double s = 0.0;
  for (int64_t i = 0; i < side; ++i) {
    for (int64_t j = 0; j < side; ++j) {
      const double t = x[i * side + j] - (i == j ? 1.0 : 0.0);
      s += t * t;
    }
  }
  return s;
}

void nearest_identity_grad(const double* x, int64_t side, double* grad,
                           void*) {
  for (int64_t i = 0; i < side; ++i)
    for (int64_t j = 0; j < side; ++j)
      grad[i * side + j] =
          2.0 * (x[i * side + j] - (i == j ? 1.0 : 0.0));
}

// value counts calls through ctx so the test can assert the callback ran
double counting_value(const double* x, int64_t side, void* ctx) {
  ++*static_cast<int*>(ctx);
  return nearest_identity_value(x, side, nullptr);
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(sympfac_status_name(SYMPFAC_OK)) == "ok");
  CHECK(std::string(sympfac_status_name(SYMPFAC_ERR_NOT_SYMPLECTIC)) ==
        "not_symplectic");
  CHECK(std::string(sympfac_status_name(SYMPFAC_ERR_ODD_DIMENSION)) ==
        "odd_dimension");
  CHECK(sympfac_version() != nullptr);
  CHECK(std::strlen(sympfac_version()) > 0);
}

TEST_CASE("matrix handles") {
  const double data[] = {1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
  MatHandle h;
  REQUIRE(sympfac_mat_create(2, 3, data, &h.m) == SYMPFAC_OK);
  CHECK(sympfac_mat_rows(h.m) == 2);
  CHECK(sympfac_mat_cols(h.m) == 3);
  const std::vector<double> back = dump(h.m);
  for (int i = 0; i < 6; ++i) CHECK(back[static_cast<std::size_t>(i)] == data[i]);

  SUBCASE("error paths set last_error") {
    sympfac_mat* out = nullptr;
    const double nan_data[] = {1.0, std::nan("")};
    CHECK(sympfac_mat_create(1, 2, nan_data, &out) ==
          SYMPFAC_ERR_INVALID_ARGUMENT);
    CHECK(out == nullptr);
    CHECK(std::strlen(sympfac_last_error()) > 0);
    CHECK(sympfac_mat_create(1, 1, nullptr, &out) ==
          SYMPFAC_ERR_INVALID_ARGUMENT);
    CHECK(sympfac_mat_create(0, 1, data, &out) ==
          SYMPFAC_ERR_INVALID_ARGUMENT);
    CHECK(sympfac_mat_create(1, 1, data, nullptr) ==
          SYMPFAC_ERR_INVALID_ARGUMENT);
    // a successful call clears the message
    MatHandle ok;
    REQUIRE(sympfac_mat_create(1, 1, data, &ok.m) == SYMPFAC_OK);
    CHECK(std::strlen(sympfac_last_error()) == 0);
  }

  SUBCASE("null handle accessors are inert") {
    CHECK(sympfac_mat_rows(nullptr) == 0);
    CHECK(sympfac_mat_cols(nullptr) == 0);
    sympfac_mat_destroy(nullptr);  // must not crash
  }
}

TEST_CASE("membership checks") {
  const double jd[] = {0.0, 1.0, -1.0, 0.0};
  MatHandle j;
  REQUIRE(sympfac_mat_create(2, 2, jd, &j.m) == SYMPFAC_OK);
  int flag = -1;
  double residual = -1.0;
  REQUIRE(sympfac_check_symplectic(j.m, -1.0, &flag, &residual) == SYMPFAC_OK);
  CHECK(flag == 1);
  CHECK(residual == 0.0);

  const double idd[] = {1.0, 0.0, 0.0, 1.0};
  MatHandle id;
  REQUIRE(sympfac_mat_create(2, 2, idd, &id.m) == SYMPFAC_OK);
  double min_eig = 0.0;
  REQUIRE(sympfac_check_spd(id.m, -1.0, &flag, &min_eig) == SYMPFAC_OK);
  CHECK(flag == 1);
  CHECK(min_eig == doctest::Approx(1.0));
  REQUIRE(sympfac_check_spd(j.m, -1.0, &flag, nullptr) == SYMPFAC_OK);
  CHECK(flag == 0);

  double shift_sv = -1.0;
  REQUIRE(sympfac_check_singular(id.m, -1.0, &flag, &shift_sv) == SYMPFAC_OK);
  CHECK(flag == 1);
  CHECK(shift_sv == 0.0);
  REQUIRE(sympfac_check_singular(j.m, -1.0, &flag, &shift_sv) == SYMPFAC_OK);
  CHECK(flag == 0);
  CHECK(shift_sv == doctest::Approx(std::sqrt(2.0)));

  SUBCASE("odd dimension is a status, not a crash") {
    const double d3[] = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    MatHandle m3;
    REQUIRE(sympfac_mat_create(3, 3, d3, &m3.m) == SYMPFAC_OK);
    CHECK(sympfac_check_symplectic(m3.m, -1.0, &flag, nullptr) ==
          SYMPFAC_ERR_ODD_DIMENSION);
    CHECK(sympfac_check_symplectic(nullptr, -1.0, &flag, nullptr) ==
          SYMPFAC_ERR_INVALID_ARGUMENT);
  }
}

TEST_CASE("five-slot factorization through handles") {
  const double jd[] = {0.0, 1.0, -1.0, 0.0};
  MatHandle j;
  REQUIRE(sympfac_mat_create(2, 2, jd, &j.m) == SYMPFAC_OK);
  ChainHandle chain;
  REQUIRE(sympfac_factor_utf5(j.m, 1, -1.0, &chain.c) == SYMPFAC_OK);
  CHECK(sympfac_chain_dim(chain.c) == 1);
  CHECK(sympfac_chain_size(chain.c) == 4);
  CHECK(sympfac_chain_has_shift(chain.c) == 1);
  int shift = -1;
  REQUIRE(sympfac_chain_shift(chain.c, &shift) == SYMPFAC_OK);
  CHECK(shift == 1);
  const int expect_kind[] = {SYMPFAC_FACTOR_LOWER, SYMPFAC_FACTOR_UPPER,
                             SYMPFAC_FACTOR_LOWER, SYMPFAC_FACTOR_UPPER};
  const double expect_s[] = {-1.0, 1.0, 0.0, 0.0};
  for (int64_t k = 0; k < 4; ++k) {
    int kind = -1;
    double s = 99.0;
    REQUIRE(sympfac_chain_factor(chain.c, k, &kind, &s) == SYMPFAC_OK);
    CHECK(kind == expect_kind[k]);
    CHECK(s == expect_s[k]);
  }
  CHECK(sympfac_chain_residual(chain.c) == 0.0);
  MatHandle rebuilt;
  REQUIRE(sympfac_chain_reconstruct(chain.c, &rebuilt.m) == SYMPFAC_OK);
  CHECK(diff_data(dump(rebuilt.m), {0.0, 1.0, -1.0, 0.0}) == 0.0);

  SUBCASE("out-of-range factor index") {
    CHECK(sympfac_chain_factor(chain.c, 4, nullptr, nullptr) ==
          SYMPFAC_ERR_INVALID_ARGUMENT);
    CHECK(sympfac_chain_factor(chain.c, -1, nullptr, nullptr) ==
          SYMPFAC_ERR_INVALID_ARGUMENT);
  }
  SUBCASE("non-symplectic input is a status") {
    const double bad[] = {2.0, 0.0, 0.0, 2.0};
    MatHandle b;
    REQUIRE(sympfac_mat_create(2, 2, bad, &b.m) == SYMPFAC_OK);
    sympfac_chain* out = nullptr;
    CHECK(sympfac_factor_utf5(b.m, 1, -1.0, &out) ==
          SYMPFAC_ERR_NOT_SYMPLECTIC);
    CHECK(out == nullptr);
  }
}

TEST_CASE("direct splits through flat buffers") {
  const double hd[] = {2.0, 0.0, 0.0, 0.5};
  MatHandle h;
  REQUIRE(sympfac_mat_create(2, 2, hd, &h.m) == SYMPFAC_OK);

  double s = -1, t = -1, p = -1, residual = -1;
  REQUIRE(sympfac_factor_ldu(h.m, SYMPFAC_LDU_CENTER, &s, &t, &p,
                             &residual) == SYMPFAC_OK);
  CHECK(s == 0.0);
  CHECK(t == 0.0);
  CHECK(p == 2.0);
  CHECK(residual == 0.0);

  const double jd[] = {0.0, 1.0, -1.0, 0.0};
  MatHandle j;
  REQUIRE(sympfac_mat_create(2, 2, jd, &j.m) == SYMPFAC_OK);
  CHECK(sympfac_factor_ldu(j.m, SYMPFAC_LDU_CENTER, &s, &t, &p, nullptr) ==
        SYMPFAC_ERR_SINGULAR_UPPER_LEFT);
  CHECK(sympfac_factor_ldu(h.m, 7, &s, &t, &p, nullptr) ==
        SYMPFAC_ERR_INVALID_ARGUMENT);

  SUBCASE("upper-lower-upper with the automatic shift") {
    double s_used = -1, u = -1;
    REQUIRE(sympfac_factor_ulu(j.m, nullptr, &s_used, &t, &u, &p,
                               &residual) == SYMPFAC_OK);
    CHECK(s_used == 1.0);  // zero upper-left block flips the whole shift on
    CHECK(t == -1.0);
    CHECK(u == 1.0);
    CHECK(p == 1.0);
    CHECK(residual == 0.0);
  }
  SUBCASE("upper-lower-upper with a caller shift") {
    const double s_in[] = {1.0};
    double u = -1;
    REQUIRE(sympfac_factor_ulu(j.m, s_in, nullptr, &t, &u, &p, &residual) ==
            SYMPFAC_OK);
    CHECK(t == -1.0);
    const double zero[] = {0.0};
    CHECK(sympfac_factor_ulu(j.m, zero, nullptr, &t, &u, &p, nullptr) ==
          SYMPFAC_ERR_SINGULAR_AFTER_SHIFT);
  }
  SUBCASE("positive definite split") {
    double u = -1;
    REQUIRE(sympfac_factor_spd(h.m, SYMPFAC_SPD_ULU, &s, &t, &u, &residual) ==
            SYMPFAC_OK);
    CHECK(s == doctest::Approx(1.224744871391589));
    CHECK(t == doctest::Approx(0.31010205144334576));
    CHECK(u == doctest::Approx(-1.0));
    REQUIRE(sympfac_factor_spd(h.m, SYMPFAC_SPD_LUL, &s, &t, &u, nullptr) ==
            SYMPFAC_OK);
    CHECK(s == doctest::Approx(-1.224744871391589));
    CHECK(sympfac_factor_spd(j.m, SYMPFAC_SPD_ULU, &s, &t, &u, nullptr) ==
          SYMPFAC_ERR_NOT_POSITIVE_DEFINITE);
  }
}

TEST_CASE("generators are deterministic and land in their sets") {
  for (int64_t d = 1; d <= 3; ++d) {
    MatHandle a, b;
    REQUIRE(sympfac_random_symplectic(d, 7, 1.0, &a.m) == SYMPFAC_OK);
    REQUIRE(sympfac_random_symplectic(d, 7, 1.0, &b.m) == SYMPFAC_OK);
    CHECK(dump(a.m) == dump(b.m));
    CHECK(sympfac_mat_rows(a.m) == 2 * d);
    int flag = 0;
    REQUIRE(sympfac_check_symplectic(a.m, -1.0, &flag, nullptr) == SYMPFAC_OK);
    CHECK(flag == 1);

    MatHandle spd;
    REQUIRE(sympfac_random_spd(d, 11, 0.8, &spd.m) == SYMPFAC_OK);
    REQUIRE(sympfac_check_spd(spd.m, -1.0, &flag, nullptr) == SYMPFAC_OK);
    CHECK(flag == 1);

    MatHandle sing;
    REQUIRE(sympfac_random_singular(d, 13, 0.5, &sing.m) == SYMPFAC_OK);
    REQUIRE(sympfac_check_singular(sing.m, -1.0, &flag, nullptr) ==
            SYMPFAC_OK);
    CHECK(flag == 1);
  }
  MatHandle bad;
  CHECK(sympfac_random_symplectic(0, 1, 1.0, &bad.m) ==
        SYMPFAC_ERR_INVALID_ARGUMENT);
  CHECK(sympfac_random_symplectic(2, 1, std::nan(""), &bad.m) ==
        SYMPFAC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("parameterization and descent through callbacks") {
  CHECK(sympfac_param_count(1) == 5);
  CHECK(sympfac_param_count(10) == 230);

  const double zero_theta[5] = {0, 0, 0, 0, 0};
  MatHandle built;
  REQUIRE(sympfac_param_build(1, zero_theta, &built.m) == SYMPFAC_OK);
  CHECK(diff_data(dump(built.m), {1.0, 0.0, 0.0, 1.0}) == 0.0);

  SUBCASE("gradient with and without the analytic callback") {
    const double theta[5] = {0.3, -0.2, 0.5, 0.1, -0.4};
    double ga[5], gf[5];
    int calls = 0;
    REQUIRE(sympfac_param_gradient(1, theta, nearest_identity_value,
                                   nearest_identity_grad, nullptr,
                                   ga) == SYMPFAC_OK);
    REQUIRE(sympfac_param_gradient(1, theta, counting_value, nullptr, &calls,
                                   gf) == SYMPFAC_OK);
    CHECK(calls > 0);  // finite differences had to evaluate the objective
    for (int i = 0; i < 5; ++i)
      CHECK(gf[i] == doctest::Approx(ga[i]).epsilon(1e-5).scale(1.0));
  }

  SUBCASE("minimize drives the matrix to the identity") {
    OptHandle r;
    REQUIRE(sympfac_minimize(1, nearest_identity_value, nearest_identity_grad,
                             nullptr, nullptr, nullptr, &r.r) == SYMPFAC_OK);
    CHECK(sympfac_opt_result_dim(r.r) == 1);
    CHECK(sympfac_opt_result_objective(r.r) <= 1e-12);
    CHECK(sympfac_opt_result_line_search_failed(r.r) == 0);
    const int64_t n = sympfac_opt_result_trace_size(r.r);
    REQUIRE(n >= 1);
    std::vector<double> trace(static_cast<std::size_t>(n));
    REQUIRE(sympfac_opt_result_trace(r.r, trace.data()) == SYMPFAC_OK);
    for (std::size_t k = 1; k < trace.size(); ++k)
      CHECK(trace[k] <= trace[k - 1]);
    double theta[5];
    REQUIRE(sympfac_opt_result_theta(r.r, theta) == SYMPFAC_OK);
    MatHandle m;
    REQUIRE(sympfac_opt_result_matrix(r.r, &m.m) == SYMPFAC_OK);
    MatHandle rebuilt;
    REQUIRE(sympfac_param_build(1, theta, &rebuilt.m) == SYMPFAC_OK);
    CHECK(diff_data(dump(m.m), dump(rebuilt.m)) == 0.0);
  }

  SUBCASE("explicit start point and iteration cap") {
    sympfac_opt_options opts;
    sympfac_opt_options_default(&opts);
    CHECK(opts.max_iters == 500);
    CHECK(opts.grad_tol == 1e-12);
    opts.max_iters = 0;
    const double start[5] = {0.5, 0.0, 0.0, 0.0, 0.0};
    OptHandle r;
    REQUIRE(sympfac_minimize(1, nearest_identity_value, nullptr, nullptr,
                             start, &opts, &r.r) == SYMPFAC_OK);
    CHECK(sympfac_opt_result_iterations(r.r) == 0);
    CHECK(sympfac_opt_result_objective(r.r) == doctest::Approx(0.25));
  }

  SUBCASE("null objective is rejected") {
    OptHandle r;
    CHECK(sympfac_minimize(1, nullptr, nullptr, nullptr, nullptr, nullptr,
                           &r.r) == SYMPFAC_ERR_INVALID_ARGUMENT);
  }
}
