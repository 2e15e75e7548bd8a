// Command-line interface of the symplectic factorization library. All linear
// algebra goes through the shared C API (sympfac.h); this file only parses
// matrix documents, dispatches, and serializes result documents. Numbers are
// written with 17 significant digits so documents round-trip doubles exactly
// and identical invocations produce byte-identical output.
//
// Exit codes: 0 success, 2 bad flags or parse error, 3 input not symplectic
// at the requested tolerance, 4 numerical failure (the failing module's error
// name goes to stderr). `check` exits 0/1 for member/non-member, 2 on parse
// errors. The environment variable SYMPFAC_TOL supplies a tolerance when
// --tol is absent; a negative tolerance selects each operation's default.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sympfac.h"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitNotSymplectic = 3;
constexpr int kExitNumerical = 4;

struct CmdError {
  int exit_code;
  std::string message;
};

[[noreturn]] void fail(int exit_code, const std::string& message) {
  throw CmdError{exit_code, message};
}

int exit_for_status(sympfac_status status) {
  switch (status) {
    case SYMPFAC_ERR_NOT_SYMPLECTIC: return kExitNotSymplectic;
    case SYMPFAC_ERR_INVALID_ARGUMENT:
    case SYMPFAC_ERR_ODD_DIMENSION: return kExitParse;
    default: return kExitNumerical;
  }
}

[[noreturn]] void fail_status(sympfac_status status) {
  fail(exit_for_status(status),
       std::string(sympfac_status_name(status)) + ": " + sympfac_last_error());
}

void check_status(sympfac_status status) {
  if (status != SYMPFAC_OK) fail_status(status);
}

// RAII wrappers around the C handles.
struct MatHandle {
  sympfac_mat* p = nullptr;
  MatHandle() = default;
  MatHandle(MatHandle&& o) noexcept : p(std::exchange(o.p, nullptr)) {}
  MatHandle& operator=(MatHandle&& o) noexcept {
    std::swap(p, o.p);
    return *this;
  }
  MatHandle(const MatHandle&) = delete;
  MatHandle& operator=(const MatHandle&) = delete;
  ~MatHandle() { sympfac_mat_destroy(p); }
};

struct ChainHandle {
  sympfac_chain* p = nullptr;
  ChainHandle() = default;
  ChainHandle(const ChainHandle&) = delete;
  ChainHandle& operator=(const ChainHandle&) = delete;
  ~ChainHandle() { sympfac_chain_destroy(p); }
};

struct OptHandle {
  sympfac_opt_result* p = nullptr;
  OptHandle() = default;
  OptHandle(const OptHandle&) = delete;
  OptHandle& operator=(const OptHandle&) = delete;
  ~OptHandle() { sympfac_opt_result_destroy(p); }
};

// ---- number and document serialization ----------------------------------

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_number_row(std::ostream& os, const double* row, std::int64_t n) {
  os << '[';
  for (std::int64_t j = 0; j < n; ++j) {
    if (j > 0) os << ", ";
    os << fmt(row[j]);
  }
  os << ']';
}

// JSON array of rows starting at the current stream position; `indent` is the
// indentation of the surrounding key.
void write_matrix_array(std::ostream& os, const double* data,
                        std::int64_t rows, std::int64_t cols,
                        const std::string& indent) {
  os << "[\n";
  for (std::int64_t i = 0; i < rows; ++i) {
    os << indent << "  ";
    write_number_row(os, data + i * cols, cols);
    os << (i + 1 < rows ? "," : "") << "\n";
  }
  os << indent << "]";
}

std::string matrix_doc_json(std::int64_t d, const std::vector<double>& data) {
  std::ostringstream os;
  os << "{\n  \"d\": " << d << ",\n  \"matrix\": ";
  write_matrix_array(os, data.data(), 2 * d, 2 * d, "  ");
  os << "\n}\n";
  return os.str();
}

std::string matrix_doc_text(std::int64_t d, const std::vector<double>& data) {
  std::ostringstream os;
  os << d << "\n";
  const std::int64_t side = 2 * d;
  for (std::int64_t i = 0; i < side; ++i) {
    for (std::int64_t j = 0; j < side; ++j) {
      if (j > 0) os << ' ';
      os << fmt(data[i * side + j]);
    }
    os << "\n";
  }
  return os.str();
}

struct FactorOut {
  std::string kind;  // "upper" or "lower"
  std::vector<double> s;
};

// Factor-chain document. Factors are listed leftmost first (application order
// right to left). Optional pieces: a mode-specific tag ("variant"/"shape"),
// the 0/1 diagonal shift, and the block-diagonal factor P whose position in
// the product is implied by the mode and tag.
std::string chain_doc_json(std::int64_t d, const std::string& mode,
                           const char* tag_key, const std::string& tag_value,
                           const std::vector<int>* diag_shift,
                           const std::vector<FactorOut>& factors,
                           const std::vector<double>* p, double residual) {
  std::ostringstream os;
  os << "{\n  \"d\": " << d << ",\n  \"mode\": \"" << mode << "\"";
  if (tag_key != nullptr)
    os << ",\n  \"" << tag_key << "\": \"" << tag_value << "\"";
  if (diag_shift != nullptr) {
    os << ",\n  \"diag_shift\": [";
    for (std::size_t i = 0; i < diag_shift->size(); ++i) {
      if (i > 0) os << ", ";
      os << (*diag_shift)[i];
    }
    os << "]";
  }
  os << ",\n  \"factors\": [\n";
  for (std::size_t k = 0; k < factors.size(); ++k) {
    os << "    {\n      \"kind\": \"" << factors[k].kind
       << "\",\n      \"S\": ";
    write_matrix_array(os, factors[k].s.data(), d, d, "      ");
    os << "\n    }" << (k + 1 < factors.size() ? "," : "") << "\n";
  }
  os << "  ]";
  if (p != nullptr) {
    os << ",\n  \"P\": ";
    write_matrix_array(os, p->data(), d, d, "  ");
  }
  os << ",\n  \"residual\": " << fmt(residual) << "\n}\n";
  return os.str();
}

std::string optimize_doc_json(std::int64_t d, const std::string& init,
                              std::int64_t iterations, bool line_search_failed,
                              double final_objective,
                              const std::vector<double>& theta,
                              const std::vector<double>& matrix,
                              const std::vector<double>& trace) {
  std::ostringstream os;
  os << "{\n  \"d\": " << d << ",\n  \"objective\": \"nearest\",\n  \"init\": \""
     << init << "\",\n  \"iterations\": " << iterations
     << ",\n  \"line_search_failed\": "
     << (line_search_failed ? "true" : "false")
     << ",\n  \"final_objective\": " << fmt(final_objective)
     << ",\n  \"theta\": ";
  write_number_row(os, theta.data(), static_cast<std::int64_t>(theta.size()));
  os << ",\n  \"matrix\": ";
  write_matrix_array(os, matrix.data(), 2 * d, 2 * d, "  ");
  os << ",\n  \"trace\": ";
  write_number_row(os, trace.data(), static_cast<std::int64_t>(trace.size()));
  os << "\n}\n";
  return os.str();
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) fail(kExitParse, "cannot open output file: " + out_path);
  f << content;
  f.flush();
  if (!f.good()) fail(kExitParse, "failed writing output file: " + out_path);
}

// ---- document parsing ----------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(kExitParse, "cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// A matrix document always describes a 2d x 2d matrix.
struct MatrixDoc {
  std::int64_t d = 0;
  std::vector<double> data;  // (2d)^2 entries, row-major
};

MatrixDoc parse_matrix_json(const std::string& text,
                            const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(kExitParse, origin + ": " + e.what());
  }
  try {
    MatrixDoc doc;
    doc.d = j.at("d").get<std::int64_t>();
    if (doc.d < 1) fail(kExitParse, origin + ": d must be at least 1");
    const auto& rows = j.at("matrix");
    const std::size_t side = static_cast<std::size_t>(2 * doc.d);
    if (!rows.is_array() || rows.size() != side)
      fail(kExitParse, origin + ": matrix must have 2*d rows");
    doc.data.reserve(side * side);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != side)
        fail(kExitParse, origin + ": every matrix row needs 2*d entries");
      for (const auto& x : row) {
        if (!x.is_number())
          fail(kExitParse, origin + ": matrix entries must be numbers");
        doc.data.push_back(x.get<double>());
      }
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    fail(kExitParse, origin + ": " + e.what());
  }
}

MatrixDoc parse_matrix_text(const std::string& text,
                            const std::string& origin) {
  std::istringstream iss(text);
  MatrixDoc doc;
  if (!(iss >> doc.d) || doc.d < 1)
    fail(kExitParse,
         origin + ": first token must be the positive half-dimension d");
  const std::int64_t side = 2 * doc.d;
  doc.data.resize(static_cast<std::size_t>(side * side));
  for (auto& x : doc.data)
    if (!(iss >> x))
      fail(kExitParse, origin + ": expected (2*d)^2 numeric entries");
  return doc;
}

MatrixDoc parse_matrix_doc(const std::string& text,
                           const std::string& origin) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string::npos) fail(kExitParse, origin + ": empty document");
  return text[pos] == '{' ? parse_matrix_json(text, origin)
                          : parse_matrix_text(text, origin);
}

MatHandle make_handle(const MatrixDoc& doc) {
  MatHandle h;
  check_status(
      sympfac_mat_create(2 * doc.d, 2 * doc.d, doc.data.data(), &h.p));
  return h;
}

// --tol beats SYMPFAC_TOL beats the per-operation default (-1).
double resolve_tol(bool tol_given, double tol_flag) {
  if (tol_given) return tol_flag;
  if (const char* env = std::getenv("SYMPFAC_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && std::isfinite(v)) return v;
    std::cerr << "warning: ignoring unparsable SYMPFAC_TOL value\n";
  }
  return -1.0;
}

// ---- subcommands ---------------------------------------------------------

int run_factor(const std::string& input, const std::string& mode,
               const std::string& variant, const std::string& shape,
               std::uint64_t seed, double tol, const std::string& out_path) {
  const MatrixDoc doc = parse_matrix_doc(read_file(input), input);
  const std::int64_t d = doc.d;
  const std::size_t dd = static_cast<std::size_t>(d * d);
  const MatHandle h = make_handle(doc);
  std::string content;
  double residual = 0.0;

  if (mode == "utf5") {
    ChainHandle chain;
    check_status(sympfac_factor_utf5(h.p, seed, tol, &chain.p));
    std::vector<int> shift(static_cast<std::size_t>(d), 0);
    if (sympfac_chain_has_shift(chain.p) != 0)
      check_status(sympfac_chain_shift(chain.p, shift.data()));
    const std::int64_t n = sympfac_chain_size(chain.p);
    std::vector<FactorOut> factors;
    for (std::int64_t k = 0; k < n; ++k) {
      FactorOut f;
      f.s.resize(dd);
      int kind = 0;
      check_status(sympfac_chain_factor(chain.p, k, &kind, f.s.data()));
      f.kind = kind == SYMPFAC_FACTOR_UPPER ? "upper" : "lower";
      factors.push_back(std::move(f));
    }
    residual = sympfac_chain_residual(chain.p);
    content = chain_doc_json(d, mode, nullptr, "", &shift, factors, nullptr,
                             residual);
  } else if (mode == "spd") {
    const bool lul = shape == "lower-upper-lower";
    std::vector<double> s(dd), t(dd), u(dd);
    check_status(sympfac_factor_spd(h.p,
                                    lul ? SYMPFAC_SPD_LUL : SYMPFAC_SPD_ULU,
                                    s.data(), t.data(), u.data(), &residual));
    std::vector<FactorOut> factors;
    factors.push_back({lul ? "lower" : "upper", std::move(s)});
    factors.push_back({lul ? "upper" : "lower", std::move(t)});
    factors.push_back({lul ? "lower" : "upper", std::move(u)});
    content = chain_doc_json(d, mode, "shape", shape, nullptr, factors,
                             nullptr, residual);
  } else if (mode == "ldu") {
    const int v = variant == "left"    ? SYMPFAC_LDU_LEFT
                  : variant == "right" ? SYMPFAC_LDU_RIGHT
                                       : SYMPFAC_LDU_CENTER;
    std::vector<double> s(dd), t(dd), p(dd);
    check_status(
        sympfac_factor_ldu(h.p, v, s.data(), t.data(), p.data(), &residual));
    std::vector<FactorOut> factors;
    factors.push_back({"lower", std::move(s)});
    factors.push_back({"upper", std::move(t)});
    content =
        chain_doc_json(d, mode, "variant", variant, nullptr, factors, &p,
                       residual);
  } else {  // ulu
    std::vector<double> s(dd), t(dd), u(dd), p(dd);
    check_status(sympfac_factor_ulu(h.p, nullptr, s.data(), t.data(),
                                    u.data(), p.data(), &residual));
    std::vector<FactorOut> factors;
    factors.push_back({"upper", std::move(s)});
    factors.push_back({"lower", std::move(t)});
    factors.push_back({"upper", std::move(u)});
    content =
        chain_doc_json(d, mode, nullptr, "", nullptr, factors, &p, residual);
  }

  emit(out_path, content);
  std::cerr << "residual: " << fmt(residual) << "\n";
  return 0;
}

int run_random(const std::string& kind, std::int64_t d, std::uint64_t seed,
               double scale, const std::string& format,
               const std::string& out_path) {
  MatHandle m;
  if (kind == "symplectic") {
    check_status(sympfac_random_symplectic(d, seed, scale, &m.p));
  } else if (kind == "spd") {
    check_status(sympfac_random_spd(d, seed, scale, &m.p));
  } else {  // singular
    check_status(sympfac_random_singular(d, seed, scale, &m.p));
  }
  std::vector<double> data(static_cast<std::size_t>(4 * d * d));
  check_status(sympfac_mat_copy_data(m.p, data.data()));
  emit(out_path,
       format == "text" ? matrix_doc_text(d, data) : matrix_doc_json(d, data));
  return 0;
}

int run_check(const std::string& input, double tol) {
  const MatrixDoc doc = parse_matrix_doc(read_file(input), input);
  const MatHandle h = make_handle(doc);
  int is_symp = 0, is_spd = 0, is_sing = 0;
  double residual = 0.0, min_eig = 0.0, min_sv = 0.0;
  check_status(sympfac_check_symplectic(h.p, tol, &is_symp, &residual));
  check_status(sympfac_check_spd(h.p, tol, &is_spd, &min_eig));
  check_status(sympfac_check_singular(h.p, tol, &is_sing, &min_sv));
  std::cout << "symplectic: " << (is_symp != 0 ? "yes" : "no") << " (residual "
            << fmt(residual) << ")\n";
  std::cout << "spd: " << (is_spd != 0 ? "yes" : "no") << " (min eigenvalue "
            << fmt(min_eig) << ")\n";
  std::cout << "singular: " << (is_sing != 0 ? "yes" : "no")
            << " (min singular value of H - I = " << fmt(min_sv) << ")\n";
  return is_symp != 0 ? 0 : 1;
}

struct NearestCtx {
  const double* target;
};

double nearest_value(const double* x, int64_t side, void* ctx) {
  const double* t = static_cast<const NearestCtx*>(ctx)->target;
  double acc = 0.0;
  for (int64_t i = 0; i < side * side; ++i) {
    const double diff = x[i] - t[i];
    acc += diff * diff;
  }
  return acc;
}

void nearest_gradient(const double* x, int64_t side, double* grad, void* ctx) {
  const double* t = static_cast<const NearestCtx*>(ctx)->target;
  for (int64_t i = 0; i < side * side; ++i) grad[i] = 2.0 * (x[i] - t[i]);
}

// Flat coordinates that rebuild exactly what the chain reconstructs: the
// shift entries become the free diagonal, and the four factor blocks fill the
// packed slots from the rightmost factor backwards.
std::vector<double> theta_from_chain(sympfac_chain* chain, std::int64_t d) {
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(sympfac_param_count(d)));
  std::vector<int> shift(static_cast<std::size_t>(d), 0);
  if (sympfac_chain_has_shift(chain) != 0)
    check_status(sympfac_chain_shift(chain, shift.data()));
  for (int delta : shift) flat.push_back(static_cast<double>(delta));
  if (sympfac_chain_size(chain) != 4)
    fail(kExitNumerical, "unexpected factor chain layout");
  std::vector<double> s(static_cast<std::size_t>(d * d));
  for (std::int64_t idx : {3, 2, 1, 0}) {
    int kind = 0;
    check_status(sympfac_chain_factor(chain, idx, &kind, s.data()));
    const int expected =
        idx % 2 == 0 ? SYMPFAC_FACTOR_LOWER : SYMPFAC_FACTOR_UPPER;
    if (kind != expected)
      fail(kExitNumerical, "unexpected factor chain layout");
    for (std::int64_t i = 0; i < d; ++i)
      for (std::int64_t j = 0; j <= i; ++j) flat.push_back(s[i * d + j]);
  }
  return flat;
}

int run_optimize(const std::string& target_path, std::int64_t d_flag,
                 std::int64_t max_iters, std::uint64_t seed,
                 const std::string& init, const std::string& out_path) {
  const MatrixDoc doc = parse_matrix_doc(read_file(target_path), target_path);
  const std::int64_t d = doc.d;
  if (d_flag > 0 && d_flag != d)
    fail(kExitParse, "--d does not match the target document");
  const MatHandle h = make_handle(doc);
  NearestCtx ctx{doc.data.data()};

  std::vector<double> theta0;
  std::string init_used = init;
  if (init == "factor") {
    // Start from a factorization of the target itself (membership enforced
    // loosely so near-symplectic targets still factor). If that fails, fall
    // back to the zero start.
    ChainHandle chain;
    const sympfac_status st =
        sympfac_factor_utf5(h.p, seed, 1e300, &chain.p);
    if (st == SYMPFAC_OK) {
      theta0 = theta_from_chain(chain.p, d);
    } else {
      std::cerr << "note: factor start unavailable ("
                << sympfac_status_name(st) << "); starting from zero\n";
      init_used = "zero";
    }
  }

  sympfac_opt_options opts;
  sympfac_opt_options_default(&opts);
  opts.max_iters = max_iters;
  OptHandle r;
  check_status(sympfac_minimize(d, nearest_value, nearest_gradient, &ctx,
                                theta0.empty() ? nullptr : theta0.data(),
                                &opts, &r.p));

  std::vector<double> theta(static_cast<std::size_t>(sympfac_param_count(d)));
  check_status(sympfac_opt_result_theta(r.p, theta.data()));
  MatHandle hm;
  check_status(sympfac_opt_result_matrix(r.p, &hm.p));
  std::vector<double> hdata(static_cast<std::size_t>(4 * d * d));
  check_status(sympfac_mat_copy_data(hm.p, hdata.data()));
  std::vector<double> trace(
      static_cast<std::size_t>(sympfac_opt_result_trace_size(r.p)));
  check_status(sympfac_opt_result_trace(r.p, trace.data()));
  const bool lsf = sympfac_opt_result_line_search_failed(r.p) != 0;
  const double final_objective = sympfac_opt_result_objective(r.p);

  emit(out_path,
       optimize_doc_json(d, init_used, sympfac_opt_result_iterations(r.p),
                         lsf, final_objective, theta, hdata, trace));
  std::cerr << "final objective: " << fmt(final_objective) << "\n";
  return lsf ? kExitNumerical : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factorizations of real symplectic matrices"};
  app.set_version_flag("--version", std::string(sympfac_version()));
  app.require_subcommand(1);

  // factor
  auto* factor = app.add_subcommand(
      "factor", "factor a symplectic matrix into unit triangular pieces");
  std::string f_input;
  std::string f_mode = "utf5";
  std::string f_variant = "center";
  std::string f_shape = "upper-lower-upper";
  std::uint64_t f_seed = 0;
  double f_tol = -1.0;
  std::string f_out;
  factor->add_option("input", f_input, "matrix document (JSON or text)")
      ->required();
  factor->add_option("--mode", f_mode, "factorization to run")
      ->check(CLI::IsMember({"utf5", "spd", "ldu", "ulu"}));
  factor
      ->add_option("--variant", f_variant,
                   "position of the block-diagonal factor (ldu mode)")
      ->check(CLI::IsMember({"left", "center", "right"}));
  factor
      ->add_option("--shape", f_shape, "triangular pattern of L (spd mode)")
      ->check(CLI::IsMember({"upper-lower-upper", "lower-upper-lower"}));
  factor->add_option("--seed", f_seed,
                     "seed for the symmetric two-factor search (utf5 mode)");
  auto* f_tol_opt = factor->add_option(
      "--tol", f_tol, "symplectic membership tolerance (negative = default)");
  factor->add_option("--out", f_out, "output file (stdout when absent)");

  // random
  auto* random_cmd =
      app.add_subcommand("random", "generate a seeded random matrix");
  std::string r_kind;
  std::int64_t r_d = 0;
  std::uint64_t r_seed = 0;
  double r_scale = 1.0;
  std::string r_format = "json";
  std::string r_out;
  random_cmd->add_option("--kind", r_kind, "which set to draw from")
      ->required()
      ->check(CLI::IsMember({"symplectic", "spd", "singular"}));
  random_cmd->add_option("--d", r_d, "half-dimension (matrix is 2d x 2d)")
      ->required()
      ->check(CLI::PositiveNumber);
  random_cmd->add_option("--seed", r_seed, "generator seed");
  random_cmd
      ->add_option("--scale", r_scale,
                   "free parameters drawn uniform in [-scale, scale]")
      ->check(CLI::NonNegativeNumber);
  random_cmd->add_option("--format", r_format, "output document format")
      ->check(CLI::IsMember({"json", "text"}));
  random_cmd->add_option("--out", r_out, "output file (stdout when absent)");

  // check
  auto* check_cmd = app.add_subcommand(
      "check", "report set membership (symplectic / spd / singular)");
  std::string c_input;
  double c_tol = -1.0;
  check_cmd->add_option("input", c_input, "matrix document (JSON or text)")
      ->required();
  auto* c_tol_opt = check_cmd->add_option(
      "--tol", c_tol, "membership tolerance (negative = default)");

  // optimize
  auto* optimize = app.add_subcommand(
      "optimize", "descend an objective over the free coordinates");
  std::string o_objective = "nearest";
  std::string o_target;
  std::int64_t o_d = 0;
  std::int64_t o_max_iters = 500;
  std::uint64_t o_seed = 0;
  std::string o_init = "factor";
  std::string o_out;
  optimize->add_option("--objective", o_objective, "objective to minimize")
      ->check(CLI::IsMember({"nearest"}));
  optimize->add_option("target", o_target, "target matrix document")
      ->required();
  optimize->add_option("--d", o_d, "expected half-dimension (cross-check)")
      ->check(CLI::PositiveNumber);
  optimize->add_option("--max-iters", o_max_iters, "descent step limit")
      ->check(CLI::NonNegativeNumber);
  optimize->add_option("--seed", o_seed, "seed for the factor-based start");
  optimize->add_option("--init", o_init, "starting point")
      ->check(CLI::IsMember({"factor", "zero"}));
  optimize->add_option("--out", o_out, "output file (stdout when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (factor->parsed())
      return run_factor(f_input, f_mode, f_variant, f_shape, f_seed,
                        resolve_tol(f_tol_opt->count() > 0, f_tol), f_out);
    if (random_cmd->parsed())
      return run_random(r_kind, r_d, r_seed, r_scale, r_format, r_out);
    if (check_cmd->parsed())
      return run_check(c_input, resolve_tol(c_tol_opt->count() > 0, c_tol));
    if (optimize->parsed())
      return run_optimize(o_target, o_d, o_max_iters, o_seed, o_init, o_out);
  } catch (const CmdError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  }
  return kExitParse;
}
