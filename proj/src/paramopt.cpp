#include "sympfac/paramopt.hpp"

#include <cmath>
#include <string>

#include "sympfac/error.hpp"

namespace sympfac {

namespace {

/// The five dense factors of H(theta), leftmost first.
std::array<Mat, 5> factor_stack(const ParamVector& theta) {
  const std::size_t d = theta.d;
  SymMat diag(d);
  for (std::size_t i = 0; i < d; ++i) diag.at(i, i) = theta.v[i];
  return {
      UnitTriFactor{TriKind::Upper, diag}.dense(),
      UnitTriFactor{TriKind::Lower, theta.s[3]}.dense(),
      UnitTriFactor{TriKind::Upper, theta.s[2]}.dense(),
      UnitTriFactor{TriKind::Lower, theta.s[1]}.dense(),
      UnitTriFactor{TriKind::Upper, theta.s[0]}.dense(),
  };
}

Mat fd_matrix_gradient(const std::function<double(const Mat&)>& value,
                       const Mat& x) {
  Mat g(x.rows(), x.cols());
  Mat probe = x;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const double base = x(i, j);
      const double h = 1e-6 * (1.0 + std::fabs(base));
      probe(i, j) = base + h;
      const double up = value(probe);
      probe(i, j) = base - h;
      const double down = value(probe);
      probe(i, j) = base;
      g(i, j) = (up - down) / (2.0 * h);
    }
  }
  return g;
}

void check_theta(const ParamVector& theta) {
  if (theta.d == 0 || theta.v.size() != theta.d) {
    raise(ErrorCode::InvalidArgument, "malformed parameter vector");
  }
  for (const SymMat& s : theta.s) {
    if (s.dim() != theta.d) {
      raise(ErrorCode::InvalidArgument, "malformed parameter vector");
    }
  }
}

}  // namespace

std::size_t param_count(std::size_t d) { return 2 * d * d + 3 * d; }

ParamVector ParamVector::zero(std::size_t d) {
  ParamVector theta;
  theta.d = d;
  theta.v.assign(d, 0.0);
  for (auto& s : theta.s) s = SymMat(d);
  return theta;
}

ParamVector ParamVector::from_flat(std::size_t d,
                                   std::span<const double> flat) {
  if (flat.size() != param_count(d)) {
    raise(ErrorCode::InvalidArgument,
          "flat parameter vector has " + std::to_string(flat.size()) +
              " entries, expected " + std::to_string(param_count(d)));
  }
  ParamVector theta = ParamVector::zero(d);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < d; ++i) theta.v[i] = flat[pos++];
  const std::size_t m = d * (d + 1) / 2;
  for (auto& s : theta.s) {
    s = SymMat::from_packed(d, flat.subspan(pos, m));
    pos += m;
  }
  return theta;
}

std::vector<double> ParamVector::to_flat() const {
  check_theta(*this);
  std::vector<double> flat;
  flat.reserve(size());
  flat.insert(flat.end(), v.begin(), v.end());
  for (const SymMat& block : s)
    flat.insert(flat.end(), block.packed().begin(), block.packed().end());
  return flat;
}

std::size_t ParamVector::size() const { return param_count(d); }

Mat build_symplectic(const ParamVector& theta) {
  check_theta(theta);
  const auto factors = factor_stack(theta);
  Mat acc = factors[0];
  for (std::size_t k = 1; k < factors.size(); ++k) acc = acc * factors[k];
  return acc;
}

ParamVector repack_chain(const FactorChain& chain) {
  if (!chain.shift.has_value() || chain.factors.size() != 4) {
    raise(ErrorCode::InvalidArgument,
          "repack needs a shift plus exactly four factors");
  }
  const TriKind expected[4] = {TriKind::Lower, TriKind::Upper, TriKind::Lower,
                               TriKind::Upper};
  for (int k = 0; k < 4; ++k) {
    if (chain.factors[k].kind != expected[k]) {
      raise(ErrorCode::InvalidArgument,
            "repack needs the factor kinds lower, upper, lower, upper");
    }
  }
  ParamVector theta = ParamVector::zero(chain.d());
  for (std::size_t i = 0; i < chain.d(); ++i)
    theta.v[i] = static_cast<double>(chain.shift->deltas[i]);
  theta.s[3] = chain.factors[0].s;
  theta.s[2] = chain.factors[1].s;
  theta.s[1] = chain.factors[2].s;
  theta.s[0] = chain.factors[3].s;
  return theta;
}

ParamVector parameter_gradient(const ParamVector& theta, const Objective& obj) {
  check_theta(theta);
  if (!obj.value) {
    raise(ErrorCode::InvalidArgument, "objective has no value function");
  }
  const std::size_t d = theta.d;
  const auto factors = factor_stack(theta);

  std::array<Mat, 5> prefix;  // prefix[j] = F0 ... F(j-1)
  std::array<Mat, 5> suffix;  // suffix[j] = F(j+1) ... F4
  prefix[0] = Mat::identity(2 * d);
  for (std::size_t j = 1; j < 5; ++j) prefix[j] = prefix[j - 1] * factors[j - 1];
  suffix[4] = Mat::identity(2 * d);
  for (std::size_t j = 4; j-- > 0;) suffix[j] = factors[j + 1] * suffix[j + 1];

  const Mat h = prefix[4] * factors[4];
  const Mat g = obj.gradient ? obj.gradient(h) : fd_matrix_gradient(obj.value, h);
  if (g.rows() != 2 * d || g.cols() != 2 * d) {
    raise(ErrorCode::InvalidArgument, "objective gradient shape mismatch");
  }

  // d f / d p = <G, prefix * dF/dp * suffix> = <prefix^T G suffix^T, dF/dp>,
  // and dF/dp touches one off-diagonal pair or one diagonal entry of the
  // factor's symmetric block
  ParamVector grad = ParamVector::zero(d);
  for (std::size_t j = 0; j < 5; ++j) {
    const Mat m = prefix[j].transposed() * g * suffix[j].transposed();
    const bool upper = (j % 2 == 0);  // factors alternate U, L, U, L, U
    const std::size_t r0 = upper ? 0 : d;
    const std::size_t c0 = upper ? d : 0;
    if (j == 0) {
      for (std::size_t i = 0; i < d; ++i) grad.v[i] = m(r0 + i, c0 + i);
      continue;
    }
    SymMat& target = grad.s[4 - j];  // factor 1 holds S4 ... factor 4 holds S1
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = 0; q <= p; ++q) {
        target.at(p, q) = (p == q)
                              ? m(r0 + p, c0 + p)
                              : m(r0 + p, c0 + q) + m(r0 + q, c0 + p);
      }
    }
  }
  return grad;
}

MinimizeResult minimize(const Objective& obj, std::size_t d,
                        const ParamVector& init, const MinimizeOptions& opts) {
  if (!obj.value) {
    raise(ErrorCode::InvalidArgument, "objective has no value function");
  }
  if (init.d != d) {
    raise(ErrorCode::InvalidArgument, "init dimension mismatch");
  }

  MinimizeResult res;
  res.theta = init;
  std::vector<double> flat = init.to_flat();
  double f = obj.value(build_symplectic(res.theta));
  res.trace.push_back(f);

  for (std::size_t it = 0; it < opts.max_iters; ++it) {
    const ParamVector g = parameter_gradient(res.theta, obj);
    const std::vector<double> gflat = g.to_flat();
    double gnorm2 = 0.0;
    for (double x : gflat) gnorm2 += x * x;
    if (std::sqrt(gnorm2) <= opts.grad_tol) break;

    double step = opts.initial_step;
    bool accepted = false;
    std::vector<double> trial(flat.size());
    while (step >= opts.min_step) {
      for (std::size_t k = 0; k < flat.size(); ++k)
        trial[k] = flat[k] - step * gflat[k];
      const ParamVector cand = ParamVector::from_flat(d, trial);
      const double fc = obj.value(build_symplectic(cand));
      if (fc <= f - opts.armijo_c * step * gnorm2) {
        res.theta = cand;
        flat = trial;
        f = fc;
        res.trace.push_back(f);
        res.iterations = it + 1;
        accepted = true;
        break;
      }
      step *= opts.backtrack;
    }
    if (!accepted) {
      res.line_search_failed = true;
      break;
    }
  }

  res.h = build_symplectic(res.theta);
  return res;
}

}  // namespace sympfac
