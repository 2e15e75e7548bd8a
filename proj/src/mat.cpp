#include "sympfac/mat.hpp"

#include <cmath>
#include <string>

#include "sympfac/error.hpp"

namespace sympfac {

namespace {

void require_same_shape(const Mat& a, const Mat& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    raise(ErrorCode::InvalidArgument,
          std::string("shape mismatch in ") + op + ": " +
              std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
              " vs " + std::to_string(b.rows()) + "x" +
              std::to_string(b.cols()));
  }
}

}  // namespace

Mat::Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::diagonal(std::span<const double> d) {
  Mat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::from_data(std::size_t rows, std::size_t cols,
                   std::span<const double> data) {
  if (data.size() != rows * cols) {
    raise(ErrorCode::InvalidArgument,
          "matrix data has " + std::to_string(data.size()) +
              " entries, expected " + std::to_string(rows * cols));
  }
  Mat m(rows, cols);
  for (std::size_t k = 0; k < data.size(); ++k) {
    if (!std::isfinite(data[k])) {
      raise(ErrorCode::InvalidArgument,
            "matrix entry " + std::to_string(k) + " is not finite");
    }
    m.data_[k] = data[k];
  }
  return m;
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    raise(ErrorCode::InvalidArgument, "block out of range");
  }
  Mat b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
    raise(ErrorCode::InvalidArgument, "block out of range");
  }
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      (*this)(r0 + i, c0 + j) = b(i, j);
}

Mat& Mat::operator+=(const Mat& rhs) {
  require_same_shape(*this, rhs, "operator+=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& rhs) {
  require_same_shape(*this, rhs, "operator-=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

Mat& Mat::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) {
    raise(ErrorCode::InvalidArgument,
          "inner dimension mismatch in matrix product");
  }
  Mat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const double av = a(i, l);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) += av * b(l, j);
      }
    }
  }
  return c;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat c = a;
  c += b;
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  Mat c = a;
  c -= b;
  return c;
}

Mat operator*(double s, const Mat& a) {
  Mat c = a;
  c *= s;
  return c;
}

double frob_norm(const Mat& a) {
  double acc = 0.0;
  for (double x : a.data()) acc += x * x;
  return std::sqrt(acc);
}

double max_abs(const Mat& a) {
  double best = 0.0;
  for (double x : a.data()) best = std::max(best, std::fabs(x));
  return best;
}

double asymmetry(const Mat& a) {
  if (!a.square()) {
    raise(ErrorCode::InvalidArgument, "asymmetry needs a square matrix");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double diff = a(i, j) - a(j, i);
      acc += 2.0 * diff * diff;
    }
  }
  return std::sqrt(acc);
}

Mat assemble_blocks(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
  require_same_shape(a, b, "assemble_blocks");
  require_same_shape(a, c, "assemble_blocks");
  require_same_shape(a, d, "assemble_blocks");
  Mat m(a.rows() + c.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  m.set_block(a.rows(), 0, c);
  m.set_block(a.rows(), a.cols(), d);
  return m;
}

SymMat::SymMat(std::size_t dim)
    : dim_(dim), packed_(dim * (dim + 1) / 2, 0.0) {}

SymMat SymMat::identity(std::size_t dim) {
  SymMat s(dim);
  for (std::size_t i = 0; i < dim; ++i) s.at(i, i) = 1.0;
  return s;
}

SymMat SymMat::diagonal(std::span<const double> d) {
  SymMat s(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) s.at(i, i) = d[i];
  return s;
}

SymMat SymMat::from_packed(std::size_t dim, std::span<const double> packed) {
  SymMat s(dim);
  if (packed.size() != s.packed_.size()) {
    raise(ErrorCode::InvalidArgument, "packed buffer size mismatch");
  }
  for (std::size_t k = 0; k < packed.size(); ++k) s.packed_[k] = packed[k];
  return s;
}

SymMat SymMat::from_dense(const Mat& a, double* asym) {
  if (!a.square()) {
    raise(ErrorCode::InvalidArgument,
          "symmetric matrix must come from a square dense matrix");
  }
  if (asym != nullptr) *asym = asymmetry(a);
  SymMat s(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      s.at(i, j) = (i == j) ? a(i, i) : (a(i, j) + a(j, i)) / 2.0;
    }
  }
  return s;
}

Mat SymMat::dense() const {
  Mat a(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) a(i, j) = (*this)(i, j);
  return a;
}

}  // namespace sympfac
