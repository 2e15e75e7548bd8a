#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sympfac {

/// Dense real matrix with row-major storage.
///
/// Matrices built from user data (from_data) are validated to contain only
/// finite entries; results of arithmetic are not re-checked.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);  // zero-filled

  static Mat identity(std::size_t n);
  static Mat diagonal(std::span<const double> d);
  /// Build from a row-major buffer; throws InvalidArgument on NaN/Inf entries
  /// or a size mismatch.
  static Mat from_data(std::size_t rows, std::size_t cols,
                       std::span<const double> data);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }

  const std::vector<double>& data() const noexcept { return data_; }
  std::vector<double>& data() noexcept { return data_; }

  Mat transposed() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr,
            std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);

  Mat& operator+=(const Mat& rhs);
  Mat& operator-=(const Mat& rhs);
  Mat& operator*=(double s);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(double s, const Mat& a);

double frob_norm(const Mat& a);
double max_abs(const Mat& a);
/// ||A - A^T||_F: distance from exact symmetry.
double asymmetry(const Mat& a);
/// Assemble [[a, b], [c, d]] from four equally shaped blocks.
Mat assemble_blocks(const Mat& a, const Mat& b, const Mat& c, const Mat& d);

/// Symmetric matrix stored as its packed lower triangle in row order:
/// (s11, s21, s22, s31, s32, s33, ...). Densification mirrors stored entries,
/// so dense() is symmetric to the last bit.
class SymMat {
public:
  SymMat() = default;
  explicit SymMat(std::size_t dim);  // zero-filled
  static SymMat identity(std::size_t dim);
  static SymMat diagonal(std::span<const double> d);
  static SymMat from_packed(std::size_t dim, std::span<const double> packed);
  /// Average A with its transpose. The asymmetry that was discarded,
  /// ||A - A^T||_F, is reported through `asym` when given. Exactly symmetric
  /// input round-trips bit-for-bit.
  static SymMat from_dense(const Mat& a, double* asym = nullptr);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t packed_size() const noexcept { return packed_.size(); }

  double operator()(std::size_t i, std::size_t j) const {
    return packed_[index(i, j)];
  }
  double& at(std::size_t i, std::size_t j) { return packed_[index(i, j)]; }

  const std::vector<double>& packed() const noexcept { return packed_; }
  std::vector<double>& packed() noexcept { return packed_; }

  Mat dense() const;

private:
  static std::size_t index(std::size_t i, std::size_t j) {
    if (i < j) std::swap(i, j);
    return i * (i + 1) / 2 + j;
  }

  std::size_t dim_ = 0;
  std::vector<double> packed_;
};

}  // namespace sympfac
