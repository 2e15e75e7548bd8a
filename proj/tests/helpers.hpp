#pragma once

#include <initializer_list>

#include "sympfac/mat.hpp"

namespace testutil {

inline sympfac::Mat from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = rows.begin()->size();
  sympfac::Mat m(nr, nc);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (double x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline double diff(const sympfac::Mat& a, const sympfac::Mat& b) {
  return sympfac::frob_norm(a - b);
}

}  // namespace testutil
