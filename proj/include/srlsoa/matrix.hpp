#pragma once

#include <cstddef>
#include <vector>

#include "srlsoa/error.hpp"

namespace srlsoa {

// Dense row-major matrix of doubles. Deliberately minimal: the numerical
// kernels in this project are written as explicit loops over raw rows.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  double* row(std::size_t r) { return data.data() + r * cols; }
  const double* row(std::size_t r) const { return data.data() + r * cols; }

  bool same_shape(const Matrix& other) const {
    return rows == other.rows && cols == other.cols;
  }
};

inline void require_shape(const Matrix& m, std::size_t rows, std::size_t cols,
                          const char* what) {
  if (m.rows != rows || m.cols != cols) {
    throw Error(ErrorCode::ShapeMismatch, what);
  }
}

}  // namespace srlsoa
