// Copyright 2026 The omlkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OMLKIT_MATMODEL_MATRIX_HPP
#define OMLKIT_MATMODEL_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "omlkit/errors.hpp"

namespace omlkit::matmodel {

// Exact scalar for the algebraic lane.
using Rat = boost::multiprecision::cpp_rational;

// Small dense row-major matrix over an exact or floating scalar.
template <typename T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Mat operator+(const Mat& other) const {
    require_same_shape(other);
    Mat out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + other.a_[i];
    return out;
  }
  Mat operator-(const Mat& other) const {
    require_same_shape(other);
    Mat out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - other.a_[i];
    return out;
  }
  Mat operator*(const Mat& other) const {
    if (cols_ != other.rows_) throw input_error("matrix product shape mismatch");
    Mat out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& lhs = (*this)(i, k);
        if (lhs == T(0)) continue;
        for (int j = 0; j < other.cols_; ++j) out(i, j) += lhs * other(k, j);
      }
    return out;
  }
  Mat operator*(const T& scalar) const {
    Mat out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * scalar;
    return out;
  }
  Mat operator-() const { return *this * T(-1); }

  Mat transpose() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool operator==(const Mat& other) const = default;

  bool is_zero() const {
    for (const T& v : a_)
      if (v != T(0)) return false;
    return true;
  }
  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

 private:
  void require_same_shape(const Mat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw input_error("matrix shape mismatch");
  }

  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using RatMat = Mat<Rat>;
using DMat = Mat<double>;

}  // namespace omlkit::matmodel

#endif  // OMLKIT_MATMODEL_MATRIX_HPP
