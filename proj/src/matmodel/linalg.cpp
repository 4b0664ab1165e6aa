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

#include "omlkit/matmodel/linalg.hpp"

#include <utility>
#include <vector>

namespace omlkit::matmodel {

namespace {

// Row echelon in place; returns the pivot columns.
std::vector<int> echelon(RatMat& a) {
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < a.rows(); ++r)
      if (a(r, col) != Rat(0)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    const Rat inv = Rat(1) / a(row, col);
    for (int c = 0; c < a.cols(); ++c) a(row, c) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == Rat(0)) continue;
      const Rat factor = a(r, col);
      for (int c = 0; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

int rank_exact(RatMat a) { return static_cast<int>(echelon(a).size()); }

RatMat column_space_basis(const RatMat& a) {
  RatMat work = a;
  std::vector<int> pivots = echelon(work);
  RatMat basis(a.rows(), static_cast<int>(pivots.size()));
  for (int j = 0; j < static_cast<int>(pivots.size()); ++j)
    for (int i = 0; i < a.rows(); ++i) basis(i, j) = a(i, pivots[j]);
  return basis;
}

RatMat kernel_basis(const RatMat& a) {
  RatMat work = a;
  std::vector<int> pivots = echelon(work);
  std::vector<std::uint8_t> is_pivot(a.cols(), 0);
  for (int c : pivots) is_pivot[c] = 1;

  std::vector<int> free_cols;
  for (int c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RatMat basis(a.cols(), static_cast<int>(free_cols.size()));
  for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
    const int free_col = free_cols[j];
    basis(free_col, j) = Rat(1);
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
      basis(pivots[r], j) = -work(r, free_col);
  }
  return basis;
}

RatMat inverse_exact(const RatMat& a) {
  if (a.rows() != a.cols()) throw input_error("inverse of a non-square matrix");
  const int n = a.rows();
  RatMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Rat(1);
  }
  std::vector<int> pivots = echelon(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() >= n)
    throw input_error("matrix is singular");
  RatMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

RatMat projector_onto_columns(const RatMat& a) {
  RatMat basis = column_space_basis(a);
  if (basis.cols() == 0) return RatMat::zero(a.rows(), a.rows());
  RatMat gram = basis.transpose() * basis;
  return basis * inverse_exact(gram) * basis.transpose();
}

bool is_psd(RatMat a) {
  if (!a.is_symmetric()) throw input_error("positivity check needs a symmetric matrix");
  const int n = a.rows();
  for (int k = 0; k < n; ++k) {
    if (a(k, k) < Rat(0)) return false;
    if (a(k, k) == Rat(0)) {
      for (int j = k + 1; j < n; ++j)
        if (a(k, j) != Rat(0)) return false;
      continue;
    }
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k) == Rat(0)) continue;
      const Rat factor = a(i, k) / a(k, k);
      for (int j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
      // Keep the matrix symmetric: mirror the row update onto the column.
      for (int j = k; j < n; ++j) a(j, i) = a(i, j);
    }
  }
  return true;
}

}  // namespace omlkit::matmodel
