// Copyright 2026 The tposc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tposc/rational.hpp"

namespace tposc {

/// Square matrix of exact rationals. Element access is 0-based; minor and
/// index-set APIs elsewhere are 1-based.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n * n)) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
  }
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) : RationalMatrix(static_cast<int>(rows.size())) {
    int r = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n_) throw std::invalid_argument("matrix must be square");
      int c = 0;
      for (const auto& v : row) (*this)(r, c++) = v;
      ++r;
    }
  }

  static RationalMatrix identity(int n) {
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RationalMatrix diagonal(std::span<const Rational> d) {
    RationalMatrix m(static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  }

  int n() const { return n_; }

  Rational& operator()(int r, int c) { return entries_[idx(r, c)]; }
  const Rational& operator()(int r, int c) const { return entries_[idx(r, c)]; }

  friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("matrix dimensions differ");
    const int n = x.n_;
    RationalMatrix out(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const Rational& xik = x(i, k);
        if (xik == 0) continue;
        for (int j = 0; j < n; ++j)
          if (y(k, j) != 0) out(i, j) += xik * y(k, j);
      }
    return out;
  }

  friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) { return x.n_ == y.n_ && x.entries_ == y.entries_; }

  RationalMatrix transpose() const {
    RationalMatrix out(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  RationalMatrix pow(int m) const {
    if (m < 0) throw std::invalid_argument("negative matrix power");
    RationalMatrix out = identity(n_);
    for (int k = 0; k < m; ++k) out = out * (*this);
    return out;
  }

  Rational determinant() const {
    std::vector<int> all(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) all[i] = i;
    return block_determinant(all, all);
  }

  /// Determinant of the submatrix on the given 0-based rows and columns, in
  /// the order given. Exact Gaussian elimination.
  Rational block_determinant(std::span<const int> rows, std::span<const int> cols) const {
    const std::size_t k = rows.size();
    if (cols.size() != k) throw std::invalid_argument("minor needs equal row and column counts");
    if (k == 0) return 1;
    std::vector<Rational> a(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a[(i * k) + j] = (*this)(rows[i], cols[j]);
    Rational det = 1;
    for (std::size_t col = 0; col < k; ++col) {
      std::size_t pivot = col;
      while (pivot < k && a[(pivot * k) + col] == 0) ++pivot;
      if (pivot == k) return 0;
      if (pivot != col) {
        for (std::size_t j = 0; j < k; ++j) std::swap(a[(pivot * k) + j], a[(col * k) + j]);
        det = -det;
      }
      const Rational p = a[(col * k) + col];
      det *= p;
      for (std::size_t i = col + 1; i < k; ++i) {
        if (a[(i * k) + col] == 0) continue;
        const Rational f = a[(i * k) + col] / p;
        for (std::size_t j = col; j < k; ++j) a[(i * k) + j] -= f * a[(col * k) + j];
      }
    }
    return det;
  }

  /// Rank of the contiguous block rows [r0, r1) x cols [c0, c1), 0-based.
  int block_rank(int r0, int r1, int c0, int c1) const {
    const int h = r1 - r0;
    const int w = c1 - c0;
    if (h <= 0 || w <= 0) return 0;
    std::vector<Rational> a(static_cast<std::size_t>(h * w));
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < w; ++j) a[(i * w) + j] = (*this)(r0 + i, c0 + j);
    int rank = 0;
    for (int col = 0; col < w && rank < h; ++col) {
      int pivot = rank;
      while (pivot < h && a[(pivot * w) + col] == 0) ++pivot;
      if (pivot == h) continue;
      for (int j = 0; j < w; ++j) std::swap(a[(pivot * w) + j], a[(rank * w) + j]);
      for (int i = rank + 1; i < h; ++i) {
        if (a[(i * w) + col] == 0) continue;
        const Rational f = a[(i * w) + col] / a[(rank * w) + col];
        for (int j = col; j < w; ++j) a[(i * w) + j] -= f * a[(rank * w) + j];
      }
      ++rank;
    }
    return rank;
  }

 private:
  std::size_t idx(int r, int c) const {
    if (r < 0 || r >= n_ || c < 0 || c >= n_) throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>((r * n_) + c);
  }

  int n_ = 0;
  std::vector<Rational> entries_;
};

}  // namespace tposc
