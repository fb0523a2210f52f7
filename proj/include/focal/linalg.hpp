// Copyright 2026 The Authors.
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
#ifndef FOCAL_LINALG_HPP_
#define FOCAL_LINALG_HPP_

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "focal/scalar.hpp"

namespace focal {

// Row-major dense matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix select_rows(const std::vector<std::size_t>& rows) const {
    Matrix out;
    out.rows_ = rows.size();
    out.cols_ = cols_;
    out.data_.reserve(rows.size() * cols_);
    for (auto r : rows) {
      for (std::size_t c = 0; c < cols_; ++c) out.data_.push_back((*this)(r, c));
    }
    return out;
  }

  Matrix transposed() const {
    Matrix out;
    out.rows_ = cols_;
    out.cols_ = rows_;
    out.data_.reserve(data_.size());
    for (std::size_t c = 0; c < cols_; ++c) {
      for (std::size_t r = 0; r < rows_; ++r) out.data_.push_back((*this)(r, c));
    }
    return out;
  }

  template <class F>
  auto map(F f) const -> Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>> {
    Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>> out;
    out.resize_uninitialized(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.raw().push_back(f(data_[i]));
    return out;
  }

  void resize_uninitialized(std::size_t rows, std::size_t cols) {
    rows_ = rows;
    cols_ = cols;
    data_.clear();
    data_.reserve(rows * cols);
  }
  std::vector<T>& raw() { return data_; }
  const std::vector<T>& raw() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// Fraction-free Bareiss determinant; every division is exact.
template <ExactField K>
K det_bareiss(Matrix<K> m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("det_bareiss: matrix not square");
  if (n == 0) throw std::invalid_argument("det_bareiss: empty matrix");
  const K one = from_int(1, m(0, 0));
  K prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t swap = k + 1;
      while (swap < n && is_zero(m(swap, k))) ++swap;
      if (swap == n) return from_int(0, one);
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        K num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = num / prev;
      }
    }
    prev = m(k, k);
  }
  K d = m(n - 1, n - 1);
  if (negate) d = -d;
  return d;
}

// Reduced row echelon form in place; returns pivot columns.
template <ExactField K>
std::vector<std::size_t> row_reduce(Matrix<K>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    }
    const K inv = from_int(1, m(row, col)) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) {
      K v = m(row, c) * inv;
      m(row, c) = v;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const K factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        K v = m(r, c) - factor * m(row, c);
        m(r, c) = v;
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <ExactField K>
std::size_t matrix_rank(Matrix<K> m) {
  return row_reduce(m).size();
}

// Basis of the right null space {v : m v = 0}.
template <ExactField K>
std::vector<std::vector<K>> kernel(Matrix<K> m) {
  if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("kernel: empty matrix");
  const K zero = from_int(0, m(0, 0));
  const K one = from_int(1, m(0, 0));
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(m.cols(), zero);
    v[free] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace focal

#endif  // FOCAL_LINALG_HPP_
