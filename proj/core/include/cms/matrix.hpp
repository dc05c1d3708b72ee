// Copyright 2026 The CMS Authors
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

#ifndef CMS_MATRIX_HPP_
#define CMS_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cms {

using BigInt = boost::multiprecision::cpp_int;

/// Exact-integer n x n matrix, stored row-major with zero-based indices.
///
/// Every square in the library (patterns, compounds, catalog entries, Gram
/// matrices) is carried by this type. Arithmetic never rounds.
class IntSquareMatrix {
 public:
  /// Zero matrix of order n. Throws Errc::invalid_order when n == 0.
  explicit IntSquareMatrix(std::size_t n);

  /// Throws Errc::invalid_order for n == 0, Errc::shape when
  /// entries.size() != n*n.
  IntSquareMatrix(std::size_t n, std::vector<BigInt> entries);

  /// Convenience for small literal matrices; every row must have the same
  /// length as the number of rows.
  static IntSquareMatrix from_rows(
      std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t order() const noexcept { return n_; }

  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  BigInt& operator()(std::size_t i, std::size_t j) {
    return entries_[i * n_ + j];
  }

  std::span<const BigInt> entries() const noexcept { return entries_; }
  std::span<const BigInt> row(std::size_t i) const {
    return std::span<const BigInt>(entries_).subspan(i * n_, n_);
  }

  IntSquareMatrix transposed() const;

  IntSquareMatrix& operator+=(const IntSquareMatrix& other);
  IntSquareMatrix& operator-=(const IntSquareMatrix& other);
  IntSquareMatrix& operator*=(const BigInt& scalar);
  /// Adds `value` to every entry (M + value*E_n).
  IntSquareMatrix& add_scalar(const BigInt& value);

  friend bool operator==(const IntSquareMatrix&, const IntSquareMatrix&) =
      default;

 private:
  std::size_t n_;
  std::vector<BigInt> entries_;
};

IntSquareMatrix operator+(IntSquareMatrix lhs, const IntSquareMatrix& rhs);
IntSquareMatrix operator-(IntSquareMatrix lhs, const IntSquareMatrix& rhs);
IntSquareMatrix operator*(const BigInt& scalar, IntSquareMatrix m);

/// Exact matrix product; orders must match (Errc::shape otherwise).
IntSquareMatrix multiply(const IntSquareMatrix& a, const IntSquareMatrix& b);

std::ostream& operator<<(std::ostream& os, const IntSquareMatrix& m);

/// E_n: every entry is 1.
IntSquareMatrix ones_matrix(std::size_t n);

/// AT_n: entry (i, j) = i*n + j + 1, a row-by-row listing of 1..n^2.
IntSquareMatrix addition_table(std::size_t n);

/// A (x) B, with block (i, j) equal to A(i, j) * B.
IntSquareMatrix kronecker(const IntSquareMatrix& a, const IntSquareMatrix& b);

/// An m x m arrangement of equal-order square blocks.
class BlockGrid {
 public:
  /// Blocks are given row-major. Throws Errc::invalid_order for m == 0 and
  /// Errc::shape when the count is not m*m or block orders differ.
  BlockGrid(std::size_t m, std::vector<IntSquareMatrix> blocks);

  std::size_t grid_order() const noexcept { return m_; }
  std::size_t block_order() const noexcept { return blocks_.front().order(); }

  const IntSquareMatrix& block(std::size_t i, std::size_t j) const {
    return blocks_[i * m_ + j];
  }
  std::span<const IntSquareMatrix> blocks() const noexcept { return blocks_; }

  friend bool operator==(const BlockGrid&, const BlockGrid&) = default;

 private:
  std::size_t m_;
  std::vector<IntSquareMatrix> blocks_;
};

IntSquareMatrix block_compose(const BlockGrid& grid);

/// Splits M into an m x m grid of order |M|/m blocks. Throws Errc::shape
/// when m does not divide the order.
BlockGrid block_decompose(const IntSquareMatrix& m, std::size_t grid_order);

}  // namespace cms

#endif  // CMS_MATRIX_HPP_
