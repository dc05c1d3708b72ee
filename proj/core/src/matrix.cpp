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

#include "cms/matrix.hpp"

#include <ostream>
#include <string>
#include <utility>

#include "cms/error.hpp"

namespace cms {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_order: return "invalid order";
    case Errc::shape: return "shape mismatch";
    case Errc::invalid_spec: return "invalid spec";
    case Errc::invalid_step: return "invalid step";
    case Errc::invalid_level: return "invalid level";
    case Errc::not_found: return "not found";
    case Errc::undefined_measure: return "undefined measure";
    case Errc::verification_failure: return "verification failure";
    case Errc::parse: return "parse error";
  }
  return "unknown error";
}

namespace {

void require_order(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_order, "matrix order must be >= 1");
}

void require_same_order(const IntSquareMatrix& a, const IntSquareMatrix& b) {
  if (a.order() != b.order()) {
    throw Error(Errc::shape, "order mismatch: " + std::to_string(a.order()) +
                                 " vs " + std::to_string(b.order()));
  }
}

}  // namespace

IntSquareMatrix::IntSquareMatrix(std::size_t n) : n_(n) {
  require_order(n);
  entries_.assign(n * n, BigInt(0));
}

IntSquareMatrix::IntSquareMatrix(std::size_t n, std::vector<BigInt> entries)
    : n_(n), entries_(std::move(entries)) {
  require_order(n);
  if (entries_.size() != n * n) {
    throw Error(Errc::shape, "expected " + std::to_string(n * n) +
                                 " entries, got " +
                                 std::to_string(entries_.size()));
  }
}

IntSquareMatrix IntSquareMatrix::from_rows(
    std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t n = rows.size();
  std::vector<BigInt> entries;
  entries.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(Errc::shape, "rows must form a square");
    for (std::int64_t v : r) entries.emplace_back(v);
  }
  return IntSquareMatrix(n, std::move(entries));
}

IntSquareMatrix IntSquareMatrix::transposed() const {
  IntSquareMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntSquareMatrix& IntSquareMatrix::operator+=(const IntSquareMatrix& other) {
  require_same_order(*this, other);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    entries_[k] += other.entries_[k];
  return *this;
}

IntSquareMatrix& IntSquareMatrix::operator-=(const IntSquareMatrix& other) {
  require_same_order(*this, other);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    entries_[k] -= other.entries_[k];
  return *this;
}

IntSquareMatrix& IntSquareMatrix::operator*=(const BigInt& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

IntSquareMatrix& IntSquareMatrix::add_scalar(const BigInt& value) {
  for (auto& e : entries_) e += value;
  return *this;
}

IntSquareMatrix operator+(IntSquareMatrix lhs, const IntSquareMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

IntSquareMatrix operator-(IntSquareMatrix lhs, const IntSquareMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

IntSquareMatrix operator*(const BigInt& scalar, IntSquareMatrix m) {
  m *= scalar;
  return m;
}

IntSquareMatrix multiply(const IntSquareMatrix& a, const IntSquareMatrix& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  IntSquareMatrix c(n);
  BigInt acc;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  }
  return c;
}

std::ostream& operator<<(std::ostream& os, const IntSquareMatrix& m) {
  const std::size_t n = m.order();
  os << '[';
  for (std::size_t i = 0; i < n; ++i) {
    os << (i ? " [" : "[");
    for (std::size_t j = 0; j < n; ++j) os << (j ? ", " : "") << m(i, j);
    os << (i + 1 < n ? "],\n" : "]");
  }
  return os << ']';
}

IntSquareMatrix ones_matrix(std::size_t n) {
  IntSquareMatrix e(n);
  e.add_scalar(1);
  return e;
}

IntSquareMatrix addition_table(std::size_t n) {
  IntSquareMatrix t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) = i * n + j + 1;
  return t;
}

IntSquareMatrix kronecker(const IntSquareMatrix& a, const IntSquareMatrix& b) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  IntSquareMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t r = 0; r < nb; ++r)
        for (std::size_t c = 0; c < nb; ++c)
          out(i * nb + r, j * nb + c) = a(i, j) * b(r, c);
  return out;
}

BlockGrid::BlockGrid(std::size_t m, std::vector<IntSquareMatrix> blocks)
    : m_(m), blocks_(std::move(blocks)) {
  require_order(m);
  if (blocks_.size() != m * m) {
    throw Error(Errc::shape, "block grid of order " + std::to_string(m) +
                                 " needs " + std::to_string(m * m) +
                                 " blocks, got " +
                                 std::to_string(blocks_.size()));
  }
  for (const auto& b : blocks_) {
    if (b.order() != blocks_.front().order())
      throw Error(Errc::shape, "blocks in a grid must share one order");
  }
}

IntSquareMatrix block_compose(const BlockGrid& grid) {
  const std::size_t m = grid.grid_order();
  const std::size_t b = grid.block_order();
  IntSquareMatrix out(m * b);
  for (std::size_t bi = 0; bi < m; ++bi)
    for (std::size_t bj = 0; bj < m; ++bj) {
      const auto& blk = grid.block(bi, bj);
      for (std::size_t r = 0; r < b; ++r)
        for (std::size_t c = 0; c < b; ++c)
          out(bi * b + r, bj * b + c) = blk(r, c);
    }
  return out;
}

BlockGrid block_decompose(const IntSquareMatrix& m, std::size_t grid_order) {
  require_order(grid_order);
  const std::size_t n = m.order();
  if (n % grid_order != 0) {
    throw Error(Errc::shape, std::to_string(grid_order) +
                                 " does not divide order " +
                                 std::to_string(n));
  }
  const std::size_t b = n / grid_order;
  std::vector<IntSquareMatrix> blocks;
  blocks.reserve(grid_order * grid_order);
  for (std::size_t bi = 0; bi < grid_order; ++bi)
    for (std::size_t bj = 0; bj < grid_order; ++bj) {
      IntSquareMatrix blk(b);
      for (std::size_t r = 0; r < b; ++r)
        for (std::size_t c = 0; c < b; ++c)
          blk(r, c) = m(bi * b + r, bj * b + c);
      blocks.push_back(std::move(blk));
    }
  return BlockGrid(grid_order, std::move(blocks));
}

}  // namespace cms
