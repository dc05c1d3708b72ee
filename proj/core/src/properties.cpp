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

#include "cms/properties.hpp"

#include <algorithm>
#include <string>

#include "cms/error.hpp"

namespace cms {

namespace {

bool all_equal(const std::vector<BigInt>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) ==
         v.end();
}

LineSums line_sums(const IntSquareMatrix& m) {
  const std::size_t n = m.order();
  LineSums s;
  s.rows.assign(n, BigInt(0));
  s.columns.assign(n, BigInt(0));
  s.broken_diagonals.assign(n, BigInt(0));
  s.broken_anti_diagonals.assign(n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const BigInt& v = m(i, j);
      s.rows[i] += v;
      s.columns[j] += v;
      s.broken_diagonals[(j + n - i) % n] += v;
      s.broken_anti_diagonals[(i + j) % n] += v;
    }
    s.diagonal += m(i, i);
    s.anti_diagonal += m(i, n - 1 - i);
  }
  return s;
}

bool natural(const IntSquareMatrix& m) {
  const std::size_t n2 = m.order() * m.order();
  std::vector<bool> seen(n2 + 1, false);
  for (const BigInt& v : m.entries()) {
    if (v < 1 || v > n2) return false;
    const auto idx = static_cast<std::size_t>(v);
    if (seen[idx]) return false;
    seen[idx] = true;
  }
  return true;
}

bool associative(const IntSquareMatrix& m) {
  const std::size_t n = m.order();
  const BigInt target = m(0, 0) + m(n - 1, n - 1);
  if (n % 2 == 1 && target != 2 * m(n / 2, n / 2)) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) + m(n - 1 - i, n - 1 - j) != target) return false;
  return true;
}

}  // namespace

PropertyReport analyze_properties(const IntSquareMatrix& m) {
  PropertyReport r;
  r.order = m.order();
  r.sums = line_sums(m);
  const LineSums& s = r.sums;

  const BigInt& ref = s.rows.front();
  r.is_magic = all_equal(s.rows) && all_equal(s.columns) &&
               s.columns.front() == ref && s.diagonal == ref &&
               s.anti_diagonal == ref;
  if (r.is_magic) r.magic_constant = ref;

  r.is_natural = natural(m);
  r.is_associative = associative(m);
  r.is_pandiagonal = all_equal(s.broken_diagonals) &&
                     all_equal(s.broken_anti_diagonals) &&
                     s.broken_diagonals.front() ==
                         s.broken_anti_diagonals.front();
  r.is_ultramagic = r.is_associative && r.is_pandiagonal;
  return r;
}

IntSquareMatrix rotate_quarter(const IntSquareMatrix& m) {
  const std::size_t n = m.order();
  IntSquareMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(j, n - 1 - i) = m(i, j);
  return out;
}

IntSquareMatrix reflect_vertical(const IntSquareMatrix& m) {
  const std::size_t n = m.order();
  IntSquareMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(n - 1 - i, j) = m(i, j);
  return out;
}

std::vector<IntSquareMatrix> symmetry_variants(const IntSquareMatrix& m) {
  std::vector<IntSquareMatrix> out;
  out.reserve(8);
  for (IntSquareMatrix start : {m, m.transposed()}) {
    for (int k = 0; k < 4; ++k) {
      out.push_back(start);
      start = rotate_quarter(start);
    }
  }
  return out;
}

bool equivalent_up_to_symmetry(const IntSquareMatrix& a,
                               const IntSquareMatrix& b) {
  if (a.order() != b.order()) {
    throw Error(Errc::shape, "cannot compare squares of orders " +
                                 std::to_string(a.order()) + " and " +
                                 std::to_string(b.order()));
  }
  const auto orbit = symmetry_variants(a);
  return std::find(orbit.begin(), orbit.end(), b) != orbit.end();
}

}  // namespace cms
