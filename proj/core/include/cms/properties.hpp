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

#ifndef CMS_PROPERTIES_HPP_
#define CMS_PROPERTIES_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "cms/matrix.hpp"

namespace cms {

/// Exact sums of every line of a square.
struct LineSums {
  std::vector<BigInt> rows;
  std::vector<BigInt> columns;
  BigInt diagonal;       // (i, i)
  BigInt anti_diagonal;  // (i, n-1-i)
  /// broken_diagonals[c] sums (i, (i + c) mod n); offset 0 is the main
  /// diagonal.
  std::vector<BigInt> broken_diagonals;
  /// broken_anti_diagonals[c] sums (i, (c - i) mod n); offset n-1 is the
  /// main anti-diagonal.
  std::vector<BigInt> broken_anti_diagonals;
};

struct PropertyReport {
  std::size_t order = 0;
  LineSums sums;
  bool is_magic = false;
  bool is_natural = false;
  bool is_associative = false;
  bool is_pandiagonal = false;
  bool is_ultramagic = false;
  /// The common line sum; present only when is_magic.
  std::optional<BigInt> magic_constant;
};

/// Magic: rows, columns and both main diagonals share one sum.
/// Natural: entries are a permutation of 1..n^2.
/// Associative: every antipodal pair M(i,j) + M(n-1-i, n-1-j) is the same
/// (twice the centre for odd n).
/// Pandiagonal: all 2n broken diagonals share one sum; this does not require
/// the rows to agree, so the addition table qualifies.
PropertyReport analyze_properties(const IntSquareMatrix& m);

IntSquareMatrix rotate_quarter(const IntSquareMatrix& m);  // clockwise
IntSquareMatrix reflect_vertical(const IntSquareMatrix& m);  // upside down

/// The dihedral orbit: the four rotations of M followed by the four
/// rotations of its transpose. Element 0 is M itself.
std::vector<IntSquareMatrix> symmetry_variants(const IntSquareMatrix& m);

/// True iff b is one of the eight symmetry variants of a. Throws
/// Errc::shape for different orders.
bool equivalent_up_to_symmetry(const IntSquareMatrix& a,
                               const IntSquareMatrix& b);

}  // namespace cms

#endif  // CMS_PROPERTIES_HPP_
