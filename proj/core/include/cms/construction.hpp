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

#ifndef CMS_CONSTRUCTION_HPP_
#define CMS_CONSTRUCTION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cms/matrix.hpp"

namespace cms {

/// A parameter pair feeding the order-3 pattern block. Order matters for
/// construction (swapping mirrors the block left-right); clans treat a
/// couple as unordered.
struct Couple {
  std::int64_t a = 0;
  std::int64_t b = 0;

  std::int64_t low() const noexcept { return a < b ? a : b; }
  std::int64_t high() const noexcept { return a < b ? b : a; }
  Couple sorted() const noexcept { return {low(), high()}; }

  friend auto operator<=>(const Couple&, const Couple&) = default;
};

/// Additive constant k plus one couple per level. couples[0] is the
/// innermost (finest, 3x3) scale; the resulting order is 3^level.
struct FriersonSpec {
  std::int64_t k = 1;
  std::vector<Couple> couples;

  std::size_t level() const noexcept { return couples.size(); }
  /// 3^level. Throws Errc::invalid_spec for an empty couple list.
  std::size_t order() const;

  /// k == 1 and the 2*level members are exactly 3^0 .. 3^(2*level - 1).
  bool is_canonical_natural() const;

  friend bool operator==(const FriersonSpec&, const FriersonSpec&) = default;
};

/// Empty string when the spec is canonical-natural, otherwise a reason.
std::string natural_spec_violation(const FriersonSpec& spec);

struct LucasParams {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
};

/// Largest level construct_frierson will materialize (order 2187).
inline constexpr std::size_t kMaxMaterializedLevel = 7;

/// The zero-based order-3 block for couple (a, b):
///
///   [ 2a+b    0    a+2b ]
///   [  2b    a+b    2a  ]
///   [   a   2a+2b    b  ]
///
/// Every line sums to 3(a+b).
IntSquareMatrix frierson_block(Couple c);

/// k*E_n + sum_j E_{3^(l-j)} (x) frierson_block(couple_j) (x) E_{3^(j-1)}.
///
/// The j-th couple contributes the offset of its block read at the (j-1)-th
/// base-3 digit of the row and column indices, so the square is built
/// directly rather than through l full-size Kronecker products.
IntSquareMatrix construct_frierson(const FriersonSpec& spec);

/// Tiles |pattern|^2 copies of `base`; block (i, j) is
/// base + (pattern(i, j) - 1) * step * E. Throws Errc::invalid_step for
/// step <= 0.
IntSquareMatrix compound(const IntSquareMatrix& pattern,
                         const IntSquareMatrix& base, const BigInt& step);

/// Lucas's order-3 form with centre c:
///
///   [ c-b    c+a+b   c-a  ]
///   [ c-a+b    c    c+a-b ]
///   [ c+a    c-a-b   c+b  ]
///
/// (3, 1, 5) gives the Luoshu.
IntSquareMatrix lucas_square(const LucasParams& p);

/// Order 4^level: mppd4alpha blocks laid out by the level-1 square.
IntSquareMatrix mppd_compound(std::size_t level);

/// Named squares. Throws Errc::not_found for an unknown name.
IntSquareMatrix catalog(std::string_view name);
std::span<const std::string_view> catalog_names() noexcept;

}  // namespace cms

#endif  // CMS_CONSTRUCTION_HPP_
