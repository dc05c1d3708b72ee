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

#include "cms/construction.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "cms/error.hpp"

namespace cms {

namespace {

constexpr std::array<std::string_view, 16> kCatalogNames = {
    "luoshu", "m3",  "at3", "at9", "t9a",  "t9b",        "t9c", "t9d",
    "t9e",    "t9f", "d3",  "b3",  "c3",   "f27a", "browne_b27", "mppd4alpha",
};

std::int64_t pow3(std::size_t e) {
  std::int64_t p = 1;
  for (std::size_t i = 0; i < e; ++i) p *= 3;
  return p;
}

// Block (i, j) = base + offsets(i, j) * E.
IntSquareMatrix offset_tiling(
    const IntSquareMatrix& base,
    std::initializer_list<std::initializer_list<std::int64_t>> offsets) {
  IntSquareMatrix pattern = IntSquareMatrix::from_rows(offsets);
  pattern.add_scalar(1);
  return compound(pattern, base, 1);
}

IntSquareMatrix m3() {
  return IntSquareMatrix::from_rows({{8, 1, 6}, {3, 5, 7}, {4, 9, 2}});
}

IntSquareMatrix t9a() { return compound(m3(), m3(), 9); }

IntSquareMatrix browne_b27() {
  const auto b3 =
      IntSquareMatrix::from_rows({{28, 57, 2}, {3, 29, 55}, {56, 1, 30}});
  const auto b9 =
      offset_tiling(b3, {{81, 168, 3}, {6, 84, 162}, {165, 0, 87}});
  return offset_tiling(b9, {{243, 504, 9}, {18, 252, 486}, {495, 0, 261}});
}

}  // namespace

std::size_t FriersonSpec::order() const {
  if (couples.empty())
    throw Error(Errc::invalid_spec, "a Frierson spec needs at least one couple");
  return static_cast<std::size_t>(pow3(couples.size()));
}

std::string natural_spec_violation(const FriersonSpec& spec) {
  if (spec.couples.empty()) return "no couples given";
  if (spec.k != 1) return "k must be 1 for a natural square";
  std::vector<std::int64_t> members;
  for (const auto& c : spec.couples) {
    members.push_back(c.a);
    members.push_back(c.b);
  }
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    return "couple members repeat";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] != pow3(i)) {
      return "couple members must be exactly 3^0 .. 3^" +
             std::to_string(members.size() - 1);
    }
  }
  return {};
}

bool FriersonSpec::is_canonical_natural() const {
  return natural_spec_violation(*this).empty();
}

IntSquareMatrix frierson_block(Couple c) {
  const std::int64_t a = c.a;
  const std::int64_t b = c.b;
  return IntSquareMatrix::from_rows({{2 * a + b, 0, a + 2 * b},
                                     {2 * b, a + b, 2 * a},
                                     {a, 2 * a + 2 * b, b}});
}

IntSquareMatrix construct_frierson(const FriersonSpec& spec) {
  const std::size_t level = spec.level();
  if (level == 0)
    throw Error(Errc::invalid_spec, "a Frierson spec needs at least one couple");
  if (level > kMaxMaterializedLevel) {
    throw Error(Errc::invalid_spec,
                "level " + std::to_string(level) +
                    " is too large to materialize (max " +
                    std::to_string(kMaxMaterializedLevel) + ")");
  }
  const std::size_t n = spec.order();

  std::vector<IntSquareMatrix> blocks;
  blocks.reserve(level);
  for (const auto& c : spec.couples) blocks.push_back(frierson_block(c));

  // digits[r * level + j] is the j-th base-3 digit of r.
  std::vector<unsigned char> digits(n * level);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t v = r;
    for (std::size_t j = 0; j < level; ++j, v /= 3)
      digits[r * level + j] = static_cast<unsigned char>(v % 3);
  }

  std::vector<BigInt> entries(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      BigInt& v = entries[r * n + c];
      v = spec.k;
      for (std::size_t j = 0; j < level; ++j)
        v += blocks[j](digits[r * level + j], digits[c * level + j]);
    }
  }
  return IntSquareMatrix(n, std::move(entries));
}

IntSquareMatrix compound(const IntSquareMatrix& pattern,
                         const IntSquareMatrix& base, const BigInt& step) {
  if (step <= 0) throw Error(Errc::invalid_step, "compound step must be >= 1");
  const std::size_t m = pattern.order();
  const std::size_t b = base.order();
  IntSquareMatrix out(m * b);
  for (std::size_t bi = 0; bi < m; ++bi)
    for (std::size_t bj = 0; bj < m; ++bj) {
      const BigInt offset = (pattern(bi, bj) - 1) * step;
      for (std::size_t r = 0; r < b; ++r)
        for (std::size_t c = 0; c < b; ++c)
          out(bi * b + r, bj * b + c) = base(r, c) + offset;
    }
  return out;
}

IntSquareMatrix lucas_square(const LucasParams& p) {
  const auto [a, b, c] = p;
  return IntSquareMatrix::from_rows({{c - b, c + a + b, c - a},
                                     {c - a + b, c, c + a - b},
                                     {c + a, c - a - b, c + b}});
}

IntSquareMatrix mppd_compound(std::size_t level) {
  if (level == 0 || level > 4)
    throw Error(Errc::invalid_level, "mppd level must be in 1..4");
  const auto alpha = catalog("mppd4alpha");
  auto m = alpha;
  for (std::size_t l = 2; l <= level; ++l) m = compound(m, alpha, 16);
  return m;
}

IntSquareMatrix catalog(std::string_view name) {
  if (name == "luoshu")
    return IntSquareMatrix::from_rows({{4, 9, 2}, {3, 5, 7}, {8, 1, 6}});
  if (name == "m3") return m3();
  if (name == "at3") return addition_table(3);
  if (name == "at9") return addition_table(9);
  if (name == "d3")
    return IntSquareMatrix::from_rows({{64, 1, 46}, {19, 37, 55}, {28, 73, 10}});
  if (name == "b3")
    return IntSquareMatrix::from_rows({{56, 1, 30}, {3, 29, 55}, {28, 57, 2}});
  if (name == "c3")
    return IntSquareMatrix::from_rows({{20, 1, 12}, {3, 11, 19}, {10, 21, 2}});
  if (name == "t9a") return t9a();
  if (name == "t9b") return compound(m3(), catalog("b3"), 3);
  if (name == "t9c") {
    auto pattern = frierson_block({27, 3});
    pattern.add_scalar(1);
    return compound(pattern, catalog("c3"), 1);
  }
  if (name == "t9d") return compound(m3(), catalog("d3"), 1);
  if (name == "t9e") return construct_frierson({1, {{9, 3}, {27, 1}}});
  if (name == "t9f") return construct_frierson({1, {{27, 3}, {9, 1}}});
  if (name == "f27a") return compound(m3(), t9a(), 81);
  if (name == "browne_b27") return browne_b27();
  if (name == "mppd4alpha") {
    return IntSquareMatrix::from_rows(
        {{1, 15, 4, 14}, {8, 10, 5, 11}, {13, 3, 16, 2}, {12, 6, 9, 7}});
  }
  throw Error(Errc::not_found, "unknown catalog square '" + std::string(name) +
                                   "'");
}

std::span<const std::string_view> catalog_names() noexcept {
  return kCatalogNames;
}

}  // namespace cms
