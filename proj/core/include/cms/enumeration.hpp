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

#ifndef CMS_ENUMERATION_HPP_
#define CMS_ENUMERATION_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cms/construction.hpp"
#include "cms/matrix.hpp"
#include "cms/spectra.hpp"

namespace cms {

/// Largest level for which specs and clans are enumerated.
inline constexpr std::size_t kMaxEnumerationLevel = 6;
/// Largest level for the closed-form lowest-entropy series.
inline constexpr std::size_t kMaxSeriesLevel = 8;
/// Variant counts 8^e are expanded exactly up to this level.
inline constexpr std::size_t kMaxExactVariantLevel = 4;

/// Unordered multiset of unordered couples: each couple is stored low-first
/// and the couples are sorted. Specs with equal keys share a spectrum.
struct ClanKey {
  std::vector<Couple> couples;

  /// "{(1,3),(9,27),(81,243)}"
  std::string to_string() const;

  friend auto operator<=>(const ClanKey&, const ClanKey&) = default;
  friend bool operator==(const ClanKey&, const ClanKey&) = default;
};

ClanKey clan_of(const FriersonSpec& spec);

/// Visits every canonical-natural spec of the given level in a fixed order:
/// k = 1, couples low-first, couple-to-level assignment ordered. There are
/// (2l)!/2^l of them. Throws Errc::invalid_level outside 1..6.
void for_each_assignment(std::size_t level,
                         const std::function<void(const FriersonSpec&)>& visit);
std::vector<FriersonSpec> enumerate_assignments(std::size_t level);

/// All perfect matchings of {3^0, ..., 3^(2l-1)}, (2l-1)!! of them, in
/// lexicographic order.
std::vector<ClanKey> enumerate_clans(std::size_t level);

struct CountRow {
  std::size_t level = 0;
  BigInt order;           // 3^l
  BigInt first_couples;   // l(2l-1)
  BigInt num_squares;     // (2l)!/2^l
  BigInt num_clans;       // (2l-1)!!
  BigInt variant_exponent;  // (9^l - 9)/8
  /// 8^variant_exponent; absent above kMaxExactVariantLevel.
  std::optional<BigInt> variant_count;
};

std::vector<CountRow> counting_table(std::size_t max_level);

struct ClanRow {
  ClanKey clan;
  double entropy = 0.0;
  double compression = 0.0;
  BigInt r_index;
  SpectralProfile spectrum;
};

/// One row per clan from the closed-form spectrum, sorted by ascending H;
/// ties fall back to ClanKey order.
std::vector<ClanRow> clan_table(std::size_t level);

/// k = 1 with couples (1,3), (9,27), (81,243), ... innermost first.
FriersonSpec lowest_entropy_spec(std::size_t level);

struct SeriesRow {
  std::size_t level = 0;
  BigInt order;
  BigInt sigma1;
  /// sigma_i / sqrt(3) for i >= 2, descending; always integers.
  std::vector<BigInt> tail_over_sqrt3;
  double sigma_total = 0.0;
  double entropy = 0.0;
  double compression = 0.0;
  std::size_t rank = 0;
};

/// Closed-form rows for levels 1..max_level (max 8); nothing is
/// materialized.
std::vector<SeriesRow> lowest_entropy_series(std::size_t max_level);

}  // namespace cms

#endif  // CMS_ENUMERATION_HPP_
