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

#include <set>

#include "cms/enumeration.hpp"
#include "cms/error.hpp"
#include "cms/measures.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using cms::BigInt;
using cms::ClanKey;
using doctest::Approx;

TEST_SUITE("enumeration") {

TEST_CASE("assignments") {
  const auto one = cms::enumerate_assignments(1);
  REQUIRE(one.size() == 1);
  CHECK(one.front() == cms::FriersonSpec{1, {{1, 3}}});
  CHECK(cms::enumerate_assignments(2).size() == 6);
  CHECK(cms::enumerate_assignments(3).size() == 90);
  for (const auto& spec : cms::enumerate_assignments(3)) CHECK(spec.is_canonical_natural());
  CHECK_THROWS_AS(cms::enumerate_assignments(0), cms::Error);
  CHECK_THROWS_AS(cms::enumerate_assignments(cms::kMaxEnumerationLevel + 1), cms::Error);
}

TEST_CASE("counts match brute force over permutations") {
  for (std::size_t l = 1; l <= 4; ++l) {
    const auto [squares, clans] = cms::oracle::brute_force_counts(l);
    const auto specs = cms::enumerate_assignments(l);
    CHECK(specs.size() == squares);
    CHECK(cms::enumerate_clans(l).size() == clans);
    std::set<std::vector<cms::Couple>> distinct;
    for (const auto& s : specs) {
      std::vector<cms::Couple> sorted;
      for (const auto& c : s.couples) sorted.push_back(c.sorted());
      distinct.insert(sorted);
    }
    CHECK(distinct.size() == specs.size());
  }
}

TEST_CASE("clans") {
  const auto two = cms::enumerate_clans(2);
  const std::set<ClanKey> expected = {ClanKey{{{1, 3}, {9, 27}}}, ClanKey{{{1, 27}, {3, 9}}},
                                      ClanKey{{{1, 9}, {3, 27}}}};
  CHECK(std::set<ClanKey>(two.begin(), two.end()) == expected);
  CHECK(cms::enumerate_clans(3).size() == 15);
  CHECK(cms::enumerate_clans(4).size() == 105);
  CHECK(ClanKey{{{1, 3}, {9, 27}, {81, 243}}}.to_string() == "{(1,3),(9,27),(81,243)}");
  CHECK(cms::clan_of({1, {{27, 9}, {3, 1}}}) == ClanKey{{{1, 3}, {9, 27}}});
}

TEST_CASE("a clan is exactly a shared spectrum") {
  for (std::size_t l = 2; l <= 3; ++l) {
    const auto specs = cms::enumerate_assignments(l);
    for (const auto& x : specs) {
      for (const auto& y : specs) {
        const bool same_clan = cms::clan_of(x) == cms::clan_of(y);
        const bool same_svs =
            cms::closed_form_svs(x).sigma_sq_exact == cms::closed_form_svs(y).sigma_sq_exact;
        CHECK(same_clan == same_svs);
      }
    }
  }
}

TEST_CASE("counting table") {
  const auto rows = cms::counting_table(5);
  REQUIRE(rows.size() == 5);
  const int first[] = {1, 6, 15, 28, 45};
  const int squares[] = {1, 6, 90, 2520, 113400};
  const int clans[] = {1, 3, 15, 105, 945};
  const int exponents[] = {0, 9, 90, 819, 7380};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(rows[i].first_couples == first[i]);
    CHECK(rows[i].num_squares == squares[i]);
    CHECK(rows[i].num_clans == clans[i]);
    CHECK(rows[i].variant_exponent == exponents[i]);
  }
  CHECK(rows[1].variant_count == BigInt(134217728));
  CHECK(rows[2].variant_count->str().size() == 82);
  CHECK(*rows[2].variant_count == boost::multiprecision::pow(BigInt(8), 90));
  CHECK_FALSE(rows[4].variant_count.has_value());
  // squares(l) = first_couples(l) * squares(l-1)
  for (std::size_t i = 1; i < 5; ++i)
    CHECK(rows[i].num_squares == rows[i].first_couples * rows[i - 1].num_squares);
}

TEST_CASE("order-9 and order-27 clan tables") {
  const auto two = cms::clan_table(2);
  REQUIRE(two.size() == 3);
  CHECK(two[0].entropy == Approx(1.12999).epsilon(1e-5));
  CHECK(two[1].entropy == Approx(1.31781).epsilon(1e-5));
  CHECK(two[2].entropy == Approx(1.32208).epsilon(1e-5));

  const auto three = cms::clan_table(3);
  REQUIRE(three.size() == 15);
  CHECK(three.front().clan.to_string() == "{(1,3),(9,27),(81,243)}");
  CHECK(three.front().entropy == Approx(1.16247).epsilon(1e-5));
  CHECK(three.front().compression == Approx(64.7291).epsilon(1e-6));
  CHECK(three.front().r_index == BigInt("691492899739824"));
  CHECK(three.back().clan.to_string() == "{(1,27),(3,81),(9,243)}");
  CHECK(three.back().entropy == Approx(1.47193).epsilon(1e-5));
  CHECK(three.back().compression == Approx(55.3398).epsilon(1e-6));
  CHECK(three.back().r_index == BigInt("420361054901424"));
  for (std::size_t i = 1; i < three.size(); ++i) CHECK(three[i - 1].entropy <= three[i].entropy);
}

TEST_CASE("lowest-entropy series") {
  const auto rows = cms::lowest_entropy_series(6);
  REQUIRE(rows.size() == 6);
  const char* sigma1[] = {"15", "369", "9855", "265761", "7174575", "193710609"};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(rows[i].sigma1 == BigInt(sigma1[i]));
    CHECK(rows[i].rank == 2 * (i + 1) + 1);
    CHECK(rows[i].tail_over_sqrt3.size() == 2 * (i + 1));
  }
  CHECK(rows[0].tail_over_sqrt3 == std::vector<BigInt>{4, 2});
  CHECK(rows[4].tail_over_sqrt3.front() == 2125764);
  CHECK(rows[4].tail_over_sqrt3.back() == 162);
  CHECK(rows[0].entropy == Approx(0.937098).epsilon(1e-6));
  CHECK(rows[3].entropy == Approx(1.1673237).epsilon(1e-7));
  CHECK(rows[4].entropy == Approx(1.1680010).epsilon(1e-7));
  CHECK(rows[5].entropy == Approx(1.1680916).epsilon(1e-7));
  CHECK(rows[4].compression == Approx(78.7368).epsilon(1e-6));
  CHECK(rows[5].compression == Approx(82.2793).epsilon(1e-6));
  CHECK(rows[0].sigma_total == Approx(15 + 6 * std::sqrt(3.0)));
  for (std::size_t i = 1; i < 6; ++i) CHECK(rows[i - 1].entropy < rows[i].entropy);
  CHECK(cms::lowest_entropy_spec(2) == cms::FriersonSpec{1, {{1, 3}, {9, 27}}});
}

}  // TEST_SUITE
