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

#include "cms/enumeration.hpp"

#include <algorithm>
#include <sstream>

#include "cms/error.hpp"
#include "cms/measures.hpp"

namespace cms {

namespace {

void require_level(std::size_t level, std::size_t max_level) {
  if (level == 0 || level > max_level) {
    throw Error(Errc::invalid_level, "level must be in 1.." +
                                         std::to_string(max_level) + ", got " +
                                         std::to_string(level));
  }
}

std::vector<std::int64_t> powers_of_three(std::size_t count) {
  std::vector<std::int64_t> p(count);
  std::int64_t v = 1;
  for (auto& x : p) {
    x = v;
    v *= 3;
  }
  return p;
}

void assign(std::vector<std::int64_t>& pool, FriersonSpec& spec,
            const std::function<void(const FriersonSpec&)>& visit) {
  if (pool.empty()) {
    visit(spec);
    return;
  }
  const std::size_t m = pool.size();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::int64_t a = pool[i];
      const std::int64_t b = pool[j];
      std::vector<std::int64_t> rest;
      rest.reserve(m - 2);
      for (std::size_t t = 0; t < m; ++t)
        if (t != i && t != j) rest.push_back(pool[t]);
      spec.couples.push_back({a, b});
      assign(rest, spec, visit);
      spec.couples.pop_back();
    }
  }
}

void match(std::vector<std::int64_t> pool, std::vector<Couple>& partial,
           std::vector<ClanKey>& out) {
  if (pool.empty()) {
    out.push_back(ClanKey{partial});
    return;
  }
  const std::int64_t first = pool.front();
  for (std::size_t j = 1; j < pool.size(); ++j) {
    std::vector<std::int64_t> rest;
    rest.reserve(pool.size() - 2);
    for (std::size_t t = 1; t < pool.size(); ++t)
      if (t != j) rest.push_back(pool[t]);
    partial.push_back({first, pool[j]});
    match(std::move(rest), partial, out);
    partial.pop_back();
  }
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::string ClanKey::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < couples.size(); ++i)
    os << (i ? "," : "") << '(' << couples[i].a << ',' << couples[i].b << ')';
  os << '}';
  return os.str();
}

ClanKey clan_of(const FriersonSpec& spec) {
  ClanKey key;
  key.couples.reserve(spec.couples.size());
  for (const auto& c : spec.couples) key.couples.push_back(c.sorted());
  std::sort(key.couples.begin(), key.couples.end());
  return key;
}

void for_each_assignment(
    std::size_t level, const std::function<void(const FriersonSpec&)>& visit) {
  require_level(level, kMaxEnumerationLevel);
  auto pool = powers_of_three(2 * level);
  FriersonSpec spec{1, {}};
  spec.couples.reserve(level);
  assign(pool, spec, visit);
}

std::vector<FriersonSpec> enumerate_assignments(std::size_t level) {
  std::vector<FriersonSpec> out;
  for_each_assignment(level,
                      [&](const FriersonSpec& s) { out.push_back(s); });
  return out;
}

std::vector<ClanKey> enumerate_clans(std::size_t level) {
  require_level(level, kMaxEnumerationLevel);
  std::vector<ClanKey> out;
  std::vector<Couple> partial;
  match(powers_of_three(2 * level), partial, out);
  return out;
}

std::vector<CountRow> counting_table(std::size_t max_level) {
  if (max_level == 0) throw Error(Errc::invalid_level, "max level must be >= 1");
  std::vector<CountRow> rows;
  for (std::size_t l = 1; l <= max_level; ++l) {
    CountRow row;
    row.level = l;
    const unsigned ul = static_cast<unsigned>(l);
    row.order = boost::multiprecision::pow(BigInt(3), ul);
    row.first_couples = BigInt(l) * (2 * l - 1);
    row.num_squares = factorial(2 * ul) / boost::multiprecision::pow(BigInt(2), ul);
    row.num_clans = 1;
    for (unsigned odd = 1; odd < 2 * ul; odd += 2) row.num_clans *= odd;
    row.variant_exponent = (row.order * row.order - 9) / 8;
    if (l <= kMaxExactVariantLevel) {
      row.variant_count = boost::multiprecision::pow(
          BigInt(8), row.variant_exponent.convert_to<unsigned>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ClanRow> clan_table(std::size_t level) {
  const auto clans = enumerate_clans(level);
  std::vector<ClanRow> rows;
  rows.reserve(clans.size());
  for (const auto& clan : clans) {
    FriersonSpec spec{1, clan.couples};
    auto profile = closed_form_svs(spec);
    const auto m = entropy_compression(profile.sigmas, spec.order());
    rows.push_back(ClanRow{clan, m.entropy, m.compression, *profile.r_index,
                           std::move(profile)});
  }
  std::sort(rows.begin(), rows.end(), [](const ClanRow& x, const ClanRow& y) {
    if (x.entropy != y.entropy) return x.entropy < y.entropy;
    return x.clan < y.clan;
  });
  return rows;
}

FriersonSpec lowest_entropy_spec(std::size_t level) {
  require_level(level, kMaxSeriesLevel);
  const auto p = powers_of_three(2 * level);
  FriersonSpec spec{1, {}};
  for (std::size_t j = 0; j < level; ++j)
    spec.couples.push_back({p[2 * j], p[2 * j + 1]});
  return spec;
}

std::vector<SeriesRow> lowest_entropy_series(std::size_t max_level) {
  require_level(max_level, kMaxSeriesLevel);
  std::vector<SeriesRow> rows;
  for (std::size_t l = 1; l <= max_level; ++l) {
    const auto spec = lowest_entropy_spec(l);
    const auto profile = closed_form_svs(spec);
    const auto m = entropy_compression(profile.sigmas, spec.order());

    SeriesRow row;
    row.level = l;
    row.order = spec.order();
    row.sigma1 = sqrt(profile.sigma_sq_exact->front());
    const BigInt scale =
        boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(l - 1));
    for (const auto& c : spec.couples) {
      row.tail_over_sqrt3.push_back(scale * (c.a + c.b));
      row.tail_over_sqrt3.push_back(scale * abs(BigInt(c.a) - c.b));
    }
    std::sort(row.tail_over_sqrt3.begin(), row.tail_over_sqrt3.end(),
              std::greater<>());
    row.sigma_total = profile.sigma_total();
    row.entropy = m.entropy;
    row.compression = m.compression;
    row.rank = profile.rank;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cms
