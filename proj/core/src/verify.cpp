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

#include "cms/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cms/construction.hpp"
#include "cms/enumeration.hpp"
#include "cms/error.hpp"
#include "cms/io.hpp"
#include "cms/measures.hpp"
#include "cms/properties.hpp"
#include "cms/spectra.hpp"

namespace cms {

namespace {

constexpr std::array<std::string_view, 7> kTables = {
    "table2", "table3", "table4", "table5", "table6", "table7", "table8"};

using Cells = std::map<std::string, std::string>;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string flag(bool b) { return b ? "true" : "false"; }

template <typename Range>
std::string joined(const Range& r) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : r) {
    os << (first ? "" : " ") << v;
    first = false;
  }
  return os.str();
}

std::string poly(const MonicCubic& p) { return joined(p); }

void spectral_cells(Cells& out, const std::string& row,
                    const AnalysisReport& r) {
  const auto& s = r.spectrum;
  for (std::size_t i = 0; i < s.sigmas.size(); ++i)
    out[row + ".sigma" + std::to_string(i + 1)] = num(s.sigmas[i]);
  out[row + ".H"] = num(r.measures.entropy);
  out[row + ".C"] = num(r.measures.compression);
  out[row + ".rank"] = std::to_string(s.rank);
  out[row + ".L"] = s.l_index.str();
  if (s.r_index) out[row + ".R"] = s.r_index->str();
  else out[row + ".R_approx"] = num(s.r_approx);
}

// Largest deviation between two descending spectra, relative to the top one.
double spectral_gap(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.empty()) return INFINITY;
  const double top = std::max(a.front(), b.front());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]) / top);
  return worst;
}

constexpr double kOracleAgreement = 1e-9;

Cells table2() {
  Cells out;
  auto e3 = ones_matrix(3);
  e3 *= 5;
  const std::pair<std::string, IntSquareMatrix> rows[] = {
      {"e3x5", e3}, {"m3", catalog("m3")}, {"at3", catalog("at3")}};
  for (const auto& [name, m] : rows) {
    const auto r = analyze(name, m);
    spectral_cells(out, name, r);
    out[name + ".is_magic"] = flag(r.properties.is_magic);
    out[name + ".is_pandiagonal"] = flag(r.properties.is_pandiagonal);
  }
  const auto checks = m3_characteristic_checks();
  out["m3.charpoly"] = poly(checks.eigen_polynomial);
  out["luoshu.charpoly"] = poly(checks.luoshu_polynomial);
  out["m3.gram_charpoly"] = poly(checks.gram_polynomial);
  out["m3.sigma_sq"] = joined(checks.gram_roots);

  const auto z = analyze("m3_zero", zero_based_shift(catalog("m3")));
  out["m3_zero.H"] = num(z.measures.entropy);
  out["m3_zero.C"] = num(z.measures.compression);
  return out;
}

Cells table3() {
  Cells out;
  for (std::string name : {"t9a", "t9b", "t9c", "t9d", "t9e", "t9f"}) {
    const auto m = catalog(name);
    const auto r = analyze(name, m);
    out[name + ".S"] =
        r.properties.magic_constant ? r.properties.magic_constant->str() : "-";
    out[name + ".is_natural"] = flag(r.properties.is_natural);
    out[name + ".H"] = num(r.measures.entropy);
    out[name + ".C"] = num(r.measures.compression);
    out[name + ".rank"] = std::to_string(r.spectrum.rank);
    out[name + ".R"] = r.spectrum.r_index ? r.spectrum.r_index->str() : "inexact";
  }
  std::size_t clans = 0;
  std::vector<ClanKey> seen;
  for (const auto& spec : enumerate_assignments(2)) {
    const auto key = clan_of(spec);
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(key);
      ++clans;
    }
  }
  out["sextet.squares"] = std::to_string(enumerate_assignments(2).size());
  out["sextet.clans"] = std::to_string(clans);
  return out;
}

Cells table4() {
  Cells out;
  for (std::size_t l = 1; l <= 3; ++l) {
    const std::string row = "l" + std::to_string(l);
    std::size_t count = 0;
    std::size_t mismatches = 0;
    std::vector<std::string> ranks;
    std::vector<std::string> sums;
    double worst = 0.0;
    for (const auto& spec : enumerate_assignments(l)) {
      ++count;
      const auto m = construct_frierson(spec);
      const auto numeric = singular_values_numeric(m);
      const auto closed = closed_form_svs(spec);
      const double gap = spectral_gap(numeric.sigmas, closed.sigmas);
      worst = std::max(worst, gap);
      if (gap > kOracleAgreement || numeric.rank != closed.rank) ++mismatches;
      const auto rank = std::to_string(closed.rank);
      if (std::find(ranks.begin(), ranks.end(), rank) == ranks.end())
        ranks.push_back(rank);
      const auto s = sqrt(closed.sigma_sq_exact->front()).str();
      if (std::find(sums.begin(), sums.end(), s) == sums.end()) sums.push_back(s);
    }
    out[row + ".squares"] = std::to_string(count);
    out[row + ".rank"] = joined(ranks);
    out[row + ".sigma1"] = joined(sums);
    out[row + ".oracle_mismatches"] = std::to_string(mismatches);

    // Smallest nonzero numeric sigma^2 over (a - b)^2 of the innermost couple.
    const auto spec = lowest_entropy_spec(l);
    const auto numeric = singular_values_numeric(construct_frierson(spec));
    std::string factor = "inexact";
    if (numeric.sigma_sq_exact) {
      BigInt least = 0;
      for (const auto& v : *numeric.sigma_sq_exact)
        if (v != 0) least = v;
      const auto& c = spec.couples.front();
      const BigInt d2 = BigInt(c.b - c.a) * (c.b - c.a);
      factor = least % d2 == 0 ? BigInt(least / d2).str() : "x";
    }
    out[row + ".pair_factor"] = factor;
  }

  FriersonSpec browne{1, {{27, 1}, {81, 3}, {243, 9}}};
  const auto b27 = catalog("browne_b27");
  const auto r = analyze("browne_b27", b27);
  const auto closed = closed_form_svs(browne);
  out["browne_b27.is_natural"] = flag(r.properties.is_natural);
  out["browne_b27.is_magic"] = flag(r.properties.is_magic);
  out["browne_b27.H"] = num(r.measures.entropy);
  out["browne_b27.oracle_agrees"] =
      flag(spectral_gap(r.spectrum.sigmas, closed.sigmas) <= kOracleAgreement);
  return out;
}

Cells table5() {
  Cells out;
  const auto rows = clan_table(3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string letter(1, static_cast<char>('A' + i));
    out[letter + ".clan"] = rows[i].clan.to_string();
    out[letter + ".H"] = num(rows[i].entropy);
    out[letter + ".C"] = num(rows[i].compression);
    out[letter + ".R"] = rows[i].r_index.str();
  }
  return out;
}

Cells table6() {
  Cells out;
  for (const auto& r : lowest_entropy_series(6)) {
    const std::string row = "l" + std::to_string(r.level);
    out[row + ".sigma1"] = r.sigma1.str();
    out[row + ".tail_over_sqrt3"] = joined(r.tail_over_sqrt3);
    out[row + ".sigma_total"] = num(r.sigma_total);
    out[row + ".H"] = num(r.entropy);
    out[row + ".C"] = num(r.compression);
    out[row + ".rank"] = std::to_string(r.rank);
  }
  return out;
}

Cells table7() {
  Cells out;
  for (const auto& r : counting_table(5)) {
    const std::string row = "l" + std::to_string(r.level);
    out[row + ".order"] = r.order.str();
    out[row + ".first_couples"] = r.first_couples.str();
    out[row + ".squares"] = r.num_squares.str();
    out[row + ".clans"] = r.num_clans.str();
    out[row + ".variant_exponent"] = r.variant_exponent.str();
    if (r.variant_count) {
      const auto digits = r.variant_count->str();
      out[row + ".variant_count"] = digits;
      out[row + ".variant_count_digits"] = std::to_string(digits.size());
    }
  }
  for (std::size_t l = 1; l <= 3; ++l) {
    out["l" + std::to_string(l) + ".enumerated_squares"] =
        std::to_string(enumerate_assignments(l).size());
    out["l" + std::to_string(l) + ".enumerated_clans"] =
        std::to_string(enumerate_clans(l).size());
  }
  return out;
}

Cells table8() {
  Cells out;
  for (std::size_t l = 1; l <= 4; ++l) {
    const std::string row = "l" + std::to_string(l);
    const auto closed = closed_form_svs_mppd(l);
    const auto& sq = *closed.sigma_sq_exact;
    out[row + ".sigma1"] = sqrt(sq.front()).str();
    std::vector<std::string> exps;
    for (std::size_t i = 1; i < sq.size() && sq[i] != 0; ++i) {
      const BigInt t = sqrt(BigInt(sq[i] / 5));
      exps.push_back(t * t * 5 == sq[i] && (t & (t - 1)) == 0
                         ? std::to_string(msb(t))
                         : "x");
    }
    out[row + ".tail_over_sqrt5_log2"] = joined(exps);
    const auto m = entropy_compression(closed.sigmas, std::size_t{1} << (2 * l));
    out[row + ".H"] = num(m.entropy);
    out[row + ".C"] = num(m.compression);
    out[row + ".rank"] = std::to_string(closed.rank);

    const auto square = mppd_compound(l);
    const auto props = analyze_properties(square);
    out[row + ".is_magic"] = flag(props.is_magic);
    out[row + ".is_natural"] = flag(props.is_natural);
    if (l <= 3) {
      const auto numeric = singular_values_numeric(square);
      out[row + ".oracle_agrees"] =
          flag(spectral_gap(numeric.sigmas, closed.sigmas) <= kOracleAgreement &&
               numeric.rank == closed.rank);
    }
  }
  return out;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && s[i] == ' ') ++i;
  return s.substr(i);
}

std::optional<double> parse_double(std::string_view s) {
  const std::string text(s);
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) return std::nullopt;
  return v;
}

}  // namespace

Tolerance tolerance_for_key(std::string_view key) {
  const auto dot = key.rfind('.');
  const std::string_view field =
      dot == std::string_view::npos ? key : key.substr(dot + 1);
  if (field == "H") return Tolerance::entropy;
  if (field == "C") return Tolerance::compression;
  if (field == "sigma_total" || field.ends_with("_approx")) return Tolerance::relative;
  if (field.starts_with("sigma") && field.size() > 5 &&
      std::all_of(field.begin() + 5, field.end(),
                  [](char c) { return c >= '0' && c <= '9'; }))
    return Tolerance::relative;
  return Tolerance::exact;
}

bool within_tolerance(Tolerance tol, std::string_view actual,
                      std::string_view expected) {
  if (tol == Tolerance::exact) return actual == expected;
  const auto a = parse_double(actual);
  const auto e = parse_double(expected);
  if (!a || !e) return false;
  const double diff = std::abs(*a - *e);
  switch (tol) {
    case Tolerance::entropy: return diff <= kEntropyTolerance;
    case Tolerance::compression: return diff <= kCompressionTolerance;
    // The absolute floor lets a golden 0 match a numerically tiny sigma.
    case Tolerance::relative: return diff <= kRelativeTolerance * std::abs(*e) + 1e-9;
    case Tolerance::exact: break;
  }
  return false;
}

std::span<const std::string_view> golden_table_names() noexcept {
  return kTables;
}

std::map<std::string, std::string> compute_table(std::string_view table) {
  if (table == "table2") return table2();
  if (table == "table3") return table3();
  if (table == "table4") return table4();
  if (table == "table5") return table5();
  if (table == "table6") return table6();
  if (table == "table7") return table7();
  if (table == "table8") return table8();
  throw Error(Errc::not_found, "unknown golden table '" + std::string(table) + "'");
}

bool TableResult::passed() const {
  return error.empty() && !cells.empty() &&
         std::all_of(cells.begin(), cells.end(),
                     [](const CellResult& c) { return c.pass; });
}

std::vector<TableResult> verify_goldens(const std::filesystem::path& dir,
                                        std::span<const std::string> only) {
  for (const auto& name : only) {
    if (std::find(kTables.begin(), kTables.end(), name) == kTables.end())
      throw Error(Errc::not_found, "unknown golden table '" + name + "'");
  }
  std::vector<TableResult> results;
  for (std::string_view table : kTables) {
    if (!only.empty() &&
        std::find(only.begin(), only.end(), table) == only.end())
      continue;
    TableResult result;
    result.table = table;
    const auto path = dir / (std::string(table) + ".csv");
    std::ifstream in(path);
    if (!in) {
      result.error = "cannot read " + path.string();
      results.push_back(std::move(result));
      continue;
    }
    const auto actual = compute_table(table);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
      line = trim(line);
      if (line.empty() || line.front() == '#') continue;
      if (header) {
        header = false;
        if (line != "key,expected") {
          result.error = path.string() + ": expected header 'key,expected'";
          break;
        }
        continue;
      }
      const auto comma = line.find(',');
      CellResult cell;
      cell.key = trim(line.substr(0, comma));
      cell.expected = comma == std::string::npos ? "" : trim(line.substr(comma + 1));
      cell.tolerance = tolerance_for_key(cell.key);
      if (const auto it = actual.find(cell.key); it != actual.end()) {
        cell.actual = it->second;
        cell.pass = within_tolerance(cell.tolerance, cell.actual, cell.expected);
      }
      result.cells.push_back(std::move(cell));
    }
    results.push_back(std::move(result));
  }
  return results;
}

std::string render_verify_report(std::span<const TableResult> results) {
  std::ostringstream os;
  std::vector<std::string> passed;
  for (const auto& r : results) {
    if (r.passed()) {
      passed.push_back(r.table.substr(5));
      continue;
    }
    os << r.table << ": FAIL";
    if (!r.error.empty()) os << " (" << r.error << ")";
    else if (r.cells.empty()) os << " (no cells)";
    os << '\n';
    for (const auto& c : r.cells) {
      if (c.pass) continue;
      os << "  " << r.table << ':' << c.key << " expected " << c.expected
         << ", got " << (c.actual.empty() ? "<missing>" : c.actual) << '\n';
    }
  }
  std::ostringstream head;
  if (!passed.empty()) {
    head << "tables ";
    for (std::size_t i = 0; i < passed.size(); ++i)
      head << (i ? "," : "") << passed[i];
    head << ": PASS\n";
  }
  return head.str() + os.str();
}

}  // namespace cms
