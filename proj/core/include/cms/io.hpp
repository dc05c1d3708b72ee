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

#ifndef CMS_IO_HPP_
#define CMS_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cms/construction.hpp"
#include "cms/enumeration.hpp"
#include "cms/matrix.hpp"
#include "cms/measures.hpp"
#include "cms/properties.hpp"
#include "cms/spectra.hpp"

namespace cms {

struct CatalogRef {
  std::string name;
  friend bool operator==(const CatalogRef&, const CatalogRef&) = default;
};

struct CompoundRecipe {
  std::string pattern;  // catalog name
  std::string base;     // catalog name
  BigInt step;
  friend bool operator==(const CompoundRecipe&, const CompoundRecipe&) = default;
};

using Provenance = std::variant<FriersonSpec, CatalogRef, CompoundRecipe>;

/// A square plus where it came from. JSON form:
///   {"order": n, "elements": [...row-major...], "provenance": {...}}
/// Elements that do not fit in 64 bits are written as decimal strings.
struct SquareDocument {
  IntSquareMatrix square;
  std::optional<Provenance> provenance;

  friend bool operator==(const SquareDocument&, const SquareDocument&) = default;
};

std::string render_json(const SquareDocument& doc);
/// Throws Errc::parse on malformed input or a shape mismatch.
SquareDocument parse_json(std::string_view text);
SquareDocument read_document(const std::filesystem::path& path);

/// One line per row, comma-separated.
std::string render_csv(const IntSquareMatrix& m);
/// Right-aligned grid; orders 3^l and 4^l get ruled blocks at every
/// sub-square scale ('|' and '-' for the finest, '||' and '=' above).
std::string render_pretty(const IntSquareMatrix& m);

/// "3,1;27,9" -> {(3,1), (27,9)}, innermost first. Throws Errc::parse.
std::vector<Couple> parse_couples(std::string_view text);

/// printf("%.6g"): six significant digits, '.' decimal point, locale-free
std::string format_sig6(double value);

/// CMS_TOL when set to a positive number, otherwise kDefaultRankTolerance.
double rank_tolerance_from_env();

struct AnalysisReport {
  std::string name;
  PropertyReport properties;
  SpectralProfile spectrum;
  MeasureReport measures;
};

/// Properties, numeric spectrum and measures. When `spec` is given, its
/// closed-form exact sigma^2 are attached to the numeric spectrum.
AnalysisReport analyze(std::string name, const IntSquareMatrix& m,
                       const std::optional<FriersonSpec>& spec = std::nullopt,
                       double rank_tol = kDefaultRankTolerance);

std::string render_analysis_json(const AnalysisReport& report);
/// name,n,S,rank,H,C,R,L,is_magic,is_associative,is_pandiagonal
std::string analysis_csv_header();
std::string render_analysis_csv_row(const AnalysisReport& report);

std::string render_clan_table_csv(const std::vector<ClanRow>& rows);
std::string render_clan_table_json(const std::vector<ClanRow>& rows);
std::string render_counts_csv(const std::vector<CountRow>& rows);
std::string render_series_csv(const std::vector<SeriesRow>& rows);

}  // namespace cms

#endif  // CMS_IO_HPP_
