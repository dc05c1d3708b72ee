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

#ifndef CMS_VERIFY_HPP_
#define CMS_VERIFY_HPP_

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cms {

enum class Tolerance {
  exact,        // byte-equal text
  entropy,      // |a - e| <= 1e-4
  compression,  // |a - e| <= 0.01
  relative,     // |a - e| <= 1e-4 |e|
};

inline constexpr double kEntropyTolerance = 1e-4;
inline constexpr double kCompressionTolerance = 0.01;
inline constexpr double kRelativeTolerance = 1e-4;

/// Chosen from the field after the last '.' in a cell key: H, C, sigma*,
/// *_approx and sigma_total compare numerically, everything else exactly.
Tolerance tolerance_for_key(std::string_view key);

bool within_tolerance(Tolerance tol, std::string_view actual,
                      std::string_view expected);

std::span<const std::string_view> golden_table_names() noexcept;

/// key -> rendered value, computed from scratch.
std::map<std::string, std::string> compute_table(std::string_view table);

struct CellResult {
  std::string key;
  std::string expected;
  std::string actual;  // empty when the key is not produced
  Tolerance tolerance = Tolerance::exact;
  bool pass = false;
};

struct TableResult {
  std::string table;
  std::string error;  // unreadable golden file, etc.
  std::vector<CellResult> cells;

  bool passed() const;
};

/// Golden files are <dir>/<table>.csv with a "key,expected" header; lines
/// starting with '#' are ignored. An empty `only` runs every table.
std::vector<TableResult> verify_goldens(const std::filesystem::path& dir,
                                        std::span<const std::string> only = {});

std::string render_verify_report(std::span<const TableResult> results);

}  // namespace cms

#endif  // CMS_VERIFY_HPP_
