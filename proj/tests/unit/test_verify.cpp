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

#include <filesystem>
#include <fstream>

#include "cms/error.hpp"
#include "cms/verify.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

fs::path scratch_copy() {
  const auto dir = fs::temp_directory_path() / "cms_verify_test";
  fs::remove_all(dir);
  fs::copy(CMS_GOLDEN_DIR, dir);
  return dir;
}

void replace_line(const fs::path& file, const std::string& key, const std::string& value) {
  std::ifstream in(file);
  std::string text, line;
  while (std::getline(in, line)) {
    if (line.rfind(key + ",", 0) == 0) line = key + "," + value;
    text += line + "\n";
  }
  in.close();
  std::ofstream(file) << text;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("tolerance kinds") {
  CHECK(cms::tolerance_for_key("A.H") == cms::Tolerance::entropy);
  CHECK(cms::tolerance_for_key("t9a.C") == cms::Tolerance::compression);
  CHECK(cms::tolerance_for_key("m3.sigma2") == cms::Tolerance::relative);
  CHECK(cms::tolerance_for_key("l4.sigma_total") == cms::Tolerance::relative);
  CHECK(cms::tolerance_for_key("at3.R_approx") == cms::Tolerance::relative);
  CHECK(cms::tolerance_for_key("l4.sigma1") == cms::Tolerance::relative);
  CHECK(cms::tolerance_for_key("A.R") == cms::Tolerance::exact);
  CHECK(cms::tolerance_for_key("m3.sigma_sq") == cms::Tolerance::exact);
  CHECK(cms::tolerance_for_key("l3.tail_over_sqrt3") == cms::Tolerance::exact);

  CHECK(cms::within_tolerance(cms::Tolerance::entropy, "1.16252", "1.16247"));
  CHECK_FALSE(cms::within_tolerance(cms::Tolerance::entropy, "1.16262", "1.16247"));
  CHECK(cms::within_tolerance(cms::Tolerance::compression, "64.735", "64.7291"));
  CHECK_FALSE(cms::within_tolerance(cms::Tolerance::compression, "64.745", "64.7291"));
  CHECK(cms::within_tolerance(cms::Tolerance::relative, "1e-15", "0"));
  CHECK_FALSE(cms::within_tolerance(cms::Tolerance::relative, "x", "0"));
  CHECK_FALSE(cms::within_tolerance(cms::Tolerance::exact, "10", "10.0"));
}

TEST_CASE("shipped goldens pass") {
  const auto results = cms::verify_goldens(CMS_GOLDEN_DIR);
  REQUIRE(results.size() == 7);
  for (const auto& r : results) CHECK_MESSAGE(r.passed(), cms::render_verify_report(results));
  CHECK(cms::render_verify_report(results) == "tables 2,3,4,5,6,7,8: PASS\n");
}

TEST_CASE("a corrupted cell is named") {
  const auto dir = scratch_copy();
  replace_line(dir / "table5.csv", "A.H", "1.17");
  const std::vector<std::string> only = {"table5"};
  const auto results = cms::verify_goldens(dir, only);
  REQUIRE(results.size() == 1);
  CHECK_FALSE(results[0].passed());
  const auto report = cms::render_verify_report(results);
  CHECK(report.find("table5:A.H expected 1.17") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("unknown keys and missing files fail") {
  const auto dir = scratch_copy();
  std::ofstream(dir / "table7.csv", std::ios::app) << "l9.order,19683\n";
  fs::remove(dir / "table8.csv");
  const std::vector<std::string> only = {"table7", "table8"};
  const auto results = cms::verify_goldens(dir, only);
  REQUIRE(results.size() == 2);
  CHECK_FALSE(results[0].passed());
  CHECK_FALSE(results[1].passed());
  CHECK_FALSE(results[1].error.empty());
  fs::remove_all(dir);
}

TEST_CASE("filter") {
  const std::vector<std::string> only = {"table7"};
  const auto results = cms::verify_goldens(CMS_GOLDEN_DIR, only);
  REQUIRE(results.size() == 1);
  CHECK(results[0].table == "table7");
  const std::vector<std::string> bogus = {"table1"};
  CHECK_THROWS_AS(cms::verify_goldens(CMS_GOLDEN_DIR, bogus), cms::Error);
}

}  // TEST_SUITE
