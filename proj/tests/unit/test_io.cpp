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

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "cms/construction.hpp"
#include "cms/error.hpp"
#include "cms/io.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using cms::BigInt;
using cms::SquareDocument;

TEST_SUITE("io") {

TEST_CASE("JSON round trip for every catalog square") {
  for (auto name : cms::catalog_names()) {
    const SquareDocument doc{cms::catalog(name), cms::CatalogRef{std::string(name)}};
    const auto text = cms::render_json(doc);
    CHECK(text.back() == '\n');
    CHECK(cms::parse_json(text) == doc);
  }
}

TEST_CASE("JSON round trip with provenance and huge entries") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::size_t>(cms::gen::uniform(1, 5));
    SquareDocument doc{cms::gen::huge_matrix(n), std::nullopt};
    switch (trial % 4) {
      case 0: doc.provenance = cms::gen::random_spec(2); break;
      case 1: doc.provenance = cms::CompoundRecipe{"m3", "t9a", BigInt(1) << 70}; break;
      case 2: doc.provenance = cms::CatalogRef{"luoshu"}; break;
      default: break;
    }
    CHECK(cms::parse_json(cms::render_json(doc)) == doc);
  }
}

TEST_CASE("JSON layout") {
  const SquareDocument doc{cms::catalog("m3"), cms::FriersonSpec{1, {{3, 1}}}};
  const auto text = cms::render_json(doc);
  CHECK(text.find("\"order\":3") != std::string::npos);
  CHECK(text.find("\"elements\":[8,1,6,3,5,7,4,9,2]") != std::string::npos);
  CHECK(text.find("\"kind\":\"spec\"") != std::string::npos);
}

TEST_CASE("malformed JSON") {
  const char* bad[] = {
      "",
      "{",
      R"({"order":2,"elements":[1,2,3]})",
      R"({"order":0,"elements":[]})",
      R"({"elements":[1]})",
      R"({"order":1,"elements":["x"]})",
      R"({"order":1,"elements":[1.5]})",
      R"({"order":1,"elements":[1],"provenance":{"kind":"magic"}})",
      R"({"order":1,"elements":[1],"provenance":{"kind":"spec","k":1,"couples":[[1]]}})",
  };
  for (const char* text : bad) {
    try {
      (void)cms::parse_json(text);
      FAIL("accepted: " << text);
    } catch (const cms::Error& e) {
      CHECK(e.code() == cms::Errc::parse);
    }
  }
  CHECK_THROWS_AS(cms::read_document("/nonexistent/square.json"), cms::Error);
}

TEST_CASE("read_document") {
  const auto path = std::filesystem::temp_directory_path() / "cms_io_test.json";
  const SquareDocument doc{cms::catalog("t9a"), std::nullopt};
  {
    std::ofstream out(path);
    out << cms::render_json(doc);
  }
  CHECK(cms::read_document(path) == doc);
  std::filesystem::remove(path);
}

TEST_CASE("CSV and pretty rendering") {
  CHECK(cms::render_csv(cms::catalog("m3")) == "8,1,6\n3,5,7\n4,9,2\n");
  CHECK(cms::render_pretty(cms::catalog("m3")) == "8 1 6\n3 5 7\n4 9 2\n");

  const auto t9 = cms::render_pretty(cms::catalog("t9a"));
  CHECK(t9.rfind("71 64 69 |  8  1  6 | 53 46 51\n", 0) == 0);
  CHECK(std::count(t9.begin(), t9.end(), '\n') == 11);
  CHECK(t9.find('=') == std::string::npos);

  const auto f27 = cms::render_pretty(cms::catalog("f27a"));
  CHECK(f27.find(" || ") != std::string::npos);
  CHECK(std::count(f27.begin(), f27.end(), '\n') == 27 + 6 + 2);

  const auto p16 = cms::render_pretty(cms::mppd_compound(2));
  CHECK(std::count(p16.begin(), p16.end(), '\n') == 16 + 3);
}

TEST_CASE("couple strings") {
  CHECK(cms::parse_couples("3,1;27,9") == std::vector<cms::Couple>{{3, 1}, {27, 9}});
  CHECK(cms::parse_couples(" 1 , 3 ") == std::vector<cms::Couple>{{1, 3}});
  CHECK(cms::parse_couples("-2,5") == std::vector<cms::Couple>{{-2, 5}});
  for (const char* bad : {"", "1", "1,2,3", "1,x", "1,2;", ";1,2", "1,,2"})
    CHECK_THROWS_AS(cms::parse_couples(bad), cms::Error);
}

TEST_CASE("six significant digits") {
  CHECK(cms::format_sig6(1.129988127) == "1.12999");
  CHECK(cms::format_sig6(48.57202407) == "48.572");
  CHECK(cms::format_sig6(100.0) == "100");
  CHECK(cms::format_sig6(0.0) == "0");
}

TEST_CASE("rank tolerance from the environment") {
  ::unsetenv("CMS_TOL");
  CHECK(cms::rank_tolerance_from_env() == cms::kDefaultRankTolerance);
  ::setenv("CMS_TOL", "1e-6", 1);
  CHECK(cms::rank_tolerance_from_env() == 1e-6);
  ::setenv("CMS_TOL", "junk", 1);
  CHECK(cms::rank_tolerance_from_env() == cms::kDefaultRankTolerance);
  ::unsetenv("CMS_TOL");
}

TEST_CASE("analysis rows") {
  const auto t9a = cms::analyze("t9a", cms::catalog("t9a"));
  CHECK(cms::analysis_csv_header() ==
        "name,n,S,rank,H,C,R,L,is_magic,is_associative,is_pandiagonal\n");
  CHECK(cms::render_analysis_csv_row(t9a) ==
        "t9a,9,369,5,1.12999,48.572,1301165856,19840983777,true,true,false\n");

  const auto at3 = cms::render_analysis_csv_row(cms::analyze("at3", cms::catalog("at3")));
  CHECK(at3 == "at3,3,,2,0.22595,79.4332,1.30282,80577,false,true,true\n");

  const auto spec = cms::FriersonSpec{1, {{3, 1}, {27, 9}}};
  const auto with_spec = cms::analyze("t9a", cms::construct_frierson(spec), spec);
  REQUIRE(with_spec.spectrum.sigma_sq_exact.has_value());
  CHECK(with_spec.spectrum.sigma_sq_exact->size() == 9);

  const auto json = cms::render_analysis_json(t9a);
  CHECK(json.find("\"R\": 1301165856") != std::string::npos);
  CHECK(json.find("\"is_magic\": true") != std::string::npos);
}

TEST_CASE("table renderers") {
  const auto clans = cms::render_clan_table_csv(cms::clan_table(3));
  CHECK(clans.rfind("position,clan,H,C,R\n1,\"{(1,3),(9,27),(81,243)}\",1.16247,64.7291,", 0) == 0);
  CHECK(cms::render_clan_table_json(cms::clan_table(1)).find("\"position\": 1") !=
        std::string::npos);

  const auto counts = cms::render_counts_csv(cms::counting_table(5));
  CHECK(counts.find("\n5,243,45,113400,945,7380,8^7380\n") != std::string::npos);

  const auto series = cms::render_series_csv(cms::lowest_entropy_series(2));
  CHECK(series ==
        "l,n,sigma1,sigma_total,H,C,rank,tail_over_sqrt3\n"
        "1,3,15,25.3923,0.937098,14.7017,3,4;2\n"
        "2,9,369,680.769,1.12999,48.572,5,108;54;12;6\n");
}

}  // TEST_SUITE
