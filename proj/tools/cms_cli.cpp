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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cms/construction.hpp"
#include "cms/enumeration.hpp"
#include "cms/error.hpp"
#include "cms/io.hpp"
#include "cms/measures.hpp"
#include "cms/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

struct ConstructArgs {
  std::optional<std::size_t> level;
  std::string couples;
  std::int64_t k = 1;
  bool require_natural = false;
  std::string catalog;
  std::vector<std::string> compound;
  std::string format = "json";
  std::string out;
};

struct AnalyzeArgs {
  std::string catalog;
  std::string spec;
  std::int64_t k = 1;
  std::string in;
  bool zero_based = false;
  std::string format = "json";
};

struct EnumerateArgs {
  std::optional<std::size_t> level;
  std::string sort = "entropy";
  bool counts = false;
  bool series = false;
  std::size_t max_level = 5;
  std::string format = "csv";
};

struct VerifyArgs {
  std::vector<std::string> only;
  std::string goldens = CMS_GOLDEN_DIR;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

cms::CompoundRecipe parse_recipe(const std::vector<std::string>& tokens) {
  std::vector<std::string> parts;
  for (const auto& t : tokens) {
    std::istringstream is(t);
    std::string p;
    while (is >> p) parts.push_back(p);
  }
  std::optional<std::string> pattern, base, step;
  for (const auto& p : parts) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw UsageError("expected key=value, got '" + p + "'");
    const auto key = p.substr(0, eq);
    const auto value = p.substr(eq + 1);
    if (key == "pattern") pattern = value;
    else if (key == "base") base = value;
    else if (key == "step") step = value;
    else throw UsageError("unknown compound key '" + key + "'");
  }
  if (!pattern || !base || !step)
    throw UsageError("--compound needs pattern=, base= and step=");
  if (step->empty() || step->find_first_not_of("-0123456789") != std::string::npos)
    throw UsageError("step must be an integer");
  return {*pattern, *base, cms::BigInt(*step)};
}

cms::FriersonSpec spec_from(const std::string& couples, std::int64_t k) {
  return cms::FriersonSpec{k, cms::parse_couples(couples)};
}

int run_construct(const ConstructArgs& a) {
  const int sources = !a.catalog.empty() + !a.compound.empty() + !a.couples.empty();
  if (sources != 1)
    throw UsageError("construct needs exactly one of --couples, --catalog, --compound");

  cms::SquareDocument doc{cms::IntSquareMatrix(1), std::nullopt};
  if (!a.catalog.empty()) {
    doc = {cms::catalog(a.catalog), cms::CatalogRef{a.catalog}};
  } else if (!a.compound.empty()) {
    auto recipe = parse_recipe(a.compound);
    doc.square = cms::compound(cms::catalog(recipe.pattern),
                               cms::catalog(recipe.base), recipe.step);
    doc.provenance = std::move(recipe);
  } else {
    const auto spec = spec_from(a.couples, a.k);
    if (a.level && *a.level != spec.level()) {
      throw UsageError("--level " + std::to_string(*a.level) + " but " +
                       std::to_string(spec.level()) + " couples given");
    }
    if (spec.level() > cms::kMaxMaterializedLevel)
      throw UsageError("level above " + std::to_string(cms::kMaxMaterializedLevel) +
                       " is too large to materialize");
    if (a.require_natural) {
      if (auto why = cms::natural_spec_violation(spec); !why.empty())
        throw UsageError("not a natural specification: " + why);
    }
    doc = {cms::construct_frierson(spec), spec};
  }

  if (a.format == "json") emit(cms::render_json(doc), a.out);
  else if (a.format == "csv") emit(cms::render_csv(doc.square), a.out);
  else emit(cms::render_pretty(doc.square), a.out);
  return kExitOk;
}

int run_analyze(const AnalyzeArgs& a) {
  const int sources = !a.catalog.empty() + !a.spec.empty() + !a.in.empty();
  if (sources != 1)
    throw UsageError("analyze needs exactly one of --catalog, --spec, --in");

  std::string name;
  cms::IntSquareMatrix m(1);
  std::optional<cms::FriersonSpec> spec;
  if (!a.catalog.empty()) {
    name = a.catalog;
    m = cms::catalog(a.catalog);
  } else if (!a.spec.empty()) {
    spec = spec_from(a.spec, a.k);
    if (spec->level() > cms::kMaxMaterializedLevel)
      throw UsageError("level above " + std::to_string(cms::kMaxMaterializedLevel) +
                       " is too large to materialize");
    name = "spec:" + a.spec;
    m = cms::construct_frierson(*spec);
  } else {
    auto doc = cms::read_document(a.in);
    name = std::filesystem::path(a.in).stem().string();
    m = std::move(doc.square);
    if (doc.provenance) {
      if (const auto* s = std::get_if<cms::FriersonSpec>(&*doc.provenance);
          s && cms::construct_frierson(*s) == m)
        spec = *s;
    }
  }
  if (a.zero_based) {
    m = cms::zero_based_shift(m);
    name += "'";
    spec.reset();
  }

  const auto report = cms::analyze(name, m, spec, cms::rank_tolerance_from_env());
  if (a.format == "json") std::cout << cms::render_analysis_json(report);
  else std::cout << cms::analysis_csv_header() << cms::render_analysis_csv_row(report);
  return kExitOk;
}

int run_enumerate(const EnumerateArgs& a) {
  const int modes = a.level.has_value() + a.counts + a.series;
  if (modes != 1)
    throw UsageError("enumerate needs exactly one of --level, --counts, --series");

  if (a.counts) {
    if (a.format != "csv") throw UsageError("--counts supports csv only");
    std::cout << cms::render_counts_csv(cms::counting_table(a.max_level));
  } else if (a.series) {
    if (a.format != "csv") throw UsageError("--series supports csv only");
    std::cout << cms::render_series_csv(cms::lowest_entropy_series(a.max_level));
  } else {
    auto rows = cms::clan_table(*a.level);
    if (a.sort == "clan") {
      std::sort(rows.begin(), rows.end(),
                [](const cms::ClanRow& x, const cms::ClanRow& y) {
                  return x.clan < y.clan;
                });
    }
    std::cout << (a.format == "json" ? cms::render_clan_table_json(rows)
                                     : cms::render_clan_table_csv(rows));
  }
  return kExitOk;
}

int run_verify(const VerifyArgs& a) {
  const auto results = cms::verify_goldens(a.goldens, a.only);
  const auto report = cms::render_verify_report(results);
  const bool ok = std::all_of(results.begin(), results.end(),
                              [](const cms::TableResult& r) { return r.passed(); });
  (ok ? std::cout : std::cerr) << report;
  return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compound magic squares: construction, spectra and counting"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a square");
  construct->add_option("--level", ca.level, "Nesting level l (order 3^l)")
      ->check(CLI::PositiveNumber);
  construct->add_option("--couples", ca.couples,
                        "Couples, innermost first, e.g. \"1,3;9,27\"");
  construct->add_option("--k", ca.k, "Constant added to every entry");
  construct->add_flag("--require-natural", ca.require_natural,
                      "Reject specifications that cannot give 1..n^2");
  construct->add_option("--catalog", ca.catalog, "Named square");
  construct->add_option("--compound", ca.compound,
                        "pattern=NAME base=NAME step=INT")
      ->expected(1, 3);
  construct->add_option("--format", ca.format)
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  construct->add_option("--out", ca.out, "Write to a file instead of stdout");

  AnalyzeArgs aa;
  auto* analyze = app.add_subcommand("analyze", "Properties, spectrum and entropy");
  analyze->add_option("--catalog", aa.catalog, "Named square");
  analyze->add_option("--spec", aa.spec, "Couples, innermost first");
  analyze->add_option("--k", aa.k, "Constant for --spec");
  analyze->add_option("--in", aa.in, "Square document (JSON)");
  analyze->add_flag("--zero-based", aa.zero_based, "Subtract 1 from every entry");
  analyze->add_option("--format", aa.format)->check(CLI::IsMember({"json", "csv"}));

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "Clan tables and counts");
  enumerate->add_option("--level", ea.level, "Clan table for one level")
      ->check(CLI::Range(std::size_t{1}, cms::kMaxEnumerationLevel));
  enumerate->add_option("--sort", ea.sort)->check(CLI::IsMember({"entropy", "clan"}));
  enumerate->add_flag("--counts", ea.counts, "Counting table");
  enumerate->add_flag("--series", ea.series, "Lowest-entropy series");
  enumerate->add_option("--max-level", ea.max_level, "Last level for --counts/--series")
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--format", ea.format)->check(CLI::IsMember({"csv", "json"}));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check computed tables against goldens");
  verify->add_option("--only", va.only, "Tables to run, e.g. table5")->delimiter(',');
  verify->add_option("--goldens", va.goldens, "Golden CSV directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct) return run_construct(ca);
    if (*analyze) return run_analyze(aa);
    if (*enumerate) return run_enumerate(ea);
    return run_verify(va);
  } catch (const UsageError& e) {
    std::cerr << "cms: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cms::Error& e) {
    std::cerr << "cms: " << cms::to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == cms::Errc::verification_failure ? kExitVerify : kExitUsage;
  }
}
