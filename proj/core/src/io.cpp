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

#include "cms/io.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "cms/error.hpp"
#include "json.hpp"

namespace cms {

namespace {

using nlohmann::json;

json int_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

BigInt int_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    return BigInt(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start ||
        s.find_first_not_of("0123456789", start) != std::string::npos)
      throw Error(Errc::parse, "not an integer: \"" + s + "\"");
    return BigInt(s);
  }
  throw Error(Errc::parse, "expected an integer, got " + j.dump());
}

json provenance_to_json(const Provenance& p) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FriersonSpec>) {
          json couples = json::array();
          for (const auto& c : v.couples) couples.push_back({c.a, c.b});
          return {{"kind", "spec"}, {"k", v.k}, {"couples", couples}};
        } else if constexpr (std::is_same_v<T, CatalogRef>) {
          return {{"kind", "catalog"}, {"name", v.name}};
        } else {
          return {{"kind", "compound"},
                  {"pattern", v.pattern},
                  {"base", v.base},
                  {"step", int_to_json(v.step)}};
        }
      },
      p);
}

Provenance provenance_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "spec") {
    FriersonSpec spec;
    spec.k = j.at("k").get<std::int64_t>();
    for (const auto& c : j.at("couples")) {
      if (!c.is_array() || c.size() != 2)
        throw Error(Errc::parse, "a couple must be a two-element array");
      spec.couples.push_back({c[0].get<std::int64_t>(), c[1].get<std::int64_t>()});
    }
    return spec;
  }
  if (kind == "catalog") return CatalogRef{j.at("name").get<std::string>()};
  if (kind == "compound") {
    return CompoundRecipe{j.at("pattern").get<std::string>(),
                          j.at("base").get<std::string>(),
                          int_from_json(j.at("step"))};
  }
  throw Error(Errc::parse, "unknown provenance kind '" + kind + "'");
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string r_text(const SpectralProfile& p) {
  return p.r_index ? p.r_index->str() : format_sig6(p.r_approx);
}

// Returns (base, levels) when n = base^levels for base 3 or 4, levels >= 2.
std::pair<std::size_t, std::size_t> block_scales(std::size_t n) {
  for (std::size_t base : {3u, 4u}) {
    std::size_t levels = 0;
    std::size_t v = n;
    while (v > 1 && v % base == 0) {
      v /= base;
      ++levels;
    }
    if (v == 1 && levels >= 2) return {base, levels};
  }
  return {0, 0};
}

// Coarsest sub-square scale (1 = finest) whose boundary falls before index i.
std::size_t boundary_level(std::size_t i, std::size_t base, std::size_t levels) {
  if (base == 0 || i == 0) return 0;
  std::size_t level = 0;
  std::size_t span = base;
  for (std::size_t k = 1; k < levels; ++k, span *= base)
    if (i % span == 0) level = k;
  return level;
}

}  // namespace

std::string render_json(const SquareDocument& doc) {
  json j;
  j["order"] = doc.square.order();
  json elements = json::array();
  for (const BigInt& v : doc.square.entries()) elements.push_back(int_to_json(v));
  j["elements"] = std::move(elements);
  if (doc.provenance) j["provenance"] = provenance_to_json(*doc.provenance);
  return j.dump() + "\n";
}

SquareDocument parse_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::parse, std::string("invalid JSON: ") + e.what());
  }
  try {
    const auto order = j.at("order").get<std::int64_t>();
    if (order <= 0) throw Error(Errc::parse, "order must be >= 1");
    const auto& elements = j.at("elements");
    if (!elements.is_array())
      throw Error(Errc::parse, "\"elements\" must be an array");
    const auto n = static_cast<std::size_t>(order);
    if (elements.size() != n * n) {
      throw Error(Errc::parse, "expected " + std::to_string(n * n) +
                                   " elements, got " +
                                   std::to_string(elements.size()));
    }
    std::vector<BigInt> entries;
    entries.reserve(n * n);
    for (const auto& e : elements) entries.push_back(int_from_json(e));
    SquareDocument doc{IntSquareMatrix(n, std::move(entries)), std::nullopt};
    if (j.contains("provenance"))
      doc.provenance = provenance_from_json(j.at("provenance"));
    return doc;
  } catch (const json::exception& e) {
    throw Error(Errc::parse, std::string("malformed square document: ") + e.what());
  }
}

SquareDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string render_csv(const IntSquareMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) os << (j ? "," : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

std::string render_pretty(const IntSquareMatrix& m) {
  const std::size_t n = m.order();
  std::size_t width = 1;
  for (const BigInt& v : m.entries()) width = std::max(width, v.str().size());
  const auto [base, levels] = block_scales(n);

  std::ostringstream os;
  for (std::size_t i = 0; i < n; ++i) {
    std::string line;
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) {
        switch (boundary_level(j, base, levels)) {
          case 0: line += ' '; break;
          case 1: line += " | "; break;
          default: line += " || "; break;
        }
      }
      const std::string cell = m(i, j).str();
      line += std::string(width - cell.size(), ' ') + cell;
    }
    if (const auto rule = boundary_level(i, base, levels); rule > 0)
      os << std::string(line.size(), rule == 1 ? '-' : '=') << '\n';
    os << line << '\n';
  }
  return os.str();
}

std::vector<Couple> parse_couples(std::string_view text) {
  std::vector<Couple> out;
  auto parse_int = [&](std::string_view tok) {
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(Errc::parse, "bad couple member '" + std::string(tok) + "'");
    return v;
  };
  if (text.empty()) throw Error(Errc::parse, "empty couple list");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(';', pos), text.size());
    const std::string_view item = text.substr(pos, end - pos);
    const std::size_t comma = item.find(',');
    if (comma == std::string_view::npos ||
        item.find(',', comma + 1) != std::string_view::npos)
      throw Error(Errc::parse, "a couple needs exactly two members: '" +
                                   std::string(item) + "'");
    out.push_back({parse_int(item.substr(0, comma)),
                   parse_int(item.substr(comma + 1))});
    pos = end + 1;
  }
  return out;
}

std::string format_sig6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

double rank_tolerance_from_env() {
  if (const char* env = std::getenv("CMS_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0) return v;
  }
  return kDefaultRankTolerance;
}

AnalysisReport analyze(std::string name, const IntSquareMatrix& m,
                       const std::optional<FriersonSpec>& spec,
                       double rank_tol) {
  AnalysisReport r;
  r.name = std::move(name);
  r.properties = analyze_properties(m);
  r.spectrum = singular_values_numeric(m, rank_tol);
  if (spec) {
    const auto closed = closed_form_svs(*spec, rank_tol);
    r.spectrum.sigma_sq_exact = closed.sigma_sq_exact;
    r.spectrum.r_index = closed.r_index;
    r.spectrum.r_approx = closed.r_approx;
  }
  r.measures = entropy_compression(r.spectrum.sigmas, m.order());
  return r;
}

std::string render_analysis_json(const AnalysisReport& r) {
  const auto& p = r.properties;
  json props = {{"order", p.order},
                {"is_magic", p.is_magic},
                {"is_natural", p.is_natural},
                {"is_associative", p.is_associative},
                {"is_pandiagonal", p.is_pandiagonal},
                {"is_ultramagic", p.is_ultramagic}};
  props["magic_constant"] =
      p.magic_constant ? int_to_json(*p.magic_constant) : json(nullptr);
  auto ints = [](const std::vector<BigInt>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(int_to_json(x));
    return a;
  };
  props["line_sums"] = {{"rows", ints(p.sums.rows)},
                        {"columns", ints(p.sums.columns)},
                        {"diagonal", int_to_json(p.sums.diagonal)},
                        {"anti_diagonal", int_to_json(p.sums.anti_diagonal)},
                        {"broken_diagonals", ints(p.sums.broken_diagonals)},
                        {"broken_anti_diagonals",
                         ints(p.sums.broken_anti_diagonals)}};

  const auto& s = r.spectrum;
  json spectrum = {{"sigmas", s.sigmas},
                   {"rank", s.rank},
                   {"L", int_to_json(s.l_index)},
                   {"R", s.r_index ? int_to_json(*s.r_index) : json(s.r_approx)},
                   {"R_exact", s.r_index.has_value()},
                   {"sigma_total", s.sigma_total()}};
  spectrum["sigma_sq_exact"] =
      s.sigma_sq_exact ? ints(*s.sigma_sq_exact) : json(nullptr);

  json measures = {{"normalized", r.measures.normalized},
                   {"H", r.measures.entropy},
                   {"C", r.measures.compression}};
  json j = {{"name", r.name},
            {"properties", props},
            {"spectrum", spectrum},
            {"measures", measures}};
  return j.dump(2) + "\n";
}

std::string analysis_csv_header() {
  return "name,n,S,rank,H,C,R,L,is_magic,is_associative,is_pandiagonal\n";
}

std::string render_analysis_csv_row(const AnalysisReport& r) {
  const auto& p = r.properties;
  std::ostringstream os;
  os << csv_quote(r.name) << ',' << p.order << ','
     << (p.magic_constant ? p.magic_constant->str() : std::string()) << ','
     << r.spectrum.rank << ',' << format_sig6(r.measures.entropy) << ','
     << format_sig6(r.measures.compression) << ',' << r_text(r.spectrum) << ','
     << r.spectrum.l_index << ',' << bool_str(p.is_magic) << ','
     << bool_str(p.is_associative) << ',' << bool_str(p.is_pandiagonal) << '\n';
  return os.str();
}

std::string render_clan_table_csv(const std::vector<ClanRow>& rows) {
  std::ostringstream os;
  os << "position,clan,H,C,R\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << i + 1 << ',' << csv_quote(rows[i].clan.to_string()) << ','
       << format_sig6(rows[i].entropy) << ','
       << format_sig6(rows[i].compression) << ',' << rows[i].r_index << '\n';
  }
  return os.str();
}

std::string render_clan_table_json(const std::vector<ClanRow>& rows) {
  json a = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    json couples = json::array();
    for (const auto& c : rows[i].clan.couples) couples.push_back({c.a, c.b});
    a.push_back({{"position", i + 1},
                 {"clan", couples},
                 {"H", rows[i].entropy},
                 {"C", rows[i].compression},
                 {"R", int_to_json(rows[i].r_index)},
                 {"sigmas", rows[i].spectrum.sigmas}});
  }
  return a.dump(2) + "\n";
}

std::string render_counts_csv(const std::vector<CountRow>& rows) {
  std::ostringstream os;
  os << "l,n,first_couples,num_squares,num_clans,variant_exponent,variant_count\n";
  for (const auto& r : rows) {
    os << r.level << ',' << r.order << ',' << r.first_couples << ','
       << r.num_squares << ',' << r.num_clans << ',' << r.variant_exponent
       << ','
       << (r.variant_count ? r.variant_count->str()
                           : "8^" + r.variant_exponent.str())
       << '\n';
  }
  return os.str();
}

std::string render_series_csv(const std::vector<SeriesRow>& rows) {
  std::ostringstream os;
  os << "l,n,sigma1,sigma_total,H,C,rank,tail_over_sqrt3\n";
  for (const auto& r : rows) {
    std::string tail;
    for (const auto& t : r.tail_over_sqrt3)
      tail += (tail.empty() ? "" : ";") + t.str();
    os << r.level << ',' << r.order << ',' << r.sigma1 << ','
       << format_sig6(r.sigma_total) << ',' << format_sig6(r.entropy) << ','
       << format_sig6(r.compression) << ',' << r.rank << ',' << tail << '\n';
  }
  return os.str();
}

}  // namespace cms
