#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vogel/report.hpp"

namespace vogel::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Format { Plain, Csv, Json };

inline Format parse_format(std::string_view s) {
  if (s == "plain") return Format::Plain;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw ParseError("unknown format '" + std::string(s) + "' (plain, csv, json)");
}

namespace detail {

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> get_opt(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->template get<T>();
}

}  // namespace detail

// JSON mappings; field names are documented in docs/json_schema.md.

inline void to_json(Json& j, const SolutionRecord& r) {
  j = Json{{"equation", r.equation},
           {"knm", r.knm},
           {"kind", detail::opt(r.kind)},
           {"family_parameter", detail::opt(r.family_parameter)},
           {"abg", detail::opt(r.abg)},
           {"family", detail::opt(r.family)},
           {"dim", detail::opt(r.dim)},
           {"rank", detail::opt(r.rank)},
           {"regular", detail::opt(r.regular)},
           {"algebra", detail::opt(r.algebra)}};
}

inline void from_json(const Json& j, SolutionRecord& r) {
  r.equation = j.at("equation").get<std::string>();
  r.knm = j.at("knm").get<dio::Triple>();
  r.kind = detail::get_opt<std::string>(j, "kind");
  r.family_parameter = detail::get_opt<std::int64_t>(j, "family_parameter");
  r.abg = detail::get_opt<Point>(j, "abg");
  r.family = detail::get_opt<std::string>(j, "family");
  r.dim = detail::get_opt<std::int64_t>(j, "dim");
  r.rank = detail::get_opt<std::int64_t>(j, "rank");
  r.regular = detail::get_opt<bool>(j, "regular");
  r.algebra = detail::get_opt<std::string>(j, "algebra");
}

inline void to_json(Json& j, const MapRecord& r) {
  j = Json{{"p", r.p},         {"q", r.q},         {"vertices", r.vertices}, {"edges", r.edges},
           {"faces", r.faces}, {"euler", r.euler}, {"name", r.name}};
}

inline void from_json(const Json& j, MapRecord& r) {
  r.p = j.at("p").get<std::int64_t>();
  r.q = j.at("q").get<std::int64_t>();
  r.vertices = j.at("vertices").get<std::int64_t>();
  r.edges = j.at("edges").get<std::int64_t>();
  r.faces = j.at("faces").get<std::int64_t>();
  r.euler = j.at("euler").get<std::int64_t>();
  r.name = j.at("name").get<std::string>();
}

inline void to_json(Json& j, const GeometryRecord& r) {
  j = Json{{"knm", r.knm},
           {"surface", r.surface},
           {"primary", r.primary},
           {"dual", detail::opt(r.dual)},
           {"pair_name", r.pair_name},
           {"y_label", detail::opt(r.y_label)},
           {"regular_map", detail::opt(r.regular_map)},
           {"note", r.note}};
}

inline void from_json(const Json& j, GeometryRecord& r) {
  r.knm = j.at("knm").get<dio::Triple>();
  r.surface = j.at("surface").get<std::string>();
  r.primary = j.at("primary").get<MapRecord>();
  r.dual = detail::get_opt<MapRecord>(j, "dual");
  r.pair_name = j.at("pair_name").get<std::string>();
  r.y_label = detail::get_opt<std::string>(j, "y_label");
  r.regular_map = detail::get_opt<bool>(j, "regular_map");
  r.note = j.at("note").get<std::string>();
}

inline void to_json(Json& j, const ExpansionRecord& r) {
  Json coeffs = Json::array();
  for (const auto& [e, c] : r.coefficients) coeffs.push_back(Json::array({e, c}));
  j = Json{{"scale", r.scale}, {"scale_note", r.scale_note}, {"coefficients", coeffs}};
}

inline void from_json(const Json& j, ExpansionRecord& r) {
  r.scale = j.at("scale").get<Point>();
  r.scale_note = j.at("scale_note").get<std::string>();
  r.coefficients.clear();
  for (const auto& pair : j.at("coefficients"))
    r.coefficients.emplace_back(pair.at(0).get<std::int64_t>(), pair.at(1).get<std::int64_t>());
}

inline void to_json(Json& j, const VogelRecord& r) {
  j = Json{{"knm", r.knm},
           {"kind", r.kind},
           {"family_parameter", detail::opt(r.family_parameter)},
           {"abg", detail::opt(r.abg)},
           {"t", detail::opt(r.t)},
           {"family", detail::opt(r.family)},
           {"dim", detail::opt(r.dim)},
           {"regular", detail::opt(r.regular)},
           {"rank", detail::opt(r.rank)},
           {"algebra", r.algebra},
           {"identities", r.identities},
           {"geometry", detail::opt(r.geometry)}};
  if (r.expansion) j["expansion"] = *r.expansion;
}

inline void from_json(const Json& j, VogelRecord& r) {
  r.knm = j.at("knm").get<dio::Triple>();
  r.kind = j.at("kind").get<std::string>();
  r.family_parameter = detail::get_opt<std::int64_t>(j, "family_parameter");
  r.abg = detail::get_opt<Point>(j, "abg");
  r.t = detail::get_opt<std::int64_t>(j, "t");
  r.family = detail::get_opt<std::string>(j, "family");
  r.dim = detail::get_opt<std::int64_t>(j, "dim");
  r.regular = detail::get_opt<bool>(j, "regular");
  r.rank = detail::get_opt<std::int64_t>(j, "rank");
  r.algebra = j.at("algebra").get<std::string>();
  r.identities = j.at("identities").get<std::vector<std::string>>();
  r.geometry = detail::get_opt<GeometryRecord>(j, "geometry");
  r.expansion = detail::get_opt<ExpansionRecord>(j, "expansion");
}

inline void to_json(Json& j, const McKayRecord& r) {
  j = Json{{"group", r.group},       {"order", r.order},       {"class_labels", r.class_labels},
           {"class_sizes", r.class_sizes}, {"irreps", r.irreps}, {"degrees", r.degrees},
           {"adjacency", r.adjacency}, {"affine", r.affine},     {"finite", r.finite}};
}

inline void from_json(const Json& j, McKayRecord& r) {
  r.group = j.at("group").get<std::string>();
  r.order = j.at("order").get<std::int64_t>();
  r.class_labels = j.at("class_labels").get<std::vector<std::string>>();
  r.class_sizes = j.at("class_sizes").get<std::vector<std::int64_t>>();
  r.irreps = j.at("irreps").get<std::vector<std::string>>();
  r.degrees = j.at("degrees").get<std::vector<std::int64_t>>();
  r.adjacency = j.at("adjacency").get<std::vector<std::vector<std::int64_t>>>();
  r.affine = j.at("affine").get<std::string>();
  r.finite = j.at("finite").get<std::string>();
}

inline void to_json(Json& j, const ComparisonRow& r) {
  j = Json{{"solutions", r.solutions},
           {"platonic", r.platonic},
           {"subgroups", r.subgroups},
           {"mckay", r.mckay},
           {"diophantine", r.diophantine},
           {"diophantine_cartan", detail::opt(r.diophantine_cartan)},
           {"coincide", r.coincide},
           {"partial_matches", r.partial_matches}};
}

inline void from_json(const Json& j, ComparisonRow& r) {
  r.solutions = j.at("solutions").get<std::vector<std::string>>();
  r.platonic = j.at("platonic").get<std::string>();
  r.subgroups = j.at("subgroups").get<std::vector<std::string>>();
  r.mckay = j.at("mckay").get<std::vector<std::string>>();
  r.diophantine = j.at("diophantine").get<std::string>();
  r.diophantine_cartan = detail::get_opt<std::string>(j, "diophantine_cartan");
  r.coincide = j.at("coincide").get<bool>();
  r.partial_matches = j.at("partial_matches").get<std::vector<std::string>>();
}

inline void to_json(Json& j, const ComparisonReport& r) {
  j = Json{{"rows", r.rows}, {"footnotes", r.footnotes}};
}

inline void from_json(const Json& j, ComparisonReport& r) {
  r.rows = j.at("rows").get<std::vector<ComparisonRow>>();
  r.footnotes = j.at("footnotes").get<std::vector<std::string>>();
}

inline void to_json(Json& j, const SeriesRow& r) {
  j = Json{{"algebra", r.algebra}, {"abg", r.abg}, {"knm", r.knm}, {"checked", r.checked}};
}

inline void from_json(const Json& j, SeriesRow& r) {
  r.algebra = j.at("algebra").get<std::string>();
  r.abg = j.at("abg").get<std::string>();
  r.knm = j.at("knm").get<std::string>();
  r.checked = j.at("checked").get<std::vector<std::int64_t>>();
}

/// Top-level document: {"schema": 1, "command": ..., "records": [...]} plus optional footnotes.
template <class Records>
Json document(std::string_view command, const Records& records) {
  return Json{{"schema", kSchemaVersion}, {"command", command}, {"records", records}};
}

/// Rectangular text table used by the plain and CSV renderers.
struct TextTable {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> footnotes;
};

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void render_csv(std::ostream& os, const TextTable& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
    os << '\n';
  };
  line(t.headers);
  for (const auto& r : t.rows) line(r);
}

inline void render_plain(std::ostream& os, const TextTable& t) {
  std::vector<std::size_t> width(t.headers.size());
  for (std::size_t c = 0; c < width.size(); ++c) {
    width[c] = t.headers[c].size();
    for (const auto& r : t.rows) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) s += "  ";
      s += cells[c];
      if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size(), ' ');
    }
    os << s << '\n';
  };
  line(t.headers);
  std::size_t total = 0;
  for (auto w : width) total += w;
  os << std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') << '\n';
  for (const auto& r : t.rows) line(r);
  for (std::size_t i = 0; i < t.footnotes.size(); ++i) os << (i ? "" : "\n") << "[" << i + 1 << "] " << t.footnotes[i] << '\n';
}

namespace detail {

template <class T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, std::string>) return *v;
  else if constexpr (std::is_same_v<T, bool>) return *v ? "yes" : "no";
  else return std::to_string(*v);
}

inline std::string point_cell(const std::optional<Point>& p) {
  return p ? std::to_string((*p)[0]) + " " + std::to_string((*p)[1]) + " " + std::to_string((*p)[2]) : "";
}

inline std::string join(const std::vector<std::string>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(sep) : "") + v[i];
  return out;
}

}  // namespace detail

/// Column order mirrors the isolated-solution table: k n m | alpha beta gamma | Dim | Rank | Algebra, then extras.
inline TextTable solution_table(const std::vector<SolutionRecord>& rows) {
  TextTable t;
  t.headers = {"k", "n", "m", "alpha beta gamma", "dim", "rank", "algebra", "kind", "regular", "equation"};
  for (const auto& r : rows) {
    std::string abg = detail::point_cell(r.abg);
    if (r.family) abg = *r.family;
    t.rows.push_back({std::to_string(r.knm[0]), std::to_string(r.knm[1]), std::to_string(r.knm[2]), abg,
                      detail::cell(r.dim), detail::cell(r.rank), detail::cell(r.algebra), detail::cell(r.kind),
                      detail::cell(r.regular), r.equation});
  }
  return t;
}

inline TextTable mckay_table(const McKayRecord& r) {
  TextTable t;
  t.headers = {"irrep", "degree"};
  for (const auto& l : r.irreps) t.headers.push_back(l);
  for (std::size_t i = 0; i < r.irreps.size(); ++i) {
    std::vector<std::string> row{r.irreps[i], std::to_string(r.degrees[i])};
    for (auto m : r.adjacency[i]) row.push_back(std::to_string(m));
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline TextTable comparison_table(const ComparisonReport& r) {
  TextTable t;
  t.headers = {"solutions", "platonic", "subgroups", "mckay", "diophantine", "coincide", "partial_matches"};
  for (const auto& row : r.rows) {
    std::string dio = row.diophantine;
    if (row.diophantine_cartan && *row.diophantine_cartan != row.diophantine)
      dio += " (" + *row.diophantine_cartan + ")";
    t.rows.push_back({detail::join(row.solutions, " "), row.platonic, detail::join(row.subgroups, "; "),
                      detail::join(row.mckay, "; "), dio, row.coincide ? "true" : "false",
                      detail::join(row.partial_matches, "; ")});
  }
  t.footnotes = r.footnotes;
  return t;
}

inline TextTable series_text_table(const std::vector<SeriesRow>& rows) {
  TextTable t;
  t.headers = {"algebra", "alpha,beta,gamma", "k,n,m", "checked"};
  for (const auto& r : rows) {
    std::vector<std::string> checked;
    for (auto v : r.checked) checked.push_back(std::to_string(v));
    t.rows.push_back({r.algebra, r.abg, r.knm, detail::join(checked, " ")});
  }
  return t;
}

inline TextTable geometry_table(const GeometryRecord& r) {
  TextTable t;
  t.headers = {"map", "p", "q", "V", "E", "F", "chi", "surface"};
  auto add = [&](const MapRecord& m) {
    t.rows.push_back({m.name, std::to_string(m.p), std::to_string(m.q), std::to_string(m.vertices),
                      std::to_string(m.edges), std::to_string(m.faces), std::to_string(m.euler), r.surface});
  };
  add(r.primary);
  if (r.dual) add(*r.dual);
  t.footnotes.push_back("pair: " + r.pair_name);
  if (r.y_label) t.footnotes.push_back(*r.y_label + ": locally regular; regular map: " +
                                       std::string(r.regular_map.value_or(false) ? "yes" : "no"));
  if (!r.note.empty()) t.footnotes.push_back(r.note);
  return t;
}

inline void render(std::ostream& os, Format f, const TextTable& t, const Json& doc) {
  switch (f) {
    case Format::Plain: render_plain(os, t); break;
    case Format::Csv: render_csv(os, t); break;
    case Format::Json: os << doc.dump(2) << '\n'; break;
  }
}

}  // namespace vogel::report
