#pragma once

// Printed tables kept verbatim under tests/golden, and the comparison of their
// cells with computed output. Cells are compared after a canonical equivalence
// mapping; disagreements must be listed in expected_diffs.tsv.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "vogel/report.hpp"

namespace golden {

inline std::string dir() { return std::string(VOGEL_SOURCE_DIR) + "/tests/golden/"; }

inline std::string read(const std::string& name) {
  std::ifstream in(dir() + name, std::ios::binary);
  if (!in) throw std::runtime_error("missing golden file " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// Whitespace runs collapse to one space.
inline std::string squeeze(const std::string& s) {
  std::istringstream in(s);
  std::string w, out;
  while (in >> w) out += (out.empty() ? "" : " ") + w;
  return out;
}

/// Canonical equivalence: case, TeX markup, spacing, subscripts and
/// parentheses are ignored; ';' and ',' are the same separator. So
/// "$\mathfrak{e}_8$" ~ "e8", "$SO(8)$" ~ "so(8)", "D_{2,1,\lambda}" ~ "D(2,1;lambda)".
inline std::string normalize(std::string s) {
  for (std::size_t p; (p = s.find("\\mathfrak")) != std::string::npos;) s.erase(p, 9);
  std::string out;
  for (char c : s) {
    if (std::string_view("$ \t\\{}_()").find(c) != std::string_view::npos) continue;
    out += c == ';' ? ',' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

struct Row {
  std::vector<std::string> cells;
};

/// Rows of a tabular body. A block is a run of rows between \hline rules.
using Block = std::vector<Row>;

inline std::vector<Block> parse_tabular(std::string text) {
  for (std::size_t p; (p = text.find("\\cline{")) != std::string::npos;) text.erase(p, text.find('}', p) - p + 1);
  std::vector<Block> blocks(1);
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find("\\\\", pos);
    if (end == std::string::npos) end = text.size();
    std::string piece = trim(text.substr(pos, end - pos));
    pos = end + 2;
    if (piece.rfind("\\hline", 0) == 0) {
      piece = trim(piece.substr(6));
      if (!blocks.back().empty()) blocks.emplace_back();
    }
    if (piece.empty()) continue;
    Row row;
    std::stringstream ss(piece);
    for (std::string cell; std::getline(ss, cell, '&');) row.cells.push_back(trim(cell));
    if (piece.back() == '&') row.cells.emplace_back();
    blocks.back().push_back(std::move(row));
  }
  if (blocks.back().empty()) blocks.pop_back();
  return blocks;
}

struct Diff {
  std::string table, row, column, printed, computed;
  auto key() const { return std::tie(table, row, column, printed, computed); }
  friend bool operator<(const Diff& a, const Diff& b) { return a.key() < b.key(); }
};

inline std::vector<Diff> expected_diffs() {
  std::vector<Diff> out;
  std::stringstream ss(read("expected_diffs.tsv"));
  for (std::string line; std::getline(ss, line);) {
    if (trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, '\t');) f.push_back(cell);
    if (f.size() < 5) throw std::runtime_error("malformed expected_diffs line: " + line);
    out.push_back({f[0], f[1], f[2], f[3], f[4]});
  }
  return out;
}

/// Collects cell disagreements, then reconciles them with expected_diffs.tsv.
class Checker {
 public:
  void cell(const std::string& table, const std::string& row, const std::string& column, const std::string& printed,
            const std::vector<std::string>& computed) {
    const auto want = normalize(printed);
    for (const auto& c : computed)
      if (normalize(c) == want) return;
    found_.insert({table, row, column, printed, computed.empty() ? std::string() : computed.front()});
  }
  void cell(const std::string& table, const std::string& row, const std::string& column, const std::string& printed,
            const std::string& computed) {
    cell(table, row, column, printed, std::vector<std::string>{computed});
  }
  void problem(const std::string& what) { problems_.push_back(what); }
  void checked(const std::string& table) { tables_.insert(table); }

  /// Unlisted disagreements and listed ones that no longer occur.
  std::vector<std::string> problems() const {
    auto out = problems_;
    std::set<Diff> listed;
    for (const auto& d : expected_diffs())
      if (tables_.count(d.table)) listed.insert(d);
    for (const auto& d : found_)
      if (!listed.count(d))
        out.push_back("table " + d.table + " row " + d.row + " column " + d.column + ": printed '" + d.printed +
                      "', computed '" + d.computed + "'");
    for (const auto& d : listed)
      if (!found_.count(d))
        out.push_back("stale expected diff: table " + d.table + " row " + d.row + " column " + d.column);
    return out;
  }

  std::size_t diff_count() const { return found_.size(); }

 private:
  std::set<Diff> found_;
  std::set<std::string> tables_;
  std::vector<std::string> problems_;
};

/// Non-empty cells of column `c` across the rows of a block.
inline std::vector<std::string> column(const Block& b, std::size_t c) {
  std::vector<std::string> out;
  for (const auto& r : b)
    if (c < r.cells.size() && !r.cells[c].empty()) out.push_back(r.cells[c]);
  return out;
}

inline std::vector<std::string> sorted_normal(const std::vector<std::string>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(normalize(s));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string w; std::getline(ss, w, sep);)
    if (!w.empty()) out.push_back(w);
  return out;
}

inline std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
  return out;
}

inline void check_comparison(Checker& chk, const vogel::report::ComparisonReport& report) {
  chk.checked("comparison");
  const auto blocks = parse_tabular(read("comparison.tex"));
  if (blocks.size() != report.rows.size()) {
    chk.problem("comparison table has " + std::to_string(blocks.size()) + " printed rows, " +
                std::to_string(report.rows.size()) + " computed");
    return;
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    const auto& r = report.rows[i];
    const std::string key = b.front().cells.at(0);
    const auto sol = column(b, 0);
    if (sorted_normal(sol) != sorted_normal(r.solutions)) chk.cell("comparison", key, "solutions", join(sol), join(r.solutions));
    const auto plat = column(b, 1);
    if (sorted_normal(plat) != sorted_normal(split(r.platonic, '/')))
      chk.cell("comparison", key, "platonic", join(plat), r.platonic);
    for (std::size_t c : {2u, 3u}) {
      const auto printed = column(b, c);
      const auto& computed = c == 2 ? r.subgroups : r.mckay;
      const std::string name = c == 2 ? "subgroups" : "mckay";
      if (printed.size() != computed.size()) {
        chk.problem("comparison table row " + key + " column " + name + ": " + std::to_string(printed.size()) +
                    " printed cells, " + std::to_string(computed.size()) + " computed");
        continue;
      }
      for (std::size_t j = 0; j < printed.size(); ++j) chk.cell("comparison", key, name, printed[j], computed[j]);
    }
    const auto dioph = column(b, 4);
    std::vector<std::string> alternatives;
    if (r.diophantine_cartan) alternatives.push_back(*r.diophantine_cartan);
    alternatives.push_back(r.diophantine);
    if (dioph.size() != 1) chk.problem("comparison table row " + key + ": expected one Diophantine cell");
    else chk.cell("comparison", key, "diophantine", dioph[0], alternatives);
  }
}

inline void check_series(Checker& chk, const std::vector<vogel::report::SeriesRow>& rows) {
  chk.checked("series");
  const auto blocks = parse_tabular(read("series.tex"));
  if (blocks.size() != rows.size()) {
    chk.problem("series table row count differs");
    return;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& cells = blocks[i].front().cells;
    if (cells.size() != 3) {
      chk.problem("series table row " + std::to_string(i) + " does not have three cells");
      continue;
    }
    chk.cell("series", cells[0], "algebra", cells[0], rows[i].algebra);
    chk.cell("series", cells[0], "abg", cells[1], rows[i].abg);
    chk.cell("series", cells[0], "knm", cells[2], rows[i].knm);
  }
}

inline std::vector<std::int64_t> ints(const std::string& s) {
  std::vector<std::int64_t> out;
  std::istringstream in(s);
  for (std::int64_t v; in >> v;) out.push_back(v);
  return out;
}

inline std::string ints_str(const std::vector<std::int64_t>& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

/// Rows must come in the printed order. The printed (alpha,beta,gamma) only has
/// to be projectively equivalent to the computed point.
inline void check_isolated(Checker& chk, const std::vector<vogel::report::SolutionRecord>& rows) {
  chk.checked("isolated");
  const auto blocks = parse_tabular(read("isolated.tex"));
  std::vector<Row> printed;
  for (const auto& b : blocks) printed.insert(printed.end(), b.begin(), b.end());
  if (printed.size() != rows.size()) {
    chk.problem("isolated table has " + std::to_string(printed.size()) + " printed rows, " + std::to_string(rows.size()) +
                " computed");
    return;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& cells = printed[i].cells;
    const auto& r = rows[i];
    if (cells.size() != 5) {
      chk.problem("isolated table row " + std::to_string(i) + " does not have five cells");
      continue;
    }
    const std::string key = squeeze(cells[0]);
    chk.cell("isolated", key, "knm", key, ints_str({r.knm[0], r.knm[1], r.knm[2]}));
    const auto abg = ints(cells[1]);
    if (abg.size() != 3 || !r.abg) {
      chk.problem("isolated table row " + key + ": missing alpha beta gamma");
    } else {
      using vogel::BigInt;
      const auto p = vogel::VogelPoint::canonicalize({BigInt(abg[0]), BigInt(abg[1]), BigInt(abg[2])});
      const auto q = vogel::VogelPoint::canonicalize({BigInt((*r.abg)[0]), BigInt((*r.abg)[1]), BigInt((*r.abg)[2])});
      if (!(p == q)) chk.cell("isolated", key, "abg", squeeze(cells[1]), ints_str({(*r.abg)[0], (*r.abg)[1], (*r.abg)[2]}));
    }
    chk.cell("isolated", key, "dim", cells[2], r.dim ? std::to_string(*r.dim) : "");
    chk.cell("isolated", key, "rank", cells[3], r.rank ? std::to_string(*r.rank) : "");
    chk.cell("isolated", key, "algebra", cells[4], r.algebra.value_or(""));
  }
}

/// Isolated solutions in printed order, computed from scratch.
inline std::vector<vogel::report::SolutionRecord> computed_isolated() {
  auto rows = vogel::report::solve("main", 60, true, false);
  vogel::report::sort_isolated_order(rows);
  return rows;
}

}  // namespace golden
