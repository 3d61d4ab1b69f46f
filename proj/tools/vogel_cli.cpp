// vogel: command-line front end for the Diophantine/Vogel/McKay pipeline.
// Exit codes: 0 success, 1 invalid input, 2 internal consistency failure.

#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vogel/report_format.hpp"

namespace {

using namespace vogel;
using report::Format;
using report::Json;
using report::TextTable;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitConsistency = 2;

struct Options {
  std::string format = "plain";
  std::string out;
  bool verbose = false;
  std::string tables;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TextTable key_value(const std::vector<std::pair<std::string, std::string>>& kv) {
  TextTable t;
  t.headers = {"field", "value"};
  for (const auto& [k, v] : kv) t.rows.push_back({k, v});
  return t;
}

std::string point_str(const std::optional<report::Point>& p) {
  return p ? "(" + std::to_string((*p)[0]) + "," + std::to_string((*p)[1]) + "," + std::to_string((*p)[2]) + ")"
           : "";
}

TextTable vogel_text(const report::VogelRecord& r, bool verbose) {
  std::vector<std::pair<std::string, std::string>> kv = {{"k n m", report::triple_str(r.knm)}, {"kind", r.kind}};
  if (r.family_parameter) kv.emplace_back("family parameter", std::to_string(*r.family_parameter));
  if (r.family) kv.emplace_back("vogel point", *r.family);
  if (r.abg) kv.emplace_back("alpha beta gamma", point_str(r.abg));
  if (r.t) kv.emplace_back("t", std::to_string(*r.t));
  if (r.dim) kv.emplace_back("dim", std::to_string(*r.dim));
  if (r.regular) kv.emplace_back("regular", *r.regular ? "yes" : "no");
  if (r.rank) kv.emplace_back("rank", std::to_string(*r.rank));
  kv.emplace_back("algebra", r.algebra);
  kv.emplace_back("identifications", report::detail::join(r.identities, "; "));
  if (r.geometry) {
    const auto& g = *r.geometry;
    kv.emplace_back("surface", g.surface);
    kv.emplace_back("map", g.primary.name + " V=" + std::to_string(g.primary.vertices) +
                               " E=" + std::to_string(g.primary.edges) + " F=" + std::to_string(g.primary.faces) +
                               " chi=" + std::to_string(g.primary.euler));
    if (g.dual) kv.emplace_back("dual", g.dual->name);
    kv.emplace_back("pair", g.pair_name);
    if (g.regular_map) kv.emplace_back("regular map", *g.regular_map ? "yes" : "no");
    if (!g.note.empty()) kv.emplace_back("note", g.note);
  }
  if (verbose && r.expansion) {
    kv.emplace_back("scale", r.expansion->scale_note);
    std::string terms;
    for (const auto& [e, c] : r.expansion->coefficients)
      terms += (terms.empty() ? "" : " ") + std::to_string(c) + "*q^" + std::to_string(e);
    kv.emplace_back("expansion", terms);
  }
  return key_value(kv);
}

TextTable vogel_csv(const report::VogelRecord& r) {
  TextTable t;
  t.headers = {"k", "n", "m", "alpha", "beta", "gamma", "dim", "rank", "algebra", "kind", "regular", "surface", "pair"};
  auto num = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); };
  std::vector<std::string> row = {std::to_string(r.knm[0]), std::to_string(r.knm[1]), std::to_string(r.knm[2])};
  for (int i = 0; i < 3; ++i) row.push_back(r.abg ? std::to_string((*r.abg)[i]) : "");
  row.push_back(num(r.dim));
  row.push_back(num(r.rank));
  row.push_back(r.algebra);
  row.push_back(r.kind);
  row.push_back(r.regular ? (*r.regular ? "yes" : "no") : "");
  row.push_back(r.geometry ? r.geometry->surface : "");
  row.push_back(r.geometry ? r.geometry->pair_name : "");
  t.rows.push_back(std::move(row));
  return t;
}

TextTable mckay_text(const report::McKayRecord& r, Format f) {
  if (f == Format::Csv) {
    TextTable t;
    t.headers = {"group", "order", "classes", "degrees", "affine", "finite"};
    std::vector<std::string> degs;
    for (auto d : r.degrees) degs.push_back(std::to_string(d));
    t.rows.push_back({r.group, std::to_string(r.order), std::to_string(r.class_labels.size()),
                      report::detail::join(degs, " "), r.affine, r.finite});
    return t;
  }
  TextTable t = report::mckay_table(r);
  std::vector<std::string> degs;
  for (auto d : r.degrees) degs.push_back(std::to_string(d));
  t.footnotes = {"group " + r.group + ", order " + std::to_string(r.order) + ", " +
                     std::to_string(r.class_labels.size()) + " classes",
                 "degrees " + report::detail::join(degs, " "),
                 "McKay graph " + r.affine + " -> " + r.finite};
  return t;
}

dio::Triple triple(const std::vector<std::int64_t>& v) { return {v.at(0), v.at(1), v.at(2)}; }

int selftest(std::ostream& os) {
  int failures = 0;
  auto check = [&](const std::string& name, const std::function<bool()>& fn) {
    bool ok = false;
    std::string why;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      why = e.what();
    }
    os << (ok ? "ok    " : "FAIL  ") << name << (why.empty() ? "" : ": " + why) << '\n';
    if (!ok) ++failures;
  };
  check("character data checksum and layout",
        [] { return mckay::detail::parse_character_data(mckay::kCharacterTables).size() == 3; });
  check("isolated solutions at bound 60", [] { return dio::isolated_solutions(60).size() == 15; });
  check("isolated table dim and rank", [] {
    for (const auto& row : isolated_table()) {
      const auto r = report::vogel_record(row.knm, false);
      if (r.dim != row.dim || r.rank != row.rank) return false;
    }
    return true;
  });
  check("exceptional McKay graphs", [] {
    return report::mckay_record(mckay::GroupFamily::tetrahedral()).finite == "E_6" &&
           report::mckay_record(mckay::GroupFamily::octahedral()).finite == "E_7" &&
           report::mckay_record(mckay::GroupFamily::icosahedral()).finite == "E_8";
  });
  check("cyclic and binary dihedral McKay graphs", [] {
    for (int n = 1; n <= 12; ++n)
      if (report::mckay_record(mckay::GroupFamily::cyclic(n)).finite != "A_" + std::to_string(n - 1)) return false;
    for (int n = 2; n <= 6; ++n)
      if (report::mckay_record(mckay::GroupFamily::binary_dihedral(n)).finite != "D_" + std::to_string(n + 2))
        return false;
    return true;
  });
  check("comparison has one coinciding row", [] {
    const auto c = report::compare();
    return std::count_if(c.rows.begin(), c.rows.end(), [](const auto& r) { return r.coincide; }) == 1;
  });
  os << (failures ? "selftest: " + std::to_string(failures) + " failure(s)" : std::string("selftest: all passed"))
     << '\n';
  return failures ? kExitConsistency : kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Diophantine classification, Vogel plane and McKay correspondence"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"plain", "csv", "json"}));
  app.add_option("--out", opt.out, "Write output to this file instead of stdout");
  app.add_flag("--verbose", opt.verbose, "Include raw character exponents (vogel) and extra detail");

  std::string equation = "main";
  std::int64_t bound = 50;
  bool isolated = false, families = false;
  auto* solve = app.add_subcommand("solve", "Enumerate solutions of an equation within a bound");
  solve->add_option("equation", equation, "main, pattern1..pattern7");
  solve->add_option("--bound", bound, "max |k|,|n|,|m|");
  solve->add_flag("--isolated", isolated, "Isolated solutions only (main equation)");
  solve->add_flag("--families", families, "Family members only, zeros included (main equation)");

  std::vector<std::int64_t> knm;
  auto* vogel_cmd = app.add_subcommand("vogel", "Vogel point, dimension, rank and identification of a solution");
  vogel_cmd->add_option("knm", knm, "k n m")->expected(3)->required();

  std::vector<std::string> spec;
  auto* mckay_cmd = app.add_subcommand("mckay", "McKay graph of a finite subgroup of SU(2)");
  mckay_cmd->add_option("--tables", opt.tables, "Character-table asset to load instead of the embedded copy");
  mckay_cmd->add_option("family", spec, "2T | 2O | 2I | C <N> | BD <n> (order 4n)")->required()->expected(1, 2);

  std::vector<std::int64_t> geo;
  auto* geometry_cmd = app.add_subcommand("geometry", "Polyhedral-map reading of a solution");
  geometry_cmd->add_option("knm", geo, "k n m")->expected(3)->required();

  std::string table = "comparison";
  auto* compare_cmd = app.add_subcommand("compare", "McKay route versus Diophantine route");
  compare_cmd->add_option("--table", table, "comparison, series or isolated")
      ->check(CLI::IsMember({"comparison", "series", "isolated"}));

  auto* selftest_cmd = app.add_subcommand("selftest", "Run internal consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  const Format format = report::parse_format(opt.format);
  std::ostringstream os;

  if (*solve) {
    const auto rows = report::solve(equation, bound, isolated, families);
    const Json doc = report::document("solve", rows);
    report::render(os, format, report::solution_table(rows), doc);
  } else if (*vogel_cmd) {
    const auto r = report::vogel_record(triple(knm), opt.verbose);
    const Json doc = report::document("vogel", std::vector{r});
    report::render(os, format, format == Format::Csv ? vogel_csv(r) : vogel_text(r, opt.verbose), doc);
  } else if (*mckay_cmd) {
    std::string joined;
    for (const auto& s : spec) joined += s;
    const auto family = mckay::GroupFamily::parse(joined);
    const std::string tables = opt.tables.empty() ? std::string(mckay::kCharacterTables) : read_file(opt.tables);
    const auto r = report::mckay_record(family, tables);
    report::render(os, format, mckay_text(r, format), report::document("mckay", std::vector{r}));
  } else if (*geometry_cmd) {
    const auto r = report::geometry_record(triple(geo));
    TextTable t = report::geometry_table(r);
    if (format == Format::Csv) t.footnotes.clear();
    report::render(os, format, t, report::document("geometry", std::vector{r}));
  } else if (*compare_cmd) {
    if (table == "comparison") {
      const auto c = report::compare();
      Json doc = report::document("compare", c.rows);
      doc["footnotes"] = c.footnotes;
      TextTable t = report::comparison_table(c);
      if (format == Format::Csv) t.footnotes.clear();
      report::render(os, format, t, doc);
    } else if (table == "series") {
      const auto rows = report::series_table();
      report::render(os, format, report::series_text_table(rows), report::document("compare", rows));
    } else {
      const auto rows = report::solve("main", 50, true, false);
      report::render(os, format, report::solution_table(rows), report::document("compare", rows));
    }
  } else if (*selftest_cmd) {
    const int code = selftest(os);
    std::cout << os.str();
    return code;
  }

  if (opt.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(opt.out);
    if (!f) throw InputError("cannot open '" + opt.out + "' for writing");
    f << os.str();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const vogel::ConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const vogel::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const vogel::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitConsistency;
  }
}
