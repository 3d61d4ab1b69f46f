#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vogel/diophantine.hpp"
#include "vogel/mckay/graph.hpp"
#include "vogel/surface_geometry.hpp"
#include "vogel/universal_character.hpp"
#include "vogel/vogel_plane.hpp"

namespace vogel::report {

using Point = std::array<std::int64_t, 3>;

/// One enumerated solution. Vogel columns are filled for the main equation only;
/// rank and regularity only for isolated solutions.
struct SolutionRecord {
  std::string equation;
  dio::Triple knm{};
  std::optional<std::string> kind;
  std::optional<std::int64_t> family_parameter;
  std::optional<Point> abg;
  std::optional<std::string> family;
  std::optional<std::int64_t> dim;
  std::optional<std::int64_t> rank;
  std::optional<bool> regular;
  std::optional<std::string> algebra;

  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

struct MapRecord {
  std::int64_t p = 0, q = 0, vertices = 0, edges = 0, faces = 0, euler = 0;
  std::string name;

  friend bool operator==(const MapRecord&, const MapRecord&) = default;
};

struct GeometryRecord {
  dio::Triple knm{};
  std::string surface;
  MapRecord primary;
  std::optional<MapRecord> dual;
  std::string pair_name;
  std::optional<std::string> y_label;
  std::optional<bool> regular_map;
  std::string note;

  friend bool operator==(const GeometryRecord&, const GeometryRecord&) = default;
};

struct ExpansionRecord {
  Point scale{};
  std::string scale_note;
  std::vector<std::pair<std::int64_t, std::int64_t>> coefficients;  // (exponent, coefficient), ascending

  friend bool operator==(const ExpansionRecord&, const ExpansionRecord&) = default;
};

struct VogelRecord {
  dio::Triple knm{};
  std::string kind;
  std::optional<std::int64_t> family_parameter;
  std::optional<Point> abg;
  std::optional<std::int64_t> t;
  std::optional<std::string> family;
  std::optional<std::int64_t> dim;
  std::optional<bool> regular;
  std::optional<std::int64_t> rank;
  std::string algebra;
  std::vector<std::string> identities;
  std::optional<GeometryRecord> geometry;
  std::optional<ExpansionRecord> expansion;

  friend bool operator==(const VogelRecord&, const VogelRecord&) = default;
};

struct McKayRecord {
  std::string group;
  std::int64_t order = 0;
  std::vector<std::string> class_labels;
  std::vector<std::int64_t> class_sizes;
  std::vector<std::string> irreps;
  std::vector<std::int64_t> degrees;
  std::vector<std::vector<std::int64_t>> adjacency;
  std::string affine;
  std::string finite;

  friend bool operator==(const McKayRecord&, const McKayRecord&) = default;
};

struct ComparisonRow {
  std::vector<std::string> solutions;
  std::string platonic;
  std::vector<std::string> subgroups;
  std::vector<std::string> mckay;
  std::string diophantine;
  std::optional<std::string> diophantine_cartan;
  bool coincide = false;
  std::vector<std::string> partial_matches;

  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  std::vector<std::string> footnotes;

  friend bool operator==(const ComparisonReport&, const ComparisonReport&) = default;
};

struct SeriesRow {
  std::string algebra;
  std::string abg;
  std::string knm;
  std::vector<std::int64_t> checked;  // parameter values verified by computation

  friend bool operator==(const SeriesRow&, const SeriesRow&) = default;
};

inline std::string triple_str(const dio::Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

namespace detail {

inline Point to_point(const VogelPoint& p) {
  const auto& c = p.canonical();
  return {to_int64(c[0]), to_int64(c[1]), to_int64(c[2])};
}

inline std::int64_t integral(const Rational& r, const std::string& what) {
  if (!r.is_integer()) throw ConsistencyError(what + " " + r.str() + " is not an integer");
  return to_int64(r.num());
}

/// Named isolated label first, then the first family label.
inline std::string primary_label(const std::vector<AlgebraIdentity>& ids) {
  for (const auto& id : ids)
    if (id.kind == AlgebraKind::Named) return id.name;
  return ids.front().name;
}

inline std::optional<std::string> primary_cartan(const std::vector<AlgebraIdentity>& ids) {
  for (const auto& id : ids)
    if (id.kind == AlgebraKind::Named && id.cartan) return id.cartan;
  for (const auto& id : ids)
    if (id.cartan) return id.cartan;
  return std::nullopt;
}

inline MapRecord map_record(const geometry::PolyhedralMapData& m) {
  return {m.face_size, m.vertex_degree, m.vertices, m.edges, m.faces, m.euler, m.name};
}

}  // namespace detail

inline GeometryRecord geometry_record(const dio::Triple& t) {
  const auto g = geometry::interpret(t[0], t[1], t[2]);
  GeometryRecord r;
  r.knm = t;
  r.surface = std::string(geometry::to_string(g.primary.surface));
  r.primary = detail::map_record(g.primary);
  if (g.dual) r.dual = detail::map_record(*g.dual);
  r.pair_name = g.pair_name;
  r.y_label = g.y_label;
  if (g.regular) r.regular_map = g.regular->regular;
  r.note = g.note;
  return r;
}

inline SolutionRecord solution_record(const dio::SolutionTriple& s) {
  SolutionRecord r;
  r.equation = s.equation;
  r.knm = s.values;
  if (s.equation != dio::main_equation().name) return r;
  const auto cls = dio::classify(s);
  r.kind = std::string(dio::to_string(cls.kind));
  r.family_parameter = cls.family_parameter;
  const auto image = from_solution(s);
  if (std::holds_alternative<FamilyDescriptor>(image)) {
    r.family = std::get<FamilyDescriptor>(image).description;
    r.algebra = super_d21_identity().name;
    return r;
  }
  const auto& p = std::get<VogelPoint>(image);
  r.abg = detail::to_point(p);
  r.dim = detail::integral(dimension(p), "dimension");
  r.algebra = detail::primary_label(identify(p));
  if (cls.kind == dio::SolutionKind::Isolated) {
    r.regular = is_regular(p);
    if (*r.regular) r.rank = to_int64(rank_of(expand(p)));
  }
  return r;
}

/// Isolated-table order: dimension descending, ties by (k,n,m) ascending.
inline void sort_isolated_order(std::vector<SolutionRecord>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const SolutionRecord& a, const SolutionRecord& b) {
    const auto da = a.dim.value_or(0), db = b.dim.value_or(0);
    if (da != db) return da > db;
    return a.knm < b.knm;
  });
}

/// Solutions of `equation` within bound. For the main equation `isolated`
/// keeps isolated classes only, `families` keeps family members only (zeros
/// included); both false keeps everything nonzero.
inline std::vector<SolutionRecord> solve(const std::string& equation, std::int64_t bound, bool isolated,
                                         bool families) {
  const auto& eq = dio::find_equation(equation);
  const bool main = eq.name == dio::main_equation().name;
  if (!main && (isolated || families))
    throw InputError("--isolated and --families apply to the main equation only");
  std::vector<SolutionRecord> out;
  for (const auto& s : dio::enumerate(eq, bound, main && families)) {
    if (main) {
      const auto kind = dio::classify(s).kind;
      if (isolated && kind != dio::SolutionKind::Isolated) continue;
      if (families && kind == dio::SolutionKind::Isolated) continue;
    }
    out.push_back(solution_record(s));
  }
  if (main && isolated) sort_isolated_order(out);
  return out;
}

inline VogelRecord vogel_record(const dio::Triple& t, bool verbose) {
  const dio::SolutionTriple s{t, dio::main_equation().name};
  if (!dio::is_solution(dio::main_equation(), t))
    throw InputError(triple_str(t) + " is not a solution: knm - (2kn+2km+2nm) = " +
                     dio::main_equation().residual(t).str());
  VogelRecord r;
  r.knm = t;
  const auto cls = dio::classify(s);
  r.kind = std::string(dio::to_string(cls.kind));
  r.family_parameter = cls.family_parameter;
  const auto image = from_solution(s);
  if (std::holds_alternative<FamilyDescriptor>(image)) {
    r.family = std::get<FamilyDescriptor>(image).description;
    r.algebra = super_d21_identity().name;
    r.identities = {r.algebra};
    return r;
  }
  const auto& p = std::get<VogelPoint>(image);
  r.abg = detail::to_point(p);
  r.t = to_int64(p.t());
  r.dim = detail::integral(dimension(p), "dimension");
  r.regular = is_regular(p);
  const auto ids = identify(p);
  r.algebra = detail::primary_label(ids);
  for (const auto& id : ids) r.identities.push_back(id.name);
  if (*r.regular) {
    const auto e = expand(p);
    r.rank = to_int64(rank_of(e));
    if (verbose) {
      ExpansionRecord x;
      x.scale = e.scale;
      x.scale_note = "exponent unit x/4 at (alpha,beta,gamma) = " + p.str();
      for (const auto& [exp, c] : e.coefficients) x.coefficients.emplace_back(exp, to_int64(c));
      r.expansion = std::move(x);
    }
  }
  try {
    r.geometry = geometry_record(t);
  } catch (const geometry::NoGeometricInterpretation&) {
  }
  return r;
}

/// `tables` is the character-table asset text; the embedded copy by default.
inline McKayRecord mckay_record(const mckay::GroupFamily& f, std::string_view tables = mckay::kCharacterTables) {
  const auto g = mckay::build_group(f);
  const auto table = mckay::character_table(g, tables);
  const auto graph = mckay::mckay_matrix(g, table);
  const auto diagram = mckay::identify_affine_diagram(graph);
  McKayRecord r;
  r.group = f.name();
  r.order = static_cast<std::int64_t>(g.order());
  r.class_labels = table.class_labels;
  r.class_sizes = table.class_sizes;
  for (const auto& irr : table.irreps) r.irreps.push_back(irr.label);
  r.degrees = table.degrees();
  r.adjacency = graph.adjacency;
  r.affine = diagram.affine_label();
  r.finite = diagram.finite_label();
  return r;
}

namespace detail {

inline std::string mckay_finite(const mckay::GroupFamily& f) {
  return mckay::identify_affine_diagram(mckay::mckay_matrix(mckay::build_group(f))).finite_label();
}

inline std::vector<AlgebraIdentity> identities_of(const dio::Triple& t) {
  const auto image = from_solution({t, dio::main_equation().name});
  return identify(std::get<VogelPoint>(image));
}

inline std::string sl_cartan_of_polygon(std::int64_t n) {
  for (const auto& id : identities_of({2, n, -n}))
    if (id.kind == AlgebraKind::SpecialLinear) return *id.cartan;
  throw ConsistencyError("polygon solution (2," + std::to_string(n) + "," + std::to_string(-n) +
                         ") is not on the sl line");
}

}  // namespace detail

inline constexpr std::int64_t kPolygonCheckFrom = 2;
inline constexpr std::int64_t kPolygonCheckTo = 6;

inline const std::vector<std::string>& comparison_footnotes() {
  static const std::vector<std::string> notes = {
      "Series off-by-one: the printed series row pairs (-n,n,2) with sl(n+1) at (-2,2,n+1); the computed "
      "point of (-n,n,2) is (-2,2,n), i.e. sl(n) = A_{n-1}. The printed Diophantine cell A_n of the polygon "
      "row inherits this shift.",
      "BD subscript: the printed McKay cell for BD_{2n}, |BD_{2n}|=4n is D_{n-2}; the computed McKay graph of "
      "the binary dihedral group of order 4n has n+3 nodes, the affine diagram D_{n+2}^(1).",
      "Exc line: the printed row (-2, 2n+4, 3n+6) is a single projective point for every n; the computed "
      "line is (-2, n+4, 2n+4), which gives G_2, D_4, F_4, E_6, E_7, E_8 at n = -2/3, 0, 1, 2, 4, 8.",
      "Polygon row: the cyclic lift C_n gives A_{n-1}, equal to the computed Diophantine sl(n); the row has "
      "three McKay outcomes, so it is not a coincidence.",
  };
  return notes;
}

/// The comparison table computed from scratch. Polygon-row labels are checked for n in
/// [kPolygonCheckFrom, kPolygonCheckTo] and printed in terms of n.
inline ComparisonReport compare() {
  ComparisonReport report;
  struct Solid {
    dio::Triple solution, dual;
    mckay::GroupFamily group;
  };
  const Solid solids[] = {
      {{5, 3, -30}, {3, 5, -30}, mckay::GroupFamily::icosahedral()},
      {{4, 3, -12}, {3, 4, -12}, mckay::GroupFamily::octahedral()},
      {{3, 3, -6}, {3, 3, -6}, mckay::GroupFamily::tetrahedral()},
  };
  for (const auto& s : solids) {
    ComparisonRow row;
    row.solutions.push_back(triple_str(s.solution));
    if (s.dual != s.solution) row.solutions.push_back(triple_str(s.dual));
    row.platonic = geometry::interpret(s.solution[0], s.solution[1], s.solution[2]).pair_name;
    const auto rec = mckay_record(s.group);
    row.subgroups = {rec.group + ", |" + rec.group + "|=" + std::to_string(rec.order)};
    row.mckay = {rec.finite};
    const auto ids = detail::identities_of(s.solution);
    row.diophantine = detail::primary_label(ids);
    row.diophantine_cartan = detail::primary_cartan(ids);
    row.coincide = row.diophantine_cartan == rec.finite;
    report.rows.push_back(std::move(row));
  }

  ComparisonRow poly;
  poly.solutions = {"(2,n,-n)"};
  poly.platonic = "n-polygon";
  poly.subgroups = {"C_n, |C_n|=n", "C_{2n}, |C_{2n}|=2n", "BD_{2n}, |BD_{2n}|=4n"};
  poly.mckay = {"A_{n-1}", "A_{2n-1}", "D_{n+2}"};
  poly.diophantine = "sl(n)";
  poly.diophantine_cartan = "A_{n-1}";
  for (std::int64_t n = kPolygonCheckFrom; n <= kPolygonCheckTo; ++n) {
    const int ni = static_cast<int>(n);
    const std::string expect[] = {"A_" + std::to_string(n - 1), "A_" + std::to_string(2 * n - 1),
                                  "D_" + std::to_string(n + 2)};
    const std::string got[] = {detail::mckay_finite(mckay::GroupFamily::cyclic(ni)),
                               detail::mckay_finite(mckay::GroupFamily::cyclic(2 * ni)),
                               detail::mckay_finite(mckay::GroupFamily::binary_dihedral(ni))};
    for (int i = 0; i < 3; ++i)
      if (got[i] != expect[i])
        throw ConsistencyError("polygon row at n=" + std::to_string(n) + ": McKay gives " + got[i] +
                               ", expected " + expect[i]);
    if (detail::sl_cartan_of_polygon(n) != expect[0])
      throw ConsistencyError("polygon row at n=" + std::to_string(n) + ": Diophantine label is not A_{n-1}");
  }
  poly.coincide = false;
  poly.partial_matches = {"C_n: A_{n-1}"};
  report.rows.push_back(std::move(poly));

  ComparisonRow zero;
  zero.solutions = {"(0,0,0)"};
  const auto image = from_solution({{0, 0, 0}, dio::main_equation().name});
  if (!std::holds_alternative<FamilyDescriptor>(image))
    throw ConsistencyError("(0,0,0) does not map to the t=0 line");
  zero.diophantine = super_d21_identity().name;
  zero.coincide = false;
  report.rows.push_back(std::move(zero));

  report.footnotes = comparison_footnotes();
  return report;
}

/// The series table computed: the polygon series and the zero family.
inline std::vector<SeriesRow> series_table() {
  SeriesRow sl{"sl(n)", "-2,2,n", "-n,n,2", {}};
  for (std::int64_t n = 2; n <= 10; ++n) {
    const auto image = from_solution({{-n, n, 2}, dio::main_equation().name});
    const auto& p = std::get<VogelPoint>(image);
    const auto expected = VogelPoint::canonicalize({BigInt(-2), BigInt(2), BigInt(n)});
    bool found = false;
    for (const auto& id : identify(p))
      found = found || (id.kind == AlgebraKind::SpecialLinear && id.parameter == Rational(n));
    if (!(p == expected) || !found)
      throw ConsistencyError("(-n,n,2) at n=" + std::to_string(n) + " is not sl(n)");
    sl.checked.push_back(n);
  }
  SeriesRow d21{super_d21_identity().name, "alpha+beta+gamma=0", "0,0,0", {}};
  for (std::int64_t m = -3; m <= 3; ++m) {
    if (!std::holds_alternative<FamilyDescriptor>(from_solution({{0, 0, m}, dio::main_equation().name})))
      throw ConsistencyError("(0,0,m) does not map to the t=0 line");
    d21.checked.push_back(m);
  }
  return {sl, d21};
}

}  // namespace vogel::report
