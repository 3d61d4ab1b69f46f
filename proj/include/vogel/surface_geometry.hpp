#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "vogel/diophantine.hpp"
#include "vogel/error.hpp"
#include "vogel/vogel_plane.hpp"

namespace vogel::geometry {

enum class SurfaceKind { Sphere, Genus2, Other };

inline std::string_view to_string(SurfaceKind s) {
  switch (s) {
    case SurfaceKind::Sphere: return "sphere";
    case SurfaceKind::Genus2: return "genus-2";
    case SurfaceKind::Other: return "other";
  }
  return "?";
}

inline constexpr std::string_view kRegularMapSource =
    "census of regular maps of genus 2 (Coxeter-Moser, table 9)";

struct RegularMapFlag {
  bool locally_regular = true;
  bool regular = false;
  std::string source{kRegularMapSource};

  friend bool operator==(const RegularMapFlag&, const RegularMapFlag&) = default;
};

/// A {p,q} map: p edges per face, q edges per vertex.
struct PolyhedralMapData {
  std::int64_t face_size = 0;
  std::int64_t vertex_degree = 0;
  std::int64_t edges = 0;
  std::int64_t vertices = 0;
  std::int64_t faces = 0;
  std::int64_t euler = 0;
  SurfaceKind surface = SurfaceKind::Other;
  std::string name;

  bool incidences_hold() const {
    return vertex_degree * vertices == 2 * edges && face_size * faces == 2 * edges &&
           vertices - edges + faces == euler;
  }

  friend bool operator==(const PolyhedralMapData&, const PolyhedralMapData&) = default;
};

struct Interpretation {
  PolyhedralMapData primary;
  std::optional<PolyhedralMapData> dual;  // absent when self-dual
  std::string pair_name;
  std::optional<std::string> y_label;
  std::optional<RegularMapFlag> regular;
  std::string note;
};

class NonIntegralIncidence : public InputError {
 public:
  using InputError::InputError;
};

class NoGeometricInterpretation : public InputError {
 public:
  NoGeometricInterpretation(const std::string& what, Rational euler)
      : InputError(what), euler_(std::move(euler)) {}
  /// V - E + F computed formally with E = |last entry|; may be non-integral.
  const Rational& euler() const { return euler_; }

 private:
  Rational euler_;
};

inline std::int64_t euler_char(std::int64_t vertices, std::int64_t edges, std::int64_t faces) {
  return vertices - edges + faces;
}

inline RegularMapFlag regular_map_flag(std::string_view name) {
  std::string key(name);
  key.erase(std::remove(key.begin(), key.end(), '_'), key.end());
  static constexpr std::array<std::string_view, 10> kY = {"Y1",  "Y10", "Y11", "Y15", "Y29",
                                                          "Y31", "Y35", "Y38", "Y43", "Y47"};
  static constexpr std::array<std::string_view, 5> kRegular = {"Y1", "Y10", "Y11", "Y15", "Y43"};
  if (std::find(kY.begin(), kY.end(), key) == kY.end())
    throw UnknownName("unknown Y-object '" + std::string(name) + "'");
  RegularMapFlag flag;
  flag.regular = std::find(kRegular.begin(), kRegular.end(), key) != kRegular.end();
  return flag;
}

namespace detail {

inline std::string solid_name(std::int64_t p, std::int64_t q) {
  if (p == 3 && q == 3) return "tetrahedron";
  if (p == 4 && q == 3) return "cube";
  if (p == 3 && q == 4) return "octahedron";
  if (p == 5 && q == 3) return "dodecahedron";
  if (p == 3 && q == 5) return "icosahedron";
  if (p == 2) return "hosohedron {2," + std::to_string(q) + "}";
  if (q == 2) return "dihedron {" + std::to_string(p) + ",2}";
  return "{" + std::to_string(p) + "," + std::to_string(q) + "}";
}

inline std::string pair_name(std::int64_t p, std::int64_t q) {
  const auto lo = std::min(p, q), hi = std::max(p, q);
  if (lo == 3 && hi == 3) return "tetrahedron";
  if (lo == 3 && hi == 4) return "cube/octahedron";
  if (lo == 3 && hi == 5) return "dodecahedron/icosahedron";
  if (lo == 2) return "regular " + std::to_string(hi) + "-polygon (dihedron/hosohedron)";
  return "{" + std::to_string(p) + "," + std::to_string(q) + "}";
}

inline PolyhedralMapData make_map(std::int64_t p, std::int64_t q, std::int64_t e, std::int64_t chi,
                                  SurfaceKind surface, std::string name) {
  if ((2 * e) % q != 0 || (2 * e) % p != 0)
    throw NonIntegralIncidence("{" + std::to_string(p) + "," + std::to_string(q) + "} with E=" +
                               std::to_string(e) + " has non-integral vertex or face count");
  PolyhedralMapData d{p, q, e, 2 * e / q, 2 * e / p, 0, surface, std::move(name)};
  d.euler = euler_char(d.vertices, d.edges, d.faces);
  if (d.euler != chi)
    throw ConsistencyError("Euler characteristic " + std::to_string(d.euler) + " != " +
                           std::to_string(chi));
  return d;
}

}  // namespace detail

/// Reads a main-equation solution as a polyhedral map.
///  (+,+,-): the negative entry is -E, the two positive entries (in the given
///           order) are face size and vertex degree; sphere, chi = 2.
///  (+,+,+): the largest entry is E, the other two (in the given order) are
///           {p,q}; genus-2 surface, chi = -2.
/// The dual {q,p} is reported alongside unless self-dual.
inline Interpretation interpret(std::int64_t k, std::int64_t n, std::int64_t m) {
  const dio::Triple t{k, n, m};
  if (k == 0 || n == 0 || m == 0) throw DegenerateInput("interpretation needs nonzero entries");
  if (!dio::is_solution(dio::main_equation(), t))
    throw InputError("triple does not solve the main equation");

  const auto negatives = std::count_if(t.begin(), t.end(), [](auto v) { return v < 0; });
  Interpretation out;
  if (negatives == 1) {
    std::int64_t e = 0;
    std::array<std::int64_t, 2> rest{};
    for (std::size_t i = 0, j = 0; i < 3; ++i) {
      if (t[i] < 0)
        e = -t[i];
      else
        rest[j++] = t[i];
    }
    const auto [p, q] = rest;
    out.primary = detail::make_map(p, q, e, 2, SurfaceKind::Sphere, detail::solid_name(p, q));
    if (p != q) out.dual = detail::make_map(q, p, e, 2, SurfaceKind::Sphere, detail::solid_name(q, p));
    out.pair_name = detail::pair_name(p, q);
    if (std::min(p, q) == 3 && std::max(p, q) == 5)
      out.note = "{5,3} is the dodecahedron (face size first); published tables also pair "
                 "(5,3,-30) with the icosahedron, the dual";
    return out;
  }
  if (negatives == 0) {
    const auto pos = static_cast<std::size_t>(std::max_element(t.begin(), t.end()) - t.begin());
    const std::int64_t e = t[pos];
    std::array<std::int64_t, 2> rest{};
    for (std::size_t i = 0, j = 0; i < 3; ++i)
      if (i != pos) rest[j++] = t[i];
    const auto [p, q] = rest;
    const auto* row = find_isolated_row(t);
    out.y_label = row ? std::optional<std::string>(row->label) : std::nullopt;
    const std::string label = out.y_label.value_or("genus-2 map");
    out.primary = detail::make_map(p, q, e, -2, SurfaceKind::Genus2,
                                   label + " {" + std::to_string(p) + "," + std::to_string(q) + "}");
    if (p != q)
      out.dual = detail::make_map(q, p, e, -2, SurfaceKind::Genus2,
                                  label + " {" + std::to_string(q) + "," + std::to_string(p) + "}");
    out.pair_name = "equivelar map {" + std::to_string(p) + "," + std::to_string(q) + "} on the genus-2 surface";
    if (out.y_label) out.regular = regular_map_flag(*out.y_label);
    return out;
  }

  const Rational e(m < 0 ? -m : m);
  const Rational chi = Rational(2) * e / Rational(n < 0 ? -n : n) - e + Rational(2) * e / Rational(k < 0 ? -k : k);
  throw NoGeometricInterpretation("sign pattern with " + std::to_string(negatives) +
                                      " negative entries has no polyhedral reading",
                                  chi);
}

}  // namespace vogel::geometry
