#include <catch_amalgamated.hpp>

#include <set>

#include "vogel/surface_geometry.hpp"

using namespace vogel;
using namespace vogel::geometry;

TEST_CASE("sign pattern (+,+,-) gives spherical maps") {
  std::set<std::string> solids;
  int polygons = 0;
  for (const auto& s : dio::enumerate(dio::main_equation(), 60, false)) {
    const auto& v = s.values;
    if (std::count_if(v.begin(), v.end(), [](auto x) { return x < 0; }) != 1) continue;
    const auto g = interpret(v[0], v[1], v[2]);
    for (const auto* m : {&g.primary, g.dual ? &*g.dual : nullptr}) {
      if (!m) continue;
      CHECK(m->euler == 2);
      CHECK(m->incidences_hold());
      CHECK(m->surface == SurfaceKind::Sphere);
    }
    if (dio::classify(s).kind == dio::SolutionKind::PolygonFamily) {
      ++polygons;
      CHECK((g.primary.face_size == 2 || g.primary.vertex_degree == 2));
    } else {
      solids.insert(g.primary.name);
      if (g.dual) solids.insert(g.dual->name);
    }
  }
  CHECK(solids == std::set<std::string>{"cube", "dodecahedron", "icosahedron", "octahedron", "tetrahedron"});
  CHECK(polygons > 0);
}

TEST_CASE("Platonic pairs") {
  const auto d = interpret(5, 3, -30);
  CHECK(d.primary.name == "dodecahedron");
  CHECK(d.dual->name == "icosahedron");
  CHECK(d.primary.vertices == 20);
  CHECK(d.primary.faces == 12);
  CHECK(d.primary.edges == 30);
  CHECK(d.pair_name == "dodecahedron/icosahedron");
  CHECK_FALSE(d.note.empty());
  const auto t = interpret(3, 3, -6);
  CHECK(t.primary.name == "tetrahedron");
  CHECK_FALSE(t.dual.has_value());
  CHECK(interpret(3, 4, -12).primary.name == "octahedron");
  CHECK(interpret(-12, 4, 3).primary.name == "cube");
  const auto h = interpret(2, 7, -7);
  CHECK(h.primary.name == "hosohedron {2,7}");
  CHECK(h.dual->name == "dihedron {7,2}");
}

TEST_CASE("all-positive solutions give genus-2 maps") {
  std::set<std::string> regular, labels;
  int count = 0;
  for (const auto& s : dio::enumerate(dio::main_equation(), 60, false)) {
    const auto& v = s.values;
    if (v[0] < 0 || v[1] < 0 || v[2] < 0) continue;
    ++count;
    const auto g = interpret(v[0], v[1], v[2]);
    CHECK(g.primary.euler == -2);
    CHECK(g.primary.incidences_hold());
    CHECK(g.primary.surface == SurfaceKind::Genus2);
    REQUIRE(g.y_label);
    REQUIRE(g.regular);
    CHECK(g.regular->locally_regular);
    labels.insert(*g.y_label);
    if (g.regular->regular) regular.insert(*g.y_label);
  }
  CHECK(count == 10);
  CHECK(labels.size() == 10);
  CHECK(regular == std::set<std::string>{"Y1", "Y10", "Y11", "Y15", "Y43"});
}

TEST_CASE("regular map lookup") {
  CHECK(regular_map_flag("Y_43").regular);
  CHECK_FALSE(regular_map_flag("Y47").regular);
  CHECK(regular_map_flag("Y1").source == std::string(kRegularMapSource));
  CHECK_THROWS_AS(regular_map_flag("Y2"), UnknownName);
}

TEST_CASE("inputs without a polyhedral reading") {
  CHECK_THROWS_AS(interpret(1, -4, -4), NoGeometricInterpretation);
  try {
    interpret(1, -3, -6);
  } catch (const NoGeometricInterpretation& e) {
    CHECK_FALSE(std::string(e.what()).empty());
  }
  CHECK_THROWS_AS(interpret(0, 0, 5), DegenerateInput);
  CHECK_THROWS_AS(interpret(5, 5, 5), InputError);
  CHECK(euler_char(20, 30, 12) == 2);
}
