#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vogel/vogel_plane.hpp"

using namespace vogel;

namespace {

VogelPoint point(std::int64_t a, std::int64_t b, std::int64_t c) {
  return VogelPoint::canonicalize({BigInt(a), BigInt(b), BigInt(c)});
}

VogelPoint rational_point(const Rational& a, const Rational& b, const Rational& c) {
  return VogelPoint::canonicalize(a, b, c);
}

bool has_identity(const std::vector<AlgebraIdentity>& ids, AlgebraKind kind, const Rational& parameter) {
  return std::any_of(ids.begin(), ids.end(),
                     [&](const auto& id) { return id.kind == kind && id.parameter == parameter; });
}

}  // namespace

TEST_CASE("canonical form") {
  CHECK(point(-6, -10, 1).str() == "(-1,6,10)");
  CHECK(point(12, 20, -2) == point(-6, -10, 1));
  CHECK(point(3, 1, 2) == point(1, 2, 3));
  CHECK(point(1, -1, 0).str() == "(-1,0,1)");
  CHECK(point(2, -1, -1).str() == "(-1,-1,2)");
  CHECK(point(-2, 1, 1) == point(2, -1, -1));
  CHECK(rational_point(Rational(BigInt(1), BigInt(2)), Rational(BigInt(1), BigInt(3)), Rational(1)).str() ==
        "(2,3,6)");
  CHECK(point(-6, -10, 1).t() == 15);
  CHECK_THROWS_AS(point(0, 0, 0), InputError);
}

TEST_CASE("points of main-equation solutions") {
  const auto main = dio::main_equation().name;
  const auto e8 = std::get<VogelPoint>(from_solution({{5, 3, -30}, main}));
  CHECK(e8 == point(-6, -10, 1));
  CHECK(std::holds_alternative<FamilyDescriptor>(from_solution({{0, 0, 5}, main})));
  CHECK(std::holds_alternative<FamilyDescriptor>(from_solution({{0, 0, 0}, main})));
  CHECK_THROWS_AS(from_solution({{5, 5, 5}, main}), InputError);
  CHECK_THROWS_AS(from_solution({{1, 1, 1}, "pattern2"}), InputError);
  const auto c = cancellation_integers(e8);
  // 2t/alpha for (-1,6,10), t = 15
  CHECK(c == std::array<Rational, 3>{Rational(-30), Rational(5), Rational(3)});
}

TEST_CASE("dimension agrees with the cross-multiplied oracle") {
  for (std::int64_t a = -9; a <= 9; ++a)
    for (std::int64_t b = -9; b <= 9; ++b)
      for (std::int64_t c = -9; c <= 9; ++c) {
        if (a == 0 || b == 0 || c == 0) continue;
        const auto [num, den] = oracle::dimension(a, b, c);
        CHECK(dimension(point(a, b, c)) == Rational(BigInt(num), BigInt(den)));
      }
  CHECK_THROWS_AS(dimension(point(1, -1, 0)), PoleError);
}

TEST_CASE("classical series dimensions") {
  for (std::int64_t n = 4; n <= 10; ++n) {
    const Rational N(n);
    CHECK(dimension_along(family_line(AlgebraKind::SpecialLinear), N) == Rational(n * n - 1));
    CHECK(dimension_along(family_line(AlgebraKind::Orthogonal), N) == Rational(n * (n - 1) / 2));
    CHECK(dimension_along(family_line(AlgebraKind::Symplectic), N) == Rational(n * (n + 1) / 2));
    CHECK(dimension(point(-2, 2, n)) == Rational(n * n - 1));
    if (n != 4) CHECK(dimension(point(-2, 4, n - 4)) == Rational(n * (n - 1) / 2));
  }
  CHECK_THROWS_AS(dimension(point(-2, 4, 0)), PoleError);
}

TEST_CASE("line evaluation agrees with point evaluation off the poles") {
  for (auto kind : {AlgebraKind::SpecialLinear, AlgebraKind::Orthogonal, AlgebraKind::Symplectic,
                    AlgebraKind::Exceptional}) {
    const auto line = family_line(kind);
    for (std::int64_t x = -7; x <= 12; ++x) {
      std::array<Rational, 3> c;
      for (std::size_t i = 0; i < 3; ++i) c[i] = line.base[i] + line.direction[i] * Rational(x);
      if (c[0].is_zero() || c[1].is_zero() || c[2].is_zero()) continue;
      CHECK(dimension_along(line, Rational(x)) == dimension(VogelPoint::canonicalize(c[0], c[1], c[2])));
    }
  }
  CHECK_THROWS_AS(family_line(AlgebraKind::Named), InputError);
}

TEST_CASE("exceptional line") {
  const std::vector<std::pair<Rational, std::int64_t>> rows = {
      {Rational(BigInt(-2), BigInt(3)), 14}, {Rational(0), 28}, {Rational(1), 52},
      {Rational(2), 78},                     {Rational(4), 133}, {Rational(8), 248}};
  for (const auto& [n, dim] : rows) {
    const auto p = rational_point(Rational(-2), n + Rational(4), n * Rational(2) + Rational(4));
    CHECK(dimension(p) == Rational(dim));
    CHECK(dimension_along(family_line(AlgebraKind::Exceptional), n) == Rational(dim));
    CHECK(has_identity(identify(p), AlgebraKind::Exceptional, n));
  }
}

TEST_CASE("identification") {
  const auto sl5 = identify(point(-2, 2, 5));
  CHECK(has_identity(sl5, AlgebraKind::SpecialLinear, Rational(5)));
  CHECK(std::find_if(sl5.begin(), sl5.end(), [](auto& id) { return id.cartan == "A_4"; }) != sl5.end());
  CHECK(has_identity(identify(point(-2, 4, 6)), AlgebraKind::Orthogonal, Rational(10)));
  CHECK(has_identity(identify(point(-2, 1, 5)), AlgebraKind::Symplectic, Rational(6)));
  const auto d4 = identify(point(-2, -2, 1));
  CHECK(std::any_of(d4.begin(), d4.end(), [](auto& id) { return id.kind == AlgebraKind::Named && id.name == "so(8)"; }));
  CHECK(has_identity(d4, AlgebraKind::Orthogonal, Rational(8)));
  CHECK(has_identity(identify(point(1, -1, 0)), AlgebraKind::SuperD21, Rational(0)) == false);
  const auto t0 = identify(point(1, -1, 0));
  CHECK(std::any_of(t0.begin(), t0.end(), [](auto& id) { return id.kind == AlgebraKind::SuperD21; }));
  const auto y = identify(point(1, 1, 1));
  CHECK(y.size() == 1);
  CHECK(y.front().name == "Y1");
  const auto unknown = identify(point(1, 1, 7));
  CHECK(unknown.front().kind == AlgebraKind::Unknown);
  // so(N) parameter domain: (-2,4,-2) would be so(2), outside N >= 3
  CHECK_FALSE(has_identity(identify(point(-2, 4, -2)), AlgebraKind::Orthogonal, Rational(2)));
}

TEST_CASE("isolated table points") {
  const auto main = dio::main_equation().name;
  REQUIRE(isolated_table().size() == 15);
  for (const auto& row : isolated_table()) {
    INFO(row.label);
    const auto p = std::get<VogelPoint>(from_solution({row.knm, main}));
    CHECK(p == point(row.abg[0], row.abg[1], row.abg[2]));
    CHECK(dimension(p) == Rational(row.dim));
    CHECK(find_isolated_row(row.knm) == &row);
  }
  CHECK(find_isolated_row({3, 5, -30})->label == "e8");
  CHECK(find_isolated_row({2, 5, -5}) == nullptr);
}
