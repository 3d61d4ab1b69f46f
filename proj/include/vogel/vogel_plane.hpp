#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vogel/diophantine.hpp"
#include "vogel/error.hpp"
#include "vogel/exact/rational.hpp"

namespace vogel {

using IntTriple = std::array<BigInt, 3>;

/// A point (alpha : beta : gamma) of the Vogel plane, i.e. projective and
/// modulo permutations. Keeps the representative it was built from plus the
/// canonical form: coprime integers, sign chosen so that t > 0 (for t = 0 the
/// lexicographically greater of the two sorted sign choices), sorted ascending.
class VogelPoint {
 public:
  static VogelPoint canonicalize(const Rational& alpha, const Rational& beta, const Rational& gamma) {
    if (alpha.is_zero() && beta.is_zero() && gamma.is_zero())
      throw InputError("(0,0,0) is not a point of the Vogel plane");
    VogelPoint p;
    p.rep_ = {alpha, beta, gamma};

    BigInt den = 1;
    for (const auto& r : p.rep_) den = big_lcm(den, r.den());
    IntTriple v;
    BigInt g = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      v[i] = p.rep_[i].num() * (den / p.rep_[i].den());
      g = big_gcd(g, boost::multiprecision::abs(v[i]));
    }
    for (auto& x : v) x /= g;

    IntTriple neg{-v[0], -v[1], -v[2]};
    std::sort(v.begin(), v.end());
    std::sort(neg.begin(), neg.end());
    const BigInt t = v[0] + v[1] + v[2];
    if (t < 0 || (t == 0 && neg > v)) v = neg;
    p.canonical_ = v;
    return p;
  }

  static VogelPoint canonicalize(const IntTriple& v) {
    return canonicalize(Rational(v[0]), Rational(v[1]), Rational(v[2]));
  }

  const std::array<Rational, 3>& representative() const { return rep_; }
  const IntTriple& canonical() const { return canonical_; }

  /// alpha + beta + gamma at the canonical representative.
  BigInt t() const { return canonical_[0] + canonical_[1] + canonical_[2]; }

  std::string str() const {
    return "(" + canonical_[0].str() + "," + canonical_[1].str() + "," + canonical_[2].str() + ")";
  }

  friend bool operator==(const VogelPoint& a, const VogelPoint& b) { return a.canonical_ == b.canonical_; }

 private:
  VogelPoint() = default;
  std::array<Rational, 3> rep_;
  IntTriple canonical_;
};

/// The one-parameter t = 0 line reached by the (0,0,m) solutions.
struct FamilyDescriptor {
  std::string description = "t=0 line: alpha+beta+gamma=0";
  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

using VogelImage = std::variant<VogelPoint, FamilyDescriptor>;

/// alpha = 2t/k, beta = 2t/n, gamma = 2t/m, i.e. the point (1/k : 1/n : 1/m).
inline VogelImage from_solution(const dio::SolutionTriple& s) {
  if (s.equation != dio::main_equation().name)
    throw InputError("Vogel parameters are defined only for main-equation solutions");
  if (!dio::is_solution(dio::main_equation(), s.values))
    throw InputError("triple does not solve the main equation");
  const auto zeros = std::count(s.values.begin(), s.values.end(), 0);
  if (zeros >= 2) return FamilyDescriptor{};
  if (zeros == 1) throw DegenerateInput("zero entry outside the (0,0,m) family");
  return VogelPoint::canonicalize(Rational(1, s.k()), Rational(1, s.n()), Rational(1, s.m()));
}

/// The triple (2t/alpha, 2t/beta, 2t/gamma), which is integral exactly when
/// the point comes from the main equation through the basic cancellation pattern.
inline std::array<Rational, 3> cancellation_integers(const VogelPoint& p) {
  const auto& c = p.canonical();
  const BigInt two_t = 2 * p.t();
  std::array<Rational, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (c[i] == 0) throw PoleError("zero coordinate");
    out[i] = Rational(two_t, c[i]);
  }
  return out;
}

/// d = (alpha-2t)(beta-2t)(gamma-2t) / (alpha beta gamma).
inline Rational dimension(const VogelPoint& p) {
  const auto& c = p.canonical();
  if (c[0] == 0 || c[1] == 0 || c[2] == 0) throw PoleError("dimension has a pole at a zero coordinate");
  const BigInt two_t = 2 * p.t();
  return Rational((c[0] - two_t) * (c[1] - two_t) * (c[2] - two_t), c[0] * c[1] * c[2]);
}

enum class AlgebraKind { SpecialLinear, Orthogonal, Symplectic, Exceptional, SuperD21, Named, Unknown };

/// base + x * direction, one line per classical series and the exceptional line.
struct FamilyLine {
  std::array<Rational, 3> base;
  std::array<Rational, 3> direction;
};

/// sl(N): (-2,2,N); so(N): (-2,4,N-4); sp(N): (-2,1,N/2+2); Exc(n): (-2,n+4,2n+4).
inline FamilyLine family_line(AlgebraKind kind) {
  const Rational z(0), one(1);
  switch (kind) {
    case AlgebraKind::SpecialLinear: return {{Rational(-2), Rational(2), z}, {z, z, one}};
    case AlgebraKind::Orthogonal: return {{Rational(-2), Rational(4), Rational(-4)}, {z, z, one}};
    case AlgebraKind::Symplectic: return {{Rational(-2), one, Rational(2)}, {z, z, Rational(BigInt(1), BigInt(2))}};
    case AlgebraKind::Exceptional: return {{Rational(-2), Rational(4), Rational(4)}, {z, one, Rational(2)}};
    default: throw InputError("no parametrized line for this algebra kind");
  }
}

/// The universal dimension along a line, evaluated at x as a limit in the line
/// parameter: numerator and denominator are expanded in powers of (x' - x) and
/// common vanishing orders cancelled. Agrees with dimension() off the poles and
/// gives e.g. so(4) = 6 where a coordinate vanishes.
inline Rational dimension_along(const FamilyLine& line, const Rational& x) {
  using Lin = std::array<Rational, 2>;  // c0 + c1 h
  auto mul = [](const std::vector<Rational>& p, const Lin& l) {
    std::vector<Rational> r(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[i] += p[i] * l[0];
      r[i + 1] += p[i] * l[1];
    }
    return r;
  };
  std::array<Lin, 3> coord;
  Lin t{Rational(0), Rational(0)};
  for (std::size_t i = 0; i < 3; ++i) {
    coord[i] = {line.base[i] + line.direction[i] * x, line.direction[i]};
    t[0] += coord[i][0];
    t[1] += coord[i][1];
  }
  std::vector<Rational> num{Rational(1)}, den{Rational(1)};
  for (const auto& c : coord) {
    num = mul(num, {c[0] - t[0] * 2, c[1] - t[1] * 2});
    den = mul(den, c);
  }
  auto order = [](const std::vector<Rational>& p) {
    std::size_t i = 0;
    while (i < p.size() && p[i].is_zero()) ++i;
    return i;
  };
  const std::size_t on = order(num), od = order(den);
  if (od == den.size()) throw PoleError("dimension is undefined along a degenerate line");
  if (on == num.size() || on > od) return Rational(0);
  if (on < od) throw PoleError("dimension has a pole at parameter " + x.str());
  return num[on] / den[od];
}

struct AlgebraIdentity {
  AlgebraKind kind = AlgebraKind::Unknown;
  std::optional<Rational> parameter;
  std::string name;
  /// Finite Cartan type ("A_3", "D_4", "E_8", ...) when the label is a simple Lie algebra.
  std::optional<std::string> cartan;

  friend bool operator==(const AlgebraIdentity&, const AlgebraIdentity&) = default;
};

/// One printed row of the isolated-solution table.
struct IsolatedRow {
  dio::Triple knm;
  std::array<std::int64_t, 3> abg;
  std::int64_t dim;
  std::int64_t rank;
  std::string label;
  std::optional<std::string> cartan;
};

/// The published isolated solutions, in published row order and orientation.
inline const std::vector<IsolatedRow>& isolated_table() {
  static const std::vector<IsolatedRow> rows = {
      {{5, 3, -30}, {-6, -10, 1}, 248, 8, "e8", "E_8"},
      {{4, 3, -12}, {-3, -4, 1}, 78, 6, "e6", "E_6"},
      {{3, 3, -6}, {-2, -2, 1}, 28, 4, "so(8)", "D_4"},
      {{1, -4, -4}, {4, -1, -1}, 0, 0, "0d3", std::nullopt},
      {{1, -3, -6}, {6, -2, -1}, 0, 0, "0d4", std::nullopt},
      {{6, 6, 6}, {1, 1, 1}, -125, -19, "Y1", std::nullopt},
      {{10, 5, 5}, {1, 2, 2}, -144, -14, "Y10", std::nullopt},
      {{8, 8, 4}, {1, 1, 2}, -147, -17, "Y11", std::nullopt},
      {{12, 6, 4}, {1, 2, 3}, -165, -13, "Y15", std::nullopt},
      {{20, 5, 4}, {1, 4, 5}, -228, -10, "Y29", std::nullopt},
      {{12, 12, 3}, {1, 1, 4}, -242, -18, "Y31", std::nullopt},
      {{15, 10, 3}, {2, 3, 10}, -252, -8, "Y35", std::nullopt},
      {{18, 9, 3}, {1, 2, 6}, -272, -14, "Y38", std::nullopt},
      {{24, 8, 3}, {1, 3, 8}, -322, -12, "Y43", std::nullopt},
      {{42, 7, 3}, {1, 6, 14}, -492, -10, "Y47", std::nullopt},
  };
  return rows;
}

namespace detail {

inline std::string exceptional_letter(const Rational& n) {
  if (n == Rational(-2, 3)) return "G_2";
  if (n == Rational(0)) return "D_4";
  if (n == Rational(1)) return "F_4";
  if (n == Rational(2)) return "E_6";
  if (n == Rational(4)) return "E_7";
  if (n == Rational(8)) return "E_8";
  return {};
}

/// Rows are tried independently: so(8) = Exc(0) matches twice.
inline std::vector<AlgebraIdentity> match_family_rows(const Rational& x, const Rational& y) {
  std::vector<AlgebraIdentity> out;
  if (x == Rational(2)) {  // sl(N): (-2, 2, N)
    const Rational& n = y;
    if (n.is_integer() && n >= Rational(2))
      out.push_back(AlgebraIdentity{AlgebraKind::SpecialLinear, n, "sl(" + n.str() + ")",
                                    "A_" + (n - 1).str()});
  }
  if (x == Rational(4)) {  // so(N): (-2, 4, N-4)
    const Rational n = y + 4;
    if (n.is_integer() && n >= Rational(3)) {
      const BigInt& v = n.num();
      std::string cartan = v % 2 == 0 ? "D_" + BigInt(v / 2).str() : "B_" + BigInt((v - 1) / 2).str();
      out.push_back(AlgebraIdentity{AlgebraKind::Orthogonal, n, "so(" + n.str() + ")", cartan});
    }
  }
  if (x == Rational(1)) {  // sp(N): (-2, 1, N/2 + 2)
    const Rational n = (y - 2) * 2;
    if (n.is_integer() && n >= Rational(2) && n.num() % 2 == 0)
      out.push_back(AlgebraIdentity{AlgebraKind::Symplectic, n, "sp(" + n.str() + ")",
                                    "C_" + BigInt(n.num() / 2).str()});
  }
  {  // Exc(n): (-2, n+4, 2n+4)
    const Rational n = x - 4;
    if (y == n * 2 + 4) {
      const std::string letter = exceptional_letter(n);
      if (!letter.empty())
        out.push_back(AlgebraIdentity{AlgebraKind::Exceptional, n, "Exc(" + n.str() + ")=" + letter, letter});
    }
  }
  return out;
}

}  // namespace detail

inline AlgebraIdentity super_d21_identity() {
  return {AlgebraKind::SuperD21, std::nullopt, "D(2,1;lambda)", std::nullopt};
}

/// Every identification of the point: classical and exceptional family members (all matching
/// permutations), the named isolated points and the t = 0 superalgebra line.
/// Returns a single Unknown entry when nothing matches.
inline std::vector<AlgebraIdentity> identify(const VogelPoint& p) {
  std::vector<AlgebraIdentity> out;
  auto add = [&](AlgebraIdentity id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(std::move(id));
  };

  std::array<int, 3> perm{0, 1, 2};
  const auto& c = p.canonical();
  do {
    if (c[perm[0]] == 0) continue;
    const Rational scale(-2, c[perm[0]]);
    for (auto& id : detail::match_family_rows(scale * Rational(c[perm[1]]), scale * Rational(c[perm[2]])))
      add(std::move(id));
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (const auto& row : isolated_table()) {
    const auto q = VogelPoint::canonicalize({BigInt(row.abg[0]), BigInt(row.abg[1]), BigInt(row.abg[2])});
    if (q == p) add({AlgebraKind::Named, std::nullopt, row.label, row.cartan});
  }
  if (p.t() == 0) add(super_d21_identity());
  if (out.empty()) out.push_back({AlgebraKind::Unknown, std::nullopt, "unknown", std::nullopt});
  return out;
}

/// Label for the isolated-table row the canonical triple belongs to, if any.
inline const IsolatedRow* find_isolated_row(const dio::Triple& t) {
  const auto key = dio::canonical_order(t);
  for (const auto& row : isolated_table())
    if (dio::canonical_order(row.knm) == key) return &row;
  return nullptr;
}

}  // namespace vogel
