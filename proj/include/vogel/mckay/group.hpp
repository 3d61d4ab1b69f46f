#pragma once

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "vogel/error.hpp"
#include "vogel/mckay/quaternion.hpp"

namespace vogel::mckay {

enum class FamilyKind { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };

/// A finite subgroup of SU(2) up to conjugacy. `parameter` is N for Cyclic(N)
/// and n for BinaryDihedral (order 4n); unused otherwise.
struct GroupFamily {
  FamilyKind kind = FamilyKind::Cyclic;
  int parameter = 1;

  static GroupFamily cyclic(int n) { return {FamilyKind::Cyclic, n}; }
  static GroupFamily binary_dihedral(int n) { return {FamilyKind::BinaryDihedral, n}; }
  static GroupFamily tetrahedral() { return {FamilyKind::BinaryTetrahedral, 0}; }
  static GroupFamily octahedral() { return {FamilyKind::BinaryOctahedral, 0}; }
  static GroupFamily icosahedral() { return {FamilyKind::BinaryIcosahedral, 0}; }

  std::int64_t expected_order() const {
    switch (kind) {
      case FamilyKind::Cyclic: return parameter;
      case FamilyKind::BinaryDihedral: return 4LL * parameter;
      case FamilyKind::BinaryTetrahedral: return 24;
      case FamilyKind::BinaryOctahedral: return 48;
      case FamilyKind::BinaryIcosahedral: return 120;
    }
    return 0;
  }

  std::string name() const {
    switch (kind) {
      case FamilyKind::Cyclic: return "C" + std::to_string(parameter);
      case FamilyKind::BinaryDihedral: return "BD" + std::to_string(parameter);
      case FamilyKind::BinaryTetrahedral: return "2T";
      case FamilyKind::BinaryOctahedral: return "2O";
      case FamilyKind::BinaryIcosahedral: return "2I";
    }
    return "?";
  }

  /// Accepts "2T", "2O", "2I", "C <N>" / "C<N>", "BD <n>" / "BD<n>" (order 4n).
  static GroupFamily parse(std::string_view spec) {
    std::string s;
    for (char ch : spec)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (s == "2T") return tetrahedral();
    if (s == "2O") return octahedral();
    if (s == "2I") return icosahedral();
    auto number = [&](std::size_t from) {
      const std::string digits = s.substr(from);
      if (digits.empty() || digits.size() > 6 ||
          !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError("invalid group family '" + std::string(spec) + "'");
      const int v = std::stoi(digits);
      if (v < 1) throw ParseError("group family parameter must be >= 1");
      return v;
    };
    if (s.rfind("BD", 0) == 0) return binary_dihedral(number(2));
    if (s.rfind("C", 0) == 0) return cyclic(number(1));
    throw ParseError("invalid group family '" + std::string(spec) + "'");
  }

  friend bool operator==(const GroupFamily&, const GroupFamily&) = default;
};

struct ConjugacyClass {
  std::vector<std::size_t> members;  // indices into FiniteSubgroup::elements(), ascending
  std::size_t representative = 0;    // smallest member
  Cyclotomic trace;
  int element_order = 1;
  std::string label;  // element order + letter, e.g. "4a"

  std::size_t size() const { return members.size(); }
};

class FiniteSubgroup {
 public:
  const GroupFamily& family() const { return family_; }
  /// Cyclotomic order of the field holding components and character values.
  int field_order() const { return field_order_; }
  const std::vector<Quaternion>& generators() const { return generators_; }
  const std::vector<Quaternion>& elements() const { return elements_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t order() const { return elements_.size(); }

  std::optional<std::size_t> index_of(const Quaternion& q) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), q);
    if (it == elements_.end() || !(*it == q)) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
  }
  std::size_t class_of(std::size_t element) const { return class_index_.at(element); }

 private:
  friend FiniteSubgroup build_group(const GroupFamily&);
  friend FiniteSubgroup close_generators(const GroupFamily&, int, std::vector<Quaternion>);

  GroupFamily family_;
  int field_order_ = 1;
  std::vector<Quaternion> generators_;
  std::vector<Quaternion> elements_;  // sorted
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_index_;
};

class GroupClosureError : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

namespace detail {

inline Quaternion cos_sin_i(int field, int n, int k) {
  // cos(2 pi k / n) + sin(2 pi k / n) i, with zeta_n = zeta_field^(field/n)
  const std::int64_t step = field / n;
  const Cyclotomic z = Cyclotomic::zeta(field, step * k);
  const Cyclotomic zi = Cyclotomic::zeta(field, -step * k);
  const Cyclotomic i = Cyclotomic::zeta(field, field / 4);
  const Rational half(1, 2);
  return {(z + zi) * half, -(i * (z - zi)) * half, Cyclotomic(field), Cyclotomic(field)};
}

inline Quaternion unit(int field, int which) {
  Quaternion q = Quaternion::scalar(field, 0);
  Cyclotomic one(field, 1);
  switch (which) {
    case 1: q.b = one; break;
    case 2: q.c = one; break;
    case 3: q.d = one; break;
    default: q.a = one;
  }
  return q;
}

inline Quaternion hurwitz_unit(int field) {  // (1 + i + j + k) / 2
  const Cyclotomic h(field, Rational(1, 2));
  return {h, h, h, h};
}

}  // namespace detail

inline FiniteSubgroup close_generators(const GroupFamily& family, int field, std::vector<Quaternion> gens) {
  const auto expected = static_cast<std::size_t>(family.expected_order());
  for (const auto& g : gens) {
    if (!(g.norm() == Cyclotomic(field, 1)) || !g.is_real())
      throw GroupClosureError("generator " + g.str() + " is not a unit real quaternion");
  }

  std::map<Quaternion, bool> seen;
  std::deque<Quaternion> queue;
  const Quaternion id = Quaternion::one(field);
  seen.emplace(id, true);
  queue.push_back(id);
  while (!queue.empty()) {
    const Quaternion x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Quaternion y = x * g;
      if (seen.emplace(y, true).second) {
        if (seen.size() > 2 * expected)
          throw GroupClosureError(family.name() + ": closure exceeds twice the expected order");
        queue.push_back(std::move(y));
      }
    }
  }
  if (seen.size() != expected)
    throw GroupClosureError(family.name() + ": closure has " + std::to_string(seen.size()) +
                            " elements, expected " + std::to_string(expected));

  FiniteSubgroup g;
  g.family_ = family;
  g.field_order_ = field;
  g.generators_ = std::move(gens);
  g.elements_.reserve(seen.size());
  for (auto& [q, _] : seen) g.elements_.push_back(q);

  // Conjugation orbits under the generators.
  const std::size_t none = g.elements_.size();
  g.class_index_.assign(g.elements_.size(), none);
  std::vector<ConjugacyClass> classes;
  for (std::size_t start = 0; start < g.elements_.size(); ++start) {
    if (g.class_index_[start] != none) continue;
    ConjugacyClass cls;
    std::deque<std::size_t> frontier{start};
    g.class_index_[start] = classes.size();
    while (!frontier.empty()) {
      const std::size_t x = frontier.front();
      frontier.pop_front();
      cls.members.push_back(x);
      for (const auto& s : g.generators_) {
        for (const Quaternion& y : {s * g.elements_[x] * s.conjugate(), s.conjugate() * g.elements_[x] * s}) {
          const std::size_t iy = *g.index_of(y);
          if (g.class_index_[iy] == none) {
            g.class_index_[iy] = classes.size();
            frontier.push_back(iy);
          }
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();
    cls.trace = g.elements_[cls.representative].trace();
    int ord = 1;
    for (Quaternion p = g.elements_[cls.representative]; !(p == id); p = p * g.elements_[cls.representative]) ++ord;
    cls.element_order = ord;
    classes.push_back(std::move(cls));
  }

  std::sort(classes.begin(), classes.end(), [&](const ConjugacyClass& x, const ConjugacyClass& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    if (auto c = x.trace <=> y.trace; c != 0) return c < 0;
    return x.representative < y.representative;
  });
  std::map<int, int> letters;
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    auto& cls = classes[ci];
    const int letter = letters[cls.element_order]++;
    cls.label = std::to_string(cls.element_order) +
                (letter < 26 ? std::string(1, static_cast<char>('a' + letter)) : "_" + std::to_string(letter));
    for (auto m : cls.members) g.class_index_[m] = ci;
  }
  g.classes_ = std::move(classes);
  return g;
}

/// Closes fixed generator quaternions under exact multiplication and computes
/// conjugacy classes (sorted by size, then trace, then smallest member).
inline FiniteSubgroup build_group(const GroupFamily& family) {
  using namespace detail;
  switch (family.kind) {
    case FamilyKind::Cyclic: {
      if (family.parameter < 1) throw InputError("Cyclic(N) needs N >= 1");
      const int field = std::lcm(family.parameter, 4);
      return close_generators(family, field, {cos_sin_i(field, family.parameter, 1)});
    }
    case FamilyKind::BinaryDihedral: {
      if (family.parameter < 1) throw InputError("BinaryDihedral(n) needs n >= 1");
      const int field = std::lcm(2 * family.parameter, 4);
      return close_generators(family, field, {cos_sin_i(field, 2 * family.parameter, 1), unit(field, 2)});
    }
    case FamilyKind::BinaryTetrahedral: {
      const int field = 3;
      return close_generators(family, field, {unit(field, 1), hurwitz_unit(field)});
    }
    case FamilyKind::BinaryOctahedral: {
      const int field = 8;
      const Cyclotomic s = (Cyclotomic::zeta(8, 1) + Cyclotomic::zeta(8, -1)) * Rational(1, 2);  // 1/sqrt2
      return close_generators(family, field,
                              {hurwitz_unit(field), Quaternion{s, s, Cyclotomic(8), Cyclotomic(8)}});
    }
    case FamilyKind::BinaryIcosahedral: {
      const int field = 5;
      // psi = 2 cos(2 pi / 5) = 1/phi, phi = 1 + psi
      const Cyclotomic psi = Cyclotomic::zeta(5, 1) + Cyclotomic::zeta(5, -1);
      const Cyclotomic phi = psi + Cyclotomic(5, 1);
      const Rational half(1, 2);
      const Quaternion w{phi * half, Cyclotomic(5), psi * half, Cyclotomic(5, half)};
      return close_generators(family, field, {unit(field, 1), hurwitz_unit(field), w});
    }
  }
  throw InputError("unknown group family");
}

}  // namespace vogel::mckay
