#pragma once

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "vogel/error.hpp"
#include "vogel/mckay/character_data.hpp"
#include "vogel/mckay/group.hpp"

namespace vogel::mckay {

struct Irrep {
  std::string label;
  std::int64_t degree = 0;
  std::vector<Cyclotomic> values;  // one per class, in FiniteSubgroup::classes() order
};

/// Columns follow the class order of the group the table was built for.
struct CharacterTable {
  int field_order = 1;
  std::int64_t group_order = 0;
  std::vector<std::string> class_labels;
  std::vector<std::int64_t> class_sizes;
  std::vector<Irrep> irreps;

  std::vector<std::int64_t> degrees() const {
    std::vector<std::int64_t> out;
    for (const auto& r : irreps) out.push_back(r.degree);
    return out;
  }
};

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline constexpr int kCharacterTableVersion = 1;

namespace detail {

struct RawClass {
  std::string label;
  std::int64_t size = 0;
  std::string representative;
};

struct RawIrrep {
  std::string label;
  std::vector<std::string> values;
};

struct RawGroup {
  std::string name;
  std::int64_t order = 0;
  int field = 0;
  std::vector<RawClass> classes;
  std::vector<RawIrrep> irreps;
};

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline std::int64_t parse_count(const std::string& s, int line_no) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used == s.size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw DataIntegrityError("character data line " + std::to_string(line_no) + ": bad count '" + s + "'");
}

inline std::vector<RawGroup> parse_character_data(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::size_t start = 0;
    while (start < text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      lines.emplace_back(text.substr(start, end - start));
      start = end + 1;
    }
  }
  if (lines.size() < 2) throw DataIntegrityError("character data: missing header");
  const auto version = split_ws(lines[0]);
  if (version.size() != 2 || version[0] != "version" || version[1] != std::to_string(kCharacterTableVersion))
    throw DataIntegrityError("character data: unsupported version line '" + lines[0] + "'");
  const auto checksum = split_ws(lines[1]);
  if (checksum.size() != 3 || checksum[0] != "checksum" || checksum[1] != "fnv1a64")
    throw DataIntegrityError("character data: malformed checksum line");
  const std::size_t body_start = lines[0].size() + 1 + lines[1].size() + 1;
  const std::string_view body = body_start <= text.size() ? text.substr(body_start) : std::string_view{};
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(body)));
  if (checksum[2] != hex)
    throw DataIntegrityError("character data: checksum mismatch (stored " + checksum[2] + ", computed " + hex + ")");

  std::vector<RawGroup> groups;
  RawGroup* open = nullptr;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    const auto w = split_ws(lines[i]);
    if (w.empty() || w[0].front() == '#') continue;
    auto fail = [&](const std::string& why) {
      return DataIntegrityError("character data line " + std::to_string(line_no) + ": " + why);
    };
    if (w[0] == "group") {
      if (open) throw fail("nested group");
      if (w.size() != 6 || w[2] != "order" || w[4] != "field") throw fail("malformed group line");
      groups.push_back({w[1], parse_count(w[3], line_no), static_cast<int>(parse_count(w[5], line_no)), {}, {}});
      open = &groups.back();
    } else if (w[0] == "class") {
      if (!open || !open->irreps.empty()) throw fail("class line outside a group header");
      if (w.size() != 4) throw fail("malformed class line");
      open->classes.push_back({w[1], parse_count(w[2], line_no), w[3]});
    } else if (w[0] == "irrep") {
      if (!open) throw fail("irrep line outside a group");
      if (w.size() != open->classes.size() + 2) throw fail("irrep needs one value per class");
      open->irreps.push_back({w[1], {w.begin() + 2, w.end()}});
    } else if (w[0] == "end") {
      if (!open) throw fail("unmatched end");
      open = nullptr;
    } else {
      throw fail("unknown record '" + w[0] + "'");
    }
  }
  if (open) throw DataIntegrityError("character data: group " + open->name + " not terminated");
  return groups;
}

inline Cyclotomic inner_product(const CharacterTable& t, const std::vector<Cyclotomic>& x,
                                const std::vector<Cyclotomic>& y) {
  Cyclotomic sum(t.field_order);
  for (std::size_t c = 0; c < x.size(); ++c) sum = sum + x[c] * y[c].conj() * Rational(t.class_sizes[c]);
  return sum * Rational(1, t.group_order);
}

}  // namespace detail

/// Checks the table invariants and agreement with the group: class sizes,
/// trivial first row, integral degrees with sum of squares |G|, exact row and
/// column orthogonality, and a 2-dimensional row equal to the trace of V.
/// Throws DataIntegrityError on the first failure.
inline void validate(const CharacterTable& t, const FiniteSubgroup& g) {
  auto fail = [&](const std::string& why) { return DataIntegrityError(g.family().name() + ": " + why); };
  const auto& classes = g.classes();
  const std::size_t k = classes.size();
  if (t.class_sizes.size() != k || t.class_labels.size() != k) throw fail("class count mismatch");
  if (t.irreps.size() != k) throw fail("number of irreducibles differs from number of classes");
  if (t.group_order != static_cast<std::int64_t>(g.order())) throw fail("group order mismatch");
  std::int64_t total = 0;
  for (std::size_t c = 0; c < k; ++c) {
    if (t.class_sizes[c] != static_cast<std::int64_t>(classes[c].size())) throw fail("class size mismatch");
    total += t.class_sizes[c];
  }
  if (total != t.group_order) throw fail("class sizes do not sum to the order");

  const std::size_t id = g.class_of(*g.index_of(Quaternion::one(g.field_order())));
  std::int64_t squares = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& r = t.irreps[i];
    if (r.values.size() != k) throw fail("irrep " + r.label + " has the wrong number of values");
    if (r.degree <= 0 || !(r.values[id] == Cyclotomic(t.field_order, r.degree)))
      throw fail("irrep " + r.label + " degree is not a positive integer equal to chi(1)");
    squares += r.degree * r.degree;
  }
  if (squares != t.group_order) throw fail("sum of squared degrees differs from the order");
  for (const auto& v : t.irreps.front().values)
    if (!(v == Cyclotomic(t.field_order, 1))) throw fail("first irreducible is not trivial");

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const Cyclotomic ip = detail::inner_product(t, t.irreps[i].values, t.irreps[j].values);
      if (!(ip == Cyclotomic(t.field_order, i == j ? 1 : 0)))
        throw fail("rows " + t.irreps[i].label + " and " + t.irreps[j].label + " are not orthonormal");
    }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      Cyclotomic sum(t.field_order);
      for (const auto& r : t.irreps) sum = sum + r.values[a] * r.values[b].conj();
      const Rational expected = a == b ? Rational(t.group_order, t.class_sizes[a]) : Rational(0);
      if (!(sum == Cyclotomic(t.field_order, expected)))
        throw fail("columns " + t.class_labels[a] + " and " + t.class_labels[b] + " are not orthogonal");
    }

  bool found_v = false;
  for (const auto& r : t.irreps) {
    if (r.degree != 2) continue;
    bool same = true;
    for (std::size_t c = 0; c < k && same; ++c) same = r.values[c] == classes[c].trace.lift(t.field_order);
    found_v = found_v || same;
  }
  const bool reducible_v = t.irreps.size() == g.order();  // abelian: V splits into two characters
  if (!found_v && !reducible_v) throw fail("no 2-dimensional row matches the traces of V");
}

namespace detail {

inline CharacterTable skeleton(const FiniteSubgroup& g, int field) {
  CharacterTable t;
  t.field_order = field;
  t.group_order = static_cast<std::int64_t>(g.order());
  for (const auto& c : g.classes()) {
    t.class_labels.push_back(c.label);
    t.class_sizes.push_back(static_cast<std::int64_t>(c.size()));
  }
  return t;
}

inline CharacterTable cyclic_table(const FiniteSubgroup& g) {
  const int n = g.family().parameter;
  const int field = g.field_order();
  const Quaternion& x = g.generators().front();
  std::vector<std::int64_t> power(g.order());  // class index -> exponent a with element x^a
  Quaternion p = Quaternion::one(field);
  for (int a = 0; a < n; ++a, p = p * x) power[g.class_of(*g.index_of(p))] = a;

  CharacterTable t = skeleton(g, field);
  for (int j = 0; j < n; ++j) {
    Irrep r{"chi" + std::to_string(j), 1, {}};
    for (std::size_t c = 0; c < g.classes().size(); ++c)
      r.values.push_back(Cyclotomic::zeta(field, (field / n) * ((j * power[c]) % n)));
    t.irreps.push_back(std::move(r));
  }
  return t;
}

inline CharacterTable binary_dihedral_table(const FiniteSubgroup& g) {
  const int n = g.family().parameter;
  const int field = g.field_order();
  const Quaternion& x = g.generators()[0];
  const Quaternion& y = g.generators()[1];
  struct Word {
    std::int64_t a = 0;
    bool with_y = false;
  };
  std::vector<Word> word(g.classes().size());  // class index -> representative word x^a y^b
  std::vector<bool> seen(g.classes().size(), false);
  Quaternion p = Quaternion::one(field);
  for (int a = 0; a < 2 * n; ++a, p = p * x)
    for (bool b : {false, true}) {
      const auto ci = g.class_of(*g.index_of(b ? p * y : p));
      if (!seen[ci]) word[ci] = {a, b}, seen[ci] = true;
    }

  CharacterTable t = skeleton(g, field);
  const Cyclotomic one(field, 1);
  const Cyclotomic i = Cyclotomic::zeta(field, field / 4);
  struct Linear {
    int s;
    Cyclotomic u;
    std::string label;
  };
  std::vector<Linear> linear = {{1, one, "1"}, {1, -one, "1a"}};
  if (n % 2 == 0) {
    linear.push_back({-1, one, "1b"});
    linear.push_back({-1, -one, "1c"});
  } else {
    linear.push_back({-1, i, "1b"});
    linear.push_back({-1, -i, "1c"});
  }
  for (const auto& l : linear) {
    Irrep r{l.label, 1, {}};
    for (const auto& w : word) {
      Cyclotomic v = (l.s < 0 && w.a % 2 != 0) ? -one : one;
      if (w.with_y) v = v * l.u;
      r.values.push_back(v);
    }
    t.irreps.push_back(std::move(r));
  }
  const std::int64_t step = field / (2 * n);
  for (int h = 1; h < n; ++h) {
    Irrep r{"2_" + std::to_string(h), 2, {}};
    for (const auto& w : word)
      r.values.push_back(w.with_y ? Cyclotomic(field)
                                  : Cyclotomic::zeta(field, step * h * w.a) + Cyclotomic::zeta(field, -step * h * w.a));
    t.irreps.push_back(std::move(r));
  }
  return t;
}

inline CharacterTable embedded_table(const FiniteSubgroup& g, std::string_view data) {
  const std::string name = g.family().name();
  for (const auto& raw : parse_character_data(data)) {
    if (raw.name != name) continue;
    if (raw.order != static_cast<std::int64_t>(g.order()) || raw.field != g.field_order())
      throw DataIntegrityError(name + ": stored order or field disagrees with the group");
    const std::size_t k = g.classes().size();
    if (raw.classes.size() != k) throw DataIntegrityError(name + ": stored class count disagrees with the group");

    std::vector<std::size_t> column(k);  // stored column -> group class
    std::vector<bool> hit(k, false);
    for (std::size_t c = 0; c < k; ++c) {
      Quaternion rep;
      try {
        rep = Quaternion::parse(raw.field, raw.classes[c].representative);
      } catch (const ParseError& e) {
        throw DataIntegrityError(name + ": class " + raw.classes[c].label + ": " + e.what());
      }
      const auto idx = g.index_of(rep);
      if (!idx) throw DataIntegrityError(name + ": class " + raw.classes[c].label + " representative is not in the group");
      column[c] = g.class_of(*idx);
      if (hit[column[c]]) throw DataIntegrityError(name + ": two stored classes name the same conjugacy class");
      hit[column[c]] = true;
      if (raw.classes[c].size != static_cast<std::int64_t>(g.classes()[column[c]].size()))
        throw DataIntegrityError(name + ": class " + raw.classes[c].label + " has the wrong size");
    }

    CharacterTable t = skeleton(g, raw.field);
    for (std::size_t c = 0; c < k; ++c) t.class_labels[column[c]] = raw.classes[c].label;
    for (const auto& ri : raw.irreps) {
      Irrep r{ri.label, 0, std::vector<Cyclotomic>(k)};
      for (std::size_t c = 0; c < k; ++c) {
        try {
          r.values[column[c]] = Cyclotomic::parse(raw.field, ri.values[c]);
        } catch (const ParseError& e) {
          throw DataIntegrityError(name + ": irrep " + ri.label + ": " + e.what());
        }
      }
      const std::size_t id = g.class_of(*g.index_of(Quaternion::one(raw.field)));
      const auto& v = r.values[id];
      if (!v.is_rational() || !v.rational_part().is_integer())
        throw DataIntegrityError(name + ": irrep " + ri.label + " has a non-integral degree");
      r.degree = to_int64(v.rational_part().num());
      t.irreps.push_back(std::move(r));
    }
    return t;
  }
  throw DataIntegrityError("no stored character table for " + name);
}

}  // namespace detail

/// Character table of g, validated against the group. Cyclic and binary
/// dihedral tables come from closed formulas; 2T, 2O and 2I from `data`
/// (the embedded asset by default).
inline CharacterTable character_table(const FiniteSubgroup& g, std::string_view data = kCharacterTables) {
  CharacterTable t;
  switch (g.family().kind) {
    case FamilyKind::Cyclic: t = detail::cyclic_table(g); break;
    case FamilyKind::BinaryDihedral: t = detail::binary_dihedral_table(g); break;
    default: t = detail::embedded_table(g, data);
  }
  validate(t, g);
  return t;
}

}  // namespace vogel::mckay
