#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "vogel/exact/cyclotomic.hpp"

namespace vogel::mckay {

/// a + b i + c j + d k with components in a common cyclotomic field. Group
/// elements have real components (fixed by complex conjugation), so the
/// quaternion conjugate is the inverse of a unit and 2a is the SU(2) trace.
struct Quaternion {
  Cyclotomic a, b, c, d;

  static Quaternion scalar(int order, const Rational& r) {
    return {Cyclotomic(order, r), Cyclotomic(order), Cyclotomic(order), Cyclotomic(order)};
  }
  static Quaternion one(int order) { return scalar(order, 1); }

  int order() const { return a.order(); }

  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
            x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
            x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
  }
  Quaternion operator-() const { return {-a, -b, -c, -d}; }
  Quaternion conjugate() const { return {a, -b, -c, -d}; }

  Cyclotomic norm() const { return a * a.conj() + b * b.conj() + c * c.conj() + d * d.conj(); }
  Cyclotomic trace() const { return a * Rational(2); }
  bool is_real() const { return a == a.conj() && b == b.conj() && c == c.conj() && d == d.conj(); }

  Quaternion lift(int new_order) const {
    return {a.lift(new_order), b.lift(new_order), c.lift(new_order), d.lift(new_order)};
  }

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
  friend std::strong_ordering operator<=>(const Quaternion& x, const Quaternion& y) {
    if (auto r = x.a <=> y.a; r != 0) return r;
    if (auto r = x.b <=> y.b; r != 0) return r;
    if (auto r = x.c <=> y.c; r != 0) return r;
    return x.d <=> y.d;
  }

  /// "a;b;c;d" with each component in Cyclotomic::str() syntax.
  std::string str() const { return a.str() + ";" + b.str() + ";" + c.str() + ";" + d.str(); }

  static Quaternion parse(int order, std::string_view text) {
    Cyclotomic parts[4];
    std::size_t start = 0;
    for (int i = 0; i < 4; ++i) {
      const auto end = text.find(';', start);
      if ((i < 3) == (end == std::string_view::npos))
        throw ParseError("quaternion needs four ';'-separated components: '" + std::string(text) + "'");
      parts[i] = Cyclotomic::parse(order, text.substr(start, end == std::string_view::npos ? text.npos : end - start));
      start = end + 1;
    }
    return {parts[0], parts[1], parts[2], parts[3]};
  }
};

}  // namespace vogel::mckay
