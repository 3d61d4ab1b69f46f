#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "vogel/error.hpp"

namespace vogel {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / big_gcd(a, b) * b);
}

/// Checked narrowing of a big integer to int64.
inline std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw InputError("integer " + v.str() + " does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

/// Exact rational number, always reduced with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}        // NOLINT(google-explicit-constructor)
  Rational(long v) : num_(v), den_(1) {}       // NOLINT(google-explicit-constructor)
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DivisionByZero();
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  Rational operator-() const { return Rational(-num_, den_, Reduced{}); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) return Rational(a.num_ + b.num_, 1, Reduced{});
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) return Rational(a.num_ - b.num_, 1, Reduced{});
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) return Rational(a.num_ * b.num_, 1, Reduced{});
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DivisionByZero();
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p" or "p/q".
  std::string str() const {
    return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
  }

  /// Parses "p", "-p", "p/q". Throws ParseError on malformed text.
  static Rational parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
      std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      if (i == s.size()) throw ParseError("malformed rational '" + std::string(text) + "'");
      for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
          throw ParseError("malformed rational '" + std::string(text) + "'");
      return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw DivisionByZero();
    return Rational(parse_int(text.substr(0, slash)), std::move(den));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  struct Reduced {};
  Rational(BigInt num, BigInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = big_gcd(boost::multiprecision::abs(num_), den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

}  // namespace vogel
