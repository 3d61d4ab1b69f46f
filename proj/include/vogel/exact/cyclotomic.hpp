#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vogel/exact/rational.hpp"

namespace vogel {

namespace detail {

inline std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
/// Computed as (x^n - 1) / prod_{d | n, d < n} Phi_d and memoized.
inline const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<std::int64_t> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    // Exact division by a monic polynomial.
    const std::size_t dd = div.size() - 1;
    std::vector<std::int64_t> quot(poly.size() - dd, 0);
    for (std::size_t i = poly.size(); i-- > dd;) {
      const std::int64_t c = poly[i];
      quot[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * div[j];
    }
    poly = std::move(quot);
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(poly)).first->second;
}

inline int euler_phi(int n) { return static_cast<int>(cyclotomic_polynomial(n).size()) - 1; }

}  // namespace detail

/// An element of the cyclotomic field Q(zeta_N), zeta_N = exp(2 pi i / N),
/// stored in the power basis 1, z, ..., z^(phi(N)-1) modulo Phi_N.
/// Binary operations on elements of different orders lift both to the lcm.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int order)
      : order_(order), coeffs_(static_cast<std::size_t>(check_order(order)), Rational()) {}
  Cyclotomic(int order, const Rational& value) : Cyclotomic(order) { coeffs_[0] = value; }

  /// zeta_N^k for any integer k.
  static Cyclotomic zeta(int order, std::int64_t k) {
    return from_terms(order, {{detail::mod_floor(k, order), Rational(1)}});
  }

  /// Sum of c * z^e over arbitrary integer exponents, reduced.
  static Cyclotomic from_terms(int order, const std::vector<std::pair<std::int64_t, Rational>>& terms) {
    check_order(order);
    std::vector<Rational> dense(static_cast<std::size_t>(order));
    for (const auto& [e, c] : terms) dense[static_cast<std::size_t>(detail::mod_floor(e, order))] += c;
    return Cyclotomic(order, reduce(order, std::move(dense)));
  }

  int order() const { return order_; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return false;
    return true;
  }
  /// Constant coefficient; meaningful as the value only when is_rational().
  const Rational& rational_part() const { return coeffs_[0]; }

  /// Re-express in Q(zeta_M) for a multiple M of the current order.
  Cyclotomic lift(int new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0)
      throw InputError("cannot lift Q(zeta_" + std::to_string(order_) + ") to Q(zeta_" +
                       std::to_string(new_order) + ")");
    const std::int64_t step = new_order / order_;
    std::vector<std::pair<std::int64_t, Rational>> terms;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) terms.emplace_back(static_cast<std::int64_t>(i) * step, coeffs_[i]);
    return from_terms(new_order, terms);
  }

  /// Complex conjugation z -> z^-1.
  Cyclotomic conj() const {
    std::vector<std::pair<std::int64_t, Rational>> terms;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) terms.emplace_back(-static_cast<std::int64_t>(i), coeffs_[i]);
    return from_terms(order_, terms);
  }

  Cyclotomic operator-() const {
    Cyclotomic r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) return common(a, b, [](const auto& x, const auto& y) { return x + y; });
    Cyclotomic r(a);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) return common(a, b, [](const auto& x, const auto& y) { return x * y; });
    const std::size_t n = a.coeffs_.size();
    std::vector<Rational> prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b.coeffs_[j].is_zero()) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Cyclotomic(a.order_, reduce(a.order_, std::move(prod)));
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Rational& s) {
    Cyclotomic r(a);
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }
  friend Cyclotomic operator*(const Rational& s, const Cyclotomic& a) { return a * s; }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) {
      const int l = std::lcm(a.order_, b.order_);
      return a.lift(l).coeffs_ == b.lift(l).coeffs_;
    }
    return a.coeffs_ == b.coeffs_;
  }
  /// Total order on canonical forms (lexicographic on coefficients at the common order).
  /// Has no arithmetic meaning; used for deterministic sorting and map keys.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) {
      const int l = std::lcm(a.order_, b.order_);
      return a.lift(l) <=> b.lift(l);
    }
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  /// Renders as a sum of terms in z, e.g. "1/2+z-3*z^2"; "0" for zero.
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Rational& c = coeffs_[i];
      if (c.is_zero()) continue;
      std::string mag = (c.sign() < 0 ? -c : c).str();
      if (!out.empty() || c.sign() < 0) out += c.sign() < 0 ? "-" : "+";
      if (i == 0) {
        out += mag;
      } else {
        if (mag != "1") out += mag + "*";
        out += i == 1 ? std::string("z") : "z^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

  /// Parses the syntax produced by str(): terms [+-][rational][*]z[^int], any
  /// exponent allowed (reduced mod N then mod Phi_N). No whitespace.
  static Cyclotomic parse(int order, std::string_view text) {
    std::vector<std::pair<std::int64_t, Rational>> terms;
    std::size_t i = 0;
    auto fail = [&] { throw ParseError("malformed cyclotomic '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    while (i < text.size()) {
      bool neg = false;
      if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
      } else if (i != 0) {
        fail();
      }
      std::size_t j = i;
      while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
      const bool have_num = j > i;
      Rational coeff(1);
      if (have_num) coeff = Rational::parse(text.substr(i, j - i));
      i = j;
      std::int64_t exp = 0;
      bool have_z = false;
      if (i < text.size() && text[i] == '*') {
        ++i;
        if (!have_num || i >= text.size() || text[i] != 'z') fail();
      }
      if (i < text.size() && text[i] == 'z') {
        ++i;
        have_z = true;
        exp = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          std::size_t k = i;
          if (k < text.size() && text[k] == '-') ++k;
          const std::size_t start = k;
          while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
          if (k == start) fail();
          exp = std::stoll(std::string(text.substr(i, k - i)));
          i = k;
        }
      }
      if (!have_num && !have_z) fail();
      terms.emplace_back(exp, neg ? -coeff : coeff);
    }
    return from_terms(order, terms);
  }

 private:
  Cyclotomic(int order, std::vector<Rational> reduced) : order_(order), coeffs_(std::move(reduced)) {}

  static int check_order(int order) {
    if (order < 1) throw InputError("cyclotomic order must be positive");
    return detail::euler_phi(order);
  }

  template <class Op>
  static Cyclotomic common(const Cyclotomic& a, const Cyclotomic& b, Op op) {
    const int l = std::lcm(a.order_, b.order_);
    return op(a.lift(l), b.lift(l));
  }

  /// Reduces a dense coefficient vector (any length) modulo Phi_N.
  static std::vector<Rational> reduce(int order, std::vector<Rational> dense) {
    const auto& phi = detail::cyclotomic_polynomial(order);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = dense.size(); i-- > deg;) {
      if (dense[i].is_zero()) continue;
      const Rational c = dense[i];
      for (std::size_t j = 0; j < deg; ++j)
        if (phi[j] != 0) dense[i - deg + j] -= c * Rational(phi[j]);
      dense[i] = Rational();
    }
    dense.resize(deg);
    return dense;
  }

  int order_;
  std::vector<Rational> coeffs_;
};

}  // namespace vogel
