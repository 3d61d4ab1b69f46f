#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "vogel/exact/rational.hpp"

namespace vogel {

/// Laurent polynomial in q with big-integer coefficients and int64 exponents.
/// Zero coefficients are never stored; the empty map is 0.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, BigInt>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms) : terms_(std::move(terms)) { prune(); }

  static LaurentPoly monomial(std::int64_t exponent, BigInt coeff = 1) {
    Terms t;
    if (coeff != 0) t.emplace(exponent, std::move(coeff));
    return LaurentPoly(std::move(t));
  }

  /// q^a - q^-a.
  static LaurentPoly antisymmetric(std::int64_t a) {
    return monomial(a) - monomial(negate(a));
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  std::int64_t max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  BigInt coefficient(std::int64_t e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  LaurentPoly operator-() const {
    LaurentPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    Terms t = a.terms_;
    for (const auto& [e, c] : b.terms_) t[e] += c;
    return LaurentPoly(std::move(t));
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    Terms t;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) t[add(ea, eb)] += ca * cb;
    return LaurentPoly(std::move(t));
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// e.g. "q^4+q^2+1+q^-2+q^-4".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool neg = c < 0;
      const BigInt mag = neg ? BigInt(-c) : c;
      if (!out.empty() || neg) out += neg ? "-" : "+";
      if (e == 0) {
        out += mag.str();
        continue;
      }
      if (mag != 1) out += mag.str() + "*";
      out += e == 1 ? std::string("q") : "q^" + std::to_string(e);
    }
    return out;
  }

  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ExponentOverflow();
    return r;
  }
  static std::int64_t negate(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min()) throw ExponentOverflow();
    return -a;
  }

 private:
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }

  Terms terms_;
};

/// Thrown by exact_divide when the divisor does not divide the dividend in Z[q, 1/q].
class NonzeroRemainder : public Error {
 public:
  explicit NonzeroRemainder(LaurentPoly remainder)
      : Error("nonzero remainder " + remainder.str()), remainder_(std::move(remainder)) {}
  const LaurentPoly& remainder() const { return remainder_; }

 private:
  LaurentPoly remainder_;
};

/// Returns Q with Q * denom == numer exactly; throws NonzeroRemainder otherwise.
/// Both operands are shifted to ordinary polynomials with nonzero constant
/// term, then divided by descending long division over Z.
inline LaurentPoly exact_divide(const LaurentPoly& numer, const LaurentPoly& denom) {
  if (denom.is_zero()) throw DivisionByZero();
  if (numer.is_zero()) return {};

  const std::int64_t nlo = numer.min_exponent();
  const std::int64_t dlo = denom.min_exponent();
  const auto width = [](std::int64_t hi, std::int64_t lo) {
    std::int64_t w;
    if (__builtin_sub_overflow(hi, lo, &w)) throw ExponentOverflow();
    return static_cast<std::size_t>(w) + 1;
  };
  std::vector<BigInt> rem(width(numer.max_exponent(), nlo));
  std::vector<BigInt> div(width(denom.max_exponent(), dlo));
  for (const auto& [e, c] : numer.terms()) rem[static_cast<std::size_t>(e - nlo)] = c;
  for (const auto& [e, c] : denom.terms()) div[static_cast<std::size_t>(e - dlo)] = c;

  const std::int64_t shift = nlo - dlo;  // quotient exponent offset
  const auto remainder_poly = [&] {
    LaurentPoly::Terms t;
    for (std::size_t i = 0; i < rem.size(); ++i)
      if (rem[i] != 0) t.emplace(static_cast<std::int64_t>(i) + nlo, rem[i]);
    return LaurentPoly(std::move(t));
  };

  if (rem.size() < div.size()) throw NonzeroRemainder(numer);

  const BigInt& lead = div.back();
  const std::size_t dd = div.size() - 1;
  LaurentPoly::Terms quot;
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    BigInt q, r;
    boost::multiprecision::divide_qr(rem[i], lead, q, r);
    if (r != 0) throw NonzeroRemainder(remainder_poly());
    for (std::size_t j = 0; j <= dd; ++j)
      if (div[j] != 0) rem[i - dd + j] -= q * div[j];
    quot.emplace(LaurentPoly::add(static_cast<std::int64_t>(i - dd), shift), std::move(q));
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (rem[i] != 0) throw NonzeroRemainder(remainder_poly());
  return LaurentPoly(std::move(quot));
}

/// Number of i with d | 2 a_i, i.e. the multiplicity of Phi_d in prod_i (q^{2 a_i} - 1).
inline int cyclotomic_multiplicity(std::span<const std::int64_t> half_exponents, std::int64_t d) {
  if (d < 1) throw InputError("cyclotomic index must be positive");
  int count = 0;
  for (std::int64_t a : half_exponents) {
    if (a <= 0) throw InputError("half-exponents must be positive");
    if ((2 * a) % d == 0) ++count;
  }
  return count;
}

}  // namespace vogel
