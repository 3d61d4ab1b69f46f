#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>

#include "vogel/exact/laurent.hpp"
#include "vogel/vogel_plane.hpp"

namespace vogel {

/// f(x | alpha, beta, gamma) written as a finite sum  sum_e c_e q^e  with
/// q = exp(x/4) at the integer representative `scale`.
struct CharacterExpansion {
  std::map<std::int64_t, BigInt> coefficients;
  std::array<std::int64_t, 3> scale{};

  BigInt coefficient(std::int64_t e) const {
    auto it = coefficients.find(e);
    return it == coefficients.end() ? BigInt(0) : it->second;
  }

  bool is_palindromic() const {
    for (const auto& [e, c] : coefficients)
      if (coefficient(-e) != c) return false;
    return true;
  }
};

/// The universal character is not a finite sum of exponentials at this point.
class NotRegular : public Error {
 public:
  explicit NotRegular(LaurentPoly remainder)
      : Error("universal character has uncancelled poles; remainder " + remainder.str()),
        remainder_(std::move(remainder)) {}
  const LaurentPoly& remainder() const { return remainder_; }

 private:
  LaurentPoly remainder_;
};

namespace detail {

inline std::array<std::int64_t, 3> integer_scale(const VogelPoint& p) {
  return {to_int64(p.canonical()[0]), to_int64(p.canonical()[1]), to_int64(p.canonical()[2])};
}

inline std::int64_t abs_checked(std::int64_t v) {
  if (v == std::numeric_limits<std::int64_t>::min()) throw ExponentOverflow();
  return v < 0 ? -v : v;
}

/// alpha_i - 2t for each coordinate.
inline std::array<std::int64_t, 3> shifted(const std::array<std::int64_t, 3>& a) {
  const BigInt two_t = 2 * (BigInt(a[0]) + a[1] + a[2]);
  return {to_int64(a[0] - two_t), to_int64(a[1] - two_t), to_int64(a[2] - two_t)};
}

inline void require_nonzero(const std::array<std::int64_t, 3>& a) {
  for (auto v : a)
    if (v == 0) throw PoleError("universal character has a pole at a zero coordinate");
}

}  // namespace detail

/// Cancellation test: every cyclotomic factor Phi_d of the denominator
/// prod (q^{2|a_i|} - 1) must occur at least as often in the numerator
/// prod (q^{2|a_i - 2t|} - 1). Phi_1 and Phi_2 occur three times on both sides.
inline bool is_regular(const std::array<std::int64_t, 3>& a) {
  detail::require_nonzero(a);
  const auto shifted = detail::shifted(a);
  for (auto v : shifted)
    if (v == 0) return true;  // f vanishes identically

  std::array<std::int64_t, 3> num{}, den{};
  for (std::size_t i = 0; i < 3; ++i) {
    num[i] = detail::abs_checked(shifted[i]);
    den[i] = detail::abs_checked(a[i]);
  }
  std::set<std::int64_t> candidates;
  for (auto h : den) {
    const std::int64_t v = 2 * h;
    for (std::int64_t d = 1; d * d <= v; ++d) {
      if (v % d != 0) continue;
      candidates.insert(d);
      candidates.insert(v / d);
    }
  }
  for (auto d : candidates) {
    if (d < 3) continue;
    if (cyclotomic_multiplicity(den, d) > cyclotomic_multiplicity(num, d)) return false;
  }
  return true;
}

inline bool is_regular(const VogelPoint& p) { return is_regular(detail::integer_scale(p)); }

/// Expands prod sinh(x(a_i - 2t)/4) / sinh(x a_i/4) by exact Laurent division.
/// Throws NotRegular when the division leaves a remainder.
inline CharacterExpansion expand(const std::array<std::int64_t, 3>& a) {
  detail::require_nonzero(a);
  CharacterExpansion out;
  out.scale = a;
  const auto shifted = detail::shifted(a);
  for (auto v : shifted)
    if (v == 0) return out;

  int sign = 1;
  LaurentPoly num = LaurentPoly::monomial(0);
  LaurentPoly den = LaurentPoly::monomial(0);
  for (std::size_t i = 0; i < 3; ++i) {
    if ((shifted[i] < 0) != (a[i] < 0)) sign = -sign;
    num = num * LaurentPoly::antisymmetric(detail::abs_checked(shifted[i]));
    den = den * LaurentPoly::antisymmetric(detail::abs_checked(a[i]));
  }
  LaurentPoly quotient;
  try {
    quotient = exact_divide(num, den);
  } catch (const NonzeroRemainder& e) {
    throw NotRegular(e.remainder());
  }
  for (const auto& [e, c] : quotient.terms()) out.coefficients.emplace(e, sign < 0 ? BigInt(-c) : c);
  return out;
}

inline CharacterExpansion expand(const VogelPoint& p) { return expand(detail::integer_scale(p)); }

/// Value at x = 0.
inline BigInt dim_of(const CharacterExpansion& e) {
  BigInt sum = 0;
  for (const auto& [exp, c] : e.coefficients) sum += c;
  return sum;
}

/// Constant coefficient.
inline BigInt rank_of(const CharacterExpansion& e) { return e.coefficient(0); }

}  // namespace vogel
