#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "vogel/error.hpp"
#include "vogel/exact/rational.hpp"

namespace vogel::dio {

using Triple = std::array<std::int64_t, 3>;

/// c_knm*knm = c_kn*kn + c_km*km + c_nm*nm + c_k*k + c_n*n + c_m*m + c_0
struct TrilinearEquation {
  std::string name;
  std::string display;
  std::int64_t c_knm = 0, c_kn = 0, c_km = 0, c_nm = 0, c_k = 0, c_n = 0, c_m = 0, c_0 = 0;
  bool symmetric = false;

  /// LHS - RHS, evaluated exactly.
  BigInt residual(const Triple& t) const {
    const BigInt k = t[0], n = t[1], m = t[2];
    return c_knm * k * n * m - (c_kn * k * n + c_km * k * m + c_nm * n * m + c_k * k + c_n * n +
                                c_m * m + c_0);
  }

  bool coefficients_symmetric() const {
    return c_kn == c_km && c_km == c_nm && c_k == c_n && c_n == c_m;
  }
};

namespace detail {
inline TrilinearEquation make_equation(std::string name, std::string display,
                                       std::array<std::int64_t, 8> c, bool symmetric) {
  TrilinearEquation eq{std::move(name), std::move(display), c[0], c[1], c[2], c[3],
                       c[4],            c[5],               c[6], c[7], symmetric};
  if (eq.coefficients_symmetric() != symmetric)
    throw DataIntegrityError("symmetric flag of " + eq.name + " disagrees with its coefficients");
  return eq;
}
}  // namespace detail

/// The main equation followed by the six sibling cancellation-pattern equations.
/// Coefficient order: knm, kn, km, nm, k, n, m, constant.
inline const std::vector<TrilinearEquation>& equation_catalog() {
  using detail::make_equation;
  static const std::vector<TrilinearEquation> catalog = {
      make_equation("main", "knm = 2kn + 2km + 2nm", {1, 2, 2, 2, 0, 0, 0, 0}, true),
      make_equation("pattern2", "kmn = mn + 2kn + 2km", {1, 2, 2, 1, 0, 0, 0, 0}, false),
      make_equation("pattern3", "kmn = mn + 2kn + 2km + 2n - 2k", {1, 2, 2, 1, -2, 2, 0, 0}, false),
      make_equation("pattern4", "kmn = mn + kn + 2km + 3n + 2k", {1, 1, 2, 1, 2, 3, 0, 0}, false),
      make_equation("pattern5", "kmn = mn + 2kn + 2km + 2n + 2m - 3k - 5",
                    {1, 2, 2, 1, -3, 2, 2, -5}, false),
      make_equation("pattern6", "kmn = 2mn + 2kn + 2km - 2n - 3m", {1, 2, 2, 2, 0, -2, -3, 0}, false),
      make_equation("pattern7", "kmn = 2mn + 2kn + 2km - 2n - 2m - 2k + 5",
                    {1, 2, 2, 2, -2, -2, -2, 5}, true),
  };
  return catalog;
}

inline const TrilinearEquation& main_equation() { return equation_catalog().front(); }

/// Looks up by name; "pattern1" is an alias of "main".
inline const TrilinearEquation& find_equation(std::string_view name) {
  if (name == "pattern1") return main_equation();
  for (const auto& eq : equation_catalog())
    if (eq.name == name) return eq;
  throw UnknownName("unknown equation '" + std::string(name) + "'");
}

inline bool is_solution(const TrilinearEquation& eq, const Triple& t) { return eq.residual(t) == 0; }

struct SolutionTriple {
  Triple values{};
  std::string equation;

  std::int64_t k() const { return values[0]; }
  std::int64_t n() const { return values[1]; }
  std::int64_t m() const { return values[2]; }

  friend bool operator==(const SolutionTriple&, const SolutionTriple&) = default;
  friend auto operator<=>(const SolutionTriple&, const SolutionTriple&) = default;
};

/// Canonical representative of a permutation orbit: sorted descending.
inline Triple canonical_order(Triple t) {
  std::sort(t.begin(), t.end(), std::greater<>());
  return t;
}

inline constexpr std::int64_t kMaxBound = 1'000'000;

namespace detail {

inline std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

/// Solutions with the first variable k in [k_lo, k_hi]. For symmetric
/// equations only orbits with |k| <= |n| <= |m| are visited, and each hit is
/// canonicalized; otherwise every (k, n) pair is visited.
inline std::set<Triple> enumerate_slice(const TrilinearEquation& eq, std::int64_t bound,
                                        bool allow_zeros, std::int64_t k_lo, std::int64_t k_hi) {
  std::set<Triple> out;
  auto emit = [&](std::int64_t k, std::int64_t n, std::int64_t m) {
    if (!allow_zeros && (k == 0 || n == 0 || m == 0)) return;
    out.insert(eq.symmetric ? canonical_order({k, n, m}) : Triple{k, n, m});
  };
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    const std::int64_t n_min = eq.symmetric ? abs64(k) : 0;
    for (std::int64_t n = -bound; n <= bound; ++n) {
      if (abs64(n) < n_min) continue;
      const std::int64_t m_min = eq.symmetric ? abs64(n) : 0;
      // residual = m*A - B
      const __int128 kn = static_cast<__int128>(k) * n;
      const __int128 a = eq.c_knm * kn - eq.c_km * static_cast<__int128>(k) -
                         eq.c_nm * static_cast<__int128>(n) - eq.c_m;
      const __int128 b = eq.c_kn * kn + eq.c_k * static_cast<__int128>(k) +
                         eq.c_n * static_cast<__int128>(n) + eq.c_0;
      if (a == 0) {
        if (b != 0) continue;
        for (std::int64_t m = -bound; m <= bound; ++m)
          if (abs64(m) >= m_min) emit(k, n, m);
        continue;
      }
      if (b % a != 0) continue;
      const __int128 m = b / a;
      if (m > bound || m < -bound) continue;
      const auto m64 = static_cast<std::int64_t>(m);
      if (abs64(m64) < m_min) continue;
      emit(k, n, m64);
    }
  }
  return out;
}

}  // namespace detail

/// Every solution with max(|k|,|n|,|m|) <= bound. Symmetric equations return one
/// representative per permutation orbit (sorted descending). Output is sorted
/// descending lexicographically.
inline std::vector<SolutionTriple> enumerate(const TrilinearEquation& eq, std::int64_t bound,
                                             bool allow_zeros) {
  if (bound < 1 || bound > kMaxBound)
    throw InputError("bound must be in [1, " + std::to_string(kMaxBound) + "]");

  constexpr std::int64_t kParallelThreshold = 400;
  std::set<Triple> all;
  if (bound < kParallelThreshold) {
    all = detail::enumerate_slice(eq, bound, allow_zeros, -bound, bound);
  } else {
    const std::int64_t chunks = 8;
    const std::int64_t span = 2 * bound + 1;
    std::vector<std::future<std::set<Triple>>> parts;
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::int64_t lo = -bound + span * c / chunks;
      const std::int64_t hi = -bound + span * (c + 1) / chunks - 1;
      parts.push_back(std::async(std::launch::async, [&eq, bound, allow_zeros, lo, hi] {
        return detail::enumerate_slice(eq, bound, allow_zeros, lo, hi);
      }));
    }
    for (auto& p : parts) all.merge(p.get());
  }

  std::vector<SolutionTriple> result;
  result.reserve(all.size());
  for (auto it = all.rbegin(); it != all.rend(); ++it) result.push_back({*it, eq.name});
  return result;
}

enum class SolutionKind { PolygonFamily, ZeroFamily, Isolated };

inline std::string_view to_string(SolutionKind k) {
  switch (k) {
    case SolutionKind::PolygonFamily: return "polygon-family";
    case SolutionKind::ZeroFamily: return "zero-family";
    case SolutionKind::Isolated: return "isolated";
  }
  return "?";
}

struct SolutionClassification {
  SolutionKind kind = SolutionKind::Isolated;
  std::optional<std::int64_t> family_parameter;
  /// A zero entry outside the (0,0,m) family.
  bool degenerate = false;

  friend bool operator==(const SolutionClassification&, const SolutionClassification&) = default;
};

/// Family membership of a main-equation solution.
inline SolutionClassification classify(const SolutionTriple& sol) {
  if (sol.equation != main_equation().name)
    throw InputError("classification is defined only for the main equation, got " + sol.equation);
  if (!is_solution(main_equation(), sol.values))
    throw InputError("triple does not solve the main equation");

  const auto& v = sol.values;
  const auto zeros = std::count(v.begin(), v.end(), 0);
  if (zeros >= 2) return {SolutionKind::ZeroFamily, std::nullopt, false};
  for (int i = 0; i < 3; ++i) {
    const std::int64_t a = v[(i + 1) % 3], b = v[(i + 2) % 3];
    if (v[i] == 2 && a == -b && a != 0)
      return {SolutionKind::PolygonFamily, detail::abs64(a), false};
  }
  return {SolutionKind::Isolated, std::nullopt, zeros > 0};
}

/// Isolated permutation classes of the main equation within bound (15 once bound >= 42).
inline std::vector<SolutionTriple> isolated_solutions(std::int64_t bound) {
  std::vector<SolutionTriple> out;
  for (auto& s : enumerate(main_equation(), bound, false))
    if (classify(s).kind == SolutionKind::Isolated) out.push_back(std::move(s));
  return out;
}

}  // namespace vogel::dio
