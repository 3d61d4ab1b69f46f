#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vogel/error.hpp"
#include "vogel/mckay/character_table.hpp"

namespace vogel::mckay {

/// Multiplicity graph of V (x) V_i = sum_j m_ij V_j. Nodes follow the irreducible order.
struct McKayGraph {
  std::vector<std::string> labels;
  std::vector<std::int64_t> degrees;
  std::vector<std::vector<std::int64_t>> adjacency;

  std::size_t size() const { return degrees.size(); }

  bool symmetric() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (adjacency[i][j] != adjacency[j][i]) return false;
    return true;
  }

  bool connected() const {
    if (size() == 0) return false;
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const auto i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < size(); ++j)
        if (adjacency[i][j] != 0 && !seen[j]) seen[j] = true, stack.push_back(j);
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

  /// sum_j m_ij deg(j) = 2 deg(i) for every node.
  bool dimension_count_holds() const {
    for (std::size_t i = 0; i < size(); ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < size(); ++j) s += adjacency[i][j] * degrees[j];
      if (s != 2 * degrees[i]) return false;
    }
    return true;
  }

  /// Weighted valence: sum of the row.
  std::int64_t valence(std::size_t i) const {
    std::int64_t s = 0;
    for (auto v : adjacency[i]) s += v;
    return s;
  }
};

/// m_ij = (1/|G|) sum_C |C| chi_V(C) chi_i(C) conj(chi_j(C)), chi_V read off quaternion traces.
/// Throws ConsistencyError if an entry is not a nonnegative rational integer or the
/// result is not a symmetric connected graph satisfying the dimension count.
inline McKayGraph mckay_matrix(const FiniteSubgroup& g, const CharacterTable& t) {
  const std::size_t k = t.irreps.size();
  std::vector<Cyclotomic> chi_v;
  for (const auto& c : g.classes()) chi_v.push_back(c.trace.lift(t.field_order));

  McKayGraph out;
  out.adjacency.assign(k, std::vector<std::int64_t>(k, 0));
  for (const auto& r : t.irreps) {
    out.labels.push_back(r.label);
    out.degrees.push_back(r.degree);
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Cyclotomic sum(t.field_order);
      for (std::size_t c = 0; c < k; ++c)
        sum = sum + chi_v[c] * t.irreps[i].values[c] * t.irreps[j].values[c].conj() * Rational(t.class_sizes[c]);
      sum = sum * Rational(1, t.group_order);
      if (!sum.is_rational() || !sum.rational_part().is_integer() || sum.rational_part().sign() < 0)
        throw ConsistencyError(g.family().name() + ": McKay entry m(" + t.irreps[i].label + "," + t.irreps[j].label +
                               ") = " + sum.str() + " is not a nonnegative integer");
      out.adjacency[i][j] = to_int64(sum.rational_part().num());
    }
  if (!out.symmetric()) throw ConsistencyError(g.family().name() + ": McKay matrix is not symmetric");
  if (!out.connected()) throw ConsistencyError(g.family().name() + ": McKay graph is disconnected");
  if (!out.dimension_count_holds()) throw ConsistencyError(g.family().name() + ": dimension count fails");
  return out;
}

inline McKayGraph mckay_matrix(const FiniteSubgroup& g) { return mckay_matrix(g, character_table(g)); }

enum class AffineSeries { A, D, E };

struct AffineDiagram {
  AffineSeries series = AffineSeries::A;
  int rank = 0;  // finite rank; the affine diagram has rank + 1 nodes

  /// Finite type obtained by dropping the affine node, e.g. "E_8".
  std::string finite_label() const {
    const char* s = series == AffineSeries::A ? "A" : series == AffineSeries::D ? "D" : "E";
    return std::string(s) + "_" + std::to_string(rank);
  }
  /// Kac notation, e.g. "E_8^(1)".
  std::string affine_label() const { return finite_label() + "^(1)"; }

  friend bool operator==(const AffineDiagram&, const AffineDiagram&) = default;
};

class NoMatch : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

inline constexpr std::size_t kMaxDiagramNodes = 16;

namespace detail {

using Matrix = std::vector<std::vector<std::int64_t>>;

inline void add_edge(Matrix& m, std::size_t a, std::size_t b, std::int64_t w = 1) {
  if (a == b) {
    m[a][a] += w;
    return;
  }
  m[a][b] += w;
  m[b][a] += w;
}

/// Star with three arms of the given lengths around a centre node 0.
inline Matrix star(std::size_t a, std::size_t b, std::size_t c) {
  const std::size_t n = 1 + a + b + c;
  Matrix m(n, std::vector<std::int64_t>(n, 0));
  std::size_t next = 1;
  for (auto len : {a, b, c}) {
    std::size_t prev = 0;
    for (std::size_t i = 0; i < len; ++i) add_edge(m, prev, next), prev = next++;
  }
  return m;
}

inline Matrix cycle(std::size_t n) {
  Matrix m(n, std::vector<std::int64_t>(n, 0));
  if (n == 1) m[0][0] = 2;
  else if (n == 2) add_edge(m, 0, 1, 2);
  else
    for (std::size_t i = 0; i < n; ++i) add_edge(m, i, (i + 1) % n);
  return m;
}

/// D_k^(1): a path of k-3 nodes with two leaves hanging off each end (k >= 4).
inline Matrix affine_d(std::size_t k) {
  const std::size_t n = k + 1, path = k - 3;
  Matrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i + 1 < path; ++i) add_edge(m, i, i + 1);
  add_edge(m, 0, path);
  add_edge(m, 0, path + 1);
  add_edge(m, path - 1, path + 2);
  add_edge(m, path - 1, path + 3);
  return m;
}

inline bool isomorphic(const Matrix& x, const Matrix& y) {
  const std::size_t n = x.size();
  if (y.size() != n) return false;
  auto signature = [](const Matrix& m, std::size_t i) {
    std::vector<std::int64_t> row = m[i];
    const std::int64_t loop = row[i];
    row.erase(row.begin() + static_cast<std::ptrdiff_t>(i));
    std::sort(row.begin(), row.end());
    row.push_back(loop);
    return row;
  };
  std::vector<std::vector<std::int64_t>> sx(n), sy(n);
  for (std::size_t i = 0; i < n; ++i) sx[i] = signature(x, i), sy[i] = signature(y, i);
  {
    auto a = sx, b = sy;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  std::vector<std::size_t> map(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || sx[i] != sy[j]) continue;
      bool ok = true;
      for (std::size_t p = 0; p < i && ok; ++p) ok = x[i][p] == y[j][map[p]];
      if (!ok) continue;
      map[i] = j;
      used[j] = true;
      if (extend(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return extend(0);
}

}  // namespace detail

/// Affine diagrams with the given node count: A_{n-1}^(1), D_{n-1}^(1) and the E-types.
inline std::vector<std::pair<AffineDiagram, detail::Matrix>> affine_templates(std::size_t nodes) {
  std::vector<std::pair<AffineDiagram, detail::Matrix>> out;
  if (nodes == 0) return out;
  out.push_back({{AffineSeries::A, static_cast<int>(nodes) - 1}, detail::cycle(nodes)});
  if (nodes >= 5) out.push_back({{AffineSeries::D, static_cast<int>(nodes) - 1}, detail::affine_d(nodes - 1)});
  if (nodes == 7) out.push_back({{AffineSeries::E, 6}, detail::star(2, 2, 2)});
  if (nodes == 8) out.push_back({{AffineSeries::E, 7}, detail::star(1, 3, 3)});
  if (nodes == 9) out.push_back({{AffineSeries::E, 8}, detail::star(1, 2, 5)});
  return out;
}

/// Exact isomorphism match against the affine templates. Throws InputError
/// above kMaxDiagramNodes nodes and NoMatch when no template fits.
inline AffineDiagram identify_affine_diagram(const McKayGraph& g) {
  if (g.size() > kMaxDiagramNodes)
    throw InputError("diagram identification is limited to " + std::to_string(kMaxDiagramNodes) + " nodes");
  for (const auto& [label, m] : affine_templates(g.size()))
    if (detail::isomorphic(g.adjacency, m)) return label;
  throw NoMatch("McKay graph with " + std::to_string(g.size()) + " nodes matches no affine ADE diagram");
}

}  // namespace vogel::mckay
