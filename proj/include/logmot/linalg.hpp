#pragma once

#include <optional>
#include <vector>

#include "logmot/errors.hpp"
#include "logmot/integer.hpp"

namespace logmot {

using IntMatrix = std::vector<std::vector<Integer>>;

namespace linalg {

inline Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

// Rank over Q by rational Gaussian elimination.
inline int rank_of(IntMatrix m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) a[i][j] = Rational(m[i][j]);

  int rank = 0;
  for (size_t col = 0; col < cols && static_cast<size_t>(rank) < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == static_cast<size_t>(rank) || a[i][col] == 0) continue;
      Rational f = a[i][col] / a[rank][col];
      for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Solve sum_j x_j columns[j] = target over Q. Columns must be linearly
// independent (the simplicial-cone case); returns nullopt when inconsistent.
inline std::optional<std::vector<Rational>> solve_columns(
    const IntMatrix& columns, const std::vector<Integer>& target) {
  const size_t k = columns.size();
  const size_t n = target.size();
  // Augmented n x (k+1) system.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k + 1));
  for (size_t j = 0; j < k; ++j) {
    if (columns[j].size() != n) throw domain_violation("column dimension mismatch");
    for (size_t i = 0; i < n; ++i) a[i][j] = Rational(columns[j][i]);
  }
  for (size_t i = 0; i < n; ++i) a[i][k] = Rational(target[i]);

  std::vector<int> pivot_row_of(k, -1);
  size_t row = 0;
  for (size_t col = 0; col < k && row < n; ++col) {
    size_t pivot = row;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(a[pivot], a[row]);
    for (size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col] / a[row][col];
      for (size_t j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_row_of[col] = static_cast<int>(row);
    ++row;
  }
  // A column without a pivot means dependent generators.
  for (size_t col = 0; col < k; ++col)
    if (pivot_row_of[col] < 0)
      throw domain_violation("solve_columns requires independent columns");
  // Consistency: remaining rows must be zero = zero.
  for (size_t i = row; i < n; ++i)
    if (a[i][k] != 0) return std::nullopt;

  std::vector<Rational> x(k);
  for (size_t col = 0; col < k; ++col) {
    int r = pivot_row_of[col];
    x[col] = a[r][k] / a[r][col];
  }
  return x;
}

// Diagonal of the Smith normal form, with the divisibility chain enforced.
inline std::vector<Integer> smith_diagonal(IntMatrix m) {
  if (m.empty() || m[0].empty()) return {};
  const size_t rows = m.size(), cols = m[0].size();
  const size_t steps = std::min(rows, cols);

  for (size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Pick the nonzero entry of least absolute value in the working block.
      size_t pi = t, pj = t;
      Integer best = 0;
      for (size_t i = t; i < rows; ++i)
        for (size_t j = t; j < cols; ++j) {
          Integer a = m[i][j] < 0 ? Integer(-m[i][j]) : m[i][j];
          if (a != 0 && (best == 0 || a < best)) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) break;  // block is zero
      std::swap(m[pi], m[t]);
      for (size_t i = 0; i < rows; ++i) std::swap(m[i][pj], m[i][t]);

      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        Integer q = m[i][t] / m[t][t];
        if (q != 0)
          for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        Integer q = m[t][j] / m[t][t];
        if (q != 0)
          for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
  }

  std::vector<Integer> d;
  for (size_t t = 0; t < steps; ++t) {
    Integer v = m[t][t] < 0 ? Integer(-m[t][t]) : m[t][t];
    if (v != 0) d.push_back(v);
  }
  // Divisibility chain d_i | d_{i+1} via gcd/lcm swaps.
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j)
      if (d[j] % d[i] != 0) {
        Integer g = gcd(d[i], d[j]);
        Integer l = d[i] / g * d[j];
        d[i] = g;
        d[j] = l;
      }
  return d;
}

// One linear constraint a . x >= rhs with integer data.
struct LinearConstraint {
  std::vector<Integer> a;
  Integer rhs;
};

inline void normalize(LinearConstraint& c) {
  Integer g = 0;
  for (const Integer& v : c.a) g = gcd(g, v);
  g = gcd(g, c.rhs);
  if (g > 1) {
    for (Integer& v : c.a) v /= g;
    c.rhs /= g;
  }
}

// Fourier-Motzkin elimination. Exact and exponential in the worst case, which
// is fine at the problem sizes fans reach here (n <= 4, tens of constraints).
inline bool fm_feasible(std::vector<LinearConstraint> cs, int nvars) {
  for (int var = 0; var < nvars; ++var) {
    std::vector<LinearConstraint> keep, pos, neg;
    for (auto& c : cs) {
      if (c.a[var] == 0)
        keep.push_back(std::move(c));
      else if (c.a[var] > 0)
        pos.push_back(std::move(c));
      else
        neg.push_back(std::move(c));
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        LinearConstraint combo;
        combo.a.resize(nvars);
        Integer mp = -n.a[var];  // > 0
        Integer mn = p.a[var];   // > 0
        for (int j = 0; j < nvars; ++j) combo.a[j] = mp * p.a[j] + mn * n.a[j];
        combo.rhs = mp * p.rhs + mn * n.rhs;
        normalize(combo);
        keep.push_back(std::move(combo));
      }
    cs = std::move(keep);
  }
  for (const auto& c : cs)
    if (c.rhs > 0) return false;
  return true;
}

}  // namespace linalg
}  // namespace logmot
