#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace poscones {

inline void check_rectangular(const QMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.front().size())
      throw DimMismatch("matrix rows have unequal lengths");
}

inline QMatrix transpose(const QMatrix& m) {
  if (m.empty()) return {};
  check_rectangular(m);
  QMatrix t(m.front().size(), QVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

inline QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  if (a.empty() || b.empty()) return {};
  check_rectangular(a);
  check_rectangular(b);
  if (a.front().size() != b.size())
    throw DimMismatch("mat_mul: inner dimensions differ");
  QMatrix c(a.size(), QVec(b.front().size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b.front().size(); ++j)
        c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// Rank by Gaussian elimination; exact over the rationals.
inline int rank(QMatrix m) {
  if (m.empty()) return 0;
  check_rectangular(m);
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

inline Rational det(QMatrix m) {
  if (m.empty()) return 1;
  check_rectangular(m);
  if (m.size() != m.front().size()) throw DimMismatch("det: matrix not square");
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

// Characteristic polynomial det(xI - A) by the Berkowitz/Samuelson
// recursion: division-free, so no pivoting decisions can hide a sign.
// Returns coefficients highest degree first; the leading one is 1.
inline QVec charpoly(const QMatrix& a) {
  if (!a.empty()) {
    check_rectangular(a);
    if (a.size() != a.front().size())
      throw DimMismatch("charpoly: matrix not square");
  }
  const std::size_t n = a.size();
  QVec c{1};
  for (std::size_t r = 1; r <= n; ++r) {
    // Toeplitz column for the leading r x r block:
    // (1, -a[r-1][r-1], -R C, -R M C, ..., -R M^{r-2} C)
    // with M the (r-1) x (r-1) block, R the row below it, C the column
    // to its right.
    QVec t(r + 1);
    t[0] = 1;
    t[1] = -a[r - 1][r - 1];
    QVec v(r - 1);
    for (std::size_t i = 0; i + 1 < r; ++i) v[i] = a[i][r - 1];
    for (std::size_t m = 2; m <= r; ++m) {
      Rational s = 0;
      for (std::size_t i = 0; i + 1 < r; ++i) s += a[r - 1][i] * v[i];
      t[m] = -s;
      if (m < r) {
        QVec w(r - 1, 0);
        for (std::size_t i = 0; i + 1 < r; ++i) {
          for (std::size_t j = 0; j + 1 < r; ++j) w[i] += a[i][j] * v[j];
        }
        v = std::move(w);
      }
    }
    QVec nc(r + 1, 0);
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = 0; j < c.size() && j <= i; ++j)
        nc[i] += t[i - j] * c[j];
    c = std::move(nc);
  }
  return c;
}

// Number of sign changes in the nonzero entries. For a real-rooted
// polynomial (e.g. the characteristic polynomial of a symmetric matrix)
// Descartes' rule is exact, so this counts positive roots with
// multiplicity.
inline int sign_changes(const QVec& coeffs) {
  int changes = 0, last = 0;
  for (const auto& q : coeffs) {
    if (q == 0) continue;
    int s = q > 0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace poscones
