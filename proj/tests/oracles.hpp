#pragma once

// Independent reference implementations used only to cross-check the
// library: multivariate root-splitting polynomials, the Pieri rule, and
// congruence diagonalization. None of these share code with the library
// paths they certify.

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "poscones/poscones.hpp"

namespace oracle {

using poscones::Inertia;
using poscones::Integer;
using poscones::Partition;
using poscones::QMatrix;
using poscones::QVec;
using poscones::Rational;
using poscones::ZVec;

// ---------------------------------------------------------------------
// multivariate polynomials over Q, dense exponent-vector representation

struct MultiPoly {
  int nvars = 0;
  std::map<std::vector<int>, Rational> terms;

  static MultiPoly zero(int n) { return MultiPoly{n, {}}; }

  static MultiPoly constant(int n, const Rational& c) {
    MultiPoly p{n, {}};
    if (c != 0) p.terms[std::vector<int>(n, 0)] = c;
    return p;
  }

  static MultiPoly var(int n, int i) {
    MultiPoly p{n, {}};
    std::vector<int> e(n, 0);
    e[i] = 1;
    p.terms[std::move(e)] = 1;
    return p;
  }

  MultiPoly operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms) {
      auto it = r.terms.find(e);
      if (it == r.terms.end()) {
        r.terms.emplace(e, c);
      } else {
        it->second += c;
        if (it->second == 0) r.terms.erase(it);
      }
    }
    return r;
  }

  MultiPoly operator-(const MultiPoly& o) const {
    return *this + Rational(-1) * o;
  }

  friend MultiPoly operator*(const Rational& s, const MultiPoly& p) {
    MultiPoly r{p.nvars, {}};
    if (s == 0) return r;
    for (const auto& [e, c] : p.terms) r.terms[e] = s * c;
    return r;
  }

  MultiPoly operator*(const MultiPoly& o) const {
    MultiPoly r{nvars, {}};
    for (const auto& [e1, c1] : terms)
      for (const auto& [e2, c2] : o.terms) {
        std::vector<int> e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
        auto it = r.terms.find(e);
        if (it == r.terms.end()) {
          r.terms.emplace(std::move(e), c1 * c2);
        } else {
          it->second += c1 * c2;
          if (it->second == 0) r.terms.erase(it);
        }
      }
    return r;
  }

  MultiPoly pow(int k) const {
    MultiPoly r = constant(nvars, 1);
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
  }

  bool is_zero() const { return terms.empty(); }
  bool operator==(const MultiPoly& o) const {
    return nvars == o.nvars && terms == o.terms;
  }
};

// e_k of the given values (any polynomials), by subset enumeration
inline MultiPoly elementary_of(const std::vector<MultiPoly>& vals, int k,
                               int nvars) {
  if (k == 0) return MultiPoly::constant(nvars, 1);
  const int m = static_cast<int>(vals.size());
  if (k > m) return MultiPoly::zero(nvars);
  MultiPoly sum = MultiPoly::zero(nvars);
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    MultiPoly prod = MultiPoly::constant(nvars, 1);
    for (int i : idx) prod = prod * vals[i];
    sum = sum + prod;
    int p = k - 1;
    while (p >= 0 && idx[p] == m - k + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return sum;
}

// h_k of the given values, by multiset enumeration
inline MultiPoly complete_of(const std::vector<MultiPoly>& vals, int k,
                             int nvars) {
  if (k == 0) return MultiPoly::constant(nvars, 1);
  MultiPoly sum = MultiPoly::zero(nvars);
  const int m = static_cast<int>(vals.size());
  if (m == 0) return sum;
  std::vector<int> idx(k, 0);  // nondecreasing index tuples
  for (;;) {
    MultiPoly prod = MultiPoly::constant(nvars, 1);
    for (int i : idx) prod = prod * vals[i];
    sum = sum + prod;
    int p = k - 1;
    while (p >= 0 && idx[p] == m - 1) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[p];
  }
  return sum;
}

// Schur polynomial s_lambda(x_1..x_e) via the h-form Jacobi-Trudi
// determinant, expanded by permutations. Independent of the library's
// c-form determinant.
inline MultiPoly schur_of_roots(const Partition& la,
                                const std::vector<MultiPoly>& roots,
                                int nvars) {
  const int ell = la.length();
  if (ell == 0) return MultiPoly::constant(nvars, 1);
  std::vector<int> perm(ell);
  for (int i = 0; i < ell; ++i) perm[i] = i;
  MultiPoly det = MultiPoly::zero(nvars);
  do {
    int inversions = 0;
    for (int i = 0; i < ell; ++i)
      for (int j = i + 1; j < ell; ++j)
        if (perm[i] > perm[j]) ++inversions;
    MultiPoly prod =
        MultiPoly::constant(nvars, inversions % 2 == 0 ? 1 : -1);
    bool dead = false;
    for (int i = 0; i < ell && !dead; ++i) {
      const int m = la.part(i) + perm[i] - i;
      if (m < 0) {
        dead = true;
        break;
      }
      prod = prod * complete_of(roots, m, nvars);
    }
    if (!dead) det = det + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Expand a formal Chern/Segre polynomial into root variables: bundle
// symbols named `bundle` split into roots x_0..x_{e-1}; the symbol
// c_1(line) becomes the extra variable t (index e). Chern classes go to
// elementary symmetrics, Segre classes of E to (-1)^j h_j (from
// s(E) = 1/c(E)).
inline MultiPoly split_poly(const poscones::FormalChernPoly& p,
                            const std::string& bundle, int e,
                            const std::string& line) {
  const int nvars = e + 1;
  std::vector<MultiPoly> roots;
  for (int i = 0; i < e; ++i) roots.push_back(MultiPoly::var(nvars, i));
  const MultiPoly t = MultiPoly::var(nvars, e);
  MultiPoly out = MultiPoly::zero(nvars);
  for (const auto& [mono, coeff] : p.terms()) {
    MultiPoly term = MultiPoly::constant(nvars, coeff);
    for (const auto& [v, exp] : mono) {
      MultiPoly value = MultiPoly::zero(nvars);
      if (v.bundle == bundle) {
        if (v.segre) {
          value = Rational(v.index % 2 == 0 ? 1 : -1) *
                  complete_of(roots, v.index, nvars);
        } else {
          value = elementary_of(roots, v.index, nvars);
        }
      } else if (v.bundle == line && v.index == 1 && !v.segre) {
        value = t;
      } else {
        throw std::runtime_error("split_poly: unexpected symbol");
      }
      term = term * value.pow(exp);
    }
    out = out + term;
  }
  return out;
}

// ---------------------------------------------------------------------
// Pieri rule

inline bool horizontal_strip(const Partition& nu, const Partition& la) {
  if (!poscones::contains(nu, la)) return false;
  // columns gain at most one box: nu_{i+1} <= la_i
  for (int i = 0; i + 1 < nu.length(); ++i)
    if (nu.part(i + 1) > la.part(i)) return false;
  return true;
}

inline bool vertical_strip(const Partition& nu, const Partition& la) {
  if (!poscones::contains(nu, la)) return false;
  for (int i = 0; i < nu.length(); ++i)
    if (nu.part(i) - la.part(i) > 1) return false;
  return true;
}

// c^nu_{la, (m)} and c^nu_{la, (1^m)} by the Pieri rule
inline long pieri_row_coeff(const Partition& nu, const Partition& la, int m) {
  if (nu.weight() != la.weight() + m) return 0;
  return horizontal_strip(nu, la) ? 1 : 0;
}

inline long pieri_col_coeff(const Partition& nu, const Partition& la, int m) {
  if (nu.weight() != la.weight() + m) return 0;
  return vertical_strip(nu, la) ? 1 : 0;
}

// ---------------------------------------------------------------------
// inertia via congruence diagonalization (symmetric Gaussian reduction)

inline Inertia inertia_by_congruence(QMatrix m) {
  const int n = static_cast<int>(m.size());
  Inertia out;
  int cur = 0;
  auto add_sym = [&](int dst, int src, const Rational& c) {
    for (int j = 0; j < n; ++j) m[dst][j] += c * m[src][j];
    for (int i = 0; i < n; ++i) m[i][dst] += c * m[i][src];
  };
  auto swap_sym = [&](int a, int b) {
    if (a == b) return;
    std::swap(m[a], m[b]);
    for (int i = 0; i < n; ++i) std::swap(m[i][a], m[i][b]);
  };
  while (cur < n) {
    int pivot = -1;
    for (int i = cur; i < n && pivot < 0; ++i)
      if (m[i][i] != 0) pivot = i;
    if (pivot < 0) {
      int oi = -1, oj = -1;
      for (int i = cur; i < n && oi < 0; ++i)
        for (int j = i + 1; j < n && oi < 0; ++j)
          if (m[i][j] != 0) {
            oi = i;
            oj = j;
          }
      if (oi < 0) {
        out.n_zero += n - cur;
        return out;
      }
      add_sym(oi, oj, 1);  // diagonal entry becomes 2*m[oi][oj] != 0
      pivot = oi;
    }
    swap_sym(pivot, cur);
    const Rational p = m[cur][cur];
    if (p > 0)
      ++out.n_plus;
    else
      ++out.n_minus;
    for (int r = cur + 1; r < n; ++r) {
      if (m[r][cur] == 0) continue;
      add_sym(r, cur, -m[r][cur] / p);
    }
    ++cur;
  }
  return out;
}

// ---------------------------------------------------------------------
// seeded randomness helpers

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen);
  }
  ZVec zvec(int n, int lo, int hi) {
    ZVec v;
    for (int i = 0; i < n; ++i) v.push_back(Integer(uniform(lo, hi)));
    return v;
  }
  QMatrix symmetric(int n, int lo, int hi) {
    QMatrix m(n, QVec(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m[i][j] = m[j][i] = Rational(uniform(lo, hi));
    return m;
  }
  // random integer matrix with determinant ±1 (product of elementary ops)
  QMatrix unimodular(int n, int ops) {
    QMatrix m(n, QVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    for (int t = 0; t < ops; ++t) {
      int i = uniform(0, n - 1), j = uniform(0, n - 1);
      if (i == j) continue;
      const Rational c = Rational(uniform(-2, 2));
      for (int k = 0; k < n; ++k) m[i][k] += c * m[j][k];
    }
    return m;
  }
};

}  // namespace oracle
