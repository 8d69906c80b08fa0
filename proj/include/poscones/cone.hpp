#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace poscones {

// Rays and facets of a rational polyhedral cone, both kept primitive,
// deduplicated and lexicographically sorted. Facets give the inner
// description: v lies in the cone iff a.v >= 0 for every facet a. Facets
// are computed eagerly at construction, so membership never mutates.
// Cones need not be salient; a lineality direction u shows up as the
// facet pair {u', -u'} in the dual.
struct PolyCone {
  int ambient = 0;
  std::vector<ZVec> rays;
  std::vector<ZVec> facets;
};

namespace detail {

inline void canonicalize(std::vector<ZVec>& vs) {
  for (auto& v : vs) v = primitive(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

// Double description (Motzkin; lineality handling after Fukuda-Prodon):
// intersect halfspaces {a.x >= 0} one at a time, maintaining a lineality
// basis plus the extreme rays of the pointed quotient. Returns the pair
// (lineality basis, rays) generating {x : a.x >= 0 for all a}.
inline std::pair<std::vector<ZVec>, std::vector<ZVec>> double_description(
    const std::vector<ZVec>& inequalities, int ambient) {
  std::vector<ZVec> lin;
  for (int i = 0; i < ambient; ++i) {
    ZVec e(ambient, 0);
    e[i] = 1;
    lin.push_back(e);
  }
  std::vector<ZVec> rays;
  // zero-set bitmap per ray over the inequalities processed so far
  std::vector<std::vector<char>> zs;
  std::size_t processed = 0;

  for (const auto& a : inequalities) {
    if (static_cast<int>(a.size()) != ambient)
      throw DimMismatch("inequality of wrong dimension");
    ++processed;
    std::size_t pivot = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        pivot = i;
        break;
      }
    if (pivot < lin.size()) {
      // The halfspace cuts the lineality space: the pivot direction
      // becomes an ordinary ray and everything else is projected onto
      // the hyperplane {a = 0} along it. Previously processed
      // inequalities vanish on the lineality space, so the projection
      // r -> (a.u)r - (a.r)u (with a.u > 0) preserves every recorded
      // zero set.
      ZVec u = lin[pivot];
      if (dot(a, u) < 0)
        for (auto& x : u) x = -x;
      const Integer au = dot(a, u);
      lin.erase(lin.begin() + pivot);
      for (auto& w : lin) {
        const Integer aw = dot(a, w);
        for (int i = 0; i < ambient; ++i) w[i] = au * w[i] - aw * u[i];
        w = primitive(w);
      }
      for (auto& r : rays) {
        const Integer ar = dot(a, r);
        for (int i = 0; i < ambient; ++i) r[i] = au * r[i] - ar * u[i];
        r = primitive(r);
      }
      for (auto& z : zs) z.push_back(1);
      rays.push_back(primitive(u));
      std::vector<char> zu(processed, 1);
      zu.back() = 0;  // strictly positive on the new inequality
      zs.push_back(std::move(zu));
      continue;
    }

    std::vector<Integer> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) val[i] = dot(a, rays[i]);
    std::vector<ZVec> next;
    std::vector<std::vector<char>> next_zs;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      next.push_back(rays[i]);
      auto z = zs[i];
      z.push_back(val[i] == 0 ? 1 : 0);
      next_zs.push_back(std::move(z));
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t m = 0; m < rays.size(); ++m) {
        if (val[m] >= 0) continue;
        // combinatorial adjacency: no third ray's zero set contains
        // the common zero set of p and m
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t == p || t == m) continue;
          bool covers = true;
          for (std::size_t q = 0; q < zs[p].size() && covers; ++q)
            if (zs[p][q] && zs[m][q] && !zs[t][q]) covers = false;
          if (covers) adjacent = false;
        }
        if (!adjacent) continue;
        ZVec w(ambient);
        for (int i = 0; i < ambient; ++i)
          w[i] = val[p] * rays[m][i] - val[m] * rays[p][i];
        w = primitive(w);
        std::vector<char> z(zs[p].size() + 1, 0);
        for (std::size_t q = 0; q < zs[p].size(); ++q) z[q] = zs[p][q] && zs[m][q];
        z.back() = 1;
        next.push_back(std::move(w));
        next_zs.push_back(std::move(z));
      }
    }
    rays = std::move(next);
    zs = std::move(next_zs);
  }
  canonicalize(lin);
  canonicalize(rays);
  return {std::move(lin), std::move(rays)};
}

// Generators (rays, with lineality emitted as +/- pairs) of the cone
// {a : a.v >= 0 for every v}.
inline std::vector<ZVec> dual_generators(const std::vector<ZVec>& vectors,
                                         int ambient) {
  auto [lin, rays] = double_description(vectors, ambient);
  std::vector<ZVec> out = std::move(rays);
  for (const auto& u : lin) {
    out.push_back(u);
    ZVec neg(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) neg[i] = -u[i];
    out.push_back(std::move(neg));
  }
  canonicalize(out);
  return out;
}

}  // namespace detail

// Cone generated by the given integer vectors; facets computed at once.
inline PolyCone hull(std::vector<ZVec> generators, int ambient) {
  for (const auto& v : generators) {
    if (static_cast<int>(v.size()) != ambient)
      throw DimMismatch("generator of wrong dimension");
    if (is_zero(v)) throw ZeroVector("zero vector among cone generators");
  }
  detail::canonicalize(generators);
  PolyCone c;
  c.ambient = ambient;
  c.rays = std::move(generators);
  c.facets = detail::dual_generators(c.rays, ambient);
  return c;
}

inline PolyCone hull_q(const std::vector<QVec>& generators, int ambient) {
  std::vector<ZVec> zs;
  zs.reserve(generators.size());
  for (const auto& v : generators) zs.push_back(primitive_ray(v));
  return hull(std::move(zs), ambient);
}

inline bool member(const QVec& v, const PolyCone& c) {
  if (static_cast<int>(v.size()) != c.ambient)
    throw DimMismatch("membership query of wrong dimension");
  for (const auto& a : c.facets)
    if (dot(a, v) < 0) return false;
  return true;
}

inline bool member(const ZVec& v, const PolyCone& c) {
  return member(to_rational(v), c);
}

// Interior relative to the full ambient space; automatically false for
// cones that are not full-dimensional (their facets contain a +/- pair).
inline bool interior_member(const QVec& v, const PolyCone& c) {
  if (static_cast<int>(v.size()) != c.ambient)
    throw DimMismatch("membership query of wrong dimension");
  for (const auto& a : c.facets)
    if (dot(a, v) <= 0) return false;
  return true;
}

inline bool interior_member(const ZVec& v, const PolyCone& c) {
  return interior_member(to_rational(v), c);
}

inline std::optional<ZVec> violated_facet(const QVec& v, const PolyCone& c) {
  for (const auto& a : c.facets)
    if (dot(a, v) < 0) return a;
  return std::nullopt;
}

inline std::optional<ZVec> tight_facet(const QVec& v, const PolyCone& c) {
  for (const auto& a : c.facets)
    if (dot(a, v) == 0) return a;
  return std::nullopt;
}

// outer contains inner
inline bool contains(const PolyCone& outer, const PolyCone& inner) {
  if (outer.ambient != inner.ambient)
    throw DimMismatch("containment across different ambient spaces");
  for (const auto& r : inner.rays)
    if (!member(r, outer)) return false;
  return true;
}

inline bool cone_equal(const PolyCone& a, const PolyCone& b) {
  return contains(a, b) && contains(b, a);
}

inline bool is_salient(const PolyCone& c) {
  QMatrix m;
  for (const auto& a : c.facets) m.push_back(to_rational(a));
  return rank(m) == c.ambient;
}

inline bool is_fulldim(const PolyCone& c) {
  QMatrix m;
  for (const auto& r : c.rays) m.push_back(to_rational(r));
  return rank(m) == c.ambient;
}

// Minimal generating subset. For salient cones this is the unique set of
// extremal rays; in general it is the deterministic greedy reduction in
// canonical ray order.
inline std::vector<ZVec> extremal_rays(const PolyCone& c) {
  std::vector<ZVec> kept = c.rays;
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<ZVec> rest;
    rest.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) rest.push_back(kept[j]);
    const auto facets = detail::dual_generators(rest, c.ambient);
    bool redundant = true;
    for (const auto& a : facets)
      if (dot(a, kept[i]) < 0) {
        redundant = false;
        break;
      }
    if (redundant)
      kept.erase(kept.begin() + i);
    else
      ++i;
  }
  return kept;
}

// Dual cone under a pairing: {w : w^T P v >= 0 for every ray v}. P must
// be square and invertible (a nondegenerate intersection pairing).
inline PolyCone dual_cone(const PolyCone& c, const QMatrix& pairing) {
  check_rectangular(pairing);
  const std::size_t n = pairing.size();
  if (n == 0 || pairing[0].size() != n ||
      rank(pairing) != static_cast<int>(n))
    throw SingularPairing("pairing matrix is not square invertible");
  if (c.ambient != static_cast<int>(n))
    throw DimMismatch("pairing does not match the cone's ambient space");
  std::vector<ZVec> normals;
  normals.reserve(c.rays.size());
  for (const auto& v : c.rays) {
    QVec pv(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) pv[i] += pairing[i][j] * v[j];
    normals.push_back(primitive_ray(pv));
  }
  const auto gens = detail::dual_generators(normals, c.ambient);
  PolyCone d;
  d.ambient = c.ambient;
  d.rays = gens;
  d.facets = detail::dual_generators(d.rays, d.ambient);
  return d;
}

struct Inertia {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Exact eigenvalue sign counts of a symmetric rational matrix: Berkowitz
// characteristic polynomial plus Descartes' rule, which is exact here
// because symmetric matrices have real spectra.
inline Inertia inertia(const QMatrix& m) {
  check_rectangular(m);
  const int n = static_cast<int>(m.size());
  if (n > 0 && static_cast<int>(m[0].size()) != n)
    throw NotSymmetric("inertia of a non-square matrix");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m[i][j] != m[j][i]) throw NotSymmetric("matrix is not symmetric");
  Inertia out;
  if (n == 0) return out;
  const QVec cp = charpoly(m);  // det(xI - M), highest degree first
  int tail = 0;
  while (tail < n && cp[n - tail] == 0) ++tail;
  out.n_zero = tail;
  QVec reduced(cp.begin(), cp.end() - tail);
  out.n_plus = sign_changes(reduced);
  out.n_minus = n - out.n_zero - out.n_plus;
  return out;
}

}  // namespace poscones
