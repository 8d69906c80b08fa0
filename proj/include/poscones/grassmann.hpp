#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chern.hpp"

namespace poscones {

inline std::string schubert_name(const Partition& p) {
  return p.empty() ? std::string("1") : "s" + p.to_string();
}

struct Grassmannian {
  int k = 0;  // subspace dimension
  int n = 0;  // ambient dimension
  RingPtr ring;
};

// Schubert basis of G(k,n): partitions in the k x (n-k) box, listed per
// codimension in descending-lex order; products by Littlewood-Richardson.
inline Grassmannian make_grassmannian(int k, int n) {
  if (k < 1 || k >= n) throw ModelError("grassmannian needs 1 <= k < n");
  const int cols = n - k;
  const int dim = k * cols;
  std::vector<std::vector<Partition>> levels(dim + 1);
  NumericalRing::Data d;
  d.dimension = dim;
  d.description = "G(" + std::to_string(k) + "," + std::to_string(n) + ")";
  d.basis.resize(dim + 1);
  for (int c = 0; c <= dim; ++c) {
    levels[c] = partitions_in_box(k, cols, c);
    for (const auto& p : levels[c]) d.basis[c].push_back(schubert_name(p));
  }
  d.point_index = 0;  // the box itself is the unique codim-dim partition
  for (int ci = 1; ci <= dim; ++ci) {
    for (int cj = ci; ci + cj <= dim; ++cj) {
      auto& slot = d.products[{ci, cj}];
      slot.reserve(levels[ci].size() * levels[cj].size());
      for (const auto& la : levels[ci]) {
        for (const auto& mu : levels[cj]) {
          SparseClass out;
          for (std::size_t t = 0; t < levels[ci + cj].size(); ++t) {
            const long c = lr_coefficient(levels[ci + cj][t], la, mu);
            if (c != 0) out.emplace_back(static_cast<int>(t), Rational(c));
          }
          slot.push_back(std::move(out));
        }
      }
    }
  }
  return Grassmannian{k, n, NumericalRing::create(std::move(d))};
}

inline RingClass schubert_class(const Grassmannian& g, const Partition& p) {
  if (!p.fits_in_box(g.k, g.n - g.k))
    throw BoxViolation("partition " + p.to_string() + " does not fit in the " +
                       std::to_string(g.k) + "x" + std::to_string(g.n - g.k) +
                       " box");
  return RingClass::monomial(g.ring, schubert_name(p));
}

inline RingClass lr_multiply(const Grassmannian& g, const Partition& la,
                             const Partition& mu) {
  return schubert_class(g, la) * schubert_class(g, mu);
}

// Universal quotient bundle Q (rank n-k, c_i = sigma_(i)) and R, the dual
// of the universal subbundle (rank k, c_i = sigma_(1^i)); both globally
// generated as quotients of the trivial bundle.
inline BundleEnv tautological_bundles(const Grassmannian& g) {
  const int cols = g.n - g.k;
  MixedClass cq = MixedClass::one(g.ring);
  for (int i = 1; i <= cols; ++i)
    cq.set_component(schubert_class(g, Partition(std::vector<int>{i})));
  MixedClass cr = MixedClass::one(g.ring);
  for (int i = 1; i <= g.k; ++i)
    cr.set_component(schubert_class(g, Partition(std::vector<int>(i, 1))));
  BundleEnv env;
  env.emplace("Q", make_bundle("Q", cols, std::move(cq), true));
  env.emplace("R", make_bundle("R", g.k, std::move(cr), true));
  return env;
}

namespace detail {

inline std::string join_product_name(const std::vector<std::string>& parts) {
  bool all_one = true;
  for (const auto& s : parts)
    if (s != "1") {
      all_one = false;
      break;
    }
  if (all_one) return "1";
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += "⊗";
    out += s;
  }
  return out;
}

// factor product including the cases the stored tables omit
inline SparseClass factor_product(const NumericalRing& r, int ci, int i,
                                  int cj, int j) {
  if (ci + cj > r.dimension()) return {};
  if (ci == 0) return {{j, 1}};
  if (cj == 0) return {{i, 1}};
  return r.structure(ci, i, cj, j);
}

}  // namespace detail

// Kuenneth product of numerical rings. Basis monomials are tensors of
// factor monomials, named by joining the factor names with U+2297 (all-1
// tuples collapse to "1"). Within one codimension, factor-codim
// compositions are listed in descending lex order and, within a
// composition, factor indices run like an odometer with the last factor
// fastest. Degree of a pure tensor is the product of factor degrees.
inline RingPtr product_ring(const std::vector<RingPtr>& factors) {
  if (factors.empty()) throw ModelError("product of no factors");
  for (const auto& f : factors)
    if (!f) throw ModelError("null factor ring");
  const int m = static_cast<int>(factors.size());
  int dim = 0;
  std::string desc;
  for (const auto& f : factors) {
    dim += f->dimension();
    if (!desc.empty()) desc += " x ";
    desc += f->description();
  }

  // per codim: list of (composition, per-factor indices), plus name table
  struct Mono {
    std::vector<int> comp;
    std::vector<int> idx;
  };
  std::vector<std::vector<Mono>> monos(dim + 1);
  std::map<std::vector<int>, int> lookup;  // comp ++ idx -> index in its codim

  NumericalRing::Data d;
  d.dimension = dim;
  d.description = desc;
  d.basis.resize(dim + 1);

  // compositions of c in descending lex order via backtracking
  for (int c = 0; c <= dim; ++c) {
    std::vector<int> comp(m);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
      if (pos == m) {
        if (remaining != 0) return;
        std::vector<int> idx(m, 0);
        while (true) {
          std::vector<std::string> names;
          names.reserve(m);
          for (int f = 0; f < m; ++f)
            names.push_back(factors[f]->basis(comp[f])[idx[f]]);
          std::vector<int> key = comp;
          key.insert(key.end(), idx.begin(), idx.end());
          lookup[key] = static_cast<int>(monos[c].size());
          monos[c].push_back({comp, idx});
          d.basis[c].push_back(detail::join_product_name(names));
          int f = m - 1;
          while (f >= 0 && ++idx[f] == factors[f]->basis_size(comp[f])) {
            idx[f] = 0;
            --f;
          }
          if (f < 0) break;
        }
        return;
      }
      int rest_cap = 0;
      for (int f = pos + 1; f < m; ++f) rest_cap += factors[f]->dimension();
      const int hi = std::min(remaining, factors[pos]->dimension());
      const int lo = std::max(0, remaining - rest_cap);
      for (int v = hi; v >= lo; --v) {
        comp[pos] = v;
        self(self, pos + 1, remaining - v);
      }
    };
    rec(rec, 0, c);
  }

  {
    std::vector<int> key;
    for (int f = 0; f < m; ++f) key.push_back(factors[f]->dimension());
    for (int f = 0; f < m; ++f) key.push_back(factors[f]->point_index());
    d.point_index = lookup.at(key);
  }

  for (int ci = 1; ci <= dim; ++ci) {
    for (int cj = ci; ci + cj <= dim; ++cj) {
      auto& slot = d.products[{ci, cj}];
      slot.reserve(monos[ci].size() * monos[cj].size());
      for (const auto& a : monos[ci]) {
        for (const auto& b : monos[cj]) {
          // distribute the per-factor sparse products
          std::vector<SparseClass> parts(m);
          bool dead = false;
          for (int f = 0; f < m && !dead; ++f) {
            parts[f] = detail::factor_product(*factors[f], a.comp[f], a.idx[f],
                                              b.comp[f], b.idx[f]);
            if (parts[f].empty()) dead = true;
          }
          SparseClass out;
          if (!dead) {
            std::map<int, Rational> acc;
            std::vector<std::size_t> pick(m, 0);
            while (true) {
              Rational coeff = 1;
              std::vector<int> key(m);
              for (int f = 0; f < m; ++f) {
                key[f] = a.comp[f] + b.comp[f];
                coeff *= parts[f][pick[f]].second;
              }
              for (int f = 0; f < m; ++f) key.push_back(parts[f][pick[f]].first);
              acc[lookup.at(key)] += coeff;
              int f = m - 1;
              while (f >= 0 && ++pick[f] == parts[f].size()) {
                pick[f] = 0;
                --f;
              }
              if (f < 0) break;
            }
            for (auto& [t, q] : acc)
              if (q != 0) out.emplace_back(t, std::move(q));
          }
          slot.push_back(std::move(out));
        }
      }
    }
  }
  return NumericalRing::create(std::move(d));
}

// Class on the product that restricts a factor class through the
// projection: the factor monomials tensored with 1 everywhere else.
inline RingClass pullback_to_product(const RingPtr& product,
                                     const std::vector<RingPtr>& factors,
                                     std::size_t which, const RingClass& cls) {
  if (which >= factors.size()) throw RangeError("no such factor");
  if (cls.ring() != factors[which])
    throw RingMismatch("class does not live on the chosen factor");
  RingClass out(product, cls.codim());
  for (const auto& [idx, coeff] : cls.coeffs()) {
    std::vector<std::string> names;
    for (std::size_t f = 0; f < factors.size(); ++f)
      names.push_back(f == which ? factors[f]->monomial_name(cls.codim(), idx)
                                 : "1");
    auto pos = product->find_monomial(detail::join_product_name(names));
    if (!pos) throw UnboundSymbol("product monomial not found");
    out.set_coeff(pos->second, coeff);
  }
  return out;
}

}  // namespace poscones
