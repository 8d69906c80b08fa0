#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chern.hpp"
#include "cone.hpp"

namespace poscones {

// Harder-Narasimhan data of a bundle on a smooth curve: the semistable
// quotients (rank, degree) in order of strictly increasing slope. A
// single entry encodes a semistable bundle. The genus is metadata: it
// never enters the ring, only global-generation flags.
struct HNData {
  std::vector<std::pair<int, long long>> quotients;
  int genus = 0;
};

inline void validate_hn(const HNData& hn) {
  if (hn.quotients.empty()) throw InvalidHN("no quotients");
  if (hn.genus < 0) throw InvalidHN("negative genus");
  Rational prev;
  bool first = true;
  for (const auto& [r, d] : hn.quotients) {
    if (r < 1) throw InvalidHN("quotient rank must be positive");
    const Rational mu = Rational(d) / r;
    if (!first && !(prev < mu))
      throw InvalidHN("quotient slopes must be strictly increasing");
    prev = mu;
    first = false;
  }
}

inline int hn_rank(const HNData& hn) {
  int e = 0;
  for (const auto& [r, d] : hn.quotients) {
    (void)d;
    e += r;
  }
  return e;
}

inline long long hn_degree(const HNData& hn) {
  long long d = 0;
  for (const auto& [r, dd] : hn.quotients) {
    (void)r;
    d += dd;
  }
  return d;
}

inline Rational hn_slope_min(const HNData& hn) {
  return Rational(hn.quotients.front().second) / hn.quotients.front().first;
}

inline Rational hn_slope_max(const HNData& hn) {
  return Rational(hn.quotients.back().second) / hn.quotients.back().first;
}

inline std::string pb_monomial_name(int a, int b) {
  std::string x = a == 0 ? "" : (a == 1 ? "xi" : "xi^" + std::to_string(a));
  if (b == 0) return x.empty() ? "1" : x;
  return x.empty() ? "f" : x + "*f";
}

struct ProjBundle {
  HNData hn;
  int e = 0;        // rank of E = dimension of P(E)
  long long d = 0;  // degree of E
  RingPtr ring;
};

// Numerical ring of P(E) over a curve: basis {xi^a, xi^(a)f : a <= e-1}
// with f^2 = 0 and the Grothendieck relation xi^e = d xi^(e-1) f, so that
// deg(xi^(e-1) f) = 1 and deg(xi^e) = d.
inline ProjBundle proj_bundle_ring(const HNData& hn) {
  validate_hn(hn);
  const int e = hn_rank(hn);
  const long long deg = hn_degree(hn);
  if (e < 2) throw InvalidHN("projective bundle needs rank at least 2");

  NumericalRing::Data data;
  data.dimension = e;
  data.description = "P(E) over a genus-" + std::to_string(hn.genus) +
                     " curve, rank " + std::to_string(e) + ", degree " +
                     std::to_string(deg);
  data.basis.resize(e + 1);
  data.basis[0] = {"1"};
  for (int c = 1; c <= e - 1; ++c)
    data.basis[c] = {pb_monomial_name(c, 0), pb_monomial_name(c - 1, 1)};
  data.basis[e] = {pb_monomial_name(e - 1, 1)};
  data.point_index = 0;

  // reduce xi^a f^b to the basis (b in {0,1,2,...}, exponents possibly
  // beyond the relations)
  auto reduce = [&](int a, int b) -> SparseClass {
    if (b >= 2) return {};
    if (b == 1) {
      if (a > e - 1) return {};  // xi^e f = d xi^(e-1) f^2 = 0
      return {{a == e - 1 ? 0 : 1, 1}};
    }
    if (a <= e - 1) return {{0, 1}};
    if (a == e) {
      if (deg == 0) return {};
      return {{e == 1 ? 0 : 1, Rational(deg)}};  // d xi^(e-1) f
    }
    return {};  // xi^(e+1) = d xi^e f = 0, and beyond
  };

  auto exponents = [&](int c, int idx) -> std::pair<int, int> {
    if (c == 0) return {0, 0};
    if (c == e) return {e - 1, 1};
    return idx == 0 ? std::pair<int, int>{c, 0} : std::pair<int, int>{c - 1, 1};
  };

  for (int ci = 1; ci <= e; ++ci) {
    for (int cj = ci; ci + cj <= e; ++cj) {
      auto& slot = data.products[{ci, cj}];
      const int ni = static_cast<int>(data.basis[ci].size());
      const int nj = static_cast<int>(data.basis[cj].size());
      for (int i = 0; i < ni; ++i) {
        for (int j = 0; j < nj; ++j) {
          const auto [a1, b1] = exponents(ci, i);
          const auto [a2, b2] = exponents(cj, j);
          SparseClass raw = reduce(a1 + a2, b1 + b2);
          // indices from reduce() are relative to codim ci+cj
          if (ci + cj == e) {
            // at top codim the basis has a single element
            SparseClass top;
            for (auto& [t, q] : raw)
              if (t <= 1) top.emplace_back(0, q);
            raw = std::move(top);
          }
          slot.push_back(std::move(raw));
        }
      }
    }
  }
  return ProjBundle{hn, e, deg, NumericalRing::create(std::move(data))};
}

// Closed-form normal form of xi^a f^b as a ring class.
inline RingClass pb_monomial(const ProjBundle& pb, int a, int b) {
  if (a < 0 || b < 0) throw RangeError("negative exponent");
  const int codim = a + b;
  RingClass out(pb.ring, codim);
  if (codim > pb.e || b >= 2) return out;
  if (b == 1) {
    if (a <= pb.e - 1)
      out.set_coeff(codim == pb.e ? 0 : 1, 1);
    return out;
  }
  if (a <= pb.e - 1) {
    out.set_coeff(0, 1);
  } else if (a == pb.e && pb.d != 0) {
    out.set_coeff(0, Rational(pb.d));  // d xi^(e-1) f at top codim
  }
  return out;
}

// nu^(k): the nef threshold exponents from the Harder-Narasimhan
// filtration; nu^(k) = -k mu_1 while k stays within the minimal-slope
// quotient, then recurse on the remaining quotients.
inline Rational nu(const HNData& hn, int k) {
  validate_hn(hn);
  const int e = hn_rank(hn);
  if (k < 1 || k > e - 1) throw RangeError("nu needs 1 <= k <= e-1");
  const auto [r1, d1] = hn.quotients.front();
  const Rational mu1 = Rational(d1) / r1;
  if (k <= r1) return -k * mu1;
  HNData rest{{hn.quotients.begin() + 1, hn.quotients.end()}, hn.genus};
  return nu(rest, k - r1) - r1 * mu1;
}

// Nef^k(P(E)) = <xi^k + nu^(k) xi^(k-1) f, xi^(k-1) f> in the coordinate
// basis (xi^k, xi^(k-1) f).
inline PolyCone nef_cone(const HNData& hn, int k) {
  const Rational v = nu(hn, k);
  return hull({primitive_ray({1, v}), {0, 1}}, 2);
}

// Built-in bundle registry on P(E):
//   O1    = O(1) with c_1 = xi,
//   F1    = pullback of a degree-1 line bundle, c_1 = f,
//   Edual = pullback of E^dual, total Chern 1 - d f,
//   Q     = the tautological quotient of pi* E^dual by O(-1),
//   O1Fm  = O(1) twisted by a degree-m pullback (m = ceil(-mu_1), only
//           when mu_1 < 0), c_1 = xi + m f.
// Flags are set only where they are forced: over a rational curve a
// pullback of a nonnegative-degree bundle is globally generated, and so
// is O(1) twisted to nonnegative minimal slope. Q's global generation
// follows the d <= 0 pattern of the examples and can be overridden by
// model files.
inline BundleEnv builtin_bundles(const ProjBundle& pb) {
  const RingPtr& ring = pb.ring;
  const Rational mu1 = hn_slope_min(pb.hn);
  const bool rational_curve = pb.hn.genus == 0;
  BundleEnv env;

  const RingClass xi = RingClass::monomial(ring, "xi");
  const RingClass f = RingClass::monomial(ring, "f");

  {
    MixedClass c = MixedClass::one(ring);
    c.set_component(xi);
    env.emplace("O1", make_bundle("O1", 1, std::move(c),
                                  rational_curve && mu1 >= 0, mu1 >= 0));
  }
  {
    MixedClass c = MixedClass::one(ring);
    c.set_component(f);
    env.emplace("F1", make_bundle("F1", 1, std::move(c), rational_curve, true));
  }
  {
    const Rational mu_max = hn_slope_max(pb.hn);
    MixedClass c = MixedClass::one(ring);
    c.set_component(Rational(-pb.d) * f);
    env.emplace("Edual", make_bundle("Edual", pb.e, std::move(c),
                                     rational_curve && mu_max <= 0,
                                     mu_max <= 0));
  }
  {
    MixedClass cO = MixedClass::one(ring);
    cO.set_component(-xi);  // c(O(-1)) = 1 - xi
    MixedClass cEdual = MixedClass::one(ring);
    cEdual.set_component(Rational(-pb.d) * f);
    MixedClass cQ = whitney_quotient(cEdual, cO);
    env.emplace("Q", make_bundle("Q", pb.e - 1, std::move(cQ), pb.d <= 0));
  }
  if (mu1 < 0) {
    const Integer num = numerator(-mu1), den = denominator(-mu1);
    Integer m = num / den;
    if (num % den != 0) ++m;  // ceil; -mu1 > 0 here
    MixedClass c = MixedClass::one(ring);
    c.set_component(xi + Rational(m) * f);
    const std::string name = "O1F" + m.str();
    env.emplace(name, make_bundle(name, 1, std::move(c), rational_curve, true));
  }
  return env;
}

}  // namespace poscones
