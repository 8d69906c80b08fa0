#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cone.hpp"
#include "grassmann.hpp"
#include "projbundle.hpp"

namespace poscones {

enum class ModelKind { grassmannian, product, proj_bundle_curve };

inline std::string kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::grassmannian: return "grassmannian";
    case ModelKind::product: return "product";
    case ModelKind::proj_bundle_curve: return "proj_bundle_curve";
  }
  return "?";
}

// A variety model: the ring, the bundle registry feeding the pliant cone,
// effective cones where they are actually known, and per-codim annotations
// recording cone identities the source theory proves but this code does
// not re-derive (e.g. "eff=nef=pl" on products of Grassmannians).
struct VarietyModel {
  ModelKind kind = ModelKind::grassmannian;
  RingPtr ring;
  BundleEnv bundles;
  std::map<int, PolyCone> known_eff;
  std::map<int, std::vector<std::string>> annotations;
  std::optional<HNData> hn;                 // proj_bundle_curve
  std::optional<Grassmannian> grassmann;    // grassmannian
  std::vector<RingPtr> factors;             // product
};

namespace detail {

inline PolyCone simplicial_cone(int m) {
  std::vector<ZVec> rays;
  for (int i = 0; i < m; ++i) {
    ZVec e(m, 0);
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  return hull(std::move(rays), m);
}

inline void simplicial_eff_all_codims(VarietyModel& model,
                                      const std::string& annotation) {
  const int n = model.ring->dimension();
  for (int k = 0; k <= n; ++k) {
    model.known_eff.emplace(k, simplicial_cone(model.ring->basis_size(k)));
    model.annotations[k].push_back(annotation);
  }
}

}  // namespace detail

// On a Grassmannian the Schubert cone is simultaneously Eff, Nef and
// pliant in every codimension, so the model ships those as known data.
inline VarietyModel grassmann_model(int k, int n) {
  VarietyModel m;
  m.kind = ModelKind::grassmannian;
  m.grassmann = make_grassmannian(k, n);
  m.ring = m.grassmann->ring;
  m.bundles = tautological_bundles(*m.grassmann);
  detail::simplicial_eff_all_codims(m, "eff=nef=pl");
  return m;
}

// Product of Grassmannians: the tensor Schubert basis again generates
// Eff = Nef = pl; the registry carries the factor tautological bundles
// pulled back, named Q1, R1, Q2, R2, ... by factor position.
inline VarietyModel product_model(const std::vector<std::pair<int, int>>& factors) {
  if (factors.empty()) throw ModelError("product of no factors");
  VarietyModel m;
  m.kind = ModelKind::product;
  std::vector<Grassmannian> gs;
  gs.reserve(factors.size());
  for (const auto& [k, n] : factors) {
    gs.push_back(make_grassmannian(k, n));
    m.factors.push_back(gs.back().ring);
  }
  m.ring = product_ring(m.factors);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const auto env = tautological_bundles(gs[i]);
    for (const auto& [base_name, b] : env) {
      MixedClass total = MixedClass::one(m.ring);
      for (int c = 1; c <= gs[i].ring->dimension(); ++c)
        total.set_component(
            pullback_to_product(m.ring, m.factors, i, b.total_chern.component(c)));
      const std::string name = base_name + std::to_string(i + 1);
      m.bundles.emplace(name, make_bundle(name, b.rank, std::move(total),
                                          b.globally_generated, b.nef, b.ample));
    }
  }
  detail::simplicial_eff_all_codims(m, "eff=nef=pl");
  return m;
}

// P(E) over a curve: nef cones come from the Harder-Narasimhan recursion;
// effective cones are not derivable from this data and stay empty unless
// a model file supplies them. Upsef = Nef always holds here, and over a
// rational curve Bpf = Nef as well.
inline VarietyModel proj_bundle_model(const HNData& hn) {
  VarietyModel m;
  m.kind = ModelKind::proj_bundle_curve;
  ProjBundle pb = proj_bundle_ring(hn);
  m.ring = pb.ring;
  m.hn = hn;
  m.bundles = builtin_bundles(pb);
  for (int k = 0; k <= pb.e; ++k) {
    m.annotations[k].push_back("upsef=nef");
    if (hn.genus == 0) m.annotations[k].push_back("bpf=nef");
  }
  return m;
}

inline PolyCone eff_cone(const VarietyModel& model, int k) {
  auto it = model.known_eff.find(k);
  if (it == model.known_eff.end())
    throw MissingEff("effective cone not known at codim " + std::to_string(k) +
                     " for this model");
  return it->second;
}

// Nef^k by the method native to the model kind.
inline PolyCone nef_cone_k(const VarietyModel& model, int k) {
  const int n = model.ring->dimension();
  if (k < 0 || k > n) throw RangeError("codim out of range");
  if (k == 0 || k == n || model.kind != ModelKind::proj_bundle_curve)
    return detail::simplicial_cone(model.ring->basis_size(k));
  return nef_cone(*model.hn, k);
}

// Nef^k as the dual of the known effective cone of complementary codim.
inline PolyCone nef_cone_from_eff(const VarietyModel& model, int k) {
  const int n = model.ring->dimension();
  if (k < 0 || k > n) throw RangeError("codim out of range");
  const PolyCone eff = eff_cone(model, n - k);
  return dual_cone(eff, pairing_matrix(model.ring, k));
}

inline std::vector<RingClass> nef_divisor_rays(const VarietyModel& model) {
  const PolyCone nef1 = nef_cone_k(model, 1);
  std::vector<RingClass> out;
  for (const auto& r : nef1.rays) {
    RingClass c(model.ring, 1);
    for (std::size_t i = 0; i < r.size(); ++i)
      c.set_coeff(static_cast<int>(i), Rational(r[i]));
    out.push_back(std::move(c));
  }
  return out;
}

// Pliant cone relative to the registry: the hull of all evaluated
// monomials of total weight k in Schur classes s_lambda(E), over the
// globally generated bundles E of the registry, lambda nonempty with
// parts bounded by rank(E). This is an inner approximation of the pliant
// cone (the definition ranges over all globally generated bundles).
inline PolyCone pliant_cone(const VarietyModel& model, int k) {
  const int n = model.ring->dimension();
  if (k < 0 || k > n) throw RangeError("codim out of range");
  if (k == 0) return detail::simplicial_cone(1);

  struct Atom {
    int weight;
    RingClass value;
  };
  std::vector<Atom> atoms;
  bool any_gg = false;
  for (const auto& [name, b] : model.bundles) {
    if (!b.globally_generated) continue;
    any_gg = true;
    for (int w = 1; w <= k; ++w) {
      for (const auto& la : partitions_with_max_part(w, b.rank)) {
        RingClass v = evaluate(jacobi_trudi(la, b.rank, name), model.ring,
                               model.bundles);
        if (!v.is_zero()) atoms.push_back({w, std::move(v)});
      }
    }
  }
  if (!any_gg)
    throw NoGGBundles("no globally generated bundle in the registry");

  std::vector<QVec> rays;
  // multisets of atoms with weights summing to k
  auto rec = [&](auto&& self, std::size_t start, int remaining,
                 const RingClass& acc) -> void {
    if (remaining == 0) {
      if (!acc.is_zero()) rays.push_back(acc.coordinates());
      return;
    }
    for (std::size_t i = start; i < atoms.size(); ++i) {
      if (atoms[i].weight > remaining) continue;
      self(self, i, remaining - atoms[i].weight, acc * atoms[i].value);
    }
  };
  rec(rec, 0, k, RingClass::one(model.ring));
  return hull_q(rays, model.ring->basis_size(k));
}

// Cone of k-fold intersections of the given nef divisor classes.
inline PolyCone ci_cone(const VarietyModel& model,
                        const std::vector<RingClass>& divisor_rays, int k) {
  const int n = model.ring->dimension();
  if (k < 0 || k > n) throw RangeError("codim out of range");
  for (const auto& r : divisor_rays)
    if (r.codim() != 1 || r.ring() != model.ring)
      throw CodimMismatch("complete intersections need divisor classes");
  if (k == 0) return detail::simplicial_cone(1);
  std::vector<QVec> rays;
  auto rec = [&](auto&& self, std::size_t start, int remaining,
                 const RingClass& acc) -> void {
    if (remaining == 0) {
      if (!acc.is_zero()) rays.push_back(acc.coordinates());
      return;
    }
    for (std::size_t i = start; i < divisor_rays.size(); ++i)
      self(self, i, remaining - 1, acc * divisor_rays[i]);
  };
  rec(rec, 0, k, RingClass::one(model.ring));
  return hull_q(rays, model.ring->basis_size(k));
}

inline PolyCone ci_cone(const VarietyModel& model, int k) {
  return ci_cone(model, nef_divisor_rays(model), k);
}

// Is the k-fold product of the given ample divisor classes interior to
// the registry pliant cone? Pass either a single class (powered up) or
// exactly k classes.
inline bool interior_ci_check(const VarietyModel& model,
                              const std::vector<RingClass>& ample_rays, int k) {
  if (ample_rays.empty()) throw RangeError("no ample classes given");
  if (ample_rays.size() != 1 && static_cast<int>(ample_rays.size()) != k)
    throw RangeError("pass one ample class or exactly k of them");
  RingClass prod = RingClass::one(model.ring);
  if (ample_rays.size() == 1) {
    prod = ample_rays.front().pow(k);
  } else {
    for (const auto& r : ample_rays) prod = prod * r;
  }
  return interior_member(prod.coordinates(), pliant_cone(model, k));
}

// Degree-positivity of h^(n-k) against the effective rays: certifies that
// alpha -> deg(h_power . alpha) is positive on every nonzero generator,
// the polyhedral form of the degree-norm property.
inline bool degree_functional_positive(const RingClass& h_power,
                                       const std::vector<RingClass>& eff_rays,
                                       std::optional<RingClass>* witness = nullptr) {
  for (const auto& r : eff_rays) {
    if (!h_power.ring() || r.ring() != h_power.ring())
      throw RingMismatch("degree functional across different rings");
    if (h_power.codim() + r.codim() != h_power.ring()->dimension())
      throw CodimMismatch("degree functional needs complementary codims");
    if (r.is_zero()) continue;
    if ((h_power * r).degree() <= 0) {
      if (witness) *witness = r;
      return false;
    }
  }
  return true;
}

struct HodgeResult {
  QMatrix gram;
  Inertia inertia;
  bool obstructed = false;  // n_plus >= 2
};

// The Hodge-index obstruction: the Gram matrix of divisor products
// against a codim-(n-2) class alpha. Two or more positive eigenvalues
// certify that no positive multiple of alpha is an irreducible surface
// class; one or fewer certifies nothing.
inline HodgeResult hodge_obstruction(const VarietyModel& model,
                                     const RingClass& alpha) {
  const int n = model.ring->dimension();
  if (n < 3) throw RangeError("hodge obstruction needs dimension >= 3");
  if (alpha.ring() != model.ring)
    throw RingMismatch("class from a different ring");
  if (alpha.codim() != n - 2)
    throw CodimMismatch("hodge obstruction needs a class of codim " +
                        std::to_string(n - 2) + ", got " +
                        std::to_string(alpha.codim()));
  const int rho = model.ring->basis_size(1);
  HodgeResult res;
  res.gram.assign(rho, QVec(rho, 0));
  for (int i = 0; i < rho; ++i) {
    const RingClass di = RingClass::monomial(model.ring, 1, i);
    for (int j = i; j < rho; ++j) {
      const RingClass dj = RingClass::monomial(model.ring, 1, j);
      res.gram[i][j] = res.gram[j][i] = (di * dj * alpha).degree();
    }
  }
  res.inertia = inertia(res.gram);
  res.obstructed = res.inertia.n_plus >= 2;
  return res;
}

inline HodgeResult hodge_from_matrix(QMatrix gram) {
  HodgeResult res;
  res.gram = std::move(gram);
  res.inertia = inertia(res.gram);
  res.obstructed = res.inertia.n_plus >= 2;
  return res;
}

struct ConeCheck {
  std::string name;
  std::string status;  // "ok" | "violated" | "unavailable"
  bool strict = false;  // when ok: the containment is proper
  std::string detail;
  std::optional<ZVec> witness_ray;
  std::optional<ZVec> witness_facet;
};

struct ContainmentReport {
  int codim = 0;
  std::map<std::string, PolyCone> cones;  // by name: ci, pliant, nef, eff
  std::vector<ConeCheck> checks;
  std::vector<std::string> annotations;
};

namespace detail {

inline ConeCheck check_subset(const std::string& name,
                              const std::map<std::string, PolyCone>& cones,
                              const std::string& inner,
                              const std::string& outer) {
  ConeCheck c;
  c.name = name;
  auto ii = cones.find(inner), oo = cones.find(outer);
  if (ii == cones.end() || oo == cones.end()) {
    c.status = "unavailable";
    c.detail = (ii == cones.end() ? inner : outer) + " cone not available";
    return c;
  }
  for (const auto& r : ii->second.rays) {
    if (!member(r, oo->second)) {
      c.status = "violated";
      c.witness_ray = r;
      c.witness_facet = violated_facet(to_rational(r), oo->second);
      c.detail = "ray of " + inner + " outside " + outer;
      return c;
    }
  }
  c.status = "ok";
  c.strict = !contains(ii->second, oo->second);
  return c;
}

}  // namespace detail

// The containment chain CI <= pl <= nef and pl <= eff, checked
// polyhedrally. These hold for every model arising from actual geometry, so
// a violation here means the model data is wrong.
inline ContainmentReport containment_report(const VarietyModel& model, int k) {
  ContainmentReport rep;
  rep.codim = k;
  std::string pliant_note;
  try {
    rep.cones.emplace("pliant", pliant_cone(model, k));
  } catch (const NoGGBundles& e) {
    pliant_note = e.what();
  }
  rep.cones.emplace("nef", nef_cone_k(model, k));
  try {
    rep.cones.emplace("eff", eff_cone(model, k));
  } catch (const MissingEff&) {
  }
  rep.cones.emplace("ci", ci_cone(model, k));

  rep.checks.push_back(
      detail::check_subset("ci_subset_pliant", rep.cones, "ci", "pliant"));
  rep.checks.push_back(
      detail::check_subset("pliant_subset_nef", rep.cones, "pliant", "nef"));
  rep.checks.push_back(
      detail::check_subset("pliant_subset_eff", rep.cones, "pliant", "eff"));
  if (!pliant_note.empty())
    for (auto& c : rep.checks)
      if (c.status == "unavailable" && c.detail.find("pliant") != std::string::npos)
        c.detail = pliant_note;

  auto it = model.annotations.find(k);
  if (it != model.annotations.end()) rep.annotations = it->second;
  return rep;
}

}  // namespace poscones
