#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "expr.hpp"
#include "positivity.hpp"

namespace poscones {

// insertion-ordered documents keep every emission byte-stable
using Json = nlohmann::ordered_json;

inline Json json_from_integer(const Integer& z) {
  static const Integer lo = Integer(std::numeric_limits<std::int64_t>::min());
  static const Integer hi = Integer(std::numeric_limits<std::int64_t>::max());
  if (z >= lo && z <= hi) return Json(static_cast<std::int64_t>(z));
  return Json(to_string(z));
}

// exact values only: integers as JSON numbers when they fit, otherwise
// decimal strings; non-integer rationals always as "p/q" strings
inline Json json_from_rational(const Rational& q) {
  if (denominator(q) == 1) return json_from_integer(numerator(q));
  return Json(to_string(q));
}

inline Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ModelError(where + ": " + e.what());
    }
  }
  throw ModelError(where + ": expected an integer or a \"p/q\" string");
}

inline Json json_from_zvec(const ZVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(json_from_integer(x));
  return out;
}

inline Json json_from_qvec(const QVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(json_from_rational(x));
  return out;
}

inline Json cone_to_json(const PolyCone& c,
                         const std::vector<std::string>& basis = {}) {
  Json out = Json::object();
  out["ambient"] = c.ambient;
  if (!basis.empty()) out["basis"] = basis;
  Json rays = Json::array();
  for (const auto& r : c.rays) rays.push_back(json_from_zvec(r));
  out["rays"] = std::move(rays);
  Json facets = Json::array();
  for (const auto& f : c.facets) facets.push_back(json_from_zvec(f));
  out["facets"] = std::move(facets);
  return out;
}

// Rebuilds the cone from its emitted rays; facet data is derived, not
// trusted. Rational ray entries are accepted.
inline PolyCone cone_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("rays"))
    throw ModelError("cone: expected an object with 'ambient' and 'rays'");
  if (!j["ambient"].is_number_integer())
    throw ModelError("cone.ambient: expected an integer");
  const int ambient = j["ambient"].get<int>();
  if (ambient < 0) throw ModelError("cone.ambient: negative");
  if (!j["rays"].is_array()) throw ModelError("cone.rays: expected an array");
  std::vector<QVec> rays;
  for (const auto& rj : j["rays"]) {
    if (!rj.is_array() || static_cast<int>(rj.size()) != ambient)
      throw ModelError("cone.rays: each ray needs " + std::to_string(ambient) +
                       " entries");
    QVec r;
    for (const auto& x : rj) r.push_back(rational_from_json(x, "cone.rays"));
    rays.push_back(std::move(r));
  }
  return hull_q(rays, ambient);
}

inline Json class_to_json(const RingClass& c) {
  Json out = Json::object();
  out["codim"] = c.codim();
  const bool in_range = c.codim() <= c.ring()->dimension();
  if (in_range) out["basis"] = c.ring()->basis(c.codim());
  out["coords"] = json_from_qvec(in_range ? c.coordinates()
                                          : QVec{});
  out["class"] = c.to_string();
  return out;
}

inline QMatrix matrix_from_json(const Json& doc) {
  const Json* m = &doc;
  if (doc.is_object()) {
    if (!doc.contains("matrix"))
      throw ModelError("matrix file: expected a 2d array or {\"matrix\": ...}");
    m = &doc.at("matrix");
  }
  if (!m->is_array() || m->empty())
    throw ModelError("matrix file: expected a nonempty 2d array");
  QMatrix out;
  for (std::size_t i = 0; i < m->size(); ++i) {
    const Json& row = (*m)[i];
    if (!row.is_array())
      throw ModelError("matrix file: row " + std::to_string(i) +
                       " is not an array");
    QVec r;
    for (std::size_t k = 0; k < row.size(); ++k)
      r.push_back(rational_from_json(
          row[k], "matrix[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    out.push_back(std::move(r));
  }
  return out;
}

namespace detail {

inline void reject_unknown_fields(const Json& obj,
                                  const std::set<std::string>& allowed,
                                  const std::string& where) {
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key))
      throw ModelError(where + ": unknown field '" + key + "'");
}

inline int int_field(const Json& obj, const std::string& key,
                     const std::string& where) {
  if (!obj.contains(key))
    throw ModelError(where + ": missing field '" + key + "'");
  if (!obj.at(key).is_number_integer())
    throw ModelError(where + "." + key + ": expected an integer");
  return obj.at(key).get<int>();
}

inline int parse_codim_key(const std::string& key, int dimension,
                           const std::string& where) {
  if (key.empty() ||
      key.find_first_not_of("0123456789") != std::string::npos)
    throw ModelError(where + ": key '" + key +
                     "' is not a codimension (expected \"0\".." +
                     std::to_string(dimension) + ")");
  int k = std::stoi(key);
  if (k > dimension)
    throw ModelError(where + ": codim " + key + " exceeds the dimension " +
                     std::to_string(dimension));
  return k;
}

inline void apply_bundle_stanzas(VarietyModel& model, const Json& arr) {
  if (!arr.is_array()) throw ModelError("bundles: expected an array");
  for (const auto& bj : arr) {
    if (!bj.is_object()) throw ModelError("bundles: expected objects");
    reject_unknown_fields(
        bj, {"name", "rank", "chern", "globally_generated", "nef", "ample"},
        "bundles entry");
    if (!bj.contains("name") || !bj.at("name").is_string())
      throw ModelError("bundles entry: missing string field 'name'");
    const std::string name = bj.at("name").get<std::string>();
    const int rank = int_field(bj, "rank", "bundle '" + name + "'");
    if (!bj.contains("chern") || !bj.at("chern").is_string())
      throw ModelError("bundle '" + name + "': missing string field 'chern'");
    if (model.bundles.count(name))
      throw ModelError("bundle '" + name + "' is already defined");
    auto flag = [&](const char* key) {
      if (!bj.contains(key)) return false;
      if (!bj.at(key).is_boolean())
        throw ModelError("bundle '" + name + "'." + key +
                         ": expected a boolean");
      return bj.at(key).get<bool>();
    };
    MixedClass total = eval_expression(
        parse_expression(bj.at("chern").get<std::string>()), model.ring,
        model.bundles);
    model.bundles.emplace(
        name, make_bundle(name, rank, std::move(total),
                          flag("globally_generated"), flag("nef"),
                          flag("ample")));
  }
}

inline void apply_known_eff(VarietyModel& model, const Json& obj) {
  if (!obj.is_object())
    throw ModelError("known_eff: expected an object keyed by codim");
  for (const auto& [key, rays_json] : obj.items()) {
    const int k = parse_codim_key(key, model.ring->dimension(), "known_eff");
    const int m = model.ring->basis_size(k);
    if (!rays_json.is_array() || rays_json.empty())
      throw ModelError("known_eff." + key + ": expected a nonempty ray array");
    std::vector<QVec> rays;
    for (const auto& rj : rays_json) {
      if (!rj.is_array() || static_cast<int>(rj.size()) != m)
        throw ModelError("known_eff." + key + ": each ray needs " +
                         std::to_string(m) + " entries");
      QVec r;
      for (const auto& x : rj)
        r.push_back(rational_from_json(x, "known_eff." + key));
      rays.push_back(std::move(r));
    }
    model.known_eff.insert_or_assign(k, hull_q(rays, m));
  }
}

inline void apply_annotations(VarietyModel& model, const Json& obj) {
  if (!obj.is_object())
    throw ModelError("annotations: expected an object keyed by codim");
  for (const auto& [key, arr] : obj.items()) {
    const int k = parse_codim_key(key, model.ring->dimension(), "annotations");
    if (!arr.is_array())
      throw ModelError("annotations." + key + ": expected an array of strings");
    for (const auto& s : arr) {
      if (!s.is_string())
        throw ModelError("annotations." + key + ": expected strings");
      model.annotations[k].push_back(s.get<std::string>());
    }
  }
}

}  // namespace detail

inline VarietyModel model_from_json(const Json& doc) {
  if (!doc.is_object()) throw ModelError("model file: expected a JSON object");
  if (!doc.contains("kind") || !doc.at("kind").is_string())
    throw ModelError("model file: missing string field 'kind'");
  const std::string kind = doc.at("kind").get<std::string>();

  const std::set<std::string> common = {"kind",      "description", "bundles",
                                        "known_eff", "annotations"};
  VarietyModel model;

  if (kind == "grassmannian") {
    auto allowed = common;
    allowed.insert("k");
    allowed.insert("n");
    detail::reject_unknown_fields(doc, allowed, "model file");
    model = grassmann_model(detail::int_field(doc, "k", "model file"),
                            detail::int_field(doc, "n", "model file"));
  } else if (kind == "product") {
    auto allowed = common;
    allowed.insert("factors");
    detail::reject_unknown_fields(doc, allowed, "model file");
    if (!doc.contains("factors") || !doc.at("factors").is_array() ||
        doc.at("factors").empty())
      throw ModelError("model file: 'factors' must be a nonempty array");
    std::vector<std::pair<int, int>> factors;
    for (const auto& fj : doc.at("factors")) {
      if (!fj.is_object())
        throw ModelError("factors: expected objects with 'k' and 'n'");
      detail::reject_unknown_fields(fj, {"k", "n"}, "factors entry");
      factors.emplace_back(detail::int_field(fj, "k", "factors entry"),
                           detail::int_field(fj, "n", "factors entry"));
    }
    model = product_model(factors);
  } else if (kind == "proj_bundle_curve") {
    auto allowed = common;
    allowed.insert("genus");
    allowed.insert("quotients");
    detail::reject_unknown_fields(doc, allowed, "model file");
    HNData hn;
    hn.genus = detail::int_field(doc, "genus", "model file");
    if (!doc.contains("quotients") || !doc.at("quotients").is_array())
      throw ModelError("model file: 'quotients' must be an array of [rank, degree]");
    for (const auto& qj : doc.at("quotients")) {
      if (!qj.is_array() || qj.size() != 2 || !qj[0].is_number_integer() ||
          !qj[1].is_number_integer())
        throw ModelError("quotients: each entry must be [rank, degree]");
      hn.quotients.emplace_back(qj[0].get<int>(), qj[1].get<long long>());
    }
    model = proj_bundle_model(hn);
  } else {
    throw ModelError("model file: unknown kind '" + kind + "'");
  }

  if (doc.contains("description") && !doc.at("description").is_string())
    throw ModelError("model file: 'description' must be a string");
  if (doc.contains("bundles"))
    detail::apply_bundle_stanzas(model, doc.at("bundles"));
  if (doc.contains("known_eff"))
    detail::apply_known_eff(model, doc.at("known_eff"));
  if (doc.contains("annotations"))
    detail::apply_annotations(model, doc.at("annotations"));
  return model;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline VarietyModel load_model_file(const std::string& path) {
  return model_from_json(load_json_file(path));
}

inline QMatrix load_matrix_file(const std::string& path) {
  return matrix_from_json(load_json_file(path));
}

}  // namespace poscones
