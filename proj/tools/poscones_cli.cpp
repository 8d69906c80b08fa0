#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "poscones/poscones.hpp"

namespace pc = poscones;

namespace {

struct Options {
  std::string model_path;
  bool json = false;
  int codim = -1;
  bool interior = false;
  std::string which;
  std::string expression;
  std::string matrix_path;
};

void emit(const pc::Json& doc, bool json, const std::string& text) {
  if (json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

std::string format_qvec(const pc::QVec& v) {
  std::string out;
  for (const auto& x : v) {
    if (!out.empty()) out += " ";
    out += pc::to_string(x);
  }
  return out;
}

std::string format_zvec(const pc::ZVec& v) {
  std::string out;
  for (const auto& x : v) {
    if (!out.empty()) out += " ";
    out += pc::to_string(x);
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

pc::Json model_header(const pc::VarietyModel& model) {
  pc::Json j = pc::Json::object();
  j["kind"] = pc::kind_name(model.kind);
  j["description"] = model.ring->description();
  j["dimension"] = model.ring->dimension();
  return j;
}

int cmd_ring(const Options& opt) {
  pc::VarietyModel model = pc::load_model_file(opt.model_path);
  const auto& ring = model.ring;
  const int n = ring->dimension();

  pc::Json j = model_header(model);
  pc::Json codims = pc::Json::array();
  std::string text = "kind: " + pc::kind_name(model.kind) + "\n" +
                     "description: " + ring->description() + "\n" +
                     "dimension: " + std::to_string(n) + "\n";
  for (int k = 0; k <= n; ++k) {
    pc::Json ck = pc::Json::object();
    ck["codim"] = k;
    ck["basis"] = ring->basis(k);
    const pc::QMatrix p = pc::pairing_matrix(ring, k);
    pc::Json pj = pc::Json::array();
    for (const auto& row : p) pj.push_back(pc::json_from_qvec(row));
    ck["pairing"] = std::move(pj);
    codims.push_back(std::move(ck));

    text += "codim " + std::to_string(k) + " basis: " +
            join(ring->basis(k), ", ") + "\n";
  }
  for (int k = 0; k <= n; ++k) {
    const pc::QMatrix p = pc::pairing_matrix(ring, k);
    text += "pairing codim " + std::to_string(k) + " x " +
            std::to_string(n - k) + ":\n";
    for (const auto& row : p) text += "  " + format_qvec(row) + "\n";
  }
  j["codims"] = std::move(codims);
  emit(j, opt.json, text);
  return 0;
}

pc::RingClass eval_checked(const pc::VarietyModel& model,
                           const std::string& expression) {
  pc::ExprPtr e = pc::parse_expression(expression);
  return pc::eval_homogeneous(e, model.ring, model.bundles);
}

int cmd_eval(const Options& opt) {
  pc::VarietyModel model = pc::load_model_file(opt.model_path);
  pc::RingClass c = eval_checked(model, opt.expression);

  pc::Json j = pc::Json::object();
  j["expression"] = opt.expression;
  pc::Json cj = pc::class_to_json(c);
  for (auto& [k, v] : cj.items()) j[k] = v;

  std::string text = "codim: " + std::to_string(c.codim()) + "\n";
  if (c.codim() <= model.ring->dimension()) {
    const auto& basis = model.ring->basis(c.codim());
    const pc::QVec coords = c.coordinates();
    for (std::size_t i = 0; i < coords.size(); ++i)
      text += basis[i] + ": " + pc::to_string(coords[i]) + "\n";
  } else {
    text += "0 (codim exceeds the dimension)\n";
  }
  emit(j, opt.json, text);
  return 0;
}

int cmd_deg(const Options& opt) {
  pc::VarietyModel model = pc::load_model_file(opt.model_path);
  pc::RingClass c = eval_checked(model, opt.expression);
  if (c.codim() != model.ring->dimension())
    throw pc::CodimMismatch("deg needs a class of codim " +
                            std::to_string(model.ring->dimension()) +
                            ", got codim " + std::to_string(c.codim()));
  const pc::Rational d = c.degree();
  pc::Json j = pc::Json::object();
  j["expression"] = opt.expression;
  j["degree"] = pc::json_from_rational(d);
  emit(j, opt.json, "deg = " + pc::to_string(d) + "\n");
  return 0;
}

pc::PolyCone cone_by_name(const pc::VarietyModel& model,
                          const std::string& which, int k) {
  if (which == "eff") return pc::eff_cone(model, k);
  if (which == "nef") return pc::nef_cone_k(model, k);
  if (which == "pliant") return pc::pliant_cone(model, k);
  if (which == "ci") return pc::ci_cone(model, k);
  throw pc::ParseError("unknown cone '" + which +
                       "' (expected eff, nef, pliant, or ci)");
}

void require_codim(const Options& opt, const pc::VarietyModel& model) {
  if (opt.codim < 0 || opt.codim > model.ring->dimension())
    throw pc::RangeError("--codim must lie in 0.." +
                         std::to_string(model.ring->dimension()));
}

std::string cone_text(const pc::PolyCone& cone,
                      const std::vector<std::string>& basis) {
  std::string text = "basis: " + join(basis, ", ") + "\n";
  for (const auto& r : cone.rays) text += "ray: " + format_zvec(r) + "\n";
  for (const auto& f : cone.facets) text += "facet: " + format_zvec(f) + "\n";
  return text;
}

int cmd_cone(const Options& opt) {
  pc::VarietyModel model = pc::load_model_file(opt.model_path);
  require_codim(opt, model);
  const pc::PolyCone cone = cone_by_name(model, opt.which, opt.codim);
  const auto& basis = model.ring->basis(opt.codim);

  pc::Json j = pc::Json::object();
  j["which"] = opt.which;
  j["codim"] = opt.codim;
  pc::Json cj = pc::cone_to_json(cone, basis);
  for (auto& [k, v] : cj.items()) j[k] = v;
  pc::Json ann = pc::Json::array();
  auto it = model.annotations.find(opt.codim);
  if (it != model.annotations.end())
    for (const auto& a : it->second) ann.push_back(a);
  j["annotations"] = std::move(ann);

  std::string text =
      "cone " + opt.which + ", codim " + std::to_string(opt.codim) + "\n" +
      cone_text(cone, basis);
  if (it != model.annotations.end())
    text += "annotations: " + join(it->second, ", ") + "\n";
  emit(j, opt.json, text);
  return 0;
}

int cmd_member(const Options& opt) {
  pc::VarietyModel model = pc::load_model_file(opt.model_path);
  require_codim(opt, model);
  pc::RingClass c = eval_checked(model, opt.expression);
  if (c.codim() != opt.codim)
    throw pc::CodimMismatch("expression has codim " +
                            std::to_string(c.codim()) + ", --codim says " +
                            std::to_string(opt.codim));
  const pc::PolyCone cone = cone_by_name(model, opt.which, opt.codim);
  const pc::QVec v = c.coordinates();
  const bool is_member = pc::member(v, cone);

  pc::Json j = pc::Json::object();
  j["expression"] = opt.expression;
  j["which"] = opt.which;
  j["codim"] = opt.codim;
  j["member"] = is_member;
  std::string text;
  if (!is_member) {
    auto facet = pc::violated_facet(v, cone);
    text = "verdict: not a member of " + opt.which + "\n";
    if (facet) {
      j["facet"] = pc::json_from_zvec(*facet);
      text += "violated facet: " + format_zvec(*facet) + "\n";
    }
  } else if (opt.interior) {
    const bool inside = pc::interior_member(v, cone);
    j["interior"] = inside;
    if (inside) {
      text = "verdict: interior point of " + opt.which + "\n";
    } else {
      text = "verdict: boundary point of " + opt.which + "\n";
      auto facet = pc::tight_facet(v, cone);
      if (facet) {
        j["facet"] = pc::json_from_zvec(*facet);
        text += "tight facet: " + format_zvec(*facet) + "\n";
      }
    }
  } else {
    text = "verdict: member of " + opt.which + "\n";
  }
  emit(j, opt.json, text);
  return 0;
}

int cmd_report(const Options& opt) {
  pc::VarietyModel model = pc::load_model_file(opt.model_path);
  require_codim(opt, model);
  const pc::ContainmentReport rep = pc::containment_report(model, opt.codim);
  const auto& basis = model.ring->basis(opt.codim);

  pc::Json j = model_header(model);
  j["codim"] = opt.codim;
  pc::Json cones = pc::Json::object();
  std::string text = "report: " + model.ring->description() + ", codim " +
                     std::to_string(opt.codim) + "\n";
  for (const char* name : {"ci", "pliant", "nef", "eff"}) {
    auto it = rep.cones.find(name);
    if (it == rep.cones.end()) {
      text += std::string("cone ") + name + ": unavailable\n";
      continue;
    }
    cones[name] = pc::cone_to_json(it->second, basis);
    text += std::string("cone ") + name + ": rays";
    for (const auto& r : it->second.rays) text += " [" + format_zvec(r) + "]";
    text += "\n";
  }
  j["cones"] = std::move(cones);
  pc::Json checks = pc::Json::array();
  for (const auto& c : rep.checks) {
    pc::Json cj = pc::Json::object();
    cj["name"] = c.name;
    cj["status"] = c.status;
    if (c.status == "ok") cj["strict"] = c.strict;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    if (c.witness_ray) cj["witness_ray"] = pc::json_from_zvec(*c.witness_ray);
    if (c.witness_facet)
      cj["witness_facet"] = pc::json_from_zvec(*c.witness_facet);
    checks.push_back(std::move(cj));

    text += "check " + c.name + ": " + c.status;
    if (c.status == "ok") text += c.strict ? " (proper)" : " (equality)";
    if (!c.detail.empty()) text += " — " + c.detail;
    if (c.witness_ray) text += "; ray [" + format_zvec(*c.witness_ray) + "]";
    text += "\n";
  }
  j["checks"] = std::move(checks);
  j["annotations"] = rep.annotations;
  if (!rep.annotations.empty())
    text += "annotations: " + join(rep.annotations, ", ") + "\n";
  emit(j, opt.json, text);
  return 0;
}

int cmd_signature(const Options& opt) {
  pc::HodgeResult res;
  pc::Json j = pc::Json::object();
  std::string text;
  if (!opt.matrix_path.empty()) {
    res = pc::hodge_from_matrix(pc::load_matrix_file(opt.matrix_path));
  } else {
    pc::VarietyModel model = pc::load_model_file(opt.model_path);
    pc::RingClass alpha = eval_checked(model, opt.expression);
    res = pc::hodge_obstruction(model, alpha);
    j["expression"] = opt.expression;
    j["divisor_basis"] = model.ring->basis(1);
  }
  pc::Json gram = pc::Json::array();
  for (const auto& row : res.gram) gram.push_back(pc::json_from_qvec(row));
  j["gram"] = std::move(gram);
  j["inertia"] = pc::Json::object();
  j["inertia"]["n_plus"] = res.inertia.n_plus;
  j["inertia"]["n_zero"] = res.inertia.n_zero;
  j["inertia"]["n_minus"] = res.inertia.n_minus;
  j["verdict"] = res.obstructed ? "obstructed" : "unobstructed";

  text = "gram:\n";
  for (const auto& row : res.gram) text += "  " + format_qvec(row) + "\n";
  text += "inertia: (" + std::to_string(res.inertia.n_plus) + ", " +
          std::to_string(res.inertia.n_zero) + ", " +
          std::to_string(res.inertia.n_minus) + ")  [n_plus, n_zero, n_minus]\n";
  text += std::string("verdict: ") +
          (res.obstructed ? "obstructed" : "unobstructed") + "\n";
  emit(j, opt.json, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  // Optional hint; the implementation is sequential, so any setting
  // produces identical output.
  if (const char* t = std::getenv("POSCONES_THREADS")) (void)t;

  CLI::App app{
      "poscones — exact numerical rings and positive cones of structured "
      "varieties"};
  app.require_subcommand(1);

  Options opt;
  int (*run)(const Options&) = nullptr;

  auto add_model = [&](CLI::App* cmd, bool required = true) {
    auto* o = cmd->add_option("--model", opt.model_path,
                              "model description file (JSON)");
    if (required) o->required();
  };
  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", opt.json, "emit JSON instead of text");
  };

  CLI::App* ring = app.add_subcommand("ring", "basis tables and pairings");
  add_model(ring);
  add_json(ring);
  ring->callback([&] { run = cmd_ring; });

  CLI::App* eval = app.add_subcommand("eval", "evaluate a class expression");
  add_model(eval);
  add_json(eval);
  eval->add_option("expression", opt.expression, "class expression")
      ->required();
  eval->callback([&] { run = cmd_eval; });

  CLI::App* deg = app.add_subcommand("deg", "degree of a top-codim class");
  add_model(deg);
  add_json(deg);
  deg->add_option("expression", opt.expression, "class expression")
      ->required();
  deg->callback([&] { run = cmd_deg; });

  CLI::App* cone =
      app.add_subcommand("cone", "rays and facets of a positivity cone");
  add_model(cone);
  add_json(cone);
  cone->add_option("which", opt.which, "eff | nef | pliant | ci")->required();
  cone->add_option("--codim", opt.codim, "codimension")->required();
  cone->callback([&] { run = cmd_cone; });

  CLI::App* member =
      app.add_subcommand("member", "membership of a class in a cone");
  add_model(member);
  add_json(member);
  member->add_option("which", opt.which, "eff | nef | pliant | ci")
      ->required();
  member->add_option("expression", opt.expression, "class expression")
      ->required();
  member->add_option("--codim", opt.codim, "codimension")->required();
  member->add_flag("--interior", opt.interior, "test interior membership");
  member->callback([&] { run = cmd_member; });

  CLI::App* report =
      app.add_subcommand("report", "containment report at a codimension");
  add_model(report);
  add_json(report);
  report->add_option("--codim", opt.codim, "codimension")->required();
  report->callback([&] { run = cmd_report; });

  CLI::App* signature = app.add_subcommand(
      "signature", "Hodge-signature obstruction of a codim (n-2) class");
  add_model(signature, /*required=*/false);
  add_json(signature);
  signature->add_option("expression", opt.expression, "class expression");
  signature->add_option("--matrix", opt.matrix_path,
                        "Gram matrix file (JSON) instead of an expression");
  signature->callback([&] { run = cmd_signature; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (run == cmd_signature) {
      if (opt.matrix_path.empty() && opt.expression.empty())
        throw pc::ParseError("signature needs an expression or --matrix");
      if (!opt.matrix_path.empty() && !opt.expression.empty())
        throw pc::ParseError("signature takes an expression or --matrix, not both");
      if (opt.matrix_path.empty() && opt.model_path.empty())
        throw pc::ParseError("signature with an expression needs --model");
    }
    return run(opt);
  } catch (const pc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pc::MissingEff& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const pc::NoGGBundles& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const pc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
