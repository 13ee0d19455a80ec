// Command-line front end: check, construct, diagram, fmt.
//
// Exit codes: 0 everything passed, 1 a check or precondition failed,
// 2 input, schema or usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "homalg/homalg.hpp"

using namespace homalg;

namespace {

struct Options {
  std::string format = "text";
  std::string output;
  std::string input;
  std::string cls;
  bool multiplicativity = false;
  bool pa_eq = false;
  std::string recipe;
  int op1 = -1, op2 = -1, rep = -1, form = -1;
  std::string role;
  std::string variant = "forward";
  unsigned power = 0;
  bool weak = false;
  std::size_t max_listed = 20;
};

/// Precondition failures map to exit 1, everything else to exit 2.
int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::OperatorInvalid:
    case ErrorKind::NotCommuting:
    case ErrorKind::NotMultiplicative:
    case ErrorKind::NotAMorphism:
    case ErrorKind::HessianInvalid:
    case ErrorKind::EndomorphismInvalid:
    case ErrorKind::SingularMatrix:
      return 1;
    default:
      return 2;
  }
}

std::string input_name(const std::string& path) { return std::filesystem::path(path).filename().string(); }

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw Error(ErrorKind::SchemaError, "cannot write " + o.output);
  out << text;
}

std::string vec_text(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "]";
}

std::string tuple_text(const std::vector<std::size_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + std::to_string(t[i]);
  return s + ")";
}

void report_text(std::ostringstream& os, const std::string& label, const CheckReport& r, std::size_t max_listed) {
  os << label << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.tuples_checked << " tuples";
  if (!r.pass) os << ", " << r.violations.size() << " violations";
  os << ")\n";
  std::map<std::string, std::size_t> shown;
  for (const auto& v : r.violations) {
    if (shown[v.identity_id]++ >= max_listed) continue;
    os << "  " << v.identity_id << " " << tuple_text(v.tuple) << " residual " << vec_text(v.residual) << "\n";
  }
  for (const auto& [id, n] : shown)
    if (n > max_listed) os << "  " << id << ": " << n - max_listed << " more not listed\n";
}

/// Deterministic part first, elapsed times under a separate "timing" key.
std::string report_document(json body, const json& timing) {
  body["timing"] = timing;
  return body.dump(2) + "\n";
}

json ns(std::chrono::nanoseconds d) { return static_cast<long long>(d.count()); }

std::optional<StructureClass> rep_class(const Bundle& b, const Representation& r) {
  switch (r.kind()) {
    case RepKind::Malcev: return StructureClass::HomMalcev;
    case RepKind::PreMalcev:
      if (b.structure.has(ProductRole::Dot)) return StructureClass::HomPreMalcev;
      return std::nullopt;
    case RepKind::PreAlternative: return StructureClass::HomPreAlternative;
  }
  return std::nullopt;
}

int cmd_check(const Options& o) {
  Bundle b = load_bundle(o.input);
  std::optional<StructureClass> cls = b.cls;
  if (!o.cls.empty()) {
    cls = parse_class(o.cls);
    if (!cls) throw Error(ErrorKind::UnknownKind, "unknown class \"" + o.cls + "\"");
  }
  if (!cls) throw Error(ErrorKind::SchemaError, "bundle declares no class and --class was not given");

  std::vector<std::pair<std::string, CheckReport>> reports;
  reports.emplace_back("structure", check(b.structure, *cls, {o.multiplicativity}));
  for (std::size_t i = 0; i < b.reps.size(); ++i) {
    auto rc = rep_class(b, *b.reps[i]);
    if (rc) reports.emplace_back("reps[" + std::to_string(i) + "]", check_rep(*b.reps[i], *rc, {o.pa_eq}));
  }
  for (std::size_t i = 0; i < b.operators.size(); ++i)
    reports.emplace_back("operators[" + std::to_string(i) + "]", check_operator(b.structure, b.operators[i]));
  if (b.structure.has(ProductRole::Dot))
    for (std::size_t i = 0; i < b.forms.size(); ++i)
      reports.emplace_back("forms[" + std::to_string(i) + "]", check_hessian(b.structure, b.forms[i]));

  bool pass = true;
  for (const auto& [k, r] : reports) pass = pass && r.pass;
  int status = pass ? 0 : 1;
  if (o.format == "json") {
    json body;
    body["command"] = "check";
    body["input"] = input_name(o.input);
    body["class"] = std::string(class_tag(*cls));
    body["multiplicativity"] = o.multiplicativity;
    json checks = json::array();
    json timing = json::object();
    for (const auto& [k, r] : reports) {
      json c = report_json(r);
      c["target"] = k;
      checks.push_back(std::move(c));
      timing[k + ":" + r.subject] = ns(r.elapsed);
    }
    body["checks"] = std::move(checks);
    body["exit_status"] = status;
    emit(o, report_document(std::move(body), json{{"elapsed_ns", timing}}));
  } else {
    std::ostringstream os;
    for (const auto& [k, r] : reports) report_text(os, k + " " + r.subject, r, o.max_listed);
    os << (pass ? "all checks pass\n" : "violations found\n");
    emit(o, os.str());
  }
  return status;
}

const OperatorWitness& pick_operator(const Bundle& b, int i, const char* flag) {
  if (i < 0) throw Error(ErrorKind::SchemaError, std::string("recipe needs ") + flag);
  if (static_cast<std::size_t>(i) >= b.operators.size())
    throw Error(ErrorKind::DimensionMismatch, std::string(flag) + " " + std::to_string(i) + " out of range");
  return b.operators[i];
}

const Representation& pick_rep(const Bundle& b, int i) {
  if (i < 0) throw Error(ErrorKind::SchemaError, "recipe needs --rep");
  if (static_cast<std::size_t>(i) >= b.reps.size())
    throw Error(ErrorKind::DimensionMismatch, "--rep " + std::to_string(i) + " out of range");
  return *b.reps[i];
}

ProductRole default_role(const HomStructure& s, const std::string& flag) {
  if (!flag.empty()) {
    auto r = parse_role(flag);
    if (!r) throw Error(ErrorKind::RoleMismatch, "unknown role \"" + flag + "\"");
    return *r;
  }
  for (auto r : {ProductRole::Star, ProductRole::Dot, ProductRole::Bracket})
    if (s.has(r)) return r;
  throw Error(ErrorKind::RoleMismatch, "commutator needs --role");
}

std::optional<StructureClass> recipe_class(std::string_view recipe) {
  using C = StructureClass;
  static const std::map<std::string_view, C> m = {
      {"commutator", C::HomMalcev},
      {"horizontal", C::HomPreMalcev},
      {"vertical", C::HomPreMalcev},
      {"transpose", C::HomMDendriform},
      {"malcev-to-premalcev-oop", C::HomPreMalcev},
      {"malcev-to-premalcev-rb", C::HomPreMalcev},
      {"premalcev-to-mdendriform-oop", C::HomMDendriform},
      {"premalcev-to-mdendriform-rb", C::HomMDendriform},
      {"premalcev-compatible-dendriform", C::HomMDendriform},
      {"alternative-to-prealt-oop", C::HomPreAlternative},
      {"alternative-to-prealt-rb", C::HomPreAlternative},
      {"prealt-to-quadri-oop", C::HomAltQuadri},
      {"prealt-to-quadri-rb", C::HomAltQuadri},
      {"malcev-pair-to-mdendriform", C::HomMDendriform},
      {"alternative-pair-to-quadri", C::HomAltQuadri},
      {"hessian-dendrify", C::HomMDendriform},
      {"split-prealt-horizontal", C::HomPreAlternative},
      {"split-prealt-vertical", C::HomPreAlternative},
      {"split-mdendriform", C::HomMDendriform},
      {"prealt-sum", C::HomAlternative},
      {"prealt-difference", C::HomPreMalcev},
      {"quadri-total", C::HomAlternative},
  };
  auto it = m.find(recipe);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

int cmd_construct(const Options& o) {
  Bundle in = load_bundle(o.input);
  const HomStructure& s = in.structure;
  const std::string& r = o.recipe;
  Bundle out;
  out.cls = recipe_class(r);
  json prov;
  prov["recipe"] = r;
  prov["input"] = input_name(o.input);
  auto variant = [&] {
    if (o.variant == "forward") return DualVariant::AlphaForward;
    if (o.variant == "inverse") return DualVariant::AlphaInverse;
    throw Error(ErrorKind::UnknownKind, "unknown dual variant \"" + o.variant + "\"");
  };

  if (r == "commutator") {
    auto role = default_role(s, o.role);
    prov["role"] = std::string(role_name(role));
    out.structure = commutator(s, role);
  } else if (r == "horizontal") {
    out.structure = horizontal(s);
  } else if (r == "vertical") {
    out.structure = vertical(s);
  } else if (r == "transpose") {
    out.structure = transpose(s);
  } else if (r == "prealt-sum") {
    out.structure = prealt_sum(s);
  } else if (r == "prealt-difference") {
    out.structure = prealt_difference(s);
  } else if (r == "quadri-total") {
    out.structure = quadri_total(s);
  } else if (r.starts_with("split-")) {
    out.structure = quadri_split(s, std::string_view(r).substr(6));
  } else if (r == "yau-twist") {
    const auto& w = pick_operator(in, o.op1, "--operator");
    prov["operator"] = o.op1;
    prov["weak"] = o.weak;
    out.structure = yau_twist(s, w.map, o.weak);
    out.cls = in.cls;
  } else if (r == "semidirect") {
    out.structure = semidirect(s, pick_rep(in, o.rep));
    prov["rep"] = o.rep;
    out.cls = in.cls;
  } else if (r == "dual-rep" || r == "adjoint-rep" || r == "regular-rep") {
    out.structure = s;
    out.cls = in.cls;
    Representation rep;
    if (r == "dual-rep") {
      const auto& src = pick_rep(in, o.rep);
      prov["rep"] = o.rep;
      prov["variant"] = o.variant;
      rep = src.kind() == RepKind::Malcev ? dual_malcev_rep(src, variant()) : dual_pre_malcev_rep(src, variant());
    } else {
      prov["power"] = o.power;
      rep = r == "adjoint-rep" ? adjoint_rep(s, o.power) : regular_pre_malcev_rep(s, o.power);
    }
    out.reps.push_back(std::make_shared<const Representation>(std::move(rep)));
  } else if (r == "hessian-dendrify") {
    if (o.form < 0 || static_cast<std::size_t>(o.form) >= in.forms.size())
      throw Error(ErrorKind::DimensionMismatch, "--form missing or out of range");
    prov["form"] = o.form;
    out.structure = hessian_dendrify(s, in.forms[o.form]);
  } else if (std::find(std::begin(kPairRecipes), std::end(kPairRecipes), r) != std::end(kPairRecipes)) {
    const auto& w1 = pick_operator(in, o.op1, "--operator");
    const auto& w2 = pick_operator(in, o.op2, "--operator2");
    prov["operator"] = o.op1;
    prov["operator2"] = o.op2;
    out.structure = induce_pair(s, w1, w2, r);
  } else if (std::find(std::begin(kRecipes), std::end(kRecipes), r) != std::end(kRecipes)) {
    const auto& w = pick_operator(in, o.op1, "--operator");
    prov["operator"] = o.op1;
    out.structure = induce(s, w, r);
  } else {
    throw Error(ErrorKind::UnknownRecipe, "unknown recipe \"" + r + "\"");
  }
  out.provenance = std::move(prov);
  emit(o, save_bundle(out));
  return 0;
}

int cmd_diagram(const Options& o) {
  Bundle b = load_bundle(o.input);
  const auto& w1 = pick_operator(b, o.op1 < 0 ? 0 : o.op1, "--operator");
  const auto& w2 = pick_operator(b, o.op2 < 0 ? 1 : o.op2, "--operator2");
  DiagramReport d;
  try {
    d = verify_diagram(b.structure, w1, w2);
  } catch (const Error& e) {
    if (exit_for(e) != 1) throw;
    if (o.format == "json") {
      json body{{"command", "diagram"}, {"input", input_name(o.input)}, {"error", e.what()}, {"exit_status", 1}};
      emit(o, body.dump(2) + "\n");
    } else {
      emit(o, std::string("diagram not built: ") + e.what() + "\n");
    }
    return 1;
  }
  bool ok = d.nodes_pass() && d.paths_equal;
  int status = ok ? 0 : 1;
  if (o.format == "json") {
    json body{{"command", "diagram"}, {"input", input_name(o.input)}};
    body["diagram"] = diagram_json(d);
    body["exit_status"] = status;
    json timing = json::object();
    for (const auto& [k, r] : d.nodes) timing[k] = ns(r.elapsed);
    emit(o, report_document(std::move(body), json{{"elapsed_ns", timing}}));
  } else {
    std::ostringstream os;
    for (const auto& [k, r] : d.nodes) report_text(os, "node " + k, r, o.max_listed);
    for (const auto& [k, pass] : d.edges) os << "edge " << k << ": " << (pass ? "PASS" : "FAIL") << "\n";
    os << "paths_equal: " << (d.paths_equal ? "true" : "false") << "\n";
    emit(o, os.str());
  }
  return status;
}

int cmd_fmt(const Options& o) {
  emit(o, save_bundle(load_bundle(o.input)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks and constructions for finite-dimensional Hom-algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--output", o.output, "Write to this file instead of stdout");

  auto* chk = app.add_subcommand("check", "Check a bundle against a structure class");
  chk->add_option("bundle", o.input)->required();
  chk->add_option("--class", o.cls, "Class tag, overriding the bundle's declared class");
  chk->add_flag("--multiplicativity", o.multiplicativity, "Also require the twist to be multiplicative");
  chk->add_flag("--pa-eq", o.pa_eq, "Also check twist equivariance of pre-alternative actions");
  chk->add_option("--max-listed", o.max_listed, "Violations listed per identity in text output");

  auto* con = app.add_subcommand("construct", "Build a new bundle by a named recipe");
  con->add_option("bundle", o.input)->required();
  con->add_option("--recipe", o.recipe)->required();
  con->add_option("--operator", o.op1);
  con->add_option("--operator2", o.op2);
  con->add_option("--rep", o.rep);
  con->add_option("--form", o.form);
  con->add_option("--role", o.role, "Product for the commutator recipe");
  con->add_option("--variant", o.variant, "Dual formula: forward or inverse");
  con->add_option("--power", o.power, "Twist power s for adjoint-rep and regular-rep");
  con->add_flag("--weak", o.weak, "Yau twist by a weak morphism");

  auto* dia = app.add_subcommand("diagram", "Verify the alternative / Malcev diagram");
  dia->add_option("bundle", o.input)->required();
  dia->add_option("--operator", o.op1);
  dia->add_option("--operator2", o.op2);
  dia->add_option("--max-listed", o.max_listed);

  auto* fmt = app.add_subcommand("fmt", "Rewrite a bundle in canonical form");
  fmt->add_option("bundle", o.input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (*chk) return cmd_check(o);
    if (*con) return cmd_construct(o);
    if (*dia) return cmd_diagram(o);
    return cmd_fmt(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
