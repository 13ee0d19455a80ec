#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "homalg/functors.hpp"

namespace homalg {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// One scenario: a structure with the representations, operators and forms
/// that refer to it.
struct Bundle {
  HomStructure structure;
  std::vector<std::shared_ptr<const Representation>> reps;
  std::vector<OperatorWitness> operators;
  std::vector<BilinearForm> forms;
  std::optional<StructureClass> cls;
  json provenance;  // null when absent

  std::shared_ptr<const HomStructure> base() const { return std::make_shared<const HomStructure>(structure); }

  /// Index of the operator's representation within reps.
  std::optional<std::size_t> rep_index(const OperatorWitness& w) const {
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (reps[i] == w.rep) return i;
    return std::nullopt;
  }

  friend bool operator==(const Bundle& a, const Bundle& b) {
    if (!(a.structure == b.structure) || a.cls != b.cls || a.provenance != b.provenance) return false;
    if (a.reps.size() != b.reps.size() || a.operators.size() != b.operators.size() || a.forms.size() != b.forms.size())
      return false;
    for (std::size_t i = 0; i < a.reps.size(); ++i)
      if (!(*a.reps[i] == *b.reps[i])) return false;
    for (std::size_t i = 0; i < a.operators.size(); ++i) {
      const auto &x = a.operators[i], &y = b.operators[i];
      if (x.kind != y.kind || !(x.map == y.map) || x.weight != y.weight || a.rep_index(x) != b.rep_index(y)) return false;
    }
    for (std::size_t i = 0; i < a.forms.size(); ++i)
      if (!(a.forms[i].matrix == b.forms[i].matrix)) return false;
    return true;
  }
};

namespace io {

inline std::string quote(std::string_view s) { return json(std::string(s)).dump(); }

inline std::string flat_matrix(const Matrix& m, const std::string& indent) {
  if (m.rows() == 0 || m.cols() == 0) return "[]";
  std::string out = "[\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += indent + "  ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out += quote(m(i, j).to_string());
      if (i + 1 < m.rows() || j + 1 < m.cols()) out += j + 1 < m.cols() ? ", " : ",";
    }
    out += "\n";
  }
  return out + indent + "]";
}

struct Entry4 {
  std::size_t a, b, c;
  const Rational* v;
};

inline std::string entry_list(const std::vector<Entry4>& es, const std::string& indent) {
  if (es.empty()) return "[]";
  std::string out = "[\n";
  for (std::size_t i = 0; i < es.size(); ++i) {
    const auto& e = es[i];
    out += indent + "  [" + std::to_string(e.a) + ", " + std::to_string(e.b) + ", " + std::to_string(e.c) + ", " +
           quote(e.v->to_string()) + "]" + (i + 1 < es.size() ? ",\n" : "\n");
  }
  return out + indent + "]";
}

inline std::vector<Entry4> tensor_entries(const StructureTensor& t) {
  std::vector<Entry4> es;
  for (const auto& e : t.entries()) es.push_back({e.i, e.j, e.k, &e.value});
  return es;
}

inline std::vector<Entry4> action_entries(const Action& act) {
  std::vector<Entry4> es;
  for (std::size_t i = 0; i < act.dim(); ++i)
    for (std::size_t a = 0; a < act.module_dim(); ++a)
      for (std::size_t b = 0; b < act.module_dim(); ++b)
        if (!act.slice(i)(a, b).is_zero()) es.push_back({i, a, b, &act.slice(i)(a, b)});
  return es;
}

/// Joins "key": value members at one indentation level.
class ObjectWriter {
 public:
  explicit ObjectWriter(std::string indent) : indent_(std::move(indent)) {}
  void add(std::string_view key, const std::string& value) {
    members_.push_back(indent_ + "  " + quote(key) + ": " + value);
  }
  std::string str() const {
    if (members_.empty()) return "{}";
    std::string out = "{\n";
    for (std::size_t i = 0; i < members_.size(); ++i) out += members_[i] + (i + 1 < members_.size() ? ",\n" : "\n");
    return out + indent_ + "}";
  }

 private:
  std::string indent_;
  std::vector<std::string> members_;
};

inline std::string list_of(const std::vector<std::string>& items, const std::string& indent) {
  if (items.empty()) return "[]";
  std::string out = "[\n";
  for (std::size_t i = 0; i < items.size(); ++i) out += indent + "  " + items[i] + (i + 1 < items.size() ? ",\n" : "\n");
  return out + indent + "]";
}

}  // namespace io

/// Canonical text of a bundle: fixed key order, sorted entries, reduced "p/q".
inline std::string save_bundle(const Bundle& b) {
  const HomStructure& s = b.structure;
  io::ObjectWriter top("");
  top.add("schema_version", std::to_string(kSchemaVersion));
  top.add("dim", std::to_string(s.dim));
  std::vector<std::string> labels;
  for (const auto& l : s.basis) labels.push_back(io::quote(l));
  top.add("basis", labels.empty() ? "[]" : "[" + [&] {
    std::string j;
    for (std::size_t i = 0; i < labels.size(); ++i) j += (i ? ", " : "") + labels[i];
    return j;
  }() + "]");
  top.add("twist", io::flat_matrix(s.twist, "  "));
  io::ObjectWriter prods("  ");
  for (auto role : kAllRoles)
    if (s.has(role)) prods.add(role_name(role), io::entry_list(io::tensor_entries(s.product(role)), "    "));
  top.add("products", prods.str());
  if (!b.reps.empty()) {
    std::vector<std::string> items;
    for (const auto& r : b.reps) {
      io::ObjectWriter ro("    ");
      ro.add("module_dim", std::to_string(r->module_dim));
      ro.add("module_twist", io::flat_matrix(r->module_twist, "      "));
      io::ObjectWriter acts("      ");
      for (auto role : kAllActionRoles)
        if (r->has(role)) acts.add(action_name(role), io::entry_list(io::action_entries(r->action(role)), "        "));
      ro.add("actions", acts.str());
      items.push_back(ro.str());
    }
    top.add("reps", io::list_of(items, "  "));
  }
  if (!b.operators.empty()) {
    std::vector<std::string> items;
    for (const auto& w : b.operators) {
      io::ObjectWriter ow("    ");
      ow.add("kind", io::quote(w.kind == OperatorKind::RotaBaxter ? "rota-baxter" : "o-operator"));
      if (w.kind == OperatorKind::RotaBaxter) ow.add("weight", io::quote(w.weight.to_string()));
      ow.add("matrix", io::flat_matrix(w.map, "      "));
      if (w.kind == OperatorKind::OOperator) {
        auto idx = b.rep_index(w);
        if (!idx) throw Error(ErrorKind::SchemaError, "O-operator representation is not part of the bundle");
        ow.add("rep_index", std::to_string(*idx));
      }
      items.push_back(ow.str());
    }
    top.add("operators", io::list_of(items, "  "));
  }
  if (!b.forms.empty()) {
    std::vector<std::string> items;
    for (const auto& f : b.forms) items.push_back(io::flat_matrix(f.matrix, "    "));
    top.add("forms", io::list_of(items, "  "));
  }
  if (b.cls) top.add("class", io::quote(class_tag(*b.cls)));
  if (!b.provenance.is_null()) top.add("provenance", b.provenance.dump());
  return top.str() + "\n";
}

namespace io {

class Reader {
 public:
  [[noreturn]] static void fail(const std::string& where, const std::string& what,
                                ErrorKind kind = ErrorKind::SchemaError) {
    throw Error(kind, where + ": " + what);
  }

  static const json& field(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object()) fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, "missing field \"" + key + "\"");
    return *it;
  }

  static std::size_t count(const json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<long long>() < 0) fail(where, "expected a nonnegative integer");
    return v.get<std::size_t>();
  }

  static std::size_t index(const json& v, std::size_t bound, const std::string& where) {
    std::size_t i = count(v, where);
    if (i >= bound)
      fail(where, "index " + std::to_string(i) + " out of range (bound " + std::to_string(bound) + ")",
           ErrorKind::DimensionMismatch);
    return i;
  }

  static Rational rational(const json& v, const std::string& where) {
    if (!v.is_string()) fail(where, "expected a rational string \"p/q\"");
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
      fail(where, e.detail(), ErrorKind::ParseError);
    }
  }

  static Matrix matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!v.is_array()) fail(where, "expected a flat row-major list");
    if (v.size() != rows * cols)
      fail(where, "expected " + std::to_string(rows * cols) + " entries, found " + std::to_string(v.size()),
           ErrorKind::DimensionMismatch);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = rational(v[i * cols + j], where + "[" + std::to_string(i * cols + j) + "]");
    return m;
  }

  static std::vector<std::array<std::size_t, 3>> entries(const json& v, std::array<std::size_t, 3> bounds,
                                                         std::vector<Rational>& values, const std::string& where) {
    if (!v.is_array()) fail(where, "expected a list of [i, j, k, \"p/q\"]");
    std::vector<std::array<std::size_t, 3>> idx;
    std::set<std::array<std::size_t, 3>> seen;
    for (std::size_t n = 0; n < v.size(); ++n) {
      std::string w = where + "[" + std::to_string(n) + "]";
      const json& e = v[n];
      if (!e.is_array() || e.size() != 4) fail(w, "expected [i, j, k, \"p/q\"]");
      idx.push_back({index(e[0], bounds[0], w + "[0]"), index(e[1], bounds[1], w + "[1]"),
                     index(e[2], bounds[2], w + "[2]")});
      values.push_back(rational(e[3], w + "[3]"));
      if (!seen.insert(idx.back()).second) fail(w, "duplicate entry for the same index triple");
    }
    return idx;
  }
};

}  // namespace io

inline Bundle load_bundle_json(const json& doc) {
  using io::Reader;
  Bundle b;
  if (!doc.is_object()) Reader::fail("bundle", "expected an object");
  auto version = Reader::count(Reader::field(doc, "schema_version", "bundle"), "schema_version");
  if (version != kSchemaVersion) Reader::fail("schema_version", "unsupported version " + std::to_string(version));
  const std::size_t n = Reader::count(Reader::field(doc, "dim", "bundle"), "dim");
  std::vector<std::string> labels;
  if (doc.contains("basis")) {
    const json& bl = doc["basis"];
    if (!bl.is_array() || bl.size() != n) Reader::fail("basis", "expected " + std::to_string(n) + " labels");
    for (std::size_t i = 0; i < n; ++i) {
      if (!bl[i].is_string()) Reader::fail("basis[" + std::to_string(i) + "]", "expected a string");
      labels.push_back(bl[i].get<std::string>());
    }
  }
  Matrix twist = Reader::matrix(Reader::field(doc, "twist", "bundle"), n, n, "twist");
  const json& pj = Reader::field(doc, "products", "bundle");
  if (!pj.is_object()) Reader::fail("products", "expected an object");
  std::map<ProductRole, StructureTensor> ps;
  for (const auto& [key, val] : pj.items()) {
    auto role = parse_role(key);
    if (!role) Reader::fail("products." + key, "unknown product role", ErrorKind::RoleMismatch);
    std::vector<Rational> vals;
    auto idx = Reader::entries(val, {n, n, n}, vals, "products." + key);
    std::vector<StructureTensor::Entry> es;
    for (std::size_t t = 0; t < idx.size(); ++t) es.push_back({idx[t][0], idx[t][1], idx[t][2], vals[t]});
    ps[*role] = StructureTensor(n, std::move(es));
  }
  b.structure = HomStructure(n, std::move(ps), std::move(twist), std::move(labels));
  auto base = b.base();

  if (doc.contains("reps")) {
    const json& rl = doc["reps"];
    if (!rl.is_array()) Reader::fail("reps", "expected a list");
    for (std::size_t r = 0; r < rl.size(); ++r) {
      std::string w = "reps[" + std::to_string(r) + "]";
      Representation rep;
      rep.base = base;
      rep.module_dim = Reader::count(Reader::field(rl[r], "module_dim", w), w + ".module_dim");
      const std::size_t m = rep.module_dim;
      rep.module_twist = Reader::matrix(Reader::field(rl[r], "module_twist", w), m, m, w + ".module_twist");
      const json& aj = Reader::field(rl[r], "actions", w);
      if (!aj.is_object()) Reader::fail(w + ".actions", "expected an object");
      for (const auto& [key, val] : aj.items()) {
        auto role = parse_action(key);
        if (!role) Reader::fail(w + ".actions." + key, "unknown action role", ErrorKind::RoleMismatch);
        std::vector<Rational> vals;
        auto idx = Reader::entries(val, {n, m, m}, vals, w + ".actions." + key);
        Action act(n, m);
        for (std::size_t t = 0; t < idx.size(); ++t) act.slice(idx[t][0])(idx[t][1], idx[t][2]) += vals[t];
        rep.actions[*role] = std::move(act);
      }
      try {
        rep.kind();
      } catch (const Error& e) {
        Reader::fail(w + ".actions", e.detail(), ErrorKind::RoleMismatch);
      }
      b.reps.push_back(std::make_shared<const Representation>(std::move(rep)));
    }
  }

  if (doc.contains("operators")) {
    const json& ol = doc["operators"];
    if (!ol.is_array()) Reader::fail("operators", "expected a list");
    for (std::size_t o = 0; o < ol.size(); ++o) {
      std::string w = "operators[" + std::to_string(o) + "]";
      const json& kj = Reader::field(ol[o], "kind", w);
      std::string kind = kj.is_string() ? kj.get<std::string>() : "";
      OperatorWitness ow;
      if (kind == "rota-baxter") {
        Matrix map = Reader::matrix(Reader::field(ol[o], "matrix", w), n, n, w + ".matrix");
        Rational weight = ol[o].contains("weight") ? Reader::rational(ol[o]["weight"], w + ".weight") : Rational(0);
        ow = OperatorWitness::rota_baxter(std::move(map), std::move(weight));
      } else if (kind == "o-operator") {
        std::size_t ri = Reader::index(Reader::field(ol[o], "rep_index", w), b.reps.size(), w + ".rep_index");
        Matrix map = Reader::matrix(Reader::field(ol[o], "matrix", w), n, b.reps[ri]->module_dim, w + ".matrix");
        ow = OperatorWitness::o_operator(std::move(map), b.reps[ri]);
      } else {
        Reader::fail(w + ".kind", "expected \"rota-baxter\" or \"o-operator\"", ErrorKind::UnknownKind);
      }
      try {
        ow.validate(n);
      } catch (const Error& e) {
        Reader::fail(w, e.detail(), e.kind());
      }
      b.operators.push_back(std::move(ow));
    }
  }

  if (doc.contains("forms")) {
    const json& fl = doc["forms"];
    if (!fl.is_array()) Reader::fail("forms", "expected a list");
    for (std::size_t f = 0; f < fl.size(); ++f) {
      std::string w = "forms[" + std::to_string(f) + "]";
      Matrix m = Reader::matrix(fl[f], n, n, w);
      if (!(m == m.transpose())) Reader::fail(w, "form matrix is not symmetric");
      b.forms.push_back({std::move(m)});
    }
  }

  if (doc.contains("class")) {
    const json& cj = doc["class"];
    auto c = cj.is_string() ? parse_class(cj.get<std::string>()) : std::nullopt;
    if (!c) Reader::fail("class", "unknown structure class", ErrorKind::UnknownKind);
    b.cls = c;
  }
  if (doc.contains("provenance")) b.provenance = doc["provenance"];
  for (const auto& [key, val] : doc.items()) {
    static const std::vector<std::string> known = {"schema_version", "dim",   "basis", "twist",     "products",
                                                   "reps",           "operators", "forms", "class", "provenance"};
    if (std::find(known.begin(), known.end(), key) == known.end()) Reader::fail(key, "unknown top-level field");
  }
  return b;
}

inline Bundle load_bundle_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("bundle is not valid JSON: ") + e.what());
  }
  return load_bundle_json(doc);
}

inline Bundle load_bundle(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::SchemaError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_bundle_text(ss.str());
}

inline void save_bundle_file(const Bundle& b, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::SchemaError, "cannot write " + path);
  out << save_bundle(b);
}

// Reports. The "timing" member is kept out of the deterministic part.

inline json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

inline json report_json(const CheckReport& r) {
  json j;
  j["subject"] = r.subject;
  if (r.cls) j["class"] = std::string(class_tag(*r.cls));
  j["pass"] = r.pass;
  j["tuples_checked"] = r.tuples_checked;
  j["violation_count"] = r.violations.size();
  json per = json::object();
  for (const auto& v : r.violations) {
    if (!per.contains(v.identity_id)) per[v.identity_id] = 0;
    per[v.identity_id] = per[v.identity_id].get<std::size_t>() + 1;
  }
  j["violations_by_identity"] = per;
  json vs = json::array();
  for (const auto& v : r.violations) {
    json e;
    e["identity"] = v.identity_id;
    e["tuple"] = v.tuple;
    e["residual"] = vec_json(v.residual);
    vs.push_back(std::move(e));
  }
  j["violations"] = std::move(vs);
  return j;
}

inline json diagram_json(const DiagramReport& d) {
  json j;
  json nodes = json::object();
  for (const auto& [k, r] : d.nodes) nodes[k] = report_json(r);
  j["nodes"] = std::move(nodes);
  json edges = json::array();
  for (const auto& [label, ok] : d.edges) edges.push_back(json{{"edge", label}, {"pass", ok}});
  j["edges"] = std::move(edges);
  j["paths_equal"] = d.paths_equal;
  return j;
}

}  // namespace homalg
