#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homalg/tensor.hpp"

namespace homalg {

enum class ProductRole {
  Bracket,
  Dot,
  Diamond,
  TriRight,  // ▶
  TriLeft,   // ◀
  Prec,      // ≺
  Succ,      // ≻
  NW,        // ↖
  SW,        // ↙
  NE,        // ↗
  SE,        // ↘
  Vee,       // ∨
  Wedge,     // ∧
  Star,      // ∗
};

inline constexpr std::array kAllRoles = {
    ProductRole::Bracket, ProductRole::Dot, ProductRole::Diamond, ProductRole::TriRight, ProductRole::TriLeft,
    ProductRole::Prec,    ProductRole::Succ, ProductRole::NW,     ProductRole::SW,       ProductRole::NE,
    ProductRole::SE,      ProductRole::Vee,  ProductRole::Wedge,  ProductRole::Star,
};

inline std::string_view role_name(ProductRole r) {
  switch (r) {
    case ProductRole::Bracket: return "bracket";
    case ProductRole::Dot: return "dot";
    case ProductRole::Diamond: return "diamond";
    case ProductRole::TriRight: return "triright";
    case ProductRole::TriLeft: return "trileft";
    case ProductRole::Prec: return "prec";
    case ProductRole::Succ: return "succ";
    case ProductRole::NW: return "nw";
    case ProductRole::SW: return "sw";
    case ProductRole::NE: return "ne";
    case ProductRole::SE: return "se";
    case ProductRole::Vee: return "vee";
    case ProductRole::Wedge: return "wedge";
    case ProductRole::Star: return "star";
  }
  return "?";
}

inline std::optional<ProductRole> parse_role(std::string_view s) {
  for (auto r : kAllRoles)
    if (role_name(r) == s) return r;
  return std::nullopt;
}

enum class StructureClass {
  HomLie,
  HomMalcev,
  HomMalcevAdmissible,
  HomPreMalcev,
  HomMDendriform,
  HomAssociative,
  HomAlternative,
  HomPreAlternative,
  HomAltQuadri,
};

inline constexpr std::array kAllClasses = {
    StructureClass::HomLie,         StructureClass::HomMalcev,      StructureClass::HomMalcevAdmissible,
    StructureClass::HomPreMalcev,   StructureClass::HomMDendriform, StructureClass::HomAssociative,
    StructureClass::HomAlternative, StructureClass::HomPreAlternative, StructureClass::HomAltQuadri,
};

inline std::string_view class_tag(StructureClass c) {
  switch (c) {
    case StructureClass::HomLie: return "hom-lie";
    case StructureClass::HomMalcev: return "hom-malcev";
    case StructureClass::HomMalcevAdmissible: return "hom-malcev-admissible";
    case StructureClass::HomPreMalcev: return "hom-pre-malcev";
    case StructureClass::HomMDendriform: return "hom-m-dendriform";
    case StructureClass::HomAssociative: return "hom-associative";
    case StructureClass::HomAlternative: return "hom-alternative";
    case StructureClass::HomPreAlternative: return "hom-pre-alternative";
    case StructureClass::HomAltQuadri: return "hom-alt-quadri";
  }
  return "?";
}

inline std::optional<StructureClass> parse_class(std::string_view s) {
  for (auto c : kAllClasses)
    if (class_tag(c) == s) return c;
  return std::nullopt;
}

/// Product roles a class reads.
inline std::vector<ProductRole> class_roles(StructureClass c) {
  using R = ProductRole;
  switch (c) {
    case StructureClass::HomLie:
    case StructureClass::HomMalcev: return {R::Bracket};
    case StructureClass::HomPreMalcev: return {R::Dot};
    case StructureClass::HomMDendriform: return {R::TriRight, R::TriLeft};
    case StructureClass::HomMalcevAdmissible:
    case StructureClass::HomAssociative:
    case StructureClass::HomAlternative: return {R::Star};
    case StructureClass::HomPreAlternative: return {R::Prec, R::Succ};
    case StructureClass::HomAltQuadri: return {R::NW, R::SW, R::NE, R::SE};
  }
  return {};
}

/// Identity ids a class check reports, in report order.
inline std::vector<std::string> class_identities(StructureClass c) {
  switch (c) {
    case StructureClass::HomLie: return {"SKEW", "JACOBI"};
    case StructureClass::HomMalcev: return {"SKEW", "HM-EXP", "HM-JAC"};
    case StructureClass::HomMalcevAdmissible: return {"HM-EXP", "HM-JAC"};
    case StructureClass::HomPreMalcev: return {"HPM"};
    case StructureClass::HomMDendriform: return {"MD1", "MD2", "MD3", "MD4"};
    case StructureClass::HomAssociative: return {"ASSOC"};
    case StructureClass::HomAlternative: return {"ALT-L", "ALT-R"};
    case StructureClass::HomPreAlternative:
      return {"PA1", "PA2", "PA3", "PA4", "PA5", "PA6", "PA7", "PA8", "PA9", "PA10"};
    case StructureClass::HomAltQuadri: return {"QA1", "QA2", "QA3", "QA4", "QA5", "QA6", "QA7", "QA8", "QA9"};
  }
  return {};
}

/// A finite-dimensional Hom-algebra: named products and a twist map.
struct HomStructure {
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::map<ProductRole, StructureTensor> products;
  Matrix twist;

  HomStructure() = default;
  HomStructure(std::size_t n, std::map<ProductRole, StructureTensor> ps, Matrix alpha,
               std::vector<std::string> labels = {})
      : dim(n), basis(std::move(labels)), products(std::move(ps)), twist(std::move(alpha)) {
    if (basis.empty()) basis = default_labels(n, "e");
    validate();
  }

  static std::vector<std::string> default_labels(std::size_t n, const std::string& stem) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(stem + std::to_string(i + 1));
    return v;
  }

  void validate() const {
    if (basis.size() != dim) throw Error(ErrorKind::DimensionMismatch, "basis label count differs from dim");
    if (twist.rows() != dim || twist.cols() != dim) throw Error(ErrorKind::DimensionMismatch, "twist is not dim x dim");
    for (const auto& [r, t] : products)
      if (t.dim() != dim)
        throw Error(ErrorKind::DimensionMismatch, "product " + std::string(role_name(r)) + " has wrong dim");
  }

  bool has(ProductRole r) const { return products.contains(r); }

  const StructureTensor& product(ProductRole r) const {
    auto it = products.find(r);
    if (it == products.end()) throw Error(ErrorKind::RoleMismatch, "structure has no " + std::string(role_name(r)) + " product");
    return it->second;
  }

  void require(const std::vector<ProductRole>& roles) const {
    for (auto r : roles) product(r);
  }

  friend bool operator==(const HomStructure&, const HomStructure&) = default;
};

/// One failing basis tuple of one identity.
struct Violation {
  std::string identity_id;
  std::vector<std::size_t> tuple;
  Vec residual;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CheckReport {
  std::optional<StructureClass> cls;
  std::string subject;  // what was checked, e.g. "hom-malcev" or "rota-baxter"
  bool pass = true;
  std::vector<Violation> violations;
  std::size_t tuples_checked = 0;
  std::chrono::nanoseconds elapsed{0};

  std::size_t count(std::string_view id) const {
    std::size_t n = 0;
    for (const auto& v : violations) n += v.identity_id == id;
    return n;
  }

  void add(Violation v) {
    violations.push_back(std::move(v));
    pass = false;
  }
  void merge(const CheckReport& o) {
    for (const auto& v : o.violations) add(v);
    tuples_checked += o.tuples_checked;
    elapsed += o.elapsed;
  }
};

}  // namespace homalg
