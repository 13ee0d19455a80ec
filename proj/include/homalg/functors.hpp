#pragma once

#include <string>
#include <utility>
#include <vector>

#include "homalg/operators.hpp"

namespace homalg {

/// [x, y] = x o y - y o x for the given role, as a Bracket structure.
inline HomStructure commutator(const HomStructure& s, ProductRole role) {
  const auto& p = s.product(role);
  std::map<ProductRole, StructureTensor> ps;
  ps[ProductRole::Bracket] = p - opposite(p);
  return HomStructure(s.dim, std::move(ps), s.twist, s.basis);
}

/// x·y = x◀y + x▶y
inline HomStructure horizontal(const HomStructure& s) {
  std::map<ProductRole, StructureTensor> ps;
  ps[ProductRole::Dot] = s.product(ProductRole::TriLeft) + s.product(ProductRole::TriRight);
  return HomStructure(s.dim, std::move(ps), s.twist, s.basis);
}

/// x⋄y = x◀y - y▶x, stored under Dot.
inline HomStructure vertical(const HomStructure& s) {
  std::map<ProductRole, StructureTensor> ps;
  ps[ProductRole::Dot] = s.product(ProductRole::TriLeft) - opposite(s.product(ProductRole::TriRight));
  return HomStructure(s.dim, std::move(ps), s.twist, s.basis);
}

/// x▶ᵗy = -y▶x, x◀ᵗy = x◀y
inline HomStructure transpose(const HomStructure& s) {
  std::map<ProductRole, StructureTensor> ps;
  ps[ProductRole::TriRight] = StructureTensor(s.dim) - opposite(s.product(ProductRole::TriRight));
  ps[ProductRole::TriLeft] = s.product(ProductRole::TriLeft);
  return HomStructure(s.dim, std::move(ps), s.twist, s.basis);
}

/// Composes every product with gamma and the twist with gamma. Gamma must be a
/// morphism; it must also commute with a nontrivial twist.
inline HomStructure yau_twist(const HomStructure& s, const Matrix& gamma, bool weak) {
  if (gamma.rows() != s.dim || gamma.cols() != s.dim) throw Error(ErrorKind::DimensionMismatch, "twist map shape");
  bool need_commute = !weak || !s.twist.is_identity();
  auto rep = check_morphism(gamma, s, s, !need_commute);
  if (!rep.pass) throw Error(ErrorKind::NotAMorphism, "map fails " + rep.violations.front().identity_id);
  std::map<ProductRole, StructureTensor> ps;
  for (const auto& [role, p] : s.products) ps[role] = push_product(p, gamma);
  return HomStructure(s.dim, std::move(ps), s.twist * gamma, s.basis);
}

inline constexpr std::string_view kDirections[] = {"prealt-horizontal", "prealt-vertical", "mdendriform"};

/// Two-product structures read off a quadri structure.
inline HomStructure quadri_split(const HomStructure& s, std::string_view direction) {
  using R = ProductRole;
  if (std::find(std::begin(kDirections), std::end(kDirections), direction) == std::end(kDirections))
    throw Error(ErrorKind::UnknownDirection, "quadri split direction \"" + std::string(direction) + "\"");
  s.require(class_roles(StructureClass::HomAltQuadri));
  const auto &nw = s.product(R::NW), &sw = s.product(R::SW), &ne = s.product(R::NE), &se = s.product(R::SE);
  std::map<ProductRole, StructureTensor> ps;
  if (direction == "prealt-horizontal") {
    ps[R::Succ] = ne + se;
    ps[R::Prec] = nw + sw;
  } else if (direction == "prealt-vertical") {
    ps[R::Succ] = se + sw;
    ps[R::Prec] = ne + nw;
  } else {
    ps[R::TriRight] = ne - opposite(sw);
    ps[R::TriLeft] = se - opposite(nw);
  }
  return HomStructure(s.dim, std::move(ps), s.twist, s.basis);
}

/// x ∗ y = x≺y + x≻y
inline HomStructure prealt_sum(const HomStructure& s) {
  std::map<ProductRole, StructureTensor> ps;
  ps[ProductRole::Star] = s.product(ProductRole::Prec) + s.product(ProductRole::Succ);
  return HomStructure(s.dim, std::move(ps), s.twist, s.basis);
}

/// x·y = x≻y - y≺x
inline HomStructure prealt_difference(const HomStructure& s) {
  std::map<ProductRole, StructureTensor> ps;
  ps[ProductRole::Dot] = s.product(ProductRole::Succ) - opposite(s.product(ProductRole::Prec));
  return HomStructure(s.dim, std::move(ps), s.twist, s.basis);
}

/// Sum of the four quadri products as Star.
inline HomStructure quadri_total(const HomStructure& s) {
  using R = ProductRole;
  std::map<ProductRole, StructureTensor> ps;
  ps[R::Star] = s.product(R::NW) + s.product(R::SW) + s.product(R::NE) + s.product(R::SE);
  return HomStructure(s.dim, std::move(ps), s.twist, s.basis);
}

/// (left ◀ action, right ▶ action, a) on the horizontal structure.
inline Representation horizontal_bimodule(const HomStructure& s) {
  Representation rep;
  rep.base = std::make_shared<const HomStructure>(horizontal(s));
  rep.module_dim = s.dim;
  rep.module_twist = s.twist;
  Matrix id = Matrix::identity(s.dim);
  rep.actions[ActionRole::Ell] = detail::left_action(s.product(ProductRole::TriLeft), id);
  rep.actions[ActionRole::Arr] = detail::right_action(s.product(ProductRole::TriRight), id);
  return rep;
}

struct DiagramReport {
  std::vector<std::pair<std::string, CheckReport>> nodes;
  std::vector<std::pair<std::string, bool>> edges;
  bool paths_equal = true;

  bool nodes_pass() const {
    for (const auto& [k, r] : nodes)
      if (!r.pass) return false;
    return true;
  }
};

/// Builds the six nodes of the alternative / Malcev diagram from an alternative
/// structure and two commuting Rota-Baxter operators, checks each node, and
/// compares every pair of paths that land on the same node.
inline DiagramReport verify_diagram(const HomStructure& alt, const OperatorWitness& r1, const OperatorWitness& r2) {
  using C = StructureClass;
  r1.validate(alt.dim);
  r2.validate(alt.dim);
  if (!check_commuting(r1, r2)) throw Error(ErrorKind::NotCommuting, "Rota-Baxter operators do not commute");
  DiagramReport out;

  HomStructure quadri = induce_pair(alt, r1, r2, "alternative-pair-to-quadri");
  HomStructure prealt = induce(alt, r1, "alternative-to-prealt-rb");
  HomStructure malcev = commutator(alt, ProductRole::Star);
  HomStructure premalcev = prealt_difference(prealt);
  HomStructure mdend = quadri_split(quadri, "mdendriform");

  out.nodes.emplace_back("quadri", check(quadri, C::HomAltQuadri));
  out.nodes.emplace_back("pre-alternative", check(prealt, C::HomPreAlternative));
  out.nodes.emplace_back("alternative", check(alt, C::HomAlternative));
  out.nodes.emplace_back("m-dendriform", check(mdend, C::HomMDendriform));
  out.nodes.emplace_back("pre-malcev", check(premalcev, C::HomPreMalcev));
  out.nodes.emplace_back("malcev", check(malcev, C::HomMalcev));

  auto equal = [&](const std::string& label, const HomStructure& a, const HomStructure& b) {
    bool eq = a == b;
    out.edges.emplace_back(label, eq);
    out.paths_equal = out.paths_equal && eq;
  };
  auto passes = [&](const std::string& label, const HomStructure& s, C cls) {
    out.edges.emplace_back(label, check(s, cls).pass);
  };

  equal("rb: pre-alternative -> quadri", induce(prealt, r2, "prealt-to-quadri-rb"), quadri);
  equal("rb: malcev -> pre-malcev", induce(malcev, r1, "malcev-to-premalcev-rb"), premalcev);
  equal("rb: pre-malcev -> m-dendriform", induce(premalcev, r2, "premalcev-to-mdendriform-rb"), mdend);
  equal("rb pair: malcev -> m-dendriform", induce_pair(malcev, r1, r2, "malcev-pair-to-mdendriform"), mdend);

  HomStructure split = quadri_split(quadri, "prealt-horizontal");
  passes("quadri -> pre-alternative", split, C::HomPreAlternative);
  passes("quadri -> pre-alternative (vertical)", quadri_split(quadri, "prealt-vertical"), C::HomPreAlternative);
  passes("quadri -> alternative", quadri_total(quadri), C::HomAlternative);
  equal("quadri square: horizontal = pre-alternative difference", horizontal(mdend), prealt_difference(split));
  passes("m-dendriform -> pre-malcev", horizontal(mdend), C::HomPreMalcev);
  HomStructure sum = prealt_sum(prealt);
  passes("pre-alternative -> alternative", sum, C::HomAlternative);
  equal("lower square: commutators agree", commutator(premalcev, ProductRole::Dot), commutator(sum, ProductRole::Star));
  passes("alternative -> malcev", commutator(sum, ProductRole::Star), C::HomMalcev);
  return out;
}

}  // namespace homalg
