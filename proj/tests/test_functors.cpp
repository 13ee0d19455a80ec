#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "support.hpp"

using namespace homalg;
using C = StructureClass;
using R = ProductRole;
using W = OperatorWitness;

namespace {

bool all_zero(const HomStructure& s) {
  for (const auto& [r, t] : s.products)
    if (!t.is_zero()) return false;
  return true;
}

HomStructure mdend() {
  Bundle h = fixture("hessian.json");
  return hessian_dendrify(h.structure, h.forms[0]);
}

HomStructure md_pair(const HomStructure& base, StructureTensor right, StructureTensor left) {
  return HomStructure(base.dim, {{R::TriRight, std::move(right)}, {R::TriLeft, std::move(left)}}, base.twist, base.basis);
}

}  // namespace

TEST(Commutator, Examples) {
  StructureTensor sym(2, {{0, 1, 0, 1}, {1, 0, 0, 1}, {1, 1, 1, 3}});
  HomStructure comm(2, {{R::Dot, sym}}, Matrix::identity(2));
  EXPECT_TRUE(commutator(comm, R::Dot).product(R::Bracket).is_zero());

  HomStructure p = fixture("premalcev_rb.json").structure;
  EXPECT_TRUE(commutator(p, R::Dot).product(R::Bracket).is_zero());

  HomStructure o = commutator(fixture("octonions.json").structure, R::Star);
  EXPECT_TRUE(check(o, C::HomMalcev).pass);
  EXPECT_THROW(commutator(p, R::Star), Error);
}

TEST(Commutator, AgreesWithOracle) {
  auto table = oracle::CayleyDickson({-1, -1, -1}).table();
  HomStructure o = commutator(fixture("octonions.json").structure, R::Star);
  EXPECT_EQ(o.product(R::Bracket), oracle::to_tensor(oracle::commutator_table(table, 0)));
}

TEST(HorizontalVertical, Examples) {
  HomStructure base(3, {}, Matrix::identity(3));
  HomStructure zero = md_pair(base, StructureTensor(3), StructureTensor(3));
  EXPECT_TRUE(horizontal(zero).product(R::Dot).is_zero());
  EXPECT_TRUE(vertical(zero).product(R::Dot).is_zero());

  HomStructure md = mdend();
  HomStructure left_only = md_pair(md, StructureTensor(3), md.product(R::TriLeft));
  EXPECT_EQ(horizontal(left_only).product(R::Dot), md.product(R::TriLeft));
  EXPECT_EQ(vertical(left_only).product(R::Dot), md.product(R::TriLeft));
}

TEST(HorizontalVertical, CommutatorsAgreeOnAnyPair) {
  oracle::RandomRationals rr(61);
  for (int t = 0; t < 10; ++t) {
    HomStructure s(3, {{R::TriRight, StructureTensor::from_products(3, [&](auto, auto) { return rr.vec(3); })},
                       {R::TriLeft, StructureTensor::from_products(3, [&](auto, auto) { return rr.vec(3); })}},
                   rr.matrix(3, 3));
    EXPECT_EQ(commutator(horizontal(s), R::Dot), commutator(vertical(s), R::Dot));
  }
}

TEST(HorizontalVertical, ClosesOnPreMalcev) {
  for (const HomStructure& md :
       {mdend(), fixture("mdend_table5.json").structure,
        induce_pair(commutator(fixture("split_octonions.json").structure, R::Star),
                    fixture("split_octonions.json").operators[0], fixture("split_octonions.json").operators[1],
                    "malcev-pair-to-mdendriform")}) {
    ASSERT_TRUE(check(md, C::HomMDendriform).pass);
    HomStructure h = horizontal(md), v = vertical(md);
    EXPECT_TRUE(check(h, C::HomPreMalcev).pass);
    EXPECT_TRUE(check(v, C::HomPreMalcev).pass);
    EXPECT_EQ(commutator(h, R::Dot), commutator(v, R::Dot));
    EXPECT_TRUE(check(commutator(h, R::Dot), C::HomMalcev).pass);
    EXPECT_TRUE(check_rep(horizontal_bimodule(md), C::HomPreMalcev).pass);
  }
}

TEST(Transpose, Examples) {
  HomStructure md = mdend();
  EXPECT_EQ(transpose(transpose(md)), md);
  StructureTensor sym(3, {{0, 1, 2, 1}, {1, 0, 2, 1}, {2, 2, 0, 5}});
  HomStructure s = md_pair(md, sym, StructureTensor(3));
  EXPECT_EQ(transpose(s).product(R::TriRight), StructureTensor(3) - sym);
  ident::DendProducts a(md.product(R::TriRight), md.product(R::TriLeft));
  HomStructure t = transpose(md);
  ident::DendProducts b(t.product(R::TriRight), t.product(R::TriLeft));
  EXPECT_EQ(a.br, b.br);
}

TEST(Transpose, SwapsHorizontalAndVertical) {
  for (const HomStructure& md : {mdend(), fixture("mdend_table5.json").structure}) {
    HomStructure t = transpose(md);
    EXPECT_TRUE(check(t, C::HomMDendriform).pass);
    EXPECT_EQ(horizontal(t), vertical(md));
    EXPECT_EQ(vertical(t), horizontal(md));
  }
}

TEST(YauTwist, Examples) {
  HomStructure lie = fixture("lie2.json").structure;
  EXPECT_EQ(yau_twist(lie, Matrix::identity(2), false), lie);
  HomStructure z = yau_twist(lie, Matrix(2, 2), true);
  EXPECT_TRUE(all_zero(z));
  EXPECT_TRUE(z.twist.is_zero());
  EXPECT_TRUE(check(z, C::HomMalcev).pass);
  HomStructure tw = yau_twist(lie, Matrix::diagonal({1, 2}), false);
  EXPECT_EQ(tw.product(R::Bracket), StructureTensor(2, {{0, 1, 1, 2}, {1, 0, 1, -2}}));
  EXPECT_EQ(tw.twist, Matrix::diagonal({1, 2}));
  EXPECT_TRUE(check(tw, C::HomMalcev).pass);
  EXPECT_EQ(tw, fixture("lie2_yau.json").structure);
  try {
    yau_twist(lie, Matrix::diagonal({2, 1}), true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAMorphism);
  }
}

TEST(YauTwist, TwistedInputComposes) {
  HomStructure tw = fixture("lie2_yau.json").structure;
  HomStructure again = yau_twist(tw, tw.twist, false);
  EXPECT_EQ(again.twist, tw.twist * tw.twist);
  EXPECT_TRUE(check(again, C::HomLie).pass);
}

TEST(YauTwist, PreservesEveryClass) {
  auto quat = oracle::CayleyDickson({-1, -1}).table();
  HomStructure q(4, {{R::Star, oracle::to_tensor(quat)}}, Matrix::identity(4));
  HomStructure oct = fixture("octonions.json").structure;
  Matrix oct_auto = Matrix::diagonal({1, 1, -1, -1, 1, 1, -1, -1});
  struct Case {
    HomStructure s;
    C cls;
    Matrix gamma;
  };
  std::vector<Case> cases = {
      {fixture("lie2.json").structure, C::HomLie, Matrix::diagonal({1, 2})},
      {commutator(oct, R::Star), C::HomMalcev, oct_auto},
      {oct, C::HomMalcevAdmissible, oct_auto},
      {oct, C::HomAlternative, oct_auto},
      {q, C::HomAssociative, Matrix::diagonal({1, 1, -1, -1})},
      {fixture("m2_premalcev.json").structure, C::HomPreMalcev, {}},
      {mdend(), C::HomMDendriform, {}},
      {fixture("prealt_rb.json").structure, C::HomPreAlternative, {}},
      {fixture("quadri_pair.json").structure, C::HomAltQuadri, {}},
  };
  std::set<C> covered;
  for (auto& c : cases) {
    Matrix g = c.gamma.rows() ? c.gamma : c.s.twist;
    ASSERT_TRUE(check(c.s, c.cls).pass) << class_tag(c.cls);
    ASSERT_TRUE(check_morphism(g, c.s, c.s, false).pass) << class_tag(c.cls);
    HomStructure t = yau_twist(c.s, g, false);
    EXPECT_TRUE(check(t, c.cls, {.multiplicativity = true}).pass) << class_tag(c.cls);
    EXPECT_FALSE(t == c.s) << class_tag(c.cls);
    covered.insert(c.cls);
  }
  EXPECT_EQ(covered.size(), kAllClasses.size());
}

TEST(QuadriSplit, Examples) {
  std::map<R, StructureTensor> zero;
  for (auto r : {R::NW, R::SW, R::NE, R::SE}) zero[r] = StructureTensor(3);
  HomStructure z(3, zero, Matrix::identity(3));
  for (auto d : kDirections) EXPECT_TRUE(all_zero(quadri_split(z, d))) << d;

  StructureTensor p = oracle::to_tensor(oracle::CayleyDickson({-1, -1}).table());
  auto only_se = zero;
  for (auto& [r, t] : only_se) t = StructureTensor(4);
  only_se[R::SE] = p;
  HomStructure s(4, only_se, Matrix::identity(4));
  HomStructure md = quadri_split(s, "mdendriform");
  EXPECT_TRUE(md.product(R::TriRight).is_zero());
  EXPECT_EQ(md.product(R::TriLeft), p);

  try {
    quadri_split(s, "diagonal");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownDirection);
  }
  try {
    quadri_split(fixture("lie2.json").structure, "mdendriform");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RoleMismatch);
  }
}

TEST(QuadriSplit, SplitsCloseOnFixture) {
  HomStructure q = fixture("quadri_pair.json").structure;
  ASSERT_TRUE(check(q, C::HomAltQuadri).pass);
  HomStructure h = quadri_split(q, "prealt-horizontal"), v = quadri_split(q, "prealt-vertical");
  EXPECT_TRUE(check(h, C::HomPreAlternative).pass);
  EXPECT_TRUE(check(v, C::HomPreAlternative).pass);
  EXPECT_TRUE(check(quadri_total(q), C::HomAlternative).pass);
  EXPECT_TRUE(check(quadri_split(q, "mdendriform"), C::HomMDendriform).pass);
  EXPECT_EQ(prealt_sum(h).product(R::Star), quadri_total(q).product(R::Star));
  EXPECT_EQ(prealt_sum(v).product(R::Star), quadri_total(q).product(R::Star));
}

TEST(PreAlternative, SumAndDifference) {
  HomStructure pa = fixture("prealt_rb.json").structure;
  EXPECT_TRUE(check(prealt_sum(pa), C::HomAlternative).pass);
  HomStructure d = prealt_difference(pa);
  EXPECT_TRUE(check(d, C::HomPreMalcev).pass);
  EXPECT_EQ(d.product(R::Dot), pa.product(R::Succ) - opposite(pa.product(R::Prec)));
}

TEST(Diagram, ZeroOperators) {
  Bundle o = fixture("octonions.json");
  DiagramReport d = verify_diagram(o.structure, o.operators[0], o.operators[1]);
  EXPECT_TRUE(d.paths_equal);
  EXPECT_TRUE(d.nodes_pass());
  ASSERT_EQ(d.nodes.size(), 6u);
  for (const auto& [label, ok] : d.edges) EXPECT_TRUE(ok) << label;
  EXPECT_TRUE(all_zero(induce_pair(o.structure, o.operators[0], o.operators[1], "alternative-pair-to-quadri")));
}

TEST(Diagram, SplitOctonionPair) {
  Bundle so = fixture("split_octonions.json");
  ASSERT_TRUE(check_commuting(so.operators[0], so.operators[1]));
  DiagramReport d = verify_diagram(so.structure, so.operators[0], so.operators[1]);
  EXPECT_TRUE(d.paths_equal);
  EXPECT_TRUE(d.nodes_pass());
  for (const auto& [label, ok] : d.edges) EXPECT_TRUE(ok) << label;
  // the same pair on the untwisted algebra
  HomStructure z(8, {{R::Star, oracle::to_tensor(oracle::zorn_table())}}, Matrix::identity(8));
  DiagramReport du = verify_diagram(z, so.operators[0], so.operators[1]);
  EXPECT_TRUE(du.paths_equal && du.nodes_pass());
}

TEST(Diagram, EverySearchedPairCommutes) {
  auto table = oracle::zorn_table();
  auto found = oracle::search_rota_baxter(table, {1, 1, 2, Rational(1, 2), 1, Rational(1, 2), 2, 1}, 2);
  HomStructure z = fixture("split_octonions.json").structure;
  int pairs = 0;
  for (std::size_t i = 0; i < found.size() && pairs < 6; ++i)
    for (std::size_t j = i + 1; j < found.size() && pairs < 6; ++j) {
      W a = W::rota_baxter(oracle::to_matrix(found[i])), b = W::rota_baxter(oracle::to_matrix(found[j]));
      if (!check_commuting(a, b) || (a.map * b.map).is_zero()) continue;
      DiagramReport d = verify_diagram(z, a, b);
      EXPECT_TRUE(d.paths_equal && d.nodes_pass()) << i << "," << j;
      ++pairs;
    }
  EXPECT_EQ(pairs, 6);
}

TEST(Diagram, NonCommutingPairRejected) {
  Bundle so = fixture("split_octonions.json");
  Matrix bent = so.operators[1].map;
  bent(0, 0) += 1;
  try {
    verify_diagram(so.structure, so.operators[0], W::rota_baxter(bent));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCommuting);
  }
}
