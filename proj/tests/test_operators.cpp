#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "support.hpp"

using namespace homalg;
using C = StructureClass;
using R = ProductRole;
using A = ActionRole;
using W = OperatorWitness;

namespace {

HomStructure lie2() { return fixture("lie2.json").structure; }
Matrix lie2_rb() { return fixture("lie2.json").operators[0].map; }

struct SplitOctonions {
  Bundle b = fixture("split_octonions.json");
  const HomStructure& alt() const { return b.structure; }
  HomStructure malcev() const { return commutator(b.structure, R::Star); }
  const W& r1() const { return b.operators[0]; }
  const W& r2() const { return b.operators[1]; }
};

void expect_kind(ErrorKind k, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "no error, expected " << to_string(k);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), k) << e.what();
  }
}

bool all_zero(const HomStructure& s) {
  for (const auto& [r, t] : s.products)
    if (!t.is_zero()) return false;
  return true;
}

/// An M-dendriform structure with a nontrivial twist: the Hessian dendrification.
HomStructure twisted_mdend() {
  Bundle h = fixture("hessian.json");
  return hessian_dendrify(h.structure, h.forms[0]);
}

}  // namespace

TEST(CheckOperator, ZeroRotaBaxterPassesEverywhere) {
  for (const char* f : kFixtureNames) {
    HomStructure s = fixture(f).structure;
    EXPECT_TRUE(check_operator(s, W::rota_baxter(Matrix(s.dim, s.dim))).pass) << f;
  }
}

TEST(CheckOperator, Lie2ByHand) {
  // R(e1) = e2, R(e2) = 0: [R e1, R e1] = 0 = R([R e1, e1] + [e1, R e1]) = R(-e2 + e2);
  // the other basis pairs have R(x) R(y) = 0 and inner terms in span(e2), killed by R.
  auto rep = check_operator(lie2(), W::rota_baxter(lie2_rb()));
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.tuples_checked, 4u + 2u);
}

TEST(CheckOperator, WeightedRotaBaxter) {
  // -id is a Rota-Baxter operator of weight 1 on any algebra: xy = -(-xy - xy + xy)
  HomStructure s = fixture("octonions.json").structure;
  Matrix minus = -Matrix::identity(8);
  EXPECT_TRUE(check_operator(s, W::rota_baxter(minus, 1)).pass);
  EXPECT_FALSE(check_operator(s, W::rota_baxter(minus, 0)).pass);
}

TEST(CheckOperator, RotaBaxterMustCommuteWithTwist) {
  HomStructure s = yau_twist(lie2(), Matrix::diagonal({1, 2}), false);
  auto rep = check_operator(s, W::rota_baxter(lie2_rb()));
  EXPECT_GT(rep.count("RB-ALPHA"), 0u);
  EXPECT_EQ(rep.count("RB-bracket"), rep.violations.size() - rep.count("RB-ALPHA"));
}

TEST(CheckOperator, AgreesWithDenseOracle) {
  SplitOctonions so;
  auto table = oracle::zorn_table();
  auto found = oracle::search_rota_baxter(table, {1, 1, 2, Rational(1, 2), 1, Rational(1, 2), 2, 1}, 1);
  ASSERT_FALSE(found.empty());
  HomStructure z(8, {{R::Star, oracle::to_tensor(table)}}, Matrix::identity(8));
  for (const auto& d : found) EXPECT_TRUE(check_operator(z, W::rota_baxter(oracle::to_matrix(d))).pass);
  EXPECT_TRUE(oracle::is_rota_baxter(table, oracle::Dense(8, std::vector<Rational>(8))));
}

TEST(CheckOperator, IdentityOOperatorNeedsTheBimodule) {
  // On a pre-Malcev algebra the identity satisfies a·b = L(a)b + R(b)a only up to a
  // factor 2, so it is not an O-operator for the regular representation. It is one
  // for the (◀, ▶) bimodule of a compatible M-dendriform structure.
  HomStructure m2 = fixture("m2_premalcev.json").structure;
  auto reg = check_operator(m2, W::o_operator(Matrix::identity(4), regular_pre_malcev_rep(m2)));
  EXPECT_FALSE(reg.pass);
  EXPECT_GT(reg.count("OOP-dot"), 0u);
  HomStructure md = twisted_mdend();
  Representation bim = horizontal_bimodule(md);
  EXPECT_TRUE(check_operator(*bim.base, W::o_operator(Matrix::identity(3), bim)).pass);
}

TEST(CheckOperator, MalcevOOperatorFromRotaBaxter) {
  HomStructure s = lie2();
  auto w = W::o_operator(lie2_rb(), adjoint_rep(s));
  EXPECT_TRUE(check_operator(s, w).pass);
  auto bad = W::o_operator(Matrix::identity(2), adjoint_rep(s));
  EXPECT_FALSE(check_operator(s, bad).pass);
}

TEST(CheckOperator, ShapeErrors) {
  expect_kind(ErrorKind::DimensionMismatch, [] { check_operator(lie2(), W::rota_baxter(Matrix(3, 3))); });
  expect_kind(ErrorKind::DimensionMismatch,
              [] { check_operator(lie2(), W::o_operator(Matrix(2, 3), adjoint_rep(lie2()))); });
  HomStructure m2 = fixture("m2_premalcev.json").structure;
  HomStructure m2c = commutator(m2, R::Dot);
  expect_kind(ErrorKind::RoleMismatch,
              [&] { check_operator(m2, W::o_operator(Matrix(4, 4), adjoint_rep(m2c))); });
}

TEST(Commuting, Examples) {
  Matrix n1{{0, 1}, {0, 0}}, n2{{0, 0}, {1, 0}};
  EXPECT_TRUE(check_commuting(W::rota_baxter(n1), W::rota_baxter(n1)));
  EXPECT_TRUE(check_commuting(W::rota_baxter(Matrix(2, 2)), W::rota_baxter(n2)));
  EXPECT_FALSE(n1 * n2 == n2 * n1);
  EXPECT_FALSE(check_commuting(W::rota_baxter(n1), W::rota_baxter(n2)));
  expect_kind(ErrorKind::DimensionMismatch,
              [] { check_commuting(W::rota_baxter(Matrix(2, 2)), W::rota_baxter(Matrix(3, 3))); });
}

TEST(Induce, Lie2ByHand) {
  HomStructure p = induce(lie2(), W::rota_baxter(lie2_rb()), "malcev-to-premalcev-rb");
  EXPECT_EQ(p.product(R::Dot), StructureTensor(2, {{0, 0, 1, -1}}));
  EXPECT_TRUE(check(p, C::HomPreMalcev).pass);
  EXPECT_EQ(p, fixture("premalcev_rb.json").structure);
}

TEST(Induce, ZeroOperatorGivesZeroProducts) {
  SplitOctonions so;
  W z = W::rota_baxter(Matrix(8, 8));
  EXPECT_TRUE(all_zero(induce(so.malcev(), z, "malcev-to-premalcev-rb")));
  EXPECT_TRUE(all_zero(induce(so.alt(), z, "alternative-to-prealt-rb")));
  HomStructure pa = fixture("prealt_rb.json").structure;
  EXPECT_TRUE(all_zero(induce(pa, z, "prealt-to-quadri-rb")));
  EXPECT_TRUE(all_zero(induce_pair(so.alt(), z, z, "alternative-pair-to-quadri")));
  EXPECT_TRUE(all_zero(induce_pair(so.malcev(), z, z, "malcev-pair-to-mdendriform")));
  W zo = W::o_operator(Matrix(2, 2), adjoint_rep(lie2()));
  EXPECT_TRUE(all_zero(induce(lie2(), zo, "malcev-to-premalcev-oop")));
}

TEST(Induce, EveryRecipeClosesOnItsTargetClass) {
  SplitOctonions so;
  HomStructure malcev = so.malcev();
  ASSERT_TRUE(check(malcev, C::HomMalcev).pass);
  HomStructure pm = induce(malcev, so.r1(), "malcev-to-premalcev-rb");
  HomStructure pa = induce(so.alt(), so.r1(), "alternative-to-prealt-rb");
  HomStructure md = twisted_mdend();
  Bundle prb = fixture("prealt_rb.json");

  struct Case {
    std::string recipe;
    HomStructure out;
    C target;
  };
  std::vector<Case> cases = {
      {"malcev-to-premalcev-rb", pm, C::HomPreMalcev},
      {"malcev-to-premalcev-rb", induce(lie2(), W::rota_baxter(lie2_rb()), "malcev-to-premalcev-rb"),
       C::HomPreMalcev},
      {"malcev-to-premalcev-oop", induce(lie2(), W::o_operator(lie2_rb(), adjoint_rep(lie2())), "malcev-to-premalcev-oop"),
       C::HomPreMalcev},
      {"malcev-to-premalcev-oop", induce(malcev, W::o_operator(so.r1().map, adjoint_rep(malcev)), "malcev-to-premalcev-oop"),
       C::HomPreMalcev},
      {"premalcev-to-mdendriform-rb", induce(pm, so.r2(), "premalcev-to-mdendriform-rb"), C::HomMDendriform},
      {"premalcev-to-mdendriform-oop",
       induce(pm, W::o_operator(so.r2().map, regular_pre_malcev_rep(pm)), "premalcev-to-mdendriform-oop"),
       C::HomMDendriform},
      {"premalcev-compatible-dendriform",
       induce(horizontal(md), W::o_operator(Matrix::identity(3), horizontal_bimodule(md)),
              "premalcev-compatible-dendriform"),
       C::HomMDendriform},
      {"alternative-to-prealt-rb", pa, C::HomPreAlternative},
      {"alternative-to-prealt-oop",
       induce(so.alt(), W::o_operator(so.r1().map, regular_bimodule(so.alt(), R::Star)), "alternative-to-prealt-oop"),
       C::HomPreAlternative},
      {"prealt-to-quadri-rb", induce(prb.structure, prb.operators[0], "prealt-to-quadri-rb"), C::HomAltQuadri},
      {"prealt-to-quadri-oop", induce(prb.structure, prb.operators[1], "prealt-to-quadri-oop"), C::HomAltQuadri},
      {"malcev-pair-to-mdendriform", induce_pair(malcev, so.r1(), so.r2(), "malcev-pair-to-mdendriform"),
       C::HomMDendriform},
      {"malcev-pair-to-mdendriform",
       induce_pair(lie2(), W::rota_baxter(lie2_rb()), W::rota_baxter(lie2_rb()), "malcev-pair-to-mdendriform"),
       C::HomMDendriform},
      {"alternative-pair-to-quadri", induce_pair(so.alt(), so.r1(), so.r2(), "alternative-pair-to-quadri"),
       C::HomAltQuadri},
  };
  std::set<std::string> covered;
  for (const auto& c : cases) {
    EXPECT_TRUE(check(c.out, c.target).pass) << c.recipe;
    covered.insert(c.recipe);
  }
  for (auto r : kRecipes) EXPECT_TRUE(covered.contains(std::string(r))) << r;
  for (auto r : kPairRecipes) EXPECT_TRUE(covered.contains(std::string(r))) << r;
}

TEST(Induce, NontrivialOutputs) {
  SplitOctonions so;
  EXPECT_FALSE(all_zero(induce(so.malcev(), so.r1(), "malcev-to-premalcev-rb")));
  EXPECT_FALSE(all_zero(induce_pair(so.alt(), so.r1(), so.r2(), "alternative-pair-to-quadri")));
  EXPECT_FALSE(all_zero(fixture("prealt_rb.json").structure));
}

TEST(Induce, CompatibleDendriformRecoversSplitting) {
  HomStructure md = twisted_mdend();
  HomStructure h = horizontal(md);
  HomStructure out =
      induce(h, W::o_operator(Matrix::identity(3), horizontal_bimodule(md)), "premalcev-compatible-dendriform");
  EXPECT_EQ(out.product(R::TriRight) + out.product(R::TriLeft), h.product(R::Dot));
  EXPECT_EQ(out, md);
}

TEST(Induce, ModuleSplittingMatchesInducedProduct) {
  SplitOctonions so;
  HomStructure pm = induce(so.malcev(), so.r1(), "malcev-to-premalcev-rb");
  Representation reg = regular_pre_malcev_rep(pm);
  W t = W::o_operator(so.r2().map, reg);
  HomStructure md = induce(pm, t, "premalcev-to-mdendriform-oop");
  const Matrix& T = t.map;
  StructureTensor expect = StructureTensor::from_products(8, [&](std::size_t a, std::size_t b) {
    return reg.action(A::Ell).apply(T.column(a), basis_vec(8, b)) + reg.action(A::Arr).apply(T.column(b), basis_vec(8, a));
  });
  EXPECT_EQ(horizontal(md).product(R::Dot), expect);
  EXPECT_TRUE(check(horizontal(md), C::HomPreMalcev).pass);
}

TEST(Induce, CommutingPairStaysRotaBaxter) {
  SplitOctonions so;
  HomStructure pm = induce(so.malcev(), so.r1(), "malcev-to-premalcev-rb");
  EXPECT_TRUE(check_operator(pm, so.r2()).pass);
}

TEST(Induce, PreAlternativeOOperatorIsAlternativeOOperator) {
  Bundle prb = fixture("prealt_rb.json");
  const W& t = prb.operators[1];
  ASSERT_TRUE(check_operator(prb.structure, t).pass);
  HomStructure alt = prealt_sum(prb.structure);
  const Representation& pr = *t.rep;
  Representation summed;
  summed.base = std::make_shared<const HomStructure>(alt);
  summed.module_dim = pr.module_dim;
  summed.module_twist = pr.module_twist;
  summed.actions[A::Ell] = pr.action(A::LPrec) + pr.action(A::LSucc);
  summed.actions[A::Arr] = pr.action(A::RPrec) + pr.action(A::RSucc);
  EXPECT_TRUE(check_operator(alt, W::o_operator(t.map, summed)).pass);
}

TEST(Induce, Errors) {
  HomStructure s = lie2();
  expect_kind(ErrorKind::UnknownRecipe, [&] { induce(s, W::rota_baxter(lie2_rb()), "no-such-recipe"); });
  expect_kind(ErrorKind::OperatorInvalid,
              [&] { induce(s, W::rota_baxter(Matrix::identity(2)), "malcev-to-premalcev-rb"); });
  expect_kind(ErrorKind::OperatorInvalid, [&] { induce(s, W::rota_baxter(lie2_rb(), 1), "malcev-to-premalcev-rb"); });
  SplitOctonions so;
  expect_kind(ErrorKind::NotCommuting, [&] {
    Matrix bent = so.r2().map;
    bent(0, 0) += 1;
    induce_pair(so.alt(), so.r1(), W::rota_baxter(bent), "alternative-pair-to-quadri");
  });
  Matrix n1{{0, 1}, {0, 0}}, n2{{0, 0}, {1, 0}};
  expect_kind(ErrorKind::NotCommuting,
              [&] { induce_pair(s, W::rota_baxter(n1), W::rota_baxter(n2), "malcev-pair-to-mdendriform"); });
  expect_kind(ErrorKind::OperatorInvalid, [&] {
    induce_pair(s, W::rota_baxter(Matrix::identity(2)), W::rota_baxter(Matrix::identity(2)),
                "malcev-pair-to-mdendriform");
  });
  HomStructure md = twisted_mdend();
  expect_kind(ErrorKind::SingularMatrix, [&] {
    induce(horizontal(md), W::o_operator(Matrix(3, 3), horizontal_bimodule(md)), "premalcev-compatible-dendriform");
  });
  expect_kind(ErrorKind::RoleMismatch, [&] { induce(s, W::rota_baxter(lie2_rb()), "alternative-to-prealt-rb"); });
}

TEST(Hessian, Examples) {
  HomStructure ab(2, {{R::Dot, StructureTensor(2)}}, Matrix::identity(2));
  EXPECT_TRUE(check_hessian(ab, {Matrix::identity(2)}).pass);
  HomStructure zero_md = hessian_dendrify(ab, {Matrix::identity(2)});
  EXPECT_TRUE(all_zero(zero_md));

  auto sing = check_hessian(ab, {Matrix{{1, 1}, {1, 1}}});
  EXPECT_EQ(sing.count("HESS-NONDEG"), 1u);
  EXPECT_EQ(sing.count("HESS-SYM"), 0u);

  HomStructure tw(2, {{R::Dot, StructureTensor(2)}}, Matrix::diagonal({2, 1}));
  auto inv = check_hessian(tw, {Matrix::identity(2)});
  // B(a e1, a e1) = 4 != 1
  EXPECT_EQ(inv.count("HESS-INV"), 1u);
  EXPECT_EQ(inv.violations.front().residual, Vec{3});

  auto asym = check_hessian(ab, {Matrix{{1, 2}, {0, 1}}});
  EXPECT_EQ(asym.count("HESS-SYM"), 2u);

  HomStructure singular_twist(2, {{R::Dot, StructureTensor(2)}}, Matrix{{1, 0}, {0, 0}});
  expect_kind(ErrorKind::SingularMatrix, [&] { check_hessian(singular_twist, {Matrix::identity(2)}); });
  expect_kind(ErrorKind::HessianInvalid, [&] { hessian_dendrify(ab, {Matrix{{1, 1}, {1, 1}}}); });
}

TEST(Hessian, FixtureDendrifies) {
  Bundle h = fixture("hessian.json");
  ASSERT_TRUE(check(h.structure, C::HomPreMalcev).pass);
  EXPECT_TRUE(check_hessian(h.structure, h.forms[0]).pass);
  HomStructure md = hessian_dendrify(h.structure, h.forms[0]);
  EXPECT_TRUE(check(md, C::HomMDendriform).pass);
  EXPECT_EQ(md.product(R::TriRight) + md.product(R::TriLeft), h.structure.product(R::Dot));
  // the defining relations, checked directly
  const BilinearForm& b = h.forms[0];
  const auto& dot = h.structure.product(R::Dot);
  StructureTensor br = dot - opposite(dot);
  const Matrix& al = h.structure.twist;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        Vec x = basis_vec(3, i), y = basis_vec(3, j), z = basis_vec(3, k);
        EXPECT_EQ(b(md.product(R::TriRight).eval(x, y), al.apply(z)), b(al.apply(x), dot.eval(z, y)));
        EXPECT_EQ(b(md.product(R::TriLeft).eval(x, y), al.apply(z)), -b(al.apply(y), br.eval(x, z)));
      }
}

TEST(Hessian, MetricAdjointWithIdentityForm) {
  // search dim-2 pre-Malcev products with entries in {-1, 0, 1} that carry B = I
  HomStructure found;
  bool ok = false;
  for (int code = 1; code < 6561 && !ok; ++code) {
    std::vector<StructureTensor::Entry> es;
    int c = code;
    for (std::size_t slot = 0; slot < 8; ++slot, c /= 3)
      if (c % 3) es.push_back({slot / 4, slot / 2 % 2, slot % 2, Rational(c % 3 == 1 ? 1 : -1)});
    HomStructure s(2, {{R::Dot, StructureTensor(2, es)}}, Matrix::identity(2));
    if (check(s, C::HomPreMalcev).pass && check_hessian(s, {Matrix::identity(2)}).pass) {
      found = s;
      ok = true;
    }
  }
  ASSERT_TRUE(ok);
  HomStructure md = hessian_dendrify(found, {Matrix::identity(2)});
  const auto& dot = found.product(R::Dot);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        // <x ▶ y, z> = <x, z · y>
        EXPECT_EQ(md.product(R::TriRight).coeff(i, j, k), dot.coeff(k, j, i));
  EXPECT_TRUE(check(md, C::HomMDendriform).pass);
}

TEST(Endomorphism, Examples) {
  HomStructure s = lie2();
  W t = W::o_operator(lie2_rb(), adjoint_rep(s));
  EXPECT_TRUE(check_oop_endomorphism(t, Matrix::identity(2), Matrix::identity(2)));
  EXPECT_TRUE(check_oop_endomorphism(t, Matrix(2, 2), Matrix(2, 2)));
  Matrix phi = Matrix::identity(2);
  phi(1, 1) = 2;  // T phiV = [[0,0],[1,0]] but phiA T = [[0,0],[2,0]]
  EXPECT_FALSE(check_oop_endomorphism(t, phi, Matrix::identity(2)));
  expect_kind(ErrorKind::DimensionMismatch, [&] { check_oop_endomorphism(t, Matrix(3, 3), Matrix(2, 2)); });
}

TEST(Endomorphism, TwistSetup) {
  HomStructure md = twisted_mdend();
  Representation bim = horizontal_bimodule(md);
  const HomStructure& pm = *bim.base;
  W t = W::o_operator(Matrix::identity(3), bim);
  ASSERT_TRUE(check_operator(pm, t).pass);
  ASSERT_TRUE(check_morphism(pm.twist, pm, pm, false).pass);

  auto [s2, rep2, t2] = twist_oop_setup(pm, t, pm.twist, bim.module_twist);
  EXPECT_TRUE(check_operator(s2, t2).pass);
  EXPECT_EQ(s2.twist, pm.twist);
  EXPECT_EQ(s2.product(R::Dot), push_product(pm.product(R::Dot), pm.twist));

  HomStructure lie = lie2();
  W tl = W::o_operator(lie2_rb(), adjoint_rep(lie));
  auto [s3, rep3, t3] = twist_oop_setup(lie, tl, Matrix::identity(2), Matrix::identity(2));
  EXPECT_EQ(s3, lie);
  EXPECT_EQ(rep3, *tl.rep);
  EXPECT_EQ(t3.map, tl.map);

  auto [s4, rep4, t4] = twist_oop_setup(lie, tl, Matrix(2, 2), Matrix(2, 2));
  EXPECT_TRUE(all_zero(s4));
  EXPECT_EQ(rep4.action(A::Rho), Action(2, 2));
  EXPECT_EQ(t4.map, tl.map);
  EXPECT_TRUE(check_operator(s4, t4).pass);

  Matrix phi = Matrix::identity(2);
  phi(1, 1) = 2;
  expect_kind(ErrorKind::EndomorphismInvalid, [&] { twist_oop_setup(lie, tl, phi, Matrix::identity(2)); });
}
