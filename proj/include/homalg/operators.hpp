#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <tuple>

#include "homalg/reps.hpp"

namespace homalg {

enum class OperatorKind { RotaBaxter, OOperator };

/// A Rota-Baxter operator R: A -> A of some weight, or an O-operator T: V -> A
/// relative to a representation.
struct OperatorWitness {
  OperatorKind kind = OperatorKind::RotaBaxter;
  Matrix map;
  Rational weight{0};
  std::shared_ptr<const Representation> rep;

  static OperatorWitness rota_baxter(Matrix r, Rational weight = 0) {
    return {OperatorKind::RotaBaxter, std::move(r), std::move(weight), nullptr};
  }
  static OperatorWitness o_operator(Matrix t, std::shared_ptr<const Representation> rep) {
    return {OperatorKind::OOperator, std::move(t), Rational(0), std::move(rep)};
  }
  static OperatorWitness o_operator(Matrix t, Representation rep) {
    return o_operator(std::move(t), std::make_shared<const Representation>(std::move(rep)));
  }

  void validate(std::size_t dim) const {
    if (kind == OperatorKind::RotaBaxter) {
      if (rep) throw Error(ErrorKind::SchemaError, "Rota-Baxter witness carries a representation");
      if (map.rows() != dim || map.cols() != dim)
        throw Error(ErrorKind::DimensionMismatch, "Rota-Baxter operator is not dim x dim");
    } else {
      if (!rep) throw Error(ErrorKind::SchemaError, "O-operator witness without representation");
      if (!weight.is_zero()) throw Error(ErrorKind::SchemaError, "O-operator witness carries a weight");
      if (map.rows() != dim || map.cols() != rep->module_dim)
        throw Error(ErrorKind::DimensionMismatch, "O-operator is not dim x module_dim");
      if (rep->base && rep->base->dim != dim)
        throw Error(ErrorKind::DimensionMismatch, "O-operator representation has a different base dimension");
    }
  }
};

/// Symmetric bilinear form given by its Gram matrix.
struct BilinearForm {
  Matrix matrix;
  Rational operator()(const Vec& x, const Vec& y) const {
    Vec by = matrix.apply(y);
    Rational s;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero()) s.add_product(x[i], by[i]);
    return s;
  }
};

namespace detail {

/// One product condition T(a) o T(b) = T(left(T a) b + sign * right(T b) a).
struct OperatorCondition {
  ProductRole role;
  const Action* left;
  const Action* right;
  Rational right_sign{1};
};

inline std::vector<OperatorCondition> oop_conditions(const HomStructure& s, const Representation& rep) {
  using A = ActionRole;
  using R = ProductRole;
  std::vector<OperatorCondition> out;
  switch (rep.kind()) {
    case RepKind::Malcev:
      s.require({R::Bracket});
      out.push_back({R::Bracket, &rep.action(A::Rho), &rep.action(A::Rho), Rational(-1)});
      break;
    case RepKind::PreMalcev:
      if (s.has(R::Dot))
        out.push_back({R::Dot, &rep.action(A::Ell), &rep.action(A::Arr)});
      else if (s.has(R::Star))
        out.push_back({R::Star, &rep.action(A::Ell), &rep.action(A::Arr)});
      else
        throw Error(ErrorKind::RoleMismatch, "(ell, r) action needs a dot or star product");
      break;
    case RepKind::PreAlternative:
      s.require({R::Prec, R::Succ});
      out.push_back({R::Prec, &rep.action(A::LPrec), &rep.action(A::RPrec)});
      out.push_back({R::Succ, &rep.action(A::LSucc), &rep.action(A::RSucc)});
      break;
  }
  return out;
}

}  // namespace detail

/// Rota-Baxter identity on every product of the structure plus R a = a R, or
/// the O-operator identities of the witness's representation plus a T = T b.
inline CheckReport check_operator(const HomStructure& s, const OperatorWitness& w) {
  auto start = std::chrono::steady_clock::now();
  s.validate();
  w.validate(s.dim);
  CheckReport out;
  Sweeper sw(out);
  const std::size_t n = s.dim;
  const Matrix& T = w.map;
  if (w.kind == OperatorKind::RotaBaxter) {
    out.subject = "rota-baxter";
    std::vector<Vec> re;
    for (std::size_t i = 0; i < n; ++i) re.push_back(T.column(i));
    for (const auto& [role, p] : s.products) {
      sw.run("RB-" + std::string(role_name(role)), n, 2, [&](const auto& i) {
        Vec inner = p.eval(re[i[0]], basis_vec(n, i[1])) + p.eval(basis_vec(n, i[0]), re[i[1]]);
        if (!w.weight.is_zero()) inner += w.weight * p.basis_product(i[0], i[1]);
        return p.eval(re[i[0]], re[i[1]]) - T.apply(inner);
      });
    }
    Matrix d = T * s.twist - s.twist * T;
    sw.run("RB-ALPHA", n, 1, [&](const auto& i) { return d.column(i[0]); });
  } else {
    out.subject = "o-operator";
    const Representation& rep = *w.rep;
    const std::size_t m = rep.module_dim;
    std::vector<Vec> te;
    for (std::size_t a = 0; a < m; ++a) te.push_back(T.column(a));
    for (const auto& c : detail::oop_conditions(s, rep)) {
      const auto& p = s.product(c.role);
      sw.run("OOP-" + std::string(role_name(c.role)), m, 2, [&](const auto& i) {
        Vec inner = c.left->apply(te[i[0]], basis_vec(m, i[1]));
        Vec r = c.right->apply(te[i[1]], basis_vec(m, i[0]));
        inner += c.right_sign * r;
        return p.eval(te[i[0]], te[i[1]]) - T.apply(inner);
      });
    }
    Matrix d = s.twist * T - T * rep.module_twist;
    sw.run("OOP-ALPHA", m, 1, [&](const auto& i) { return d.column(i[0]); });
  }
  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

inline bool check_commuting(const OperatorWitness& r1, const OperatorWitness& r2) {
  if (r1.map.rows() != r2.map.rows() || r1.map.cols() != r2.map.cols() || r1.map.rows() != r1.map.cols())
    throw Error(ErrorKind::DimensionMismatch, "operators of different shape");
  return r1.map * r2.map == r2.map * r1.map;
}

namespace detail {

inline void require_valid(const HomStructure& s, const OperatorWitness& w) {
  auto rep = check_operator(s, w);
  if (!rep.pass) {
    const auto& v = rep.violations.front();
    throw Error(ErrorKind::OperatorInvalid, "operator fails " + v.identity_id + " (" +
                                                std::to_string(rep.violations.size()) + " violations)");
  }
}

inline void require_weight_zero(const OperatorWitness& w) {
  if (w.kind != OperatorKind::RotaBaxter) throw Error(ErrorKind::RoleMismatch, "recipe expects a Rota-Baxter operator");
  if (!w.weight.is_zero()) throw Error(ErrorKind::OperatorInvalid, "recipe needs a weight-zero Rota-Baxter operator");
}

inline const Representation& require_oop(const OperatorWitness& w, RepKind kind) {
  if (w.kind != OperatorKind::OOperator) throw Error(ErrorKind::RoleMismatch, "recipe expects an O-operator");
  if (w.rep->kind() != kind) throw Error(ErrorKind::RoleMismatch, "O-operator representation has the wrong kind");
  return *w.rep;
}

inline StructureTensor tabulate(std::size_t n, const std::function<Vec(const Vec&, const Vec&)>& f) {
  return StructureTensor::from_products(n, [&](std::size_t i, std::size_t j) { return f(basis_vec(n, i), basis_vec(n, j)); });
}

/// Product on V: (a, b) -> act(T x)(y), with (x, y) = (a, b) or (b, a).
inline StructureTensor induced_on_module(const Matrix& T, const Action& act, bool swap) {
  const std::size_t m = T.cols();
  return tabulate(m, [&](const Vec& a, const Vec& b) {
    return swap ? act.apply(T.apply(b), a) : act.apply(T.apply(a), b);
  });
}

}  // namespace detail

inline constexpr std::string_view kRecipes[] = {
    "malcev-to-premalcev-oop",      "malcev-to-premalcev-rb",   "premalcev-to-mdendriform-oop",
    "premalcev-to-mdendriform-rb",  "premalcev-compatible-dendriform", "alternative-to-prealt-oop",
    "alternative-to-prealt-rb",     "prealt-to-quadri-oop",     "prealt-to-quadri-rb"};

inline constexpr std::string_view kPairRecipes[] = {"malcev-pair-to-mdendriform", "alternative-pair-to-quadri"};

/// Builds the structure a valid operator induces, per the named recipe.
inline HomStructure induce(const HomStructure& s, const OperatorWitness& w, std::string_view recipe) {
  using R = ProductRole;
  using A = ActionRole;
  if (std::find(std::begin(kRecipes), std::end(kRecipes), recipe) == std::end(kRecipes))
    throw Error(ErrorKind::UnknownRecipe, "induction recipe \"" + std::string(recipe) + "\"");
  const bool rb = recipe.ends_with("-rb");
  if (rb) detail::require_weight_zero(w);
  const std::size_t n = s.dim;
  const Matrix& T = w.map;
  std::map<ProductRole, StructureTensor> ps;
  auto on_a = [&](R role) -> Prod { return Prod{&s.product(role)}; };
  auto RB = [&](const Vec& x) { return T.apply(x); };

  if (recipe == "malcev-to-premalcev-rb") {
    s.require({R::Bracket});
    detail::require_valid(s, w);
    Prod br = on_a(R::Bracket);
    ps[R::Dot] = detail::tabulate(n, [&](const Vec& x, const Vec& y) { return br(RB(x), y); });
    return HomStructure(n, std::move(ps), s.twist, s.basis);
  }
  if (recipe == "premalcev-to-mdendriform-rb") {
    s.require({R::Dot});
    detail::require_valid(s, w);
    Prod dot = on_a(R::Dot);
    ps[R::TriRight] = detail::tabulate(n, [&](const Vec& x, const Vec& y) { return dot(x, RB(y)); });
    ps[R::TriLeft] = detail::tabulate(n, [&](const Vec& x, const Vec& y) { return dot(RB(x), y); });
    return HomStructure(n, std::move(ps), s.twist, s.basis);
  }
  if (recipe == "alternative-to-prealt-rb") {
    s.require({R::Star});
    detail::require_valid(s, w);
    Prod st = on_a(R::Star);
    ps[R::Prec] = detail::tabulate(n, [&](const Vec& x, const Vec& y) { return st(x, RB(y)); });
    ps[R::Succ] = detail::tabulate(n, [&](const Vec& x, const Vec& y) { return st(RB(x), y); });
    return HomStructure(n, std::move(ps), s.twist, s.basis);
  }
  if (recipe == "prealt-to-quadri-rb") {
    s.require({R::Prec, R::Succ});
    detail::require_valid(s, w);
    Prod pr = on_a(R::Prec), su = on_a(R::Succ);
    ps[R::NE] = detail::tabulate(n, [&](const Vec& x, const Vec& y) { return su(x, RB(y)); });
    ps[R::SE] = detail::tabulate(n, [&](const Vec& x, const Vec& y) { return su(RB(x), y); });
    ps[R::SW] = detail::tabulate(n, [&](const Vec& x, const Vec& y) { return pr(RB(x), y); });
    ps[R::NW] = detail::tabulate(n, [&](const Vec& x, const Vec& y) { return pr(x, RB(y)); });
    return HomStructure(n, std::move(ps), s.twist, s.basis);
  }

  // O-operator recipes
  if (w.kind != OperatorKind::OOperator) throw Error(ErrorKind::RoleMismatch, "recipe expects an O-operator");
  const auto labels_v = HomStructure::default_labels(w.map.cols(), "v");
  if (recipe == "malcev-to-premalcev-oop") {
    const auto& rep = detail::require_oop(w, RepKind::Malcev);
    detail::require_valid(s, w);
    ps[R::Dot] = detail::induced_on_module(T, rep.action(A::Rho), false);
    return HomStructure(rep.module_dim, std::move(ps), rep.module_twist, labels_v);
  }
  if (recipe == "premalcev-to-mdendriform-oop") {
    const auto& rep = detail::require_oop(w, RepKind::PreMalcev);
    s.require({R::Dot});
    detail::require_valid(s, w);
    ps[R::TriRight] = detail::induced_on_module(T, rep.action(A::Arr), true);
    ps[R::TriLeft] = detail::induced_on_module(T, rep.action(A::Ell), false);
    return HomStructure(rep.module_dim, std::move(ps), rep.module_twist, labels_v);
  }
  if (recipe == "premalcev-compatible-dendriform") {
    const auto& rep = detail::require_oop(w, RepKind::PreMalcev);
    s.require({R::Dot});
    if (T.rows() != T.cols()) throw Error(ErrorKind::SingularMatrix, "O-operator is not square");
    Matrix Ti = mat_inverse(T);
    detail::require_valid(s, w);
    const Action &ell = rep.action(A::Ell), &arr = rep.action(A::Arr);
    ps[R::TriRight] = detail::tabulate(n, [&](const Vec& x, const Vec& y) { return T.apply(arr.apply(y, Ti.apply(x))); });
    ps[R::TriLeft] = detail::tabulate(n, [&](const Vec& x, const Vec& y) { return T.apply(ell.apply(x, Ti.apply(y))); });
    return HomStructure(n, std::move(ps), s.twist, s.basis);
  }
  if (recipe == "alternative-to-prealt-oop") {
    const auto& rep = detail::require_oop(w, RepKind::PreMalcev);
    s.require({R::Star});
    detail::require_valid(s, w);
    ps[R::Succ] = detail::induced_on_module(T, rep.action(A::Ell), false);
    ps[R::Prec] = detail::induced_on_module(T, rep.action(A::Arr), true);
    return HomStructure(rep.module_dim, std::move(ps), rep.module_twist, labels_v);
  }
  // prealt-to-quadri-oop
  const auto& rep = detail::require_oop(w, RepKind::PreAlternative);
  detail::require_valid(s, w);
  ps[R::SE] = detail::induced_on_module(T, rep.action(A::LSucc), false);
  ps[R::NE] = detail::induced_on_module(T, rep.action(A::RSucc), true);
  ps[R::SW] = detail::induced_on_module(T, rep.action(A::LPrec), false);
  ps[R::NW] = detail::induced_on_module(T, rep.action(A::RPrec), true);
  return HomStructure(rep.module_dim, std::move(ps), rep.module_twist, labels_v);
}

/// Structure induced by two commuting weight-zero Rota-Baxter operators.
inline HomStructure induce_pair(const HomStructure& s, const OperatorWitness& r1, const OperatorWitness& r2,
                                std::string_view recipe) {
  using R = ProductRole;
  if (std::find(std::begin(kPairRecipes), std::end(kPairRecipes), recipe) == std::end(kPairRecipes))
    throw Error(ErrorKind::UnknownRecipe, "pair recipe \"" + std::string(recipe) + "\"");
  detail::require_weight_zero(r1);
  detail::require_weight_zero(r2);
  r1.validate(s.dim);
  r2.validate(s.dim);
  if (!check_commuting(r1, r2)) throw Error(ErrorKind::NotCommuting, "Rota-Baxter operators do not commute");
  const std::size_t n = s.dim;
  auto R1 = [&](const Vec& x) { return r1.map.apply(x); };
  auto R2 = [&](const Vec& x) { return r2.map.apply(x); };
  std::map<ProductRole, StructureTensor> ps;
  if (recipe == "malcev-pair-to-mdendriform") {
    s.require({R::Bracket});
    detail::require_valid(s, r1);
    detail::require_valid(s, r2);
    Prod br{&s.product(R::Bracket)};
    ps[R::TriRight] = detail::tabulate(n, [&](const Vec& x, const Vec& y) { return br(R1(x), R2(y)); });
    ps[R::TriLeft] = detail::tabulate(n, [&](const Vec& x, const Vec& y) { return br(R1(R2(x)), y); });
  } else {
    s.require({R::Star});
    detail::require_valid(s, r1);
    detail::require_valid(s, r2);
    Prod st{&s.product(R::Star)};
    ps[R::SE] = detail::tabulate(n, [&](const Vec& x, const Vec& y) { return st(R1(R2(x)), y); });
    ps[R::NE] = detail::tabulate(n, [&](const Vec& x, const Vec& y) { return st(R1(x), R2(y)); });
    ps[R::SW] = detail::tabulate(n, [&](const Vec& x, const Vec& y) { return st(R2(x), R1(y)); });
    ps[R::NW] = detail::tabulate(n, [&](const Vec& x, const Vec& y) { return st(x, R1(R2(y))); });
  }
  return HomStructure(n, std::move(ps), s.twist, s.basis);
}

/// Symmetry, nondegeneracy, twist invariance and the 2-cocycle condition of a
/// bilinear form on a regular pre-Malcev structure.
inline CheckReport check_hessian(const HomStructure& s, const BilinearForm& b) {
  auto start = std::chrono::steady_clock::now();
  const auto& dot_t = s.product(ProductRole::Dot);
  const std::size_t n = s.dim;
  if (b.matrix.rows() != n || b.matrix.cols() != n) throw Error(ErrorKind::DimensionMismatch, "form is not dim x dim");
  mat_inverse(s.twist);
  CheckReport out;
  out.subject = "hessian";
  Sweeper sw(out);
  Twist a(s.twist);
  Prod dot{&dot_t};
  const Matrix& B = b.matrix;
  std::vector<Vec> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(basis_vec(n, i));
  sw.run("HESS-SYM", n, 2, [&](const auto& i) { return Vec{B(i[0], i[1]) - B(i[1], i[0])}; });
  sw.run("HESS-NONDEG", std::vector<std::size_t>{1}, [&](const auto&) {
    auto k = kernel_vector(B);
    return k ? *k : Vec(n);
  });
  sw.run("HESS-INV", n, 2, [&](const auto& i) { return Vec{b(a.e1(i[0]), a.e1(i[1])) - B(i[0], i[1])}; });
  sw.run("HESS-COCYCLE", n, 3, [&](const auto& i) {
    const Vec &x = e[i[0]], &y = e[i[1]], &z = e[i[2]];
    Rational l = b(dot(x, y), a(z)) - b(a(x), dot(y, z));
    Rational r = b(dot(y, x), a(z)) - b(a(y), dot(x, z));
    return Vec{l - r};
  });
  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

/// The M-dendriform pair determined by B(x▶y, a z) = B(a x, z·y) and
/// B(x◀y, a z) = -B(a y, [x, z]).
inline HomStructure hessian_dendrify(const HomStructure& s, const BilinearForm& b) {
  auto rep = check_hessian(s, b);
  if (!rep.pass) throw Error(ErrorKind::HessianInvalid, "form fails " + rep.violations.front().identity_id);
  const std::size_t n = s.dim;
  const auto& dot_t = s.product(ProductRole::Dot);
  StructureTensor br_t = dot_t - opposite(dot_t);
  Prod dot{&dot_t}, br{&br_t};
  Twist a(s.twist);
  Matrix lhs = s.twist.transpose() * b.matrix;
  auto solve_for = [&](const std::function<Rational(std::size_t)>& rhs) {
    Vec w(n);
    for (std::size_t k = 0; k < n; ++k) w[k] = rhs(k);
    try {
      return solve(lhs, w);
    } catch (const Error&) {
      throw Error(ErrorKind::HessianInvalid, "dendrification system is singular");
    }
  };
  std::map<ProductRole, StructureTensor> ps;
  ps[ProductRole::TriRight] = StructureTensor::from_products(n, [&](std::size_t i, std::size_t j) {
    return solve_for([&](std::size_t k) { return b(a.e1(i), dot(basis_vec(n, k), basis_vec(n, j))); });
  });
  ps[ProductRole::TriLeft] = StructureTensor::from_products(n, [&](std::size_t i, std::size_t j) {
    return solve_for([&](std::size_t k) { return -b(a.e1(j), br(basis_vec(n, i), basis_vec(n, k))); });
  });
  return HomStructure(n, std::move(ps), s.twist, s.basis);
}

/// Whether (phiA, phiV) is an endomorphism of the O-operator: T phiV = phiA T and
/// every action satisfies X(phiA x)(phiV b) = phiV(X(x) b).
inline bool check_oop_endomorphism(const OperatorWitness& w, const Matrix& phiA, const Matrix& phiV) {
  if (w.kind != OperatorKind::OOperator) throw Error(ErrorKind::RoleMismatch, "not an O-operator");
  const auto& rep = *w.rep;
  const std::size_t n = w.map.rows(), m = w.map.cols();
  if (phiA.rows() != n || phiA.cols() != n || phiV.rows() != m || phiV.cols() != m)
    throw Error(ErrorKind::DimensionMismatch, "endomorphism pair shape");
  if (!(w.map * phiV == phiA * w.map)) return false;
  for (const auto& [role, act] : rep.actions)
    for (std::size_t i = 0; i < n; ++i)
      if (!(act.at(phiA.column(i)) * phiV == phiV * act.slice(i))) return false;
  return true;
}

/// Composes products with phiA and actions with phiV; T stays an O-operator.
inline std::tuple<HomStructure, Representation, OperatorWitness> twist_oop_setup(const HomStructure& s,
                                                                                 const OperatorWitness& w,
                                                                                 const Matrix& phiA,
                                                                                 const Matrix& phiV) {
  if (!check_oop_endomorphism(w, phiA, phiV))
    throw Error(ErrorKind::EndomorphismInvalid, "pair is not an endomorphism of the O-operator");
  if (!check_morphism(phiA, s, s, true).pass)
    throw Error(ErrorKind::EndomorphismInvalid, "phiA is not a weak self-morphism");
  std::map<ProductRole, StructureTensor> ps;
  for (const auto& [role, p] : s.products) ps[role] = push_product(p, phiA);
  auto base = std::make_shared<const HomStructure>(s.dim, std::move(ps), phiA, s.basis);
  Representation rep;
  rep.base = base;
  rep.module_dim = w.rep->module_dim;
  rep.module_twist = phiV;
  for (const auto& [role, act] : w.rep->actions)
    rep.actions[role] = Action::from_function(s.dim, [&](std::size_t i) { return phiV * act.slice(i); });
  auto ow = OperatorWitness::o_operator(w.map, rep);
  return {*base, rep, ow};
}

}  // namespace homalg
