#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "homalg/identities.hpp"

namespace homalg {

enum class ActionRole { Rho, Ell, Arr, LPrec, RPrec, LSucc, RSucc };

inline constexpr std::array kAllActionRoles = {ActionRole::Rho,   ActionRole::Ell,   ActionRole::Arr,  ActionRole::LPrec,
                                               ActionRole::RPrec, ActionRole::LSucc, ActionRole::RSucc};

inline std::string_view action_name(ActionRole r) {
  switch (r) {
    case ActionRole::Rho: return "rho";
    case ActionRole::Ell: return "ell";
    case ActionRole::Arr: return "r";
    case ActionRole::LPrec: return "lprec";
    case ActionRole::RPrec: return "rprec";
    case ActionRole::LSucc: return "lsucc";
    case ActionRole::RSucc: return "rsucc";
  }
  return "?";
}

inline std::optional<ActionRole> parse_action(std::string_view s) {
  for (auto r : kAllActionRoles)
    if (action_name(r) == s) return r;
  return std::nullopt;
}

/// A linear map A -> End(V), stored as one module_dim x module_dim matrix per basis vector of A.
class Action {
 public:
  Action() = default;
  Action(std::size_t dim, std::size_t mdim) : mdim_(mdim), slices_(dim, Matrix(mdim, mdim)) {}
  explicit Action(std::vector<Matrix> slices) : slices_(std::move(slices)) {
    mdim_ = slices_.empty() ? 0 : slices_[0].rows();
    for (const auto& m : slices_)
      if (m.rows() != mdim_ || m.cols() != mdim_) throw Error(ErrorKind::DimensionMismatch, "action slice shape");
  }
  /// Action whose slice i is f(e_i).
  static Action from_function(std::size_t dim, const std::function<Matrix(std::size_t)>& f) {
    std::vector<Matrix> s;
    for (std::size_t i = 0; i < dim; ++i) s.push_back(f(i));
    return Action(std::move(s));
  }

  std::size_t dim() const { return slices_.size(); }
  std::size_t module_dim() const { return mdim_; }
  const Matrix& slice(std::size_t i) const { return slices_[i]; }
  Matrix& slice(std::size_t i) { return slices_[i]; }
  const std::vector<Matrix>& slices() const { return slices_; }

  Matrix at(const Vec& x) const {
    Matrix m(mdim_, mdim_);
    for (std::size_t i = 0; i < slices_.size(); ++i)
      if (!x[i].is_zero()) m = m + x[i] * slices_[i];
    return m;
  }

  Vec apply(const Vec& x, const Vec& v) const {
    if (x.size() != slices_.size() || v.size() != mdim_) throw Error(ErrorKind::DimensionMismatch, "action apply");
    Vec out(mdim_);
    for (std::size_t i = 0; i < slices_.size(); ++i) {
      if (x[i].is_zero()) continue;
      Vec w = slices_[i].apply(v);
      for (std::size_t k = 0; k < mdim_; ++k)
        if (!w[k].is_zero()) out[k].add_product(x[i], w[k]);
    }
    return out;
  }

  Action operator-() const {
    Action r = *this;
    for (auto& m : r.slices_) m = -m;
    return r;
  }
  friend Action operator+(const Action& a, const Action& b) {
    if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "action sum");
    std::vector<Matrix> s;
    for (std::size_t i = 0; i < a.dim(); ++i) s.push_back(a.slices_[i] + b.slices_[i]);
    return Action(std::move(s));
  }
  friend Action operator-(const Action& a, const Action& b) { return a + (-b); }
  friend bool operator==(const Action&, const Action&) = default;

 private:
  std::size_t mdim_ = 0;
  std::vector<Matrix> slices_;
};

enum class RepKind { Malcev, PreMalcev, PreAlternative };

struct Representation {
  std::shared_ptr<const HomStructure> base;
  std::size_t module_dim = 0;
  std::map<ActionRole, Action> actions;
  Matrix module_twist;

  const Action& action(ActionRole r) const {
    auto it = actions.find(r);
    if (it == actions.end())
      throw Error(ErrorKind::RoleMismatch, "representation has no " + std::string(action_name(r)) + " action");
    return it->second;
  }
  bool has(ActionRole r) const { return actions.contains(r); }

  RepKind kind() const {
    using A = ActionRole;
    if (has(A::Rho) && actions.size() == 1) return RepKind::Malcev;
    if (has(A::Ell) && has(A::Arr) && actions.size() == 2) return RepKind::PreMalcev;
    if (has(A::LPrec) && has(A::RPrec) && has(A::LSucc) && has(A::RSucc) && actions.size() == 4)
      return RepKind::PreAlternative;
    throw Error(ErrorKind::RoleMismatch, "action set matches no representation class");
  }

  void validate() const {
    if (!base) throw Error(ErrorKind::SchemaError, "representation without base structure");
    if (module_twist.rows() != module_dim || module_twist.cols() != module_dim)
      throw Error(ErrorKind::DimensionMismatch, "module twist is not module_dim x module_dim");
    for (const auto& [r, a] : actions)
      if (a.dim() != base->dim || a.module_dim() != module_dim)
        throw Error(ErrorKind::DimensionMismatch, "action " + std::string(action_name(r)) + " has wrong shape");
  }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.module_dim == b.module_dim && a.actions == b.actions && a.module_twist == b.module_twist;
  }
};

struct RepOptions {
  bool equivariance = false;  // PA-EQ for pre-alternative representations
};

namespace detail {

/// The Malcev action identities for rho on V relative to bracket br on A.
inline void sweep_malcev_rep(Sweeper& sw, const std::string& eq_id, const std::string& id, const Action& rho, const StructureTensor& bracket,
                             const Twist& a, const Matrix& beta) {
  const std::size_t n = bracket.dim(), m = rho.module_dim();
  Prod br{&bracket};
  Matrix b2 = beta * beta;
  std::vector<Vec> e, v;
  for (std::size_t i = 0; i < n; ++i) e.push_back(basis_vec(n, i));
  for (std::size_t i = 0; i < m; ++i) v.push_back(basis_vec(m, i));
  auto R = [&](const Vec& x, const Vec& w) { return rho.apply(x, w); };
  sw.run(eq_id, std::vector<std::size_t>{n, m}, [&](const auto& i) {
    return R(a.e1(i[0]), beta.apply(v[i[1]])) - beta.apply(rho.slice(i[0]).apply(v[i[1]]));
  });
  sw.run(id, std::vector<std::size_t>{n, n, n, m}, [&](const auto& i) {
    const Vec &x = e[i[0]], &y = e[i[1]], &z = e[i[2]], &w = v[i[3]];
    Vec r = R(br(br(x, y), a(z)), b2.apply(w));
    r -= R(a.sq(x), R(a(y), R(z, w)));
    r += R(a.sq(z), R(a(x), R(y, w)));
    r -= R(a.sq(y), R(br(z, x), beta.apply(w)));
    r += R(a(br(y, z)), R(a(x), beta.apply(w)));
    return r;
  });
}

}  // namespace detail

/// Checks the representation axioms of the given class.
inline CheckReport check_rep(const Representation& rep, StructureClass cls, RepOptions opt = {}) {
  auto start = std::chrono::steady_clock::now();
  rep.validate();
  const HomStructure& s = *rep.base;
  CheckReport out;
  out.cls = cls;
  out.subject = "representation/" + std::string(class_tag(cls));
  Sweeper sw(out);
  Twist a(s.twist);
  const Matrix& beta = rep.module_twist;
  const std::size_t n = s.dim, m = rep.module_dim;
  std::vector<Vec> e, v;
  for (std::size_t i = 0; i < n; ++i) e.push_back(basis_vec(n, i));
  for (std::size_t i = 0; i < m; ++i) v.push_back(basis_vec(m, i));
  using A = ActionRole;

  switch (cls) {
    case StructureClass::HomMalcev:
    case StructureClass::HomLie: {
      detail::sweep_malcev_rep(sw, "REP-EQ", "REP-M", rep.action(A::Rho), s.product(ProductRole::Bracket), a, beta);
      break;
    }
    case StructureClass::HomPreMalcev: {
      const auto& dot_t = s.product(ProductRole::Dot);
      StructureTensor br_t = dot_t - opposite(dot_t);
      Prod dot{&dot_t}, br{&br_t};
      const Action &ell = rep.action(A::Ell), &arr = rep.action(A::Arr);
      Action rho = ell - arr;
      detail::sweep_malcev_rep(sw, "L-EQ", "L-REP", ell, br_t, a, beta);
      Matrix b2 = beta * beta;
      auto l = [&](const Vec& x, const Vec& w) { return ell.apply(x, w); };
      auto r = [&](const Vec& x, const Vec& w) { return arr.apply(x, w); };
      auto p = [&](const Vec& x, const Vec& w) { return rho.apply(x, w); };
      auto B = [&](const Vec& w) { return beta.apply(w); };
      auto B2 = [&](const Vec& w) { return b2.apply(w); };
      sw.run("REP1", std::vector<std::size_t>{n, m},
             [&](const auto& i) { return B(r(e[i[0]], v[i[1]])) - r(a.e1(i[0]), B(v[i[1]])); });
      std::vector<std::size_t> rad{n, n, n, m};
      sw.run("REP2", rad, [&](const auto& i) {
        const Vec &x = e[i[0]], &y = e[i[1]], &z = e[i[2]], &w = v[i[3]];
        Vec res = r(a.sq(x), p(a(y), p(z, w)));
        res -= r(dot(a(z), dot(y, x)), B2(w));
        res += l(a.sq(y), r(dot(z, x), B(w)));
        res -= l(a(br(y, z)), B(r(x, w)));
        res -= l(a.sq(z), r(a(x), p(y, w)));
        return res;
      });
      sw.run("REP3", rad, [&](const auto& i) {
        const Vec &x = e[i[0]], &y = e[i[1]], &z = e[i[2]], &w = v[i[3]];
        Vec res = l(a.sq(y), l(a(z), r(x, w)));
        res -= r(a.sq(x), p(a(y), p(z, w)));
        res -= l(a.sq(z), r(dot(y, x), B(w)));
        res -= r(a(dot(z, x)), B(p(y, w)));
        res += r(dot(br(z, y), a(x)), B2(w));
        return res;
      });
      sw.run("REP4", rad, [&](const auto& i) {
        const Vec &x = e[i[0]], &y = e[i[1]], &z = e[i[2]], &w = v[i[3]];
        Vec res = r(dot(a(y), dot(z, x)), B2(w));
        res += r(a.sq(x), p(br(y, z), B(w)));
        res -= l(a.sq(y), l(a(z), r(x, w)));
        res += r(a(dot(y, x)), B(p(z, w)));
        res += l(a.sq(z), r(a(x), p(y, w)));
        return res;
      });
      break;
    }
    case StructureClass::HomPreAlternative: {
      Prod pr{&s.product(ProductRole::Prec)}, su{&s.product(ProductRole::Succ)};
      const Action &lp = rep.action(A::LPrec), &rp = rep.action(A::RPrec), &ls = rep.action(A::LSucc),
                   &rs = rep.action(A::RSucc);
      ident::PreAltActions acts;
      acts.lp = [&](const Vec& x, const Vec& w) { return lp.apply(x, w); };
      acts.rp = [&](const Vec& x, const Vec& w) { return rp.apply(x, w); };
      acts.ls = [&](const Vec& x, const Vec& w) { return ls.apply(x, w); };
      acts.rs = [&](const Vec& x, const Vec& w) { return rs.apply(x, w); };
      acts.beta = [&](const Vec& w) { return beta.apply(w); };
      for (int k = 1; k <= 10; ++k)
        sw.run("PA" + std::to_string(k), std::vector<std::size_t>{n, n, m},
               [&](const auto& i) { return ident::pa(k, pr, su, a, acts, e[i[0]], e[i[1]], v[i[2]]); });
      if (opt.equivariance)
        for (const Action* act : {&lp, &rp, &ls, &rs})
          sw.run("PA-EQ", std::vector<std::size_t>{n, m}, [&](const auto& i) {
            return act->apply(a.e1(i[0]), beta.apply(v[i[1]])) - beta.apply(act->slice(i[0]).apply(v[i[1]]));
          });
      break;
    }
    default:
      throw Error(ErrorKind::RoleMismatch, "no representation theory for class " + std::string(class_tag(cls)));
  }
  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

namespace detail {

inline Matrix left_mult(const StructureTensor& p, const Vec& x) {
  const std::size_t n = p.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec c = p.eval(x, basis_vec(n, j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = c[i];
  }
  return m;
}

inline Matrix right_mult(const StructureTensor& p, const Vec& x) {
  const std::size_t n = p.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec c = p.eval(basis_vec(n, j), x);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = c[i];
  }
  return m;
}

inline Action left_action(const StructureTensor& p, const Matrix& pre) {
  return Action::from_function(p.dim(), [&](std::size_t i) { return left_mult(p, pre.column(i)); });
}
inline Action right_action(const StructureTensor& p, const Matrix& pre) {
  return Action::from_function(p.dim(), [&](std::size_t i) { return right_mult(p, pre.column(i)); });
}

inline std::shared_ptr<const HomStructure> share(const HomStructure& s) { return std::make_shared<HomStructure>(s); }

}  // namespace detail

/// ad^s_x(y) = [a^s(x), y] on the structure itself, twisted by a.
inline Representation adjoint_rep(const HomStructure& s, unsigned power = 0) {
  const auto& b = s.product(ProductRole::Bracket);
  Representation rep;
  rep.base = detail::share(s);
  rep.module_dim = s.dim;
  rep.module_twist = s.twist;
  rep.actions[ActionRole::Rho] = detail::left_action(b, mat_pow(s.twist, power));
  return rep;
}

/// L^s_x(y) = a^s(x) y and R^s_x(y) = y a^s(x).
inline Representation regular_pre_malcev_rep(const HomStructure& s, unsigned power = 0) {
  const auto& d = s.product(ProductRole::Dot);
  if (power > 0) {
    CheckReport mult;
    Sweeper sw(mult);
    detail::sweep_multiplicativity(sw, s, {ProductRole::Dot}, Twist(s.twist));
    if (!mult.pass) throw Error(ErrorKind::NotMultiplicative, "twist is not multiplicative for the dot product");
  }
  Matrix pre = mat_pow(s.twist, power);
  Representation rep;
  rep.base = detail::share(s);
  rep.module_dim = s.dim;
  rep.module_twist = s.twist;
  rep.actions[ActionRole::Ell] = detail::left_action(d, pre);
  rep.actions[ActionRole::Arr] = detail::right_action(d, pre);
  return rep;
}

/// Left and right multiplications of a single product, as (ell, r). Used for the
/// regular bimodule of an alternative algebra.
inline Representation regular_bimodule(const HomStructure& s, ProductRole role) {
  const auto& p = s.product(role);
  Matrix id = Matrix::identity(s.dim);
  Representation rep;
  rep.base = detail::share(s);
  rep.module_dim = s.dim;
  rep.module_twist = s.twist;
  rep.actions[ActionRole::Ell] = detail::left_action(p, id);
  rep.actions[ActionRole::Arr] = detail::right_action(p, id);
  return rep;
}

/// L≺, R≺, L≻, R≻ of a pre-alternative structure on itself.
inline Representation regular_pre_alternative_rep(const HomStructure& s) {
  const auto& pr = s.product(ProductRole::Prec);
  const auto& su = s.product(ProductRole::Succ);
  Matrix id = Matrix::identity(s.dim);
  Representation rep;
  rep.base = detail::share(s);
  rep.module_dim = s.dim;
  rep.module_twist = s.twist;
  rep.actions[ActionRole::LPrec] = detail::left_action(pr, id);
  rep.actions[ActionRole::RPrec] = detail::right_action(pr, id);
  rep.actions[ActionRole::LSucc] = detail::left_action(su, id);
  rep.actions[ActionRole::RSucc] = detail::right_action(su, id);
  return rep;
}

/// Which of the two displayed dual formulas to realize.
enum class DualVariant {
  AlphaForward,   // rho*(x) = -(beta^-2 rho(a x))^T
  AlphaInverse,   // rho*(x) = -(rho(a^-1 x) beta^-2)^T
};

namespace detail {

inline Action dual_action(const Action& act, const Matrix& alpha, const Matrix& beta, DualVariant variant) {
  Matrix bi = mat_inverse(beta);
  Matrix bi2 = bi * bi;
  Matrix ai = mat_inverse(alpha);
  return Action::from_function(act.dim(), [&](std::size_t i) {
    if (variant == DualVariant::AlphaForward) return -(bi2 * act.at(alpha.column(i))).transpose();
    return -(act.at(ai.column(i)) * bi2).transpose();
  });
}

}  // namespace detail

inline Representation dual_malcev_rep(const Representation& rep, DualVariant variant = DualVariant::AlphaForward) {
  rep.validate();
  Representation out;
  out.base = rep.base;
  out.module_dim = rep.module_dim;
  out.module_twist = mat_inverse(rep.module_twist).transpose();
  out.actions[ActionRole::Rho] =
      detail::dual_action(rep.action(ActionRole::Rho), rep.base->twist, rep.module_twist, variant);
  return out;
}

/// (ell* - r*, -r*, (beta^-1)^T)
inline Representation dual_pre_malcev_rep(const Representation& rep, DualVariant variant = DualVariant::AlphaForward) {
  rep.validate();
  const Matrix& alpha = rep.base->twist;
  Action ls = detail::dual_action(rep.action(ActionRole::Ell), alpha, rep.module_twist, variant);
  Action rs = detail::dual_action(rep.action(ActionRole::Arr), alpha, rep.module_twist, variant);
  Representation out;
  out.base = rep.base;
  out.module_dim = rep.module_dim;
  out.module_twist = mat_inverse(rep.module_twist).transpose();
  out.actions[ActionRole::Ell] = ls - rs;
  out.actions[ActionRole::Arr] = -rs;
  return out;
}

namespace detail {

inline Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

/// (x+a) o (y+b) = x p y + left(x) b + right(y) a; either action may be absent.
inline StructureTensor semidirect_product(const StructureTensor& p, const Action* left, const Action* right,
                                          std::size_t m) {
  const std::size_t n = p.dim(), N = n + m;
  std::vector<StructureTensor::Entry> es;
  for (const auto& e : p.entries()) es.push_back(e);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        // left(e_i) v_b has component a given by slice(i)(a, b)
        if (left && !left->slice(i)(a, b).is_zero()) es.push_back({i, n + b, n + a, left->slice(i)(a, b)});
        if (right && !right->slice(i)(a, b).is_zero()) es.push_back({n + b, i, n + a, right->slice(i)(a, b)});
      }
  return StructureTensor(N, std::move(es));
}

}  // namespace detail

/// The structure on A ⊕ V built from a representation, with twist a ⊕ b.
inline HomStructure semidirect(const HomStructure& s, const Representation& rep) {
  rep.validate();
  const std::size_t m = rep.module_dim;
  std::map<ProductRole, StructureTensor> ps;
  switch (rep.kind()) {
    case RepKind::Malcev: {
      Action rho = rep.action(ActionRole::Rho);
      Action neg = -rho;
      ps[ProductRole::Bracket] = detail::semidirect_product(s.product(ProductRole::Bracket), &rho, &neg, m);
      break;
    }
    case RepKind::PreMalcev:
      ps[ProductRole::Dot] = detail::semidirect_product(s.product(ProductRole::Dot), &rep.action(ActionRole::Ell),
                                                        &rep.action(ActionRole::Arr), m);
      break;
    case RepKind::PreAlternative:
      ps[ProductRole::Prec] = detail::semidirect_product(
          s.product(ProductRole::Prec), &rep.action(ActionRole::LPrec), &rep.action(ActionRole::RPrec), m);
      ps[ProductRole::Succ] = detail::semidirect_product(
          s.product(ProductRole::Succ), &rep.action(ActionRole::LSucc), &rep.action(ActionRole::RSucc), m);
      break;
  }
  auto labels = s.basis;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("v" + std::to_string(i + 1));
  return HomStructure(s.dim + m, std::move(ps), detail::block_diag(s.twist, rep.module_twist), std::move(labels));
}

}  // namespace homalg
