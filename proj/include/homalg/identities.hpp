#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "homalg/structure.hpp"

namespace homalg {

/// Runs an identity over every index tuple in lexicographic order and
/// records nonzero residuals in a report.
class Sweeper {
 public:
  explicit Sweeper(CheckReport& report) : report_(report) {}

  template <class F>
  void run(std::string_view id, const std::vector<std::size_t>& radices, F&& f) {
    for (auto r : radices)
      if (r == 0) return;
    std::vector<std::size_t> idx(radices.size(), 0);
    for (;;) {
      Vec res = f(idx);
      ++report_.tuples_checked;
      if (!is_zero(res)) report_.add({std::string(id), idx, std::move(res)});
      std::size_t p = idx.size();
      for (;;) {
        if (p == 0) return;
        --p;
        if (++idx[p] < radices[p]) break;
        idx[p] = 0;
      }
    }
  }

  template <class F>
  void run(std::string_view id, std::size_t n, std::size_t arity, F&& f) {
    run(id, std::vector<std::size_t>(arity, n), std::forward<F>(f));
  }

 private:
  CheckReport& report_;
};

/// Bilinear product bound to a tensor, usable as p(x, y).
struct Prod {
  const StructureTensor* t;
  Vec operator()(const Vec& x, const Vec& y) const { return t->eval(x, y); }
};

/// Twist map with cached images of basis vectors and squares.
class Twist {
 public:
  Twist() = default;
  explicit Twist(const Matrix& a) : a1_(a), a2_(a * a) {
    for (std::size_t i = 0; i < a.cols(); ++i) {
      c1_.push_back(a1_.column(i));
      c2_.push_back(a2_.column(i));
    }
  }
  Vec operator()(const Vec& x) const { return a1_.apply(x); }
  Vec sq(const Vec& x) const { return a2_.apply(x); }
  const Vec& e1(std::size_t i) const { return c1_[i]; }
  const Vec& e2(std::size_t i) const { return c2_[i]; }
  const Matrix& matrix() const { return a1_; }

 private:
  Matrix a1_, a2_;
  std::vector<Vec> c1_, c2_;
};

namespace ident {

/// J(x,y,z) = [[x,y],a(z)] + [[y,z],a(x)] + [[z,x],a(y)]
inline Vec jacobian(Prod br, const Twist& a, const Vec& x, const Vec& y, const Vec& z) {
  Vec r = br(br(x, y), a(z));
  r += br(br(y, z), a(x));
  r += br(br(z, x), a(y));
  return r;
}

/// Expanded four-term Hom-Malcev identity (lhs - rhs).
inline Vec hm_exp(Prod br, const Twist& a, const Vec& x, const Vec& y, const Vec& z, const Vec& t) {
  Vec r = br(a(br(x, z)), a(br(y, t)));
  r -= br(br(br(x, y), a(z)), a.sq(t));
  r -= br(br(br(y, z), a(t)), a.sq(x));
  r -= br(br(br(z, t), a(x)), a.sq(y));
  r -= br(br(br(t, x), a(y)), a.sq(z));
  return r;
}

/// Jacobian form J(a x, a y, [x,z]) - [J(x,y,z), a^2 x], polarized in x so it is
/// 4-linear in (x, y, z, t); t is the second copy of x.
inline Vec hm_jac(Prod br, const Twist& a, const Vec& x, const Vec& y, const Vec& z, const Vec& t) {
  Vec ax = a(x), ay = a(y), at = a(t);
  Vec r = jacobian(br, a, ax, ay, br(t, z));
  r += jacobian(br, a, at, ay, br(x, z));
  r -= br(jacobian(br, a, x, y, z), a.sq(t));
  r -= br(jacobian(br, a, t, y, z), a.sq(x));
  return r;
}

/// The unpolarized Jacobian form, for evaluation at a single x.
inline Vec hm_jac_plain(Prod br, const Twist& a, const Vec& x, const Vec& y, const Vec& z) {
  return jacobian(br, a, a(x), a(y), br(x, z)) - br(jacobian(br, a, x, y, z), a.sq(x));
}

/// Five-term Hom-pre-Malcev identity; br must be the commutator of dot.
inline Vec hpm(Prod dot, Prod br, const Twist& a, const Vec& x, const Vec& y, const Vec& z, const Vec& t) {
  Vec r = dot(a(br(y, z)), a(dot(x, t)));
  r += dot(br(br(x, y), a(z)), a.sq(t));
  r += dot(a.sq(y), dot(br(x, z), a(t)));
  r -= dot(a.sq(x), dot(a(y), dot(z, t)));
  r += dot(a.sq(z), dot(a(x), dot(y, t)));
  return r;
}

/// Ten-term expansion of the same identity, written with dot only.
inline Vec hpm_expanded(Prod dot, const Twist& a, const Vec& x, const Vec& y, const Vec& z, const Vec& t) {
  Vec axt = a(dot(x, t)), az = a(z), a2t = a.sq(t), at = a(t), a2y = a.sq(y);
  Vec r = dot(a(dot(y, z)), axt);
  r -= dot(a(dot(z, y)), axt);
  r += dot(dot(dot(x, y), az), a2t);
  r -= dot(dot(dot(y, x), az), a2t);
  r -= dot(dot(az, dot(x, y)), a2t);
  r += dot(dot(az, dot(y, x)), a2t);
  r += dot(a2y, dot(dot(x, z), at));
  r -= dot(a2y, dot(dot(z, x), at));
  r -= dot(a.sq(x), dot(a(y), dot(z, t)));
  r += dot(a.sq(z), dot(a(x), dot(y, t)));
  return r;
}

/// Derived products of a (▶, ◀) pair.
struct DendProducts {
  StructureTensor tr, tl, dot, dia, br;
  DendProducts(const StructureTensor& right, const StructureTensor& left)
      : tr(right), tl(left), dot(left + right), dia(left - opposite(right)), br(dot - opposite(dot)) {}
};

/// Hom-M-dendriform identities 1-4.
inline Vec md(int which, const DendProducts& d, const Twist& a, const Vec& x, const Vec& y, const Vec& z,
              const Vec& t) {
  Prod tr{&d.tr}, tl{&d.tl}, dot{&d.dot}, dia{&d.dia}, br{&d.br};
  Vec r(x.size());
  switch (which) {
    case 1:
      r = tr(dia(a(z), dia(y, x)), a.sq(t));
      r -= tr(a.sq(x), dot(a(y), dot(z, t)));
      r += tl(a.sq(z), tr(a(x), dot(y, t)));
      r += tl(a(br(y, z)), a(tr(x, t)));
      r -= tl(a.sq(y), tr(dia(z, x), a(t)));
      break;
    case 2:
      r = tl(a.sq(z), tl(a(x), tr(y, t)));
      r -= tr(dia(a(z), dia(x, y)), a.sq(t));
      r -= tl(a.sq(x), tr(a(y), dot(z, t)));
      r -= tr(a(dia(z, y)), a(dot(x, t)));
      r += tr(a.sq(y), dot(br(x, z), a(t)));
      break;
    case 3:
      r = tr(a.sq(z), dot(a(x), dot(y, t)));
      r += tr(dia(br(x, y), a(z)), a.sq(t));
      r -= tl(a.sq(x), tl(a(y), tr(z, t)));
      r += tr(a(dia(y, z)), a(dot(x, t)));
      r += tl(a.sq(y), tr(dia(x, z), a(t)));
      break;
    case 4:
      r = tl(br(br(x, y), a(z)), a.sq(t));
      r -= tl(a.sq(x), tl(a(y), tl(z, t)));
      r += tl(a.sq(z), tl(a(x), tl(y, t)));
      r += tl(a(br(y, z)), a(tl(x, t)));
      r += tl(a.sq(y), tl(br(x, z), a(t)));
      break;
    default: throw Error(ErrorKind::UnknownKind, "dendriform identity index");
  }
  return r;
}

/// as(x,y,z) = (x y) a(z) - a(x) (y z)
inline Vec assoc(Prod p, const Twist& a, const Vec& x, const Vec& y, const Vec& z) {
  return p(p(x, y), a(z)) - p(a(x), p(y, z));
}

/// Derived products of a quadri structure.
struct QuadriProducts {
  StructureTensor nw, sw, ne, se, succ, prec, vee, wedge, star;
  explicit QuadriProducts(const HomStructure& s)
      : nw(s.product(ProductRole::NW)),
        sw(s.product(ProductRole::SW)),
        ne(s.product(ProductRole::NE)),
        se(s.product(ProductRole::SE)),
        succ(ne + se),
        prec(nw + sw),
        vee(se + sw),
        wedge(ne + nw),
        star(succ + prec) {}
};

inline Vec quadri_associator(std::string_view kind, const QuadriProducts& q, const Twist& a, const Vec& x,
                             const Vec& y, const Vec& z) {
  Prod nw{&q.nw}, sw{&q.sw}, ne{&q.ne}, se{&q.se}, su{&q.succ}, pr{&q.prec}, ve{&q.vee}, we{&q.wedge},
      st{&q.star};
  Vec az = a(z), ax = a(x);
  if (kind == "r") return nw(nw(x, y), az) - nw(ax, st(y, z));
  if (kind == "l") return se(st(x, y), az) - se(ax, se(y, z));
  if (kind == "m") return nw(se(x, y), az) - se(ax, nw(y, z));
  if (kind == "n") return nw(ne(x, y), az) - ne(ax, pr(y, z));
  if (kind == "w") return nw(sw(x, y), az) - sw(ax, we(y, z));
  if (kind == "s") return sw(su(x, y), az) - se(ax, sw(y, z));
  if (kind == "e") return ne(ve(x, y), az) - se(ax, ne(y, z));
  if (kind == "ne") return ne(we(x, y), az) - ne(ax, su(y, z));
  if (kind == "sw") return sw(pr(x, y), az) - sw(ax, ve(y, z));
  throw Error(ErrorKind::UnknownKind, "alpha-associator kind \"" + std::string(kind) + "\"");
}

struct QuadriAxiom {
  const char* first;
  const char* second;
  bool swap_xy;  // second term at (y,x,z); otherwise at (x,z,y)
};

inline constexpr QuadriAxiom kQuadriAxioms[9] = {
    {"r", "m", true},   {"r", "r", false},  {"n", "w", true},  {"n", "ne", false}, {"ne", "e", true},
    {"w", "sw", false}, {"sw", "s", true},  {"m", "l", false}, {"l", "l", true},
};

inline Vec quadri_axiom(int k, const QuadriProducts& q, const Twist& a, const Vec& x, const Vec& y, const Vec& z) {
  const auto& ax = kQuadriAxioms[k];
  Vec r = quadri_associator(ax.first, q, a, x, y, z);
  r += ax.swap_xy ? quadri_associator(ax.second, q, a, y, x, z) : quadri_associator(ax.second, q, a, x, z, y);
  return r;
}

/// Actions of a pre-alternative algebra on a module, as maps (x in A, v in V) -> V.
struct PreAltActions {
  std::function<Vec(const Vec&, const Vec&)> lp, rp, ls, rs;  // L≺, R≺, L≻, R≻
  std::function<Vec(const Vec&)> beta;
};

/// Representation axioms PA1-PA10 for x, y in A and v in V (lhs - rhs).
inline Vec pa(int k, Prod prec, Prod succ, const Twist& a, const PreAltActions& m, const Vec& x, const Vec& y,
              const Vec& v) {
  auto star = [&](const Vec& p, const Vec& q) { return prec(p, q) + succ(p, q); };
  auto L = [&](const Vec& p, const Vec& w) { return m.lp(p, w) + m.ls(p, w); };
  auto R = [&](const Vec& p, const Vec& w) { return m.rp(p, w) + m.rs(p, w); };
  Vec ax = a(x), ay = a(y), bv = m.beta(v);
  switch (k) {
    case 1:
      return m.ls(star(x, y) + star(y, x), bv) - m.ls(ax, m.ls(y, v)) - m.ls(ay, m.ls(x, v));
    case 2:
      return m.rs(ay, L(x, v) + R(x, v)) - m.ls(ax, m.rs(y, v)) - m.rs(succ(x, y), bv);
    case 3:
      return m.rp(ay, m.ls(x, v)) + m.rp(ay, m.rp(x, v)) - m.ls(ax, m.rp(y, v)) - m.rp(star(x, y), bv);
    case 4:
      return m.rp(ay, m.rs(x, v)) + m.rp(ay, m.lp(x, v)) - m.lp(ax, R(y, v)) - m.rs(prec(x, y), bv);
    case 5:
      return m.lp(prec(y, x), bv) + m.lp(succ(x, y), bv) - m.lp(ay, L(x, v)) - m.ls(ax, m.lp(y, v));
    case 6:
      return m.rp(ax, m.ls(y, v)) + m.ls(star(y, x), bv) - m.ls(ay, m.rp(x, v)) - m.ls(ay, m.ls(x, v));
    case 7:
      return m.rp(ax, m.rs(y, v)) + m.rs(ay, R(x, v)) - m.rs(prec(y, x), bv) - m.rs(succ(x, y), bv);
    case 8:
      return m.lp(succ(y, x), bv) + m.rs(ax, L(y, v)) - m.ls(ay, m.lp(x, v)) - m.ls(ay, m.rs(x, v));
    case 9:
      return m.rp(ax, m.rp(y, v)) + m.rp(ay, m.rp(x, v)) - m.rp(star(x, y) + star(y, x), bv);
    case 10:
      return m.rp(ay, m.lp(x, v)) + m.lp(prec(x, y), bv) - m.lp(ax, R(y, v) + L(y, v));
    default: throw Error(ErrorKind::UnknownKind, "pre-alternative axiom index");
  }
}

/// The four Hom-pre-alternative identities written directly on A.
inline Vec prealt_direct(int k, Prod prec, Prod succ, const Twist& a, const Vec& x, const Vec& y, const Vec& z) {
  auto star = [&](const Vec& p, const Vec& q) { return prec(p, q) + succ(p, q); };
  auto r = [&](const Vec& p, const Vec& q, const Vec& w) { return prec(prec(p, q), a(w)) - prec(a(p), star(q, w)); };
  auto l = [&](const Vec& p, const Vec& q, const Vec& w) { return succ(star(p, q), a(w)) - succ(a(p), succ(q, w)); };
  auto m = [&](const Vec& p, const Vec& q, const Vec& w) { return prec(succ(p, q), a(w)) - succ(a(p), prec(q, w)); };
  switch (k) {
    case 1: return m(x, y, z) + r(y, x, z);
    case 2: return m(x, y, z) + l(x, z, y);
    case 3: return l(x, y, z) + l(y, x, z);
    case 4: return r(x, y, z) + r(x, z, y);
    default: throw Error(ErrorKind::UnknownKind, "pre-alternative identity index");
  }
}

inline PreAltActions regular_prealt_actions(Prod prec, Prod succ, const Twist& a) {
  PreAltActions m;
  m.lp = [prec](const Vec& x, const Vec& v) { return prec(x, v); };
  m.rp = [prec](const Vec& x, const Vec& v) { return prec(v, x); };
  m.ls = [succ](const Vec& x, const Vec& v) { return succ(x, v); };
  m.rs = [succ](const Vec& x, const Vec& v) { return succ(v, x); };
  m.beta = [&a](const Vec& v) { return a(v); };
  return m;
}

}  // namespace ident

struct CheckOptions {
  bool multiplicativity = false;
};

namespace detail {

inline void sweep_multiplicativity(Sweeper& sw, const HomStructure& s, const std::vector<ProductRole>& roles,
                                   const Twist& a) {
  for (auto role : roles) {
    Prod p{&s.product(role)};
    sw.run("MULT", s.dim, 2, [&](const auto& i) {
      return a(p.t->basis_product(i[0], i[1])) - p(a.e1(i[0]), a.e1(i[1]));
    });
  }
}

inline void sweep_malcev(Sweeper& sw, const StructureTensor& bracket, const Twist& a, std::size_t n) {
  Prod br{&bracket};
  std::vector<Vec> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(basis_vec(n, i));
  sw.run("HM-EXP", n, 4, [&](const auto& i) { return ident::hm_exp(br, a, e[i[0]], e[i[1]], e[i[2]], e[i[3]]); });
  sw.run("HM-JAC", n, 4, [&](const auto& i) { return ident::hm_jac(br, a, e[i[0]], e[i[1]], e[i[2]], e[i[3]]); });
}

inline void sweep_skew(Sweeper& sw, const StructureTensor& bracket) {
  std::size_t n = bracket.dim();
  std::vector<std::size_t> rad = {n, n};
  // only i <= j carries information; other pairs report zero
  sw.run("SKEW", rad, [&](const auto& i) {
    if (i[0] > i[1]) return Vec(n);
    return bracket.basis_product(i[0], i[1]) + bracket.basis_product(i[1], i[0]);
  });
}

}  // namespace detail

inline CheckReport check(const HomStructure& s, StructureClass cls, CheckOptions opt = {}) {
  auto start = std::chrono::steady_clock::now();
  s.validate();
  s.require(class_roles(cls));
  CheckReport rep;
  rep.cls = cls;
  rep.subject = std::string(class_tag(cls));
  Sweeper sw(rep);
  const std::size_t n = s.dim;
  Twist a(s.twist);
  std::vector<Vec> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(basis_vec(n, i));
  using R = ProductRole;

  switch (cls) {
    case StructureClass::HomLie: {
      const auto& b = s.product(R::Bracket);
      detail::sweep_skew(sw, b);
      sw.run("JACOBI", n, 3, [&](const auto& i) { return ident::jacobian(Prod{&b}, a, e[i[0]], e[i[1]], e[i[2]]); });
      break;
    }
    case StructureClass::HomMalcev: {
      const auto& b = s.product(R::Bracket);
      detail::sweep_skew(sw, b);
      detail::sweep_malcev(sw, b, a, n);
      break;
    }
    case StructureClass::HomMalcevAdmissible: {
      const auto& st = s.product(R::Star);
      StructureTensor b = st - opposite(st);
      detail::sweep_malcev(sw, b, a, n);
      break;
    }
    case StructureClass::HomPreMalcev: {
      const auto& d = s.product(R::Dot);
      StructureTensor b = d - opposite(d);
      sw.run("HPM", n, 4, [&](const auto& i) {
        return ident::hpm(Prod{&d}, Prod{&b}, a, e[i[0]], e[i[1]], e[i[2]], e[i[3]]);
      });
      break;
    }
    case StructureClass::HomMDendriform: {
      ident::DendProducts d(s.product(R::TriRight), s.product(R::TriLeft));
      for (int k = 1; k <= 4; ++k)
        sw.run("MD" + std::to_string(k), n, 4,
               [&](const auto& i) { return ident::md(k, d, a, e[i[0]], e[i[1]], e[i[2]], e[i[3]]); });
      break;
    }
    case StructureClass::HomAssociative: {
      Prod p{&s.product(R::Star)};
      sw.run("ASSOC", n, 3, [&](const auto& i) { return ident::assoc(p, a, e[i[0]], e[i[1]], e[i[2]]); });
      break;
    }
    case StructureClass::HomAlternative: {
      Prod p{&s.product(R::Star)};
      sw.run("ALT-L", n, 3, [&](const auto& i) {
        return ident::assoc(p, a, e[i[0]], e[i[1]], e[i[2]]) + ident::assoc(p, a, e[i[1]], e[i[0]], e[i[2]]);
      });
      sw.run("ALT-R", n, 3, [&](const auto& i) {
        return ident::assoc(p, a, e[i[0]], e[i[1]], e[i[2]]) + ident::assoc(p, a, e[i[0]], e[i[2]], e[i[1]]);
      });
      break;
    }
    case StructureClass::HomPreAlternative: {
      Prod pr{&s.product(R::Prec)}, su{&s.product(R::Succ)};
      auto m = ident::regular_prealt_actions(pr, su, a);
      for (int k = 1; k <= 10; ++k)
        sw.run("PA" + std::to_string(k), n, 3,
               [&](const auto& i) { return ident::pa(k, pr, su, a, m, e[i[0]], e[i[1]], e[i[2]]); });
      break;
    }
    case StructureClass::HomAltQuadri: {
      ident::QuadriProducts q(s);
      for (int k = 0; k < 9; ++k)
        sw.run("QA" + std::to_string(k + 1), n, 3,
               [&](const auto& i) { return ident::quadri_axiom(k, q, a, e[i[0]], e[i[1]], e[i[2]]); });
      break;
    }
  }
  if (opt.multiplicativity) detail::sweep_multiplicativity(sw, s, class_roles(cls), a);
  rep.elapsed = std::chrono::steady_clock::now() - start;
  return rep;
}

/// Hom-Jacobian of three vectors under the structure's bracket.
inline Vec hom_jacobian(const HomStructure& s, const Vec& x, const Vec& y, const Vec& z) {
  Twist a(s.twist);
  return ident::jacobian(Prod{&s.product(ProductRole::Bracket)}, a, x, y, z);
}

/// One of the nine quadri alpha-associators, or "plain" for the associator of ∗.
inline Vec alpha_associator(const HomStructure& s, std::string_view kind, const Vec& x, const Vec& y, const Vec& z) {
  Twist a(s.twist);
  if (kind == "ℓ") kind = "l";
  if (kind == "plain") return ident::assoc(Prod{&s.product(ProductRole::Star)}, a, x, y, z);
  static constexpr std::string_view kinds[] = {"r", "l", "m", "n", "w", "s", "e", "ne", "sw"};
  if (std::find(std::begin(kinds), std::end(kinds), kind) == std::end(kinds))
    throw Error(ErrorKind::UnknownKind, "alpha-associator kind \"" + std::string(kind) + "\"");
  s.require(class_roles(StructureClass::HomAltQuadri));
  ident::QuadriProducts q(s);
  return ident::quadri_associator(kind, q, a, x, y, z);
}

/// Whether f(x o y) = f(x) o' f(y) for every shared role, plus f a1 = a2 f unless weak.
inline CheckReport check_morphism(const Matrix& f, const HomStructure& src, const HomStructure& tgt, bool weak) {
  auto start = std::chrono::steady_clock::now();
  if (f.rows() != tgt.dim || f.cols() != src.dim) throw Error(ErrorKind::DimensionMismatch, "morphism shape");
  CheckReport rep;
  rep.subject = weak ? "weak-morphism" : "morphism";
  Sweeper sw(rep);
  std::vector<Vec> fe;
  for (std::size_t i = 0; i < src.dim; ++i) fe.push_back(f.column(i));
  for (const auto& [role, p] : src.products) {
    const auto& q = tgt.product(role);
    sw.run("MORPH-" + std::string(role_name(role)), src.dim, 2, [&](const auto& i) {
      return f.apply(p.basis_product(i[0], i[1])) - q.eval(fe[i[0]], fe[i[1]]);
    });
  }
  if (!weak) {
    Matrix d = f * src.twist - tgt.twist * f;
    sw.run("MORPH-ALPHA", src.dim, 1, [&](const auto& i) { return d.column(i[0]); });
  }
  rep.elapsed = std::chrono::steady_clock::now() - start;
  return rep;
}

}  // namespace homalg
