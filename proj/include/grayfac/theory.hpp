#pragma once

// Terms over a signature, formal pasting expressions of theory 2-cells, and
// the engine that lifts an oplax model map k: X → Y through a factorisation
// system to a model Z, deriving the structure cells of Z as unique fillers.
//
// The engine is a template over an ambient. An ambient supplies
//   Object, Morphism
//   Object unit()                                  X(e) = Y(e)
//   Object x_op(op, objs), y_op(op, objs)          X(f), Y(f) on objects
//   Morphism x_map(op, dom objs, cod objs, maps), y_map(...)
//   Morphism k_op(op, objs)                        k(f): X(f) → Y(f)
//   Factored factor(Morphism)                      {e, middle, m}
//   Morphism lift(e, m, top, bottom)
//   Morphism compose(g, f), identity(Object), inverse(Morphism)
//   bool is_iso, is_e, is_m
//   bool equal(Morphism, Morphism); std::string first_difference(...)
//   Morphism x_cell(gen, leaves, X(src), X(tgt)), y_cell(...)
//   Object dom(Morphism), cod(Morphism); std::string describe(Object)

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grayfac/error.hpp"

namespace grayfac {

// ------------------------------------------------------------------- terms

struct Signature {
  std::map<int, std::vector<std::string>> ops;  // by arity

  /// Arity of op, or -1.
  int arity(std::string_view op) const;
  /// e of arity 0 and m of arity 2: pointed magmas.
  static Signature pointed_magma();
};

/// A variable x_{var+1} when op is empty, otherwise op applied to args.
struct Term {
  int var = -1;
  std::string op;
  std::vector<Term> args;

  static Term v(int i) { return Term{i, {}, {}}; }
  static Term apply(std::string op, std::vector<Term> args = {}) { return Term{-1, std::move(op), std::move(args)}; }
  bool is_var() const { return op.empty(); }
  auto operator<=>(const Term&) const = default;
};

/// t with x_i replaced by args[i]. Throws ArityMismatch on a variable out of range.
Term substitute(const Term& t, const std::vector<Term>& args);
/// Throws ArityMismatch unless t is a term of sig in n variables.
void check_term(const Term& t, const Signature& sig, int n);
/// Variable indices in order of first appearance.
std::vector<int> variables(const Term& t);
bool is_linear(const Term& t);
std::size_t depth(const Term& t);
/// Variables print as x1, x2, ...; e.g. m(m(x1,x2),e).
std::string to_string(const Term& t);
/// Inverse of to_string; throws MalformedSpec or ArityMismatch.
Term parse_term(std::string_view text, const Signature& sig);

// -------------------------------------------------------------- generators

struct CellGenerator {
  std::string name;
  int arity = 0;
  Term src;
  Term tgt;
};

/// a, l, r and the symmetry b over the pointed-magma signature.
const std::vector<CellGenerator>& monoidal_generators();
const CellGenerator& monoidal_generator(std::string_view name);

/// Pasting expression of theory 2-cells in a fixed number of variables.
struct CellExpr {
  enum class Kind { Gen, Id, Vert, Op };
  Kind kind = Kind::Id;
  std::string name;       // Gen: generator; Op: operation
  bool inverse = false;   // Gen
  std::vector<Term> at;   // Gen: the generator at these terms
  Term term;              // Id
  std::vector<CellExpr> children;  // Vert: first then second; Op: one per argument

  static CellExpr gen(std::string name, std::vector<Term> at, bool inverse = false);
  static CellExpr id(Term t);
  /// second ∘ first.
  static CellExpr then(CellExpr first, CellExpr second);
  static CellExpr op(std::string name, std::vector<CellExpr> children);

  /// Boundary terms; Vert throws MalformedSpec when the middle terms differ.
  Term source() const;
  Term target() const;
};

std::string to_string(const CellExpr& c);

/// The two sides of each coherence axiom of a symmetric monoidal structure.
struct AxiomSides {
  std::string axiom;
  int arity = 0;
  CellExpr lhs;
  CellExpr rhs;
};

AxiomSides pentagon_sides();
AxiomSides triangle_sides();
AxiomSides symmetry_sides();
AxiomSides hexagon_sides();
AxiomSides hexagon_inverse_sides();
/// "pentagon", "triangle", "symmetry", "hexagon" (both hexagons).
std::vector<AxiomSides> axiom_sides(std::string_view axiom);

/// Outcome of a check over an explicit probe set.
struct CoherenceReport {
  std::string axiom;
  std::vector<std::string> probes;  // one description per probe tuple
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// ------------------------------------------------------------------ engine

template <class Amb>
class Engine {
 public:
  using Object = typename Amb::Object;
  using Morphism = typename Amb::Morphism;
  using Objects = std::vector<Object>;

  struct Factored {
    Morphism e;
    Object z;
    Morphism m;
  };

  explicit Engine(Amb& amb) : amb_(amb) {}
  Amb& ambient() { return amb_; }

  /// (e(f), Z(f), m(f)) at the tuple, by factoring k(f); memoised by handle.
  const Factored& factor_at(const std::string& op, const Objects& args) {
    auto key = std::make_pair(op, args);
    auto it = factored_.find(key);
    if (it != factored_.end()) return it->second;
    auto fac = amb_.factor(amb_.k_op(op, args));
    return factored_.emplace(key, Factored{fac.e, fac.middle, fac.m}).first->second;
  }

  Object eval_x(const Term& t, const Objects& args) {
    if (t.is_var()) return arg(t, args);
    if (t.args.empty()) return amb_.unit();
    return amb_.x_op(t.op, map_terms(t, args, &Engine::eval_x));
  }
  Object eval_y(const Term& t, const Objects& args) {
    if (t.is_var()) return arg(t, args);
    if (t.args.empty()) return amb_.unit();
    return amb_.y_op(t.op, map_terms(t, args, &Engine::eval_y));
  }
  Object eval_z(const Term& t, const Objects& args) {
    if (t.is_var()) return arg(t, args);
    return factor_at(t.op, map_terms(t, args, &Engine::eval_z)).z;
  }

  /// Z(f)(h₁, …, hₙ): the filler of e(f) at the domains against m(f) at the codomains.
  Morphism z_map(const std::string& op, const std::vector<Morphism>& hs) {
    Objects dom, cod;
    for (const auto& h : hs) {
      dom.push_back(amb_.dom(h));
      cod.push_back(amb_.cod(h));
    }
    const Factored& a = factor_at(op, dom);
    const Factored& b = factor_at(op, cod);
    if (hs.empty()) return amb_.identity(a.z);
    Morphism top = amb_.compose(b.e, amb_.x_map(op, dom, cod, hs));
    Morphism bottom = amb_.compose(amb_.y_map(op, dom, cod, hs), a.m);
    return amb_.lift(a.e, b.m, top, bottom);
  }

  /// Z(t) on a tuple of morphisms.
  Morphism eval_z_map(const Term& t, const std::vector<Morphism>& hs) {
    if (t.is_var()) return hs.at(t.var);
    std::vector<Morphism> parts;
    for (const auto& c : t.args) parts.push_back(eval_z_map(c, hs));
    if (t.args.empty()) {
      return amb_.identity(eval_z(t, {}));
    }
    return z_map(t.op, parts);
  }

  /// e(t): X(t) → Z(t), extended along the term.
  Morphism e_ext(const Term& t, const Objects& args) {
    if (t.is_var()) return amb_.identity(arg(t, args));
    Objects zs = map_terms(t, args, &Engine::eval_z);
    const Factored& f = factor_at(t.op, zs);
    if (t.args.empty()) return f.e;
    Objects xs = map_terms(t, args, &Engine::eval_x);
    std::vector<Morphism> parts;
    for (const auto& c : t.args) parts.push_back(e_ext(c, args));
    return amb_.compose(f.e, amb_.x_map(t.op, xs, zs, parts));
  }

  /// m(t): Z(t) → Y(t).
  Morphism m_ext(const Term& t, const Objects& args) {
    if (t.is_var()) return amb_.identity(arg(t, args));
    Objects zs = map_terms(t, args, &Engine::eval_z);
    const Factored& f = factor_at(t.op, zs);
    if (t.args.empty()) return f.m;
    Objects ys = map_terms(t, args, &Engine::eval_y);
    std::vector<Morphism> parts;
    for (const auto& c : t.args) parts.push_back(m_ext(c, args));
    return amb_.compose(amb_.y_map(t.op, zs, ys, parts), f.m);
  }

  /// k(t): X(t) → Y(t).
  Morphism k_ext(const Term& t, const Objects& args) {
    if (t.is_var()) return amb_.identity(arg(t, args));
    Objects xs = map_terms(t, args, &Engine::eval_x);
    if (t.args.empty()) return amb_.k_op(t.op, xs);
    Objects ys = map_terms(t, args, &Engine::eval_y);
    std::vector<Morphism> parts;
    for (const auto& c : t.args) parts.push_back(k_ext(c, args));
    return amb_.compose(amb_.y_map(t.op, xs, ys, parts), amb_.k_op(t.op, xs));
  }

  Morphism x_cell(const CellGenerator& g, const Objects& args) {
    return amb_.x_cell(g, args, eval_x(g.src, args), eval_x(g.tgt, args));
  }
  Morphism y_cell(const CellGenerator& g, const Objects& args) {
    return amb_.y_cell(g, args, eval_y(g.src, args), eval_y(g.tgt, args));
  }

  /// Z(θ) at the tuple: the unique filler of the square with left leg e(s),
  /// right leg m(t), top e(t)∘X(θ) and bottom Y(θ)∘m(s). Throws
  /// HypothesisViolation if e(s) is not in E or m(t) not in M.
  Morphism lift_theory_cell(const CellGenerator& g, const Objects& args) {
    check_args(g, args);
    auto key = std::make_pair(g.name, args);
    auto it = lifted_.find(key);
    if (it != lifted_.end()) return it->second;
    Morphism es = e_ext(g.src, args);
    Morphism mt = m_ext(g.tgt, args);
    if (!amb_.is_e(es)) throw Error(ErrorKind::HypothesisViolation, "e(" + to_string(g.src) + ") is not in E");
    if (!amb_.is_m(mt)) throw Error(ErrorKind::HypothesisViolation, "m(" + to_string(g.tgt) + ") is not in M");
    Morphism top = amb_.compose(e_ext(g.tgt, args), x_cell(g, args));
    Morphism bottom = amb_.compose(y_cell(g, args), m_ext(g.src, args));
    Morphism d = amb_.lift(es, mt, top, bottom);
    if (!amb_.equal(amb_.compose(d, es), top) || !amb_.equal(amb_.compose(mt, d), bottom)) {
      throw Error(ErrorKind::NonCommuting, "filler for " + g.name + " fails a triangle");
    }
    return lifted_.emplace(key, d).first->second;
  }

  /// The component of expr at the tuple, a morphism Z(source) → Z(target).
  Morphism evaluate(const CellExpr& c, const Objects& args) {
    switch (c.kind) {
      case CellExpr::Kind::Id:
        return amb_.identity(eval_z(c.term, args));
      case CellExpr::Kind::Vert:
        return amb_.compose(evaluate(c.children.at(1), args), evaluate(c.children.at(0), args));
      case CellExpr::Kind::Op: {
        std::vector<Morphism> parts;
        for (const auto& ch : c.children) parts.push_back(evaluate(ch, args));
        if (parts.empty()) return amb_.identity(factor_at(c.name, {}).z);
        return z_map(c.name, parts);
      }
      case CellExpr::Kind::Gen: {
        Objects at;
        for (const auto& t : c.at) at.push_back(eval_z(t, args));
        Morphism d = lift_theory_cell(generator(c.name), at);
        return c.inverse ? amb_.inverse(d) : d;
      }
    }
    throw Error(ErrorKind::MalformedSpec, "unknown cell expression");
  }

  /// Both sides of each axiom at every probe tuple, compared exactly.
  CoherenceReport check(const std::vector<AxiomSides>& axioms, const std::vector<Objects>& probes,
                        const std::string& name) {
    CoherenceReport rep;
    rep.axiom = name;
    for (const auto& tuple : probes) rep.probes.push_back(describe(tuple));
    for (const auto& ax : axioms) {
      for (const auto& tuple : probes) {
        if (static_cast<int>(tuple.size()) != ax.arity) continue;
        ++rep.checked;
        try {
          Morphism l = evaluate(ax.lhs, tuple);
          Morphism r = evaluate(ax.rhs, tuple);
          if (!amb_.equal(l, r)) {
            rep.failures.push_back(ax.axiom + " at " + describe(tuple) + ": " + amb_.first_difference(l, r));
          }
        } catch (const Error& err) {
          rep.failures.push_back(ax.axiom + " at " + describe(tuple) + ": " + err.what());
        }
      }
    }
    return rep;
  }

  /// Z(θ) is natural: Z(t)(h)∘Z(θ)_A = Z(θ)_B∘Z(s)(h) for each probe tuple of morphisms.
  CoherenceReport check_naturality(const CellGenerator& g, const std::vector<std::vector<Morphism>>& probes) {
    CoherenceReport rep;
    rep.axiom = "naturality of " + g.name;
    for (const auto& hs : probes) {
      Objects dom, cod;
      for (const auto& h : hs) {
        dom.push_back(amb_.dom(h));
        cod.push_back(amb_.cod(h));
      }
      std::string where = describe(dom) + " -> " + describe(cod);
      rep.probes.push_back(where);
      ++rep.checked;
      try {
        Morphism l = amb_.compose(eval_z_map(g.tgt, hs), lift_theory_cell(g, dom));
        Morphism r = amb_.compose(lift_theory_cell(g, cod), eval_z_map(g.src, hs));
        if (!amb_.equal(l, r)) rep.failures.push_back(where + ": " + amb_.first_difference(l, r));
      } catch (const Error& err) {
        rep.failures.push_back(where + ": " + err.what());
      }
    }
    return rep;
  }

  /// Naturality of e(f) and m(f) on probe morphisms.
  CoherenceReport check_factor_naturality(const std::string& op, const std::vector<std::vector<Morphism>>& probes) {
    CoherenceReport rep;
    rep.axiom = "naturality of e(" + op + ") and m(" + op + ")";
    for (const auto& hs : probes) {
      Objects dom, cod;
      for (const auto& h : hs) {
        dom.push_back(amb_.dom(h));
        cod.push_back(amb_.cod(h));
      }
      std::string where = describe(dom) + " -> " + describe(cod);
      rep.probes.push_back(where);
      ++rep.checked;
      try {
        Morphism z = z_map(op, hs);
        const Factored& a = factor_at(op, dom);
        const Factored& b = factor_at(op, cod);
        if (!amb_.equal(amb_.compose(z, a.e), amb_.compose(b.e, amb_.x_map(op, dom, cod, hs)))) {
          rep.failures.push_back(where + ": e not natural");
        }
        if (!amb_.equal(amb_.compose(b.m, z), amb_.compose(amb_.y_map(op, dom, cod, hs), a.m))) {
          rep.failures.push_back(where + ": m not natural");
        }
      } catch (const Error& err) {
        rep.failures.push_back(where + ": " + err.what());
      }
    }
    return rep;
  }

  std::string describe(const Objects& tuple) const {
    std::string s = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) s += (i ? "," : "") + amb_.describe(tuple[i]);
    return s + ")";
  }

 private:
  static const CellGenerator& generator(const std::string& name) { return monoidal_generator(name); }

  static void check_args(const CellGenerator& g, const Objects& args) {
    if (static_cast<int>(args.size()) != g.arity) {
      throw Error(ErrorKind::ArityMismatch, g.name + " takes " + std::to_string(g.arity) + " arguments");
    }
  }

  static const Object& arg(const Term& t, const Objects& args) {
    if (t.var < 0 || t.var >= static_cast<int>(args.size())) {
      throw Error(ErrorKind::ArityMismatch, "variable x" + std::to_string(t.var + 1) + " out of range");
    }
    return args[t.var];
  }

  Objects map_terms(const Term& t, const Objects& args, Object (Engine::*f)(const Term&, const Objects&)) {
    Objects out;
    for (const auto& c : t.args) out.push_back((this->*f)(c, args));
    return out;
  }

  Amb& amb_;
  std::map<std::pair<std::string, Objects>, Factored> factored_;
  std::map<std::pair<std::string, Objects>, Morphism> lifted_;
};

// ------------------------------------------------------ oplax monoidal maps

/// A tensor with its structure cells, all given pointwise.
template <class Amb>
struct MonoidalView {
  using Object = typename Amb::Object;
  using Morphism = typename Amb::Morphism;
  std::string name;
  Object unit;
  std::function<Object(const Object&, const Object&)> tensor;
  std::function<Morphism(const Morphism&, const Morphism&)> tensor_map;
  std::function<Morphism(const Object&, const Object&, const Object&)> assoc;  // (xy)z → x(yz)
  std::function<Morphism(const Object&)> lunit;                               // I x → x
  std::function<Morphism(const Object&)> runit;                               // x I → x
  std::function<Morphism(const Object&, const Object&)> sym;                  // xy → yx
};

/// Views of X, Y and the derived Z of an engine.
template <class Amb>
MonoidalView<Amb> view_x(Engine<Amb>& eng);
template <class Amb>
MonoidalView<Amb> view_y(Engine<Amb>& eng);
template <class Amb>
MonoidalView<Amb> view_z(Engine<Amb>& eng);

namespace detail {

template <class Amb>
MonoidalView<Amb> view_with(Engine<Amb>& eng, std::string name, typename Amb::Object unit,
                            std::function<typename Amb::Object(const Term&, const std::vector<typename Amb::Object>&)> ev,
                            std::function<typename Amb::Morphism(const CellGenerator&,
                                                                 const std::vector<typename Amb::Object>&)>
                                cell) {
  using Object = typename Amb::Object;
  MonoidalView<Amb> v;
  v.name = std::move(name);
  v.unit = unit;
  Term m = Term::apply("m", {Term::v(0), Term::v(1)});
  v.tensor = [ev, m](const Object& x, const Object& y) { return ev(m, {x, y}); };
  v.assoc = [cell](const Object& x, const Object& y, const Object& z) {
    return cell(monoidal_generator("a"), {x, y, z});
  };
  v.lunit = [cell](const Object& x) { return cell(monoidal_generator("l"), {x}); };
  v.runit = [cell](const Object& x) { return cell(monoidal_generator("r"), {x}); };
  v.sym = [cell](const Object& x, const Object& y) { return cell(monoidal_generator("b"), {x, y}); };
  (void)eng;
  return v;
}

}  // namespace detail

template <class Amb>
MonoidalView<Amb> view_x(Engine<Amb>& eng) {
  using Object = typename Amb::Object;
  using Morphism = typename Amb::Morphism;
  auto v = detail::view_with<Amb>(
      eng, "X", eng.ambient().unit(), [&eng](const Term& t, const std::vector<Object>& a) { return eng.eval_x(t, a); },
      [&eng](const CellGenerator& g, const std::vector<Object>& a) { return eng.x_cell(g, a); });
  v.tensor_map = [&eng](const Morphism& f, const Morphism& g) {
    Amb& amb = eng.ambient();
    return amb.x_map("m", {amb.dom(f), amb.dom(g)}, {amb.cod(f), amb.cod(g)}, {f, g});
  };
  return v;
}

template <class Amb>
MonoidalView<Amb> view_y(Engine<Amb>& eng) {
  using Object = typename Amb::Object;
  using Morphism = typename Amb::Morphism;
  auto v = detail::view_with<Amb>(
      eng, "Y", eng.ambient().unit(), [&eng](const Term& t, const std::vector<Object>& a) { return eng.eval_y(t, a); },
      [&eng](const CellGenerator& g, const std::vector<Object>& a) { return eng.y_cell(g, a); });
  v.tensor_map = [&eng](const Morphism& f, const Morphism& g) {
    Amb& amb = eng.ambient();
    return amb.y_map("m", {amb.dom(f), amb.dom(g)}, {amb.cod(f), amb.cod(g)}, {f, g});
  };
  return v;
}

template <class Amb>
MonoidalView<Amb> view_z(Engine<Amb>& eng) {
  using Object = typename Amb::Object;
  using Morphism = typename Amb::Morphism;
  auto v = detail::view_with<Amb>(
      eng, "Z", eng.factor_at("e", {}).z,
      [&eng](const Term& t, const std::vector<Object>& a) { return eng.eval_z(t, a); },
      [&eng](const CellGenerator& g, const std::vector<Object>& a) { return eng.lift_theory_cell(g, a); });
  v.tensor_map = [&eng](const Morphism& f, const Morphism& g) { return eng.z_map("m", {f, g}); };
  return v;
}

/// An identity-on-objects functor F: V1 → V2 with φ_{x,y}: x ⊗₁ y → x ⊗₂ y
/// and φ₀: I₁ → I₂, checked against the unit, associativity and symmetry
/// axioms of an oplax symmetric monoidal functor at every probe.
template <class Amb>
CoherenceReport check_oplax_monoidal(Engine<Amb>& eng, const MonoidalView<Amb>& v1, const MonoidalView<Amb>& v2,
                                     const std::function<typename Amb::Morphism(const typename Amb::Object&,
                                                                                const typename Amb::Object&)>& phi,
                                     const typename Amb::Morphism& phi0,
                                     const std::vector<typename Amb::Object>& probes) {
  Amb& amb = eng.ambient();
  CoherenceReport rep;
  rep.axiom = "oplax monoidal " + v1.name + " -> " + v2.name;
  for (const auto& x : probes) rep.probes.push_back(amb.describe(x));
  auto record = [&](const std::string& what, const auto& l, const auto& r) {
    ++rep.checked;
    if (!amb.equal(l, r)) rep.failures.push_back(what + ": " + amb.first_difference(l, r));
  };
  auto guarded = [&](const std::string& what, const auto& body) {
    try {
      body();
    } catch (const Error& err) {
      ++rep.checked;
      rep.failures.push_back(what + ": " + err.what());
    }
  };
  for (const auto& x : probes) {
    std::string at = "(" + amb.describe(x) + ")";
    guarded("left unit " + at, [&] {
      auto lhs = amb.compose(v2.lunit(x),
                             amb.compose(v2.tensor_map(phi0, amb.identity(x)), phi(v1.unit, x)));
      record("left unit " + at, lhs, v1.lunit(x));
    });
    guarded("right unit " + at, [&] {
      auto lhs = amb.compose(v2.runit(x),
                             amb.compose(v2.tensor_map(amb.identity(x), phi0), phi(x, v1.unit)));
      record("right unit " + at, lhs, v1.runit(x));
    });
  }
  for (const auto& x : probes) {
    for (const auto& y : probes) {
      std::string at = "(" + amb.describe(x) + "," + amb.describe(y) + ")";
      guarded("symmetry " + at, [&] {
        record("symmetry " + at, amb.compose(v2.sym(x, y), phi(x, y)), amb.compose(phi(y, x), v1.sym(x, y)));
      });
      for (const auto& z : probes) {
        std::string at3 = "(" + amb.describe(x) + "," + amb.describe(y) + "," + amb.describe(z) + ")";
        guarded("associativity " + at3, [&] {
          auto lhs = amb.compose(v2.assoc(x, y, z),
                                 amb.compose(v2.tensor_map(phi(x, y), amb.identity(z)), phi(v1.tensor(x, y), z)));
          auto rhs = amb.compose(amb.compose(v2.tensor_map(amb.identity(x), phi(y, z)), phi(x, v1.tensor(y, z))),
                                 v1.assoc(x, y, z));
          record("associativity " + at3, lhs, rhs);
        });
      }
    }
  }
  return rep;
}

/// X(m) carries pairs of E-maps to E-maps and Y(m) pairs of M-maps to
/// M-maps, checked on every pair of probes. Failures name the pair.
template <class Amb>
CoherenceReport check_hypotheses(Engine<Amb>& eng, const std::vector<typename Amb::Morphism>& e_maps,
                                 const std::vector<typename Amb::Morphism>& m_maps) {
  Amb& amb = eng.ambient();
  CoherenceReport rep;
  rep.axiom = "X(m) preserves E, Y(m) preserves M";
  auto where = [&](const auto& f, const auto& g) {
    return amb.describe(amb.dom(f)) + "->" + amb.describe(amb.cod(f)) + ", " + amb.describe(amb.dom(g)) + "->" +
           amb.describe(amb.cod(g));
  };
  for (const auto& f : e_maps) {
    if (!amb.is_e(f)) throw Error(ErrorKind::HypothesisViolation, "probe is not in E");
    for (const auto& g : e_maps) {
      rep.probes.push_back("E " + where(f, g));
      ++rep.checked;
      auto h = amb.x_map("m", {amb.dom(f), amb.dom(g)}, {amb.cod(f), amb.cod(g)}, {f, g});
      if (!amb.is_e(h)) rep.failures.push_back("X(m) of E-maps " + where(f, g) + " is not in E");
    }
  }
  for (const auto& f : m_maps) {
    if (!amb.is_m(f)) throw Error(ErrorKind::HypothesisViolation, "probe is not in M");
    for (const auto& g : m_maps) {
      rep.probes.push_back("M " + where(f, g));
      ++rep.checked;
      auto h = amb.y_map("m", {amb.dom(f), amb.dom(g)}, {amb.cod(f), amb.cod(g)}, {f, g});
      if (!amb.is_m(h)) rep.failures.push_back("Y(m) of M-maps " + where(f, g) + " is not in M");
    }
  }
  return rep;
}

/// Throws HypothesisViolation with the first failure of check_hypotheses.
template <class Amb>
void require_hypotheses(Engine<Amb>& eng, const std::vector<typename Amb::Morphism>& e_maps,
                        const std::vector<typename Amb::Morphism>& m_maps) {
  auto rep = check_hypotheses(eng, e_maps, m_maps);
  if (!rep.ok()) throw Error(ErrorKind::HypothesisViolation, rep.failures.front());
}

/// The three structure maps of the factorisation as oplax monoidal functors:
/// "k" (X → Y), "e" (X → Z) and "m" (Z → Y).
template <class Amb>
CoherenceReport check_structure_map(Engine<Amb>& eng, std::string_view which,
                                    const std::vector<typename Amb::Object>& probes) {
  using Object = typename Amb::Object;
  Amb& amb = eng.ambient();
  if (which == "k") {
    return check_oplax_monoidal<Amb>(
        eng, view_x(eng), view_y(eng), [&amb](const Object& x, const Object& y) { return amb.k_op("m", {x, y}); },
        amb.k_op("e", {}), probes);
  }
  if (which == "e") {
    return check_oplax_monoidal<Amb>(
        eng, view_x(eng), view_z(eng), [&eng](const Object& x, const Object& y) { return eng.factor_at("m", {x, y}).e; },
        eng.factor_at("e", {}).e, probes);
  }
  if (which == "m") {
    return check_oplax_monoidal<Amb>(
        eng, view_z(eng), view_y(eng), [&eng](const Object& x, const Object& y) { return eng.factor_at("m", {x, y}).m; },
        eng.factor_at("e", {}).m, probes);
  }
  throw Error(ErrorKind::MalformedSpec, "structure map must be k, e or m");
}

}  // namespace grayfac
