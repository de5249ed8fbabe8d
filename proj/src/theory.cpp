#include "grayfac/theory.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace grayfac {

int Signature::arity(std::string_view op) const {
  for (const auto& [n, names] : ops) {
    if (std::find(names.begin(), names.end(), op) != names.end()) return n;
  }
  return -1;
}

Signature Signature::pointed_magma() {
  Signature s;
  s.ops[0] = {"e"};
  s.ops[2] = {"m"};
  return s;
}

Term substitute(const Term& t, const std::vector<Term>& args) {
  if (t.is_var()) {
    if (t.var < 0 || t.var >= static_cast<int>(args.size())) {
      throw Error(ErrorKind::ArityMismatch, "x" + std::to_string(t.var + 1) + " substituted from " +
                                                std::to_string(args.size()) + " terms");
    }
    return args[t.var];
  }
  Term out = Term::apply(t.op);
  out.args.reserve(t.args.size());
  for (const auto& c : t.args) out.args.push_back(substitute(c, args));
  return out;
}

void check_term(const Term& t, const Signature& sig, int n) {
  if (t.is_var()) {
    if (t.var < 0 || t.var >= n) {
      throw Error(ErrorKind::ArityMismatch, "x" + std::to_string(t.var + 1) + " in a term of " + std::to_string(n) +
                                                " variables");
    }
    return;
  }
  if (sig.arity(t.op) != static_cast<int>(t.args.size())) {
    throw Error(ErrorKind::ArityMismatch, t.op + " applied to " + std::to_string(t.args.size()) + " terms");
  }
  for (const auto& c : t.args) check_term(c, sig, n);
}

namespace {

void collect(const Term& t, std::vector<int>& out, std::vector<int>& all) {
  if (t.is_var()) {
    all.push_back(t.var);
    if (std::find(out.begin(), out.end(), t.var) == out.end()) out.push_back(t.var);
    return;
  }
  for (const auto& c : t.args) collect(c, out, all);
}

class Parser {
 public:
  Parser(std::string_view s, const Signature& sig) : s_(s), sig_(sig) {}

  Term run() {
    Term t = term();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::MalformedSpec, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string ident() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(s_.substr(start, pos_ - start));
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Term term() {
    std::string name = ident();
    if (name.size() > 1 && name[0] == 'x' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int i = std::stoi(name.substr(1));
      if (i < 1) fail("variables start at x1");
      return Term::v(i - 1);
    }
    Term t = Term::apply(name);
    if (eat('(')) {
      if (!eat(')')) {
        do {
          t.args.push_back(term());
        } while (eat(','));
        if (!eat(')')) fail("expected ')'");
      }
    }
    int n = sig_.arity(name);
    if (n < 0) fail("unknown operation " + name);
    if (n != static_cast<int>(t.args.size())) {
      throw Error(ErrorKind::ArityMismatch, name + " takes " + std::to_string(n) + " arguments");
    }
    return t;
  }

  std::string_view s_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<int> variables(const Term& t) {
  std::vector<int> out, all;
  collect(t, out, all);
  return out;
}

bool is_linear(const Term& t) {
  std::vector<int> out, all;
  collect(t, out, all);
  return out.size() == all.size();
}

std::size_t depth(const Term& t) {
  std::size_t d = 0;
  for (const auto& c : t.args) d = std::max(d, depth(c));
  return t.is_var() ? 0 : d + 1;
}

std::string to_string(const Term& t) {
  if (t.is_var()) return "x" + std::to_string(t.var + 1);
  if (t.args.empty()) return t.op;
  std::string s = t.op + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) s += (i ? "," : "") + to_string(t.args[i]);
  return s + ")";
}

Term parse_term(std::string_view text, const Signature& sig) { return Parser(text, sig).run(); }

// ----------------------------------------------------------------- cells

const std::vector<CellGenerator>& monoidal_generators() {
  static const std::vector<CellGenerator> gens = [] {
    auto x = [](int i) { return Term::v(i); };
    auto m = [](Term a, Term b) { return Term::apply("m", {std::move(a), std::move(b)}); };
    Term e = Term::apply("e");
    return std::vector<CellGenerator>{
        {"a", 3, m(m(x(0), x(1)), x(2)), m(x(0), m(x(1), x(2)))},
        {"l", 1, m(e, x(0)), x(0)},
        {"r", 1, m(x(0), e), x(0)},
        {"b", 2, m(x(0), x(1)), m(x(1), x(0))},
    };
  }();
  return gens;
}

const CellGenerator& monoidal_generator(std::string_view name) {
  for (const auto& g : monoidal_generators()) {
    if (g.name == name) return g;
  }
  throw Error(ErrorKind::MalformedSpec, "unknown generator " + std::string(name));
}

CellExpr CellExpr::gen(std::string name, std::vector<Term> at, bool inverse) {
  const CellGenerator& g = monoidal_generator(name);
  if (static_cast<int>(at.size()) != g.arity) {
    throw Error(ErrorKind::ArityMismatch, name + " takes " + std::to_string(g.arity) + " arguments");
  }
  CellExpr c;
  c.kind = Kind::Gen;
  c.name = std::move(name);
  c.inverse = inverse;
  c.at = std::move(at);
  return c;
}

CellExpr CellExpr::id(Term t) {
  CellExpr c;
  c.kind = Kind::Id;
  c.term = std::move(t);
  return c;
}

CellExpr CellExpr::then(CellExpr first, CellExpr second) {
  if (first.target() != second.source()) {
    throw Error(ErrorKind::MalformedSpec, "cannot compose " + to_string(first.target()) + " with " +
                                              to_string(second.source()));
  }
  CellExpr c;
  c.kind = Kind::Vert;
  c.children = {std::move(first), std::move(second)};
  return c;
}

CellExpr CellExpr::op(std::string name, std::vector<CellExpr> children) {
  CellExpr c;
  c.kind = Kind::Op;
  c.name = std::move(name);
  c.children = std::move(children);
  return c;
}

Term CellExpr::source() const {
  switch (kind) {
    case Kind::Gen: {
      const CellGenerator& g = monoidal_generator(name);
      return substitute(inverse ? g.tgt : g.src, at);
    }
    case Kind::Id:
      return term;
    case Kind::Vert:
      return children.at(0).source();
    case Kind::Op: {
      Term t = Term::apply(name);
      for (const auto& c : children) t.args.push_back(c.source());
      return t;
    }
  }
  return term;
}

Term CellExpr::target() const {
  switch (kind) {
    case Kind::Gen: {
      const CellGenerator& g = monoidal_generator(name);
      return substitute(inverse ? g.src : g.tgt, at);
    }
    case Kind::Id:
      return term;
    case Kind::Vert:
      return children.at(1).target();
    case Kind::Op: {
      Term t = Term::apply(name);
      for (const auto& c : children) t.args.push_back(c.target());
      return t;
    }
  }
  return term;
}

std::string to_string(const CellExpr& c) {
  switch (c.kind) {
    case CellExpr::Kind::Gen: {
      std::string s = c.name + (c.inverse ? "^-1" : "") + "[";
      for (std::size_t i = 0; i < c.at.size(); ++i) s += (i ? "," : "") + to_string(c.at[i]);
      return s + "]";
    }
    case CellExpr::Kind::Id:
      return "1[" + to_string(c.term) + "]";
    case CellExpr::Kind::Vert:
      return "(" + to_string(c.children.at(1)) + " . " + to_string(c.children.at(0)) + ")";
    case CellExpr::Kind::Op: {
      std::string s = c.name + "(";
      for (std::size_t i = 0; i < c.children.size(); ++i) s += (i ? "," : "") + to_string(c.children[i]);
      return s + ")";
    }
  }
  return {};
}

// ---------------------------------------------------------------- axioms

namespace {

Term x(int i) { return Term::v(i); }
Term m(Term a, Term b) { return Term::apply("m", {std::move(a), std::move(b)}); }
CellExpr g(const std::string& name, std::vector<Term> at, bool inv = false) {
  return CellExpr::gen(name, std::move(at), inv);
}
CellExpr tensor(CellExpr a, CellExpr b) { return CellExpr::op("m", {std::move(a), std::move(b)}); }
CellExpr id(Term t) { return CellExpr::id(std::move(t)); }
CellExpr seq(std::vector<CellExpr> steps) {
  CellExpr c = steps.at(0);
  for (std::size_t i = 1; i < steps.size(); ++i) c = CellExpr::then(std::move(c), steps[i]);
  return c;
}

}  // namespace

AxiomSides pentagon_sides() {
  Term w = x(0), xx = x(1), y = x(2), z = x(3);
  // ((wx)y)z → w(x(yz))
  CellExpr lhs = seq({g("a", {m(w, xx), y, z}), g("a", {w, xx, m(y, z)})});
  CellExpr rhs = seq({tensor(g("a", {w, xx, y}), id(z)), g("a", {w, m(xx, y), z}), tensor(id(w), g("a", {xx, y, z}))});
  return {"pentagon", 4, lhs, rhs};
}

AxiomSides triangle_sides() {
  Term e = Term::apply("e");
  // (x I) y → x y
  CellExpr lhs = seq({g("a", {x(0), e, x(1)}), tensor(id(x(0)), g("l", {x(1)}))});
  CellExpr rhs = tensor(g("r", {x(0)}), id(x(1)));
  return {"triangle", 2, lhs, rhs};
}

AxiomSides symmetry_sides() {
  CellExpr lhs = seq({g("b", {x(0), x(1)}), g("b", {x(1), x(0)})});
  return {"symmetry", 2, lhs, id(m(x(0), x(1)))};
}

AxiomSides hexagon_sides() {
  Term a = x(0), b = x(1), c = x(2);
  // (ab)c → b(ca)
  CellExpr lhs = seq({g("a", {a, b, c}), g("b", {a, m(b, c)}), g("a", {b, c, a})});
  CellExpr rhs = seq({tensor(g("b", {a, b}), id(c)), g("a", {b, a, c}), tensor(id(b), g("b", {a, c}))});
  return {"hexagon", 3, lhs, rhs};
}

AxiomSides hexagon_inverse_sides() {
  Term a = x(0), b = x(1), c = x(2);
  // a(bc) → (ca)b
  CellExpr lhs = seq({g("a", {a, b, c}, true), g("b", {m(a, b), c}), g("a", {c, a, b}, true)});
  CellExpr rhs = seq({tensor(id(a), g("b", {b, c})), g("a", {a, c, b}, true), tensor(g("b", {a, c}), id(b))});
  return {"hexagon (inverse associator)", 3, lhs, rhs};
}

std::vector<AxiomSides> axiom_sides(std::string_view axiom) {
  if (axiom == "pentagon") return {pentagon_sides()};
  if (axiom == "triangle") return {triangle_sides()};
  if (axiom == "symmetry") return {symmetry_sides()};
  if (axiom == "hexagon") return {hexagon_sides(), hexagon_inverse_sides()};
  throw Error(ErrorKind::MalformedSpec, "unknown axiom " + std::string(axiom));
}

}  // namespace grayfac
