#include "grayfac/models.hpp"

#include <array>
#include <set>
#include <span>

#include "grayfac/ofs.hpp"
#include "grayfac/search.hpp"

namespace grayfac {

namespace {

// Shape of X(t) or Y(t) at a tuple, one node per subterm.
struct FlatNode {
  enum class Kind { Leaf, Unit, Funny, Product };
  Kind kind = Kind::Leaf;
  int var = -1;
  const FinCategory* cat = nullptr;  // underlying category of the node's object
  std::array<int, 3> counts{};       // cells per dimension
  const FunnyUnderlying* funny = nullptr;
  std::vector<FlatNode> kids;
  std::set<int> vars;
};

using Tuple = std::vector<int>;
using Letters = std::vector<std::pair<int, CellId>>;

FlatNode leaf_node(int var, const FinCategory* cat, int twos) {
  FlatNode n;
  n.kind = FlatNode::Kind::Leaf;
  n.var = var;
  n.cat = cat;
  n.counts = {cat->num_objects(), cat->num_arrows(), twos};
  n.vars = {var};
  return n;
}

FlatNode unit_node(const FinCategory* cat) {
  FlatNode n;
  n.kind = FlatNode::Kind::Unit;
  n.cat = cat;
  n.counts = {1, 1, 1};
  return n;
}

FlatNode binary_node(FlatNode::Kind kind, const FinCategory* cat, int twos, FlatNode l, FlatNode r) {
  FlatNode n;
  n.kind = kind;
  n.cat = cat;
  n.counts = {cat->num_objects(), cat->num_arrows(), twos};
  n.vars = l.vars;
  n.vars.insert(r.vars.begin(), r.vars.end());
  n.kids.push_back(std::move(l));
  n.kids.push_back(std::move(r));
  return n;
}

void flat_object(const FlatNode& n, int id, Tuple& t) {
  switch (n.kind) {
    case FlatNode::Kind::Leaf:
      t.at(n.var) = id;
      return;
    case FlatNode::Kind::Unit:
      return;
    default: {
      int right = n.kids[1].counts[0];
      flat_object(n.kids[0], pair_part(id, right, 0), t);
      flat_object(n.kids[1], pair_part(id, right, 1), t);
    }
  }
}

int build_object(const FlatNode& n, const Tuple& t) {
  switch (n.kind) {
    case FlatNode::Kind::Leaf:
      return t.at(n.var);
    case FlatNode::Kind::Unit:
      return 0;
    default:
      return pair_id(build_object(n.kids[0], t), build_object(n.kids[1], t), n.kids[1].counts[0]);
  }
}

void flat_arrow(const FlatNode& n, CellId id, Letters& out) {
  switch (n.kind) {
    case FlatNode::Kind::Leaf:
      if (!n.cat->is_identity(id)) out.emplace_back(n.var, id);
      return;
    case FlatNode::Kind::Unit:
      return;
    case FlatNode::Kind::Funny:
      for (const Letter& l : n.funny->words.at(id).letters) flat_arrow(n.kids[l.coord], l.cell, out);
      return;
    case FlatNode::Kind::Product:
      throw Error(ErrorKind::UnsupportedInput, "letter flattening through a product");
  }
}

CellId build_arrow(const FlatNode& n, Tuple& cur, std::span<const std::pair<int, CellId>> letters) {
  switch (n.kind) {
    case FlatNode::Kind::Leaf: {
      CellId f = n.cat->identity(cur.at(n.var));
      for (const auto& [var, cell] : letters) {
        CellId g = n.cat->compose(cell, f);
        if (var != n.var || g == kNone) throw Error(ErrorKind::MalformedSpec, "letters do not compose");
        f = g;
        cur[var] = n.cat->tgt(cell);
      }
      return f;
    }
    case FlatNode::Kind::Unit:
      if (!letters.empty()) throw Error(ErrorKind::MalformedSpec, "letters at a unit");
      return n.cat->identity(0);
    case FlatNode::Kind::Funny: {
      ObjId x = build_object(n.kids[0], cur);
      ObjId y = build_object(n.kids[1], cur);
      std::vector<Letter> raw;
      std::size_t i = 0;
      while (i < letters.size()) {
        int side = n.kids[0].vars.count(letters[i].first) ? 0 : 1;
        if (!n.kids[side].vars.count(letters[i].first)) {
          throw Error(ErrorKind::MalformedSpec, "variable missing from target shape");
        }
        std::size_t j = i;
        while (j < letters.size() && n.kids[side].vars.count(letters[j].first)) ++j;
        raw.push_back(Letter{side, build_arrow(n.kids[side], cur, letters.subspan(i, j - i))});
        i = j;
      }
      Word w = word_reduce(*n.funny->a, *n.funny->b, x, y, raw);
      CellId id = n.funny->find(w);
      if (id == kNone) throw Error(ErrorKind::MalformedSpec, "relabelled word is not a 1-cell");
      return id;
    }
    case FlatNode::Kind::Product:
      throw Error(ErrorKind::UnsupportedInput, "letter flattening through a product");
  }
  return kNone;
}

void flat_cell(const FlatNode& n, int d, int id, Tuple& t) {
  switch (n.kind) {
    case FlatNode::Kind::Leaf:
      t.at(n.var) = id;
      return;
    case FlatNode::Kind::Unit:
      return;
    default: {
      int right = n.kids[1].counts[d];
      flat_cell(n.kids[0], d, pair_part(id, right, 0), t);
      flat_cell(n.kids[1], d, pair_part(id, right, 1), t);
    }
  }
}

int build_cell(const FlatNode& n, int d, const Tuple& t) {
  switch (n.kind) {
    case FlatNode::Kind::Leaf:
      return t.at(n.var);
    case FlatNode::Kind::Unit:
      return 0;
    default:
      return pair_id(build_cell(n.kids[0], d, t), build_cell(n.kids[1], d, t), n.kids[1].counts[d]);
  }
}

struct Relabel {
  std::vector<int> obj;
  std::vector<int> arr;
  std::vector<int> cell2;
};

Relabel relabel_x(const FlatNode& s, const FlatNode& t, int nvars) {
  Relabel r;
  for (ObjId x = 0; x < s.cat->num_objects(); ++x) {
    Tuple tup(nvars, kNone);
    flat_object(s, x, tup);
    r.obj.push_back(build_object(t, tup));
  }
  for (CellId f = 0; f < s.cat->num_arrows(); ++f) {
    Tuple tup(nvars, kNone);
    flat_object(s, s.cat->src(f), tup);
    Letters letters;
    flat_arrow(s, f, letters);
    r.arr.push_back(build_arrow(t, tup, letters));
  }
  return r;
}

Relabel relabel_y(const FlatNode& s, const FlatNode& t, int nvars, int dims) {
  Relabel r;
  std::vector<int>* out[3] = {&r.obj, &r.arr, &r.cell2};
  for (int d = 0; d < dims; ++d) {
    for (int id = 0; id < s.counts[d]; ++id) {
      Tuple tup(nvars, kNone);
      flat_cell(s, d, id, tup);
      out[d]->push_back(build_cell(t, d, tup));
    }
  }
  return r;
}

template <class Map>
std::string first_mismatch(const char* what, const std::vector<int>& a, const std::vector<int>& b, Map name) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return std::string(what) + " " + name(static_cast<int>(i)) + " differs";
  }
  if (a.size() != b.size()) return std::string(what) + " tables differ in size";
  return {};
}

bool bijective(const std::vector<int>& m, int n) {
  if (static_cast<int>(m.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int x : m) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::vector<int> invert(const std::vector<int>& m) {
  std::vector<int> inv(m.size(), kNone);
  for (std::size_t i = 0; i < m.size(); ++i) inv[m[i]] = static_cast<int>(i);
  return inv;
}

void require_op(const std::string& op, std::size_t n) {
  if (!((op == "m" && n == 2) || (op == "e" && n == 0))) {
    throw Error(ErrorKind::ArityMismatch, "operation " + op + " with " + std::to_string(n) + " arguments");
  }
}

}  // namespace

// ------------------------------------------------------------ MainAmbient

MainAmbient::MainAmbient(Limits limits) : limits_(limits), unit_(standard_cell(0)) {}

const MainAmbient::FunnyEntry& MainAmbient::funny_entry(const Object& a, const Object& b) {
  auto key = std::make_pair(a.get(), b.get());
  auto it = funny_.find(key);
  if (it != funny_.end()) return *it->second;
  auto e = std::make_unique<FunnyEntry>();
  e->u = funny_underlying(a, b, limits_);
  e->skeleton = funny_skeleton(e->u);
  e->left = a;
  e->right = b;
  funny_by_object_[e->skeleton.get()] = e.get();
  return *funny_.emplace(key, std::move(e)).first->second;
}

const MainAmbient::ProductEntry& MainAmbient::product_entry(const Object& a, const Object& b) {
  auto key = std::make_pair(a.get(), b.get());
  auto it = product_.find(key);
  if (it != product_.end()) return *it->second;
  auto e = std::make_unique<ProductEntry>(ProductEntry{product(a, b, limits_), a, b});
  product_by_object_[e->prod.get()] = e.get();
  return *product_.emplace(key, std::move(e)).first->second;
}

const FunnyUnderlying& MainAmbient::funny_of(const Object& x) const {
  auto it = funny_by_object_.find(x.get());
  if (it == funny_by_object_.end()) throw Error(ErrorKind::MalformedSpec, x->name() + " is not a funny tensor");
  return it->second->u;
}

MainAmbient::Object MainAmbient::x_op(const std::string& op, const std::vector<Object>& objs) {
  require_op(op, objs.size());
  if (op == "e") return unit_;
  return funny_entry(objs[0], objs[1]).skeleton;
}

MainAmbient::Object MainAmbient::y_op(const std::string& op, const std::vector<Object>& objs) {
  require_op(op, objs.size());
  if (op == "e") return unit_;
  return product_entry(objs[0], objs[1]).prod;
}

MainAmbient::Morphism MainAmbient::x_map(const std::string& op, const std::vector<Object>& dom,
                                         const std::vector<Object>& cod, const std::vector<Morphism>& maps) {
  require_op(op, maps.size());
  if (op == "e") return identity(unit_);
  const FunnyEntry& s = funny_entry(dom[0], dom[1]);
  const FunnyEntry& t = funny_entry(cod[0], cod[1]);
  Functor f = funny_map(s.u, t.u, maps[0], maps[1]);
  return TwoFunctor{s.skeleton, t.skeleton, f.obj, f.arr, f.arr};
}

MainAmbient::Morphism MainAmbient::y_map(const std::string& op, const std::vector<Object>& dom,
                                         const std::vector<Object>& cod, const std::vector<Morphism>& maps) {
  require_op(op, maps.size());
  if (op == "e") return identity(unit_);
  return product_map(maps[0], maps[1], product_entry(dom[0], dom[1]).prod, product_entry(cod[0], cod[1]).prod);
}

MainAmbient::Morphism MainAmbient::k_op(const std::string& op, const std::vector<Object>& objs) {
  require_op(op, objs.size());
  if (op == "e") return identity(unit_);
  const FunnyEntry& f = funny_entry(objs[0], objs[1]);
  return comparison_K_skeleton(f.u, f.skeleton, product_entry(objs[0], objs[1]).prod);
}

MainAmbient::Factored MainAmbient::factor(const Morphism& f) const {
  Factorization fac = factor_2functor(f);
  return {fac.e, fac.middle, fac.m};
}

MainAmbient::Morphism MainAmbient::lift(const Morphism& e, const Morphism& m, const Morphism& top,
                                        const Morphism& bottom) const {
  return solve_lifting(e, m, top, bottom);
}

MainAmbient::Morphism MainAmbient::compose(const Morphism& g, const Morphism& f) const {
  if (f.cod.get() != g.dom.get()) {
    throw Error(ErrorKind::MalformedSpec, "composing through " + f.cod->name() + " and " + g.dom->name());
  }
  return grayfac::compose(g, f);
}

MainAmbient::Morphism MainAmbient::inverse(const Morphism& f) const { return grayfac::inverse(f); }
bool MainAmbient::is_iso(const Morphism& f) const { return is_isomorphism(f); }
bool MainAmbient::is_e(const Morphism& f) const { return is_boba(f); }
bool MainAmbient::is_m(const Morphism& f) const { return is_lff(f); }

bool MainAmbient::equal(const Morphism& f, const Morphism& g) const {
  return f.dom.get() == g.dom.get() && f.cod.get() == g.cod.get() && f == g;
}

std::string MainAmbient::first_difference(const Morphism& f, const Morphism& g) const {
  if (f.dom.get() != g.dom.get() || f.cod.get() != g.cod.get()) return "boundaries differ";
  const Fin2Category& a = *f.dom;
  std::string s = first_mismatch("object", f.obj, g.obj, [&](int i) { return a.object_name(i); });
  if (s.empty()) s = first_mismatch("1-cell", f.c1, g.c1, [&](int i) { return a.cell1(i).name; });
  if (s.empty()) s = first_mismatch("2-cell", f.c2, g.c2, [&](int i) { return a.cell2(i).name; });
  return s.empty() ? "equal" : s;
}

namespace {

FlatNode main_x_tree(const Term& t, const Fin2CategoryPtr& obj, const std::vector<Fin2CategoryPtr>& leaves,
                     const MainAmbient& amb) {
  if (t.is_var()) {
    if (leaves.at(t.var).get() != obj.get()) throw Error(ErrorKind::MalformedSpec, "leaf object mismatch");
    return leaf_node(t.var, &obj->underlying(), obj->num_2cells());
  }
  if (t.args.empty()) return unit_node(&obj->underlying());
  const FunnyUnderlying& u = amb.funny_of(obj);
  FlatNode n = binary_node(FlatNode::Kind::Funny, &obj->underlying(), obj->num_2cells(),
                           main_x_tree(t.args[0], u.a, leaves, amb), main_x_tree(t.args[1], u.b, leaves, amb));
  n.funny = &u;
  return n;
}

}  // namespace

MainAmbient::Morphism MainAmbient::x_cell(const CellGenerator& g, const std::vector<Object>& leaves, const Object& xs,
                                          const Object& xt) {
  FlatNode s = main_x_tree(g.src, xs, leaves, *this);
  FlatNode t = main_x_tree(g.tgt, xt, leaves, *this);
  Relabel r = relabel_x(s, t, static_cast<int>(leaves.size()));
  TwoFunctor out{xs, xt, r.obj, r.arr, {}};
  for (CellId c = 0; c < xs->num_2cells(); ++c) {
    if (!xs->is_identity2(c)) throw Error(ErrorKind::UnsupportedInput, "X of a generator on a non-identity 2-cell");
    out.c2.push_back(xt->id2(out.c1[xs->cell2(c).src]));
  }
  return out;
}

MainAmbient::Morphism MainAmbient::y_cell(const CellGenerator& g, const std::vector<Object>& leaves, const Object& ys,
                                          const Object& yt) {
  auto tree = [&](auto&& self, const Term& t, const Object& obj) -> FlatNode {
    if (t.is_var()) {
      if (leaves.at(t.var).get() != obj.get()) throw Error(ErrorKind::MalformedSpec, "leaf object mismatch");
      return leaf_node(t.var, &obj->underlying(), obj->num_2cells());
    }
    if (t.args.empty()) return unit_node(&obj->underlying());
    auto it = product_by_object_.find(obj.get());
    if (it == product_by_object_.end()) throw Error(ErrorKind::MalformedSpec, obj->name() + " is not a product");
    return binary_node(FlatNode::Kind::Product, &obj->underlying(), obj->num_2cells(),
                       self(self, t.args[0], it->second->left), self(self, t.args[1], it->second->right));
  };
  Relabel r = relabel_y(tree(tree, g.src, ys), tree(tree, g.tgt, yt), static_cast<int>(leaves.size()), 3);
  return TwoFunctor{ys, yt, r.obj, r.arr, r.cell2};
}

// ------------------------------------------------------------- ToyAmbient

ToyAmbient::ToyAmbient(Limits limits) : limits_(limits), unit_(standard_cell(0)->underlying_ptr()) {
  names_[unit_.get()] = "1";
}

const Fin2CategoryPtr& ToyAmbient::discrete_of(const Object& c) {
  auto it = discrete_.find(c.get());
  if (it != discrete_.end()) return it->second;
  return discrete_.emplace(c.get(), locally_discrete(c, describe(c))).first->second;
}

TwoFunctor ToyAmbient::lift2(const Functor& f) {
  return TwoFunctor{discrete_of(f.dom), discrete_of(f.cod), f.obj, f.arr, f.arr};
}

const ToyAmbient::FunnyEntry& ToyAmbient::funny_entry(const Object& a, const Object& b) {
  auto key = std::make_pair(a.get(), b.get());
  auto it = funny_.find(key);
  if (it != funny_.end()) return *it->second;
  auto e = std::make_unique<FunnyEntry>();
  e->u = funny_underlying(discrete_of(a), discrete_of(b), limits_);
  e->left = a;
  e->right = b;
  funny_by_object_[e->u.cat.get()] = e.get();
  names_[e->u.cat.get()] = "(" + describe(a) + " * " + describe(b) + ")";
  return *funny_.emplace(key, std::move(e)).first->second;
}

const ToyAmbient::ProductEntry& ToyAmbient::product_entry(const Object& a, const Object& b) {
  auto key = std::make_pair(a.get(), b.get());
  auto it = product_.find(key);
  if (it != product_.end()) return *it->second;
  auto e = std::make_unique<ProductEntry>(ProductEntry{product(discrete_of(a), discrete_of(b), limits_), a, b});
  product_by_object_[e->prod->underlying_ptr().get()] = e.get();
  names_[e->prod->underlying_ptr().get()] = "(" + describe(a) + " x " + describe(b) + ")";
  return *product_.emplace(key, std::move(e)).first->second;
}

ToyAmbient::Object ToyAmbient::x_op(const std::string& op, const std::vector<Object>& objs) {
  require_op(op, objs.size());
  if (op == "e") return unit_;
  return funny_entry(objs[0], objs[1]).u.cat;
}

ToyAmbient::Object ToyAmbient::y_op(const std::string& op, const std::vector<Object>& objs) {
  require_op(op, objs.size());
  if (op == "e") return unit_;
  return product_entry(objs[0], objs[1]).prod->underlying_ptr();
}

ToyAmbient::Morphism ToyAmbient::x_map(const std::string& op, const std::vector<Object>& dom,
                                       const std::vector<Object>& cod, const std::vector<Morphism>& maps) {
  require_op(op, maps.size());
  if (op == "e") return identity(unit_);
  return funny_map(funny_entry(dom[0], dom[1]).u, funny_entry(cod[0], cod[1]).u, lift2(maps[0]), lift2(maps[1]));
}

ToyAmbient::Morphism ToyAmbient::y_map(const std::string& op, const std::vector<Object>& dom,
                                       const std::vector<Object>& cod, const std::vector<Morphism>& maps) {
  require_op(op, maps.size());
  if (op == "e") return identity(unit_);
  return product_map(lift2(maps[0]), lift2(maps[1]), product_entry(dom[0], dom[1]).prod,
                     product_entry(cod[0], cod[1]).prod)
      .underlying();
}

ToyAmbient::Morphism ToyAmbient::k_op(const std::string& op, const std::vector<Object>& objs) {
  require_op(op, objs.size());
  if (op == "e") return identity(unit_);
  return comparison_K(funny_entry(objs[0], objs[1]).u, product_entry(objs[0], objs[1]).prod);
}

ToyAmbient::Factored ToyAmbient::factor(const Morphism& f) const {
  CategoryFactorization fac = factor_functor(f);
  return {fac.e, fac.middle, fac.m};
}

ToyAmbient::Morphism ToyAmbient::lift(const Morphism& e, const Morphism& m, const Morphism& top,
                                      const Morphism& bottom) const {
  return solve_lifting(e, m, top, bottom);
}

ToyAmbient::Morphism ToyAmbient::compose(const Morphism& g, const Morphism& f) const {
  if (f.cod.get() != g.dom.get()) throw Error(ErrorKind::MalformedSpec, "composing functors through different categories");
  return grayfac::compose(g, f);
}

ToyAmbient::Morphism ToyAmbient::inverse(const Morphism& f) const {
  if (!is_iso(f)) throw Error(ErrorKind::AxiomViolation, "functor is not invertible");
  return Functor{f.cod, f.dom, invert(f.obj), invert(f.arr)};
}

bool ToyAmbient::is_iso(const Morphism& f) const {
  return bijective(f.obj, f.cod->num_objects()) && bijective(f.arr, f.cod->num_arrows());
}

bool ToyAmbient::is_e(const Morphism& f) const { return is_bo(f); }
bool ToyAmbient::is_m(const Morphism& f) const { return is_ff(f); }

bool ToyAmbient::equal(const Morphism& f, const Morphism& g) const {
  return f.dom.get() == g.dom.get() && f.cod.get() == g.cod.get() && f == g;
}

std::string ToyAmbient::first_difference(const Morphism& f, const Morphism& g) const {
  if (f.dom.get() != g.dom.get() || f.cod.get() != g.cod.get()) return "boundaries differ";
  const FinCategory& a = *f.dom;
  std::string s = first_mismatch("object", f.obj, g.obj, [&](int i) { return a.object_name(i); });
  if (s.empty()) s = first_mismatch("arrow", f.arr, g.arr, [&](int i) { return a.arrow(i).name; });
  return s.empty() ? "equal" : s;
}

std::string ToyAmbient::describe(const Object& x) const {
  auto it = names_.find(x.get());
  if (it != names_.end()) return it->second;
  return "C[" + std::to_string(x->num_objects()) + "," + std::to_string(x->num_arrows()) + "]";
}

ToyAmbient::Morphism ToyAmbient::x_cell(const CellGenerator& g, const std::vector<Object>& leaves, const Object& xs,
                                        const Object& xt) {
  auto tree = [&](auto&& self, const Term& t, const Object& obj) -> FlatNode {
    if (t.is_var()) {
      if (leaves.at(t.var).get() != obj.get()) throw Error(ErrorKind::MalformedSpec, "leaf object mismatch");
      return leaf_node(t.var, obj.get(), 0);
    }
    if (t.args.empty()) return unit_node(obj.get());
    auto it = funny_by_object_.find(obj.get());
    if (it == funny_by_object_.end()) throw Error(ErrorKind::MalformedSpec, "not a funny product");
    FlatNode n = binary_node(FlatNode::Kind::Funny, obj.get(), 0, self(self, t.args[0], it->second->left),
                             self(self, t.args[1], it->second->right));
    n.funny = &it->second->u;
    return n;
  };
  Relabel r = relabel_x(tree(tree, g.src, xs), tree(tree, g.tgt, xt), static_cast<int>(leaves.size()));
  return Functor{xs, xt, r.obj, r.arr};
}

ToyAmbient::Morphism ToyAmbient::y_cell(const CellGenerator& g, const std::vector<Object>& leaves, const Object& ys,
                                        const Object& yt) {
  auto tree = [&](auto&& self, const Term& t, const Object& obj) -> FlatNode {
    if (t.is_var()) {
      if (leaves.at(t.var).get() != obj.get()) throw Error(ErrorKind::MalformedSpec, "leaf object mismatch");
      return leaf_node(t.var, obj.get(), 0);
    }
    if (t.args.empty()) return unit_node(obj.get());
    auto it = product_by_object_.find(obj.get());
    if (it == product_by_object_.end()) throw Error(ErrorKind::MalformedSpec, "not a product");
    return binary_node(FlatNode::Kind::Product, obj.get(), 0, self(self, t.args[0], it->second->left),
                       self(self, t.args[1], it->second->right));
  };
  Relabel r = relabel_y(tree(tree, g.src, ys), tree(tree, g.tgt, yt), static_cast<int>(leaves.size()), 2);
  return Functor{ys, yt, r.obj, r.arr};
}

}  // namespace grayfac
