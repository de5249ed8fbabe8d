#pragma once

// Ambients for the lifting engine.
//
// MainAmbient: finite 2-categories and 2-functors, X = funny tensor (realised
// by its locally discrete skeleton, which has the same objects and 1-cells),
// Y = cartesian product, k = (1, K), factorisation (boba, lff).
//
// ToyAmbient: finite categories and functors, X = funny product of
// categories, Y = cartesian product, factorisation (bo, ff).
//
// X(θ) and Y(θ) for a generator θ: s ⇒ t are relabellings: a cell of X(s) is
// flattened to a reduced letter sequence over the variables of s and rebuilt
// in the shape of t; a cell of Y(s) to one cell per variable.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "grayfac/kernel.hpp"
#include "grayfac/tensor.hpp"
#include "grayfac/theory.hpp"

namespace grayfac {

class MainAmbient {
 public:
  using Object = Fin2CategoryPtr;
  using Morphism = TwoFunctor;
  struct Factored {
    Morphism e;
    Object middle;
    Morphism m;
  };

  explicit MainAmbient(Limits limits = {});

  Object unit() const { return unit_; }
  Object x_op(const std::string& op, const std::vector<Object>& objs);
  Object y_op(const std::string& op, const std::vector<Object>& objs);
  Morphism x_map(const std::string& op, const std::vector<Object>& dom, const std::vector<Object>& cod,
                 const std::vector<Morphism>& maps);
  Morphism y_map(const std::string& op, const std::vector<Object>& dom, const std::vector<Object>& cod,
                 const std::vector<Morphism>& maps);
  Morphism k_op(const std::string& op, const std::vector<Object>& objs);
  Factored factor(const Morphism& f) const;
  Morphism lift(const Morphism& e, const Morphism& m, const Morphism& top, const Morphism& bottom) const;

  Morphism compose(const Morphism& g, const Morphism& f) const;
  Morphism identity(const Object& x) const { return identity_2functor(x); }
  Morphism inverse(const Morphism& f) const;
  bool is_iso(const Morphism& f) const;
  bool is_e(const Morphism& f) const;
  bool is_m(const Morphism& f) const;
  bool equal(const Morphism& f, const Morphism& g) const;
  std::string first_difference(const Morphism& f, const Morphism& g) const;
  Object dom(const Morphism& f) const { return f.dom; }
  Object cod(const Morphism& f) const { return f.cod; }
  std::string describe(const Object& x) const { return x->name(); }

  Morphism x_cell(const CellGenerator& g, const std::vector<Object>& leaves, const Object& xs, const Object& xt);
  Morphism y_cell(const CellGenerator& g, const std::vector<Object>& leaves, const Object& ys, const Object& yt);

  /// The funny underlying category behind an object returned by x_op("m").
  const FunnyUnderlying& funny_of(const Object& x) const;
  const Limits& limits() const { return limits_; }

 private:
  struct FunnyEntry {
    FunnyUnderlying u;
    Object skeleton;
    Object left;
    Object right;
  };
  struct ProductEntry {
    Object prod;
    Object left;
    Object right;
  };
  const FunnyEntry& funny_entry(const Object& a, const Object& b);
  const ProductEntry& product_entry(const Object& a, const Object& b);

  Limits limits_;
  Object unit_;
  std::map<std::pair<const Fin2Category*, const Fin2Category*>, std::unique_ptr<FunnyEntry>> funny_;
  std::map<const Fin2Category*, const FunnyEntry*> funny_by_object_;
  std::map<std::pair<const Fin2Category*, const Fin2Category*>, std::unique_ptr<ProductEntry>> product_;
  std::map<const Fin2Category*, const ProductEntry*> product_by_object_;
};

class ToyAmbient {
 public:
  using Object = FinCategoryPtr;
  using Morphism = Functor;
  struct Factored {
    Morphism e;
    Object middle;
    Morphism m;
  };

  explicit ToyAmbient(Limits limits = {});

  Object unit() const { return unit_; }
  Object x_op(const std::string& op, const std::vector<Object>& objs);
  Object y_op(const std::string& op, const std::vector<Object>& objs);
  Morphism x_map(const std::string& op, const std::vector<Object>& dom, const std::vector<Object>& cod,
                 const std::vector<Morphism>& maps);
  Morphism y_map(const std::string& op, const std::vector<Object>& dom, const std::vector<Object>& cod,
                 const std::vector<Morphism>& maps);
  Morphism k_op(const std::string& op, const std::vector<Object>& objs);
  Factored factor(const Morphism& f) const;
  Morphism lift(const Morphism& e, const Morphism& m, const Morphism& top, const Morphism& bottom) const;

  Morphism compose(const Morphism& g, const Morphism& f) const;
  Morphism identity(const Object& x) const { return identity_functor(x); }
  Morphism inverse(const Morphism& f) const;
  bool is_iso(const Morphism& f) const;
  bool is_e(const Morphism& f) const;
  bool is_m(const Morphism& f) const;
  bool equal(const Morphism& f, const Morphism& g) const;
  std::string first_difference(const Morphism& f, const Morphism& g) const;
  Object dom(const Morphism& f) const { return f.dom; }
  Object cod(const Morphism& f) const { return f.cod; }
  std::string describe(const Object& x) const;

  Morphism x_cell(const CellGenerator& g, const std::vector<Object>& leaves, const Object& xs, const Object& xt);
  Morphism y_cell(const CellGenerator& g, const std::vector<Object>& leaves, const Object& ys, const Object& yt);

  /// Names an object for reports.
  void name(const Object& x, std::string n) { names_[x.get()] = std::move(n); }

 private:
  struct FunnyEntry {
    FunnyUnderlying u;
    Object left;
    Object right;
  };
  struct ProductEntry {
    Fin2CategoryPtr prod;
    Object left;
    Object right;
  };
  const Fin2CategoryPtr& discrete_of(const Object& c);
  TwoFunctor lift2(const Functor& f);
  const FunnyEntry& funny_entry(const Object& a, const Object& b);
  const ProductEntry& product_entry(const Object& a, const Object& b);

  Limits limits_;
  Object unit_;
  std::map<const FinCategory*, Fin2CategoryPtr> discrete_;
  std::map<std::pair<const FinCategory*, const FinCategory*>, std::unique_ptr<FunnyEntry>> funny_;
  std::map<const FinCategory*, const FunnyEntry*> funny_by_object_;
  std::map<std::pair<const FinCategory*, const FinCategory*>, std::unique_ptr<ProductEntry>> product_;
  std::map<const FinCategory*, const ProductEntry*> product_by_object_;
  std::map<const FinCategory*, std::string> names_;
};

using MainEngine = Engine<MainAmbient>;
using ToyEngine = Engine<ToyAmbient>;

}  // namespace grayfac
