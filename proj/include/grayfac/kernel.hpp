#pragma once

// Finite categories and finite strict 2-categories stored as explicit,
// exhaustively validated composition tables.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "grayfac/error.hpp"

namespace grayfac {

using ObjId = int;
using CellId = int;

inline constexpr int kNone = -1;

/// Sparse table over pairs of cell ids, e.g. (second, first) -> composite.
class PairTable {
 public:
  int get(int a, int b) const {
    auto it = table_.find(key(a, b));
    return it == table_.end() ? kNone : it->second;
  }
  void set(int a, int b, int v) { table_[key(a, b)] = v; }
  bool contains(int a, int b) const { return table_.count(key(a, b)) != 0; }
  std::size_t size() const { return table_.size(); }
  void reserve(std::size_t n) { table_.reserve(n); }

  /// Entries sorted by (a, b).
  std::vector<std::array<int, 3>> sorted_entries() const;

  template <class F>
  void for_each(F&& f) const {
    for (const auto& [k, v] : table_) {
      f(static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu), v);
    }
  }

  bool operator==(const PairTable& other) const { return table_ == other.table_; }

 private:
  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }
  std::unordered_map<std::uint64_t, int> table_;
};

struct Arrow {
  std::string name;
  ObjId src = kNone;
  ObjId tgt = kNone;
  bool operator==(const Arrow&) const = default;
};

/// A finite category. Composition is stored as comp(g, f) = g∘f.
class FinCategory {
 public:
  FinCategory() = default;

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::string& object_name(ObjId x) const { return objects_[x]; }
  const Arrow& arrow(CellId f) const { return arrows_[f]; }
  ObjId src(CellId f) const { return arrows_[f].src; }
  ObjId tgt(CellId f) const { return arrows_[f].tgt; }
  CellId identity(ObjId x) const { return identity_[x]; }
  bool is_identity(CellId f) const { return identity_[arrows_[f].src] == f; }
  CellId compose(CellId g, CellId f) const { return comp_.get(g, f); }
  const PairTable& comp_table() const { return comp_; }

  /// Arrows x -> y in id order.
  std::span<const CellId> hom(ObjId x, ObjId y) const;
  /// Arrows with source x in id order.
  std::span<const CellId> out(ObjId x) const { return out_[x]; }

  std::optional<CellId> find(const std::string& name) const;

  /// Exhaustive check of the category laws; throws AxiomViolation.
  void validate(bool parallel = true) const;

  bool operator==(const FinCategory& other) const;

  class Builder;

 private:
  friend class Builder;
  friend class Fin2Category;
  void index();

  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<CellId> identity_;
  PairTable comp_;
  std::map<std::pair<ObjId, ObjId>, std::vector<CellId>> hom_;
  std::vector<std::vector<CellId>> out_;
  std::unordered_map<std::string, CellId> by_name_;
};

class FinCategory::Builder {
 public:
  ObjId add_object(std::string name);
  CellId add_arrow(std::string name, ObjId src, ObjId tgt);
  /// Adds the identity arrow of x; must be called once per object.
  CellId add_identity(ObjId x, std::string name = {});
  /// Marks an existing arrow x -> x as the identity of x.
  void set_identity(ObjId x, CellId f) { cat_.identity_.at(x) = f; }
  void set_comp(CellId g, CellId f, CellId gf) { cat_.comp_.set(g, f, gf); }
  const Arrow& arrow(CellId f) const { return cat_.arrows_.at(f); }
  CellId identity_of(ObjId x) const { return cat_.identity_.at(x); }
  int num_objects() const { return cat_.num_objects(); }
  /// Fills comp(f, id) and comp(id, f) for every arrow.
  void fill_unit_laws();
  std::shared_ptr<const FinCategory> build(bool validate = true);

  int num_arrows() const { return cat_.num_arrows(); }

 private:
  FinCategory cat_;
};

using FinCategoryPtr = std::shared_ptr<const FinCategory>;

/// A 2-cell between parallel 1-cells.
struct TwoCell {
  std::string name;
  CellId src = kNone;  // 1-cell
  CellId tgt = kNone;  // 1-cell
  bool operator==(const TwoCell&) const = default;
};

/// A finite strict 2-category. The underlying category holds objects and
/// 1-cells; 2-cells carry vertical composition vcomp(β, α) = β·α and
/// horizontal composition hcomp(τ, σ) = τ*σ where σ is the first 2-cell.
class Fin2Category {
 public:
  const std::string& name() const { return name_; }
  const FinCategory& underlying() const { return *underlying_; }
  const FinCategoryPtr& underlying_ptr() const { return underlying_; }

  int num_objects() const { return underlying_->num_objects(); }
  int num_1cells() const { return underlying_->num_arrows(); }
  int num_2cells() const { return static_cast<int>(cells2_.size()); }
  std::size_t total_cells() const {
    return static_cast<std::size_t>(num_objects() + num_1cells() + num_2cells());
  }

  const std::string& object_name(ObjId x) const { return underlying_->object_name(x); }
  const Arrow& cell1(CellId f) const { return underlying_->arrow(f); }
  const TwoCell& cell2(CellId s) const { return cells2_[s]; }
  ObjId src0(CellId s) const { return cell1(cells2_[s].src).src; }
  ObjId tgt0(CellId s) const { return cell1(cells2_[s].src).tgt; }

  CellId id1(ObjId x) const { return underlying_->identity(x); }
  CellId id2(CellId f) const { return id2_[f]; }
  bool is_identity1(CellId f) const { return underlying_->is_identity(f); }
  bool is_identity2(CellId s) const { return id2_[cells2_[s].src] == s; }

  CellId comp1(CellId g, CellId f) const { return underlying_->compose(g, f); }
  CellId vcomp(CellId b, CellId a) const { return vcomp_.get(b, a); }
  CellId hcomp(CellId t, CellId s) const { return hcomp_.get(t, s); }
  /// g * σ (post-whiskering by the 1-cell g).
  CellId whisker_post(CellId g, CellId s) const { return hcomp(id2_[g], s); }
  /// σ * f (pre-whiskering by the 1-cell f).
  CellId whisker_pre(CellId s, CellId f) const { return hcomp(s, id2_[f]); }

  std::span<const CellId> hom1(ObjId x, ObjId y) const { return underlying_->hom(x, y); }
  /// 2-cells f => g in id order (empty unless f, g parallel).
  std::span<const CellId> hom2(CellId f, CellId g) const;
  /// 2-cells with source 1-cell f.
  std::span<const CellId> vout(CellId f) const { return vout_[f]; }
  /// 2-cells whose 0-source is x.
  std::span<const CellId> cells_from(ObjId x) const { return from0_[x]; }

  std::optional<CellId> inverse2(CellId s) const;
  bool is_invertible2(CellId s) const { return inverse2(s).has_value(); }

  std::optional<CellId> find1(const std::string& name) const { return underlying_->find(name); }
  std::optional<CellId> find2(const std::string& name) const;

  const PairTable& vcomp_table() const { return vcomp_; }
  const PairTable& hcomp_table() const { return hcomp_; }

  /// Exhaustive check of every strict 2-category law; throws AxiomViolation.
  void validate(bool parallel = true) const;

  /// Table equality (names ignored).
  bool same_tables(const Fin2Category& other) const;

  class Builder;

 private:
  friend class Builder;
  void index();

  std::string name_;
  FinCategoryPtr underlying_;
  std::vector<TwoCell> cells2_;
  std::vector<CellId> id2_;
  PairTable vcomp_;
  PairTable hcomp_;
  std::map<std::pair<CellId, CellId>, std::vector<CellId>> hom2_;
  std::vector<std::vector<CellId>> vout_;
  std::vector<std::vector<CellId>> from0_;
  std::unordered_map<std::string, CellId> by_name2_;
};

using Fin2CategoryPtr = std::shared_ptr<const Fin2Category>;

class Fin2Category::Builder {
 public:
  explicit Builder(std::string name = {}) : name_(std::move(name)) {}

  ObjId add_object(std::string name) { return under_.add_object(std::move(name)); }
  /// Identity 1-cell of x together with its identity 2-cell.
  CellId add_identity1(ObjId x, std::string name = {});
  CellId add_1cell(std::string name, ObjId src, ObjId tgt);
  void set_identity1(ObjId x, CellId f) { under_.set_identity(x, f); }
  /// Identity 2-cell of the 1-cell f.
  CellId add_identity2(CellId f, std::string name = {});
  CellId add_2cell(std::string name, CellId src, CellId tgt);

  void set_comp1(CellId g, CellId f, CellId gf) { under_.set_comp(g, f, gf); }
  void set_vcomp(CellId b, CellId a, CellId ba) { vcomp_.set(b, a, ba); }
  void set_hcomp(CellId t, CellId s, CellId ts) { hcomp_.set(t, s, ts); }

  /// Fills every composition table entry forced by the unit laws.
  void fill_unit_laws();

  int num_objects() const { return under_.num_objects(); }
  int num_1cells() const { return under_.num_arrows(); }
  int num_2cells() const { return static_cast<int>(cells2_.size()); }
  const Arrow& cell1(CellId f) const { return under_.arrow(f); }
  const TwoCell& cell2(CellId s) const { return cells2_[s]; }
  CellId id2_of(CellId f) const { return f < static_cast<CellId>(id2_.size()) ? id2_[f] : kNone; }

  Fin2CategoryPtr build(bool validate = true);

 private:
  std::string name_;
  FinCategory::Builder under_;
  std::vector<TwoCell> cells2_;
  std::vector<CellId> id2_;
  PairTable vcomp_;
  PairTable hcomp_;
};

/// Serial reference implementation of Fin2Category::validate.
void validate_serial(const Fin2Category& c);

/// The locally discrete 2-category on a category.
Fin2CategoryPtr locally_discrete(const FinCategoryPtr& k, std::string name = {});

/// S0, S1, S2: the free 0-cell, 1-cell and 2-cell.
Fin2CategoryPtr standard_cell(int i);

/// Discrete 2-category on the objects of c.
Fin2CategoryPtr discrete(const Fin2Category& c);

bool is_locally_contractible(const Fin2Category& c);
bool is_locally_discrete(const Fin2Category& c);

/// Map of finite categories.
struct Functor {
  FinCategoryPtr dom;
  FinCategoryPtr cod;
  std::vector<ObjId> obj;
  std::vector<CellId> arr;

  void validate() const;
  bool operator==(const Functor& o) const { return obj == o.obj && arr == o.arr; }
};

Functor identity_functor(const FinCategoryPtr& c);
Functor compose(const Functor& g, const Functor& f);

/// Strict 2-functor between finite 2-categories.
struct TwoFunctor {
  Fin2CategoryPtr dom;
  Fin2CategoryPtr cod;
  std::vector<ObjId> obj;
  std::vector<CellId> c1;
  std::vector<CellId> c2;

  /// Throws AxiomViolation if any 2-functor law fails.
  void validate() const;
  bool is_valid() const;
  Functor underlying() const;

  bool operator==(const TwoFunctor& o) const {
    return obj == o.obj && c1 == o.c1 && c2 == o.c2;
  }
};

TwoFunctor identity_2functor(const Fin2CategoryPtr& c);
/// g∘f; requires f.cod and g.dom to be the same 2-category.
TwoFunctor compose(const TwoFunctor& g, const TwoFunctor& f);
/// Inclusion of the discrete 2-category on c's objects.
TwoFunctor object_inclusion(const Fin2CategoryPtr& c);

bool same_category(const Fin2Category& a, const Fin2Category& b);

/// Normal or general pseudofunctor. unit[x]: F(1_x) => 1_{Fx};
/// comp(g, f): F(gf) => Fg∘Ff for every composable pair.
struct PseudoFunctor {
  Fin2CategoryPtr dom;
  Fin2CategoryPtr cod;
  std::vector<ObjId> obj;
  std::vector<CellId> c1;
  std::vector<CellId> c2;
  std::vector<CellId> unit;
  PairTable comp;

  /// Checks functoriality on 2-cells, naturality of comparisons, the
  /// associativity and unit coherence axioms, and invertibility.
  void validate() const;
  bool is_valid() const;
  bool is_normal() const;
  bool operator==(const PseudoFunctor& o) const {
    return obj == o.obj && c1 == o.c1 && c2 == o.c2 && unit == o.unit && comp == o.comp;
  }
};

PseudoFunctor as_pseudo(const TwoFunctor& f);
/// g∘f of pseudofunctors, comparison cells composed in the codomain.
PseudoFunctor compose(const PseudoFunctor& g, const PseudoFunctor& f);

}  // namespace grayfac
