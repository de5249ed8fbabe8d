#pragma once

// The (bo, ff) factorisation system on finite categories and the
// (boba, lff) system on finite 2-categories, with a lifting solver.

#include <optional>
#include <string>
#include <vector>

#include "grayfac/kernel.hpp"

namespace grayfac {

bool is_bo(const Functor& f);
bool is_ff(const Functor& f);
/// Bijective on objects and on 1-cells.
bool is_boba(const TwoFunctor& f);
/// Every hom functor is full and faithful: hom2(f, g) -> hom2(Ff, Fg) bijective.
bool is_lff(const TwoFunctor& f);

/// The 2-category with the objects and 1-cells of u and with 2-cells
/// f => g the 2-cells Ff => Fg of b, together with the lff map m to b.
/// 2-cells are numbered by parallel pair (f, then g, in id order) and then by
/// the id order of b's 2-cells.
struct MiddleFactor {
  Fin2CategoryPtr middle;
  TwoFunctor m;

  struct Cell {
    CellId src;   // 1-cell of u
    CellId tgt;   // 1-cell of u
    CellId base;  // 2-cell of b
  };
  std::vector<Cell> cells;

  CellId find(CellId f, CellId g, CellId base) const;

  std::vector<int> base_pos;                      // position of each b 2-cell in its hom
  std::unordered_map<std::uint64_t, CellId> first;  // (f, g) -> first middle cell
};

MiddleFactor factor_through_underlying(const FinCategoryPtr& u, const Functor& f, const Fin2CategoryPtr& b,
                                       std::string name, bool validate = true);

struct Factorization {
  TwoFunctor e;
  Fin2CategoryPtr middle;
  TwoFunctor m;
};

/// F = m∘e with e boba and m lff.
Factorization factor_2functor(const TwoFunctor& f);

/// The (bo, ff) factorisation of a functor: middle has the objects of the
/// domain and arrows x -> y the arrows Fx -> Fy.
struct CategoryFactorization {
  Functor e;
  FinCategoryPtr middle;
  Functor m;
};
CategoryFactorization factor_functor(const Functor& f);

/// Left leg of a lifting square: either a full 2-functor or only its action
/// on the underlying category (objects and 1-cells), which must be bijective.
struct LeftLegData {
  FinCategoryPtr dom;  // underlying category of the domain
  Fin2CategoryPtr cod;
  Functor functor;     // dom -> cod->underlying
  std::optional<TwoFunctor> full;

  static LeftLegData from(const TwoFunctor& e);
  static LeftLegData underlying_only(const FinCategoryPtr& dom, const Fin2CategoryPtr& cod, const Functor& f);
  bool is_full() const { return full.has_value(); }
};

/// Commutative square m∘top = bottom∘e. top is given on underlying data; when
/// the left leg is full, top_full carries its 2-cell action as well.
struct LiftingSquare {
  LeftLegData e;
  TwoFunctor m;
  Functor top;
  std::optional<TwoFunctor> top_full;
  TwoFunctor bottom;
};

LiftingSquare make_square(const TwoFunctor& e, const TwoFunctor& m, const TwoFunctor& top, const TwoFunctor& bottom);

/// The unique d with d∘e = top and m∘d = bottom. Throws NonCommuting if the
/// square does not commute and NotOrthogonal if a 2-cell has no preimage
/// or several.
TwoFunctor solve_lifting(const LiftingSquare& sq);
TwoFunctor solve_lifting(const TwoFunctor& e, const TwoFunctor& m, const TwoFunctor& top, const TwoFunctor& bottom);
/// The (bo, ff) filler of m∘top = bottom∘e for functors, same errors.
Functor solve_lifting(const Functor& e, const Functor& m, const Functor& top, const Functor& bottom);

struct OrthogonalityReport {
  std::size_t probes = 0;
  std::size_t unique = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Every commuting square (top, bottom) against e: A -> B and m: C -> D in
/// canonical order, up to max_probes of them.
std::vector<std::pair<TwoFunctor, TwoFunctor>> commuting_squares(const TwoFunctor& e, const TwoFunctor& m,
                                                                  std::size_t max_probes, const Limits& limits = {});

/// Existence and uniqueness of a filler for each probe square, decided by
/// enumerating every 2-functor B -> C.
OrthogonalityReport check_orthogonality(const TwoFunctor& e, const TwoFunctor& m,
                                        const std::vector<std::pair<TwoFunctor, TwoFunctor>>& probes,
                                        const Limits& limits = {});

}  // namespace grayfac
