#pragma once

// The hom 2-categories [A,B], [A,B]_f and Ps(A,B) by exhaustive enumeration.
// Transformations use the oplax orientation: the component at f: a -> b is a
// 2-cell  η_b ∘ Ff  =>  Gf ∘ η_a.

#include <map>
#include <string_view>
#include <vector>

#include "grayfac/kernel.hpp"

namespace grayfac {

enum class HomKind { Strict, Funny, Pseudo };

std::string_view to_string(HomKind kind);
/// "strict", "funny", "ps" (or "pseudo").
HomKind parse_hom_kind(std::string_view s);

struct Transformation {
  int src = 0;                 // index of the source 2-functor
  int tgt = 0;
  std::vector<CellId> object;  // η_x, 1-cells of B
  std::vector<CellId> arrow;   // η_f, 2-cells of B; empty unless Pseudo
};

struct Modification {
  CellId src = 0;              // 1-cell of the hom (a transformation)
  CellId tgt = 0;
  std::vector<CellId> object;  // Γ_x, 2-cells of B
};

struct HomCategory {
  HomKind kind = HomKind::Strict;
  Fin2CategoryPtr a;
  Fin2CategoryPtr b;
  Fin2CategoryPtr cat;
  std::vector<TwoFunctor> functors;            // by object id
  std::vector<Transformation> transformations;  // by 1-cell id
  std::vector<Modification> modifications;      // by 2-cell id

  CellId find_transformation(const Transformation& t) const;
  CellId find_modification(const Modification& m) const;

  std::map<std::vector<int>, CellId> by_key1;
  std::map<std::vector<int>, CellId> by_key2;
};

HomCategory build_hom(const Fin2CategoryPtr& a, const Fin2CategoryPtr& b, HomKind kind, const Limits& limits = {});

/// Axiom checks for a single transformation / modification between 2-functors.
bool is_pseudonatural(const TwoFunctor& f, const TwoFunctor& g, const Transformation& t);
bool is_2natural(const TwoFunctor& f, const TwoFunctor& g, const Transformation& t);

/// J1: [A,B] -> Ps(A,B); J2: Ps(A,B) -> [A,B]_f; J: [A,B] -> [A,B]_f.
struct Inclusions {
  TwoFunctor j1;
  TwoFunctor j2;
  TwoFunctor j;
};
Inclusions inclusions(const HomCategory& strict, const HomCategory& pseudo, const HomCategory& funny);

}  // namespace grayfac
