#pragma once

// Cartesian, funny and Gray tensor products of finite 2-categories.
//
// Pairs are numbered row-major: object (x, y) of A×B is x * |B0| + y, and the
// same scheme is used for 1-cells and 2-cells.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grayfac/kernel.hpp"
#include "grayfac/ofs.hpp"

namespace grayfac {

// ------------------------------------------------------------------ product

Fin2CategoryPtr product(const Fin2CategoryPtr& a, const Fin2CategoryPtr& b, const Limits& limits = {});

/// Component of a product cell id: which = 0 for the first factor.
inline int pair_part(int id, int right_count, int which) { return which == 0 ? id / right_count : id % right_count; }
inline int pair_id(int left, int right, int right_count) { return left * right_count + right; }

/// Projection of prod = a × b onto factor `which`.
TwoFunctor projection(const Fin2CategoryPtr& prod, const Fin2CategoryPtr& a, const Fin2CategoryPtr& b, int which);
/// F × G : dom → cod where dom = F.dom × G.dom and cod = F.cod × G.cod.
TwoFunctor product_map(const TwoFunctor& f, const TwoFunctor& g, const Fin2CategoryPtr& dom,
                       const Fin2CategoryPtr& cod);
/// ⟨F, G⟩ : X → prod.
TwoFunctor pairing(const TwoFunctor& f, const TwoFunctor& g, const Fin2CategoryPtr& prod);

// ------------------------------------------------------------------- words

/// A single-coordinate move: a 1-cell of factor `coord` (0 or 1).
struct Letter {
  int coord = 0;
  CellId cell = kNone;
  auto operator<=>(const Letter&) const = default;
};

/// Reduced alternating word starting at object (a, b).
struct Word {
  ObjId a = 0;
  ObjId b = 0;
  std::vector<Letter> letters;
  auto operator<=>(const Word&) const = default;
};

/// Target object of a word (letters must be composable).
std::pair<ObjId, ObjId> word_target(const Fin2Category& a, const Fin2Category& b, const Word& w);

/// Normal form of a raw letter sequence: identity letters are dropped and
/// adjacent letters in the same coordinate are composed in that factor.
/// Throws MalformedSpec if the letters do not compose.
Word word_reduce(const Fin2Category& a, const Fin2Category& b, ObjId x, ObjId y, const std::vector<Letter>& raw);

// ------------------------------------------------------------------- funny

/// Underlying category of A⋆B: objects are pairs, arrows reduced words in
/// breadth-first order by length.
struct FunnyUnderlying {
  Fin2CategoryPtr a;
  Fin2CategoryPtr b;
  FinCategoryPtr cat;
  std::vector<Word> words;  // by arrow id
  std::map<Word, CellId> index;

  CellId find(const Word& w) const;
  ObjId object(ObjId x, ObjId y) const { return pair_id(x, y, b->num_objects()); }
};

/// Throws WordExplosion if reduced words longer than limits.max_word_len
/// exist, SizeLimit if more than limits.max_cells arrows are generated.
FunnyUnderlying funny_underlying(const Fin2CategoryPtr& a, const Fin2CategoryPtr& b, const Limits& limits = {});

/// The locally discrete 2-category on the funny underlying category.
Fin2CategoryPtr funny_skeleton(const FunnyUnderlying& u);

/// A⋆B with its 2-cells: between words with the same coordinate pattern and
/// letterwise parallel letters, the 2-cells are tuples of letter 2-cells.
struct FunnyFull {
  FunnyUnderlying under;
  Fin2CategoryPtr cat;
  std::vector<std::vector<CellId>> letter_cells;  // by 2-cell id
};

/// Throws UnsupportedInput when a factor has a non-identity 2-cell touching
/// an identity 1-cell (letters could then vanish under a 2-cell), SizeLimit
/// past limits.max_cells.
FunnyFull funny_full(const Fin2CategoryPtr& a, const Fin2CategoryPtr& b, const Limits& limits = {});

/// K on underlying categories: funny → underlying(a × b).
Functor comparison_K(const FunnyUnderlying& u, const Fin2CategoryPtr& prod);
/// K as a 2-functor out of funny_skeleton(u).
TwoFunctor comparison_K_skeleton(const FunnyUnderlying& u, const Fin2CategoryPtr& skeleton,
                                 const Fin2CategoryPtr& prod);
/// K as a 2-functor out of the full funny tensor.
TwoFunctor comparison_K_full(const FunnyFull& f, const Fin2CategoryPtr& prod);
/// K on a raw letter sequence.
CellId comparison_K_raw(const Fin2Category& prod, const Fin2Category& a, const Fin2Category& b, ObjId x, ObjId y,
                        const std::vector<Letter>& raw);

/// The map F ⋆ G on underlying categories.
Functor funny_map(const FunnyUnderlying& src, const FunnyUnderlying& tgt, const TwoFunctor& f, const TwoFunctor& g);

// -------------------------------------------------------------------- gray

struct GrayTensor {
  Fin2CategoryPtr a;
  Fin2CategoryPtr b;
  Fin2CategoryPtr prod;
  FunnyUnderlying funny;  // objects and 1-cells of cat, same ids
  Fin2CategoryPtr cat;
  MiddleFactor factor;    // 2-cells (source word, target word, pair cell)
  TwoFunctor q;           // cat → prod
  LeftLegData p;          // funny → cat, underlying identity
  std::optional<FunnyFull> full;

  const Word& word(CellId f) const { return funny.words[f]; }
  CellId find_word(const Word& w) const { return funny.find(w); }
  CellId find_cell(CellId src, CellId tgt, CellId pair) const { return factor.find(src, tgt, pair); }
};

/// The middle of the (boba, lff) factorisation of K: A⋆B → A×B. When
/// with_full_p is set and the full funny tensor exists, p carries the full
/// 2-functor P.
GrayTensor gray_tensor(const Fin2CategoryPtr& a, const Fin2CategoryPtr& b, const Limits& limits = {},
                       bool with_full_p = false);

/// F ⊗ G : src → tgt, letterwise on words and F × G on pair cells.
TwoFunctor gray_map(const GrayTensor& src, const GrayTensor& tgt, const TwoFunctor& f, const TwoFunctor& g);

/// The invertible 2-cell from the word (f then g) to (g then f), carried by
/// the identity pair cell; an identity when f or g is.
CellId interchanger(const GrayTensor& t, CellId f, CellId g);

/// Letter images under F ⋆ G, reduced.
Word map_word(const Fin2Category& a2, const Fin2Category& b2, const TwoFunctor& f, const TwoFunctor& g,
              const Word& w);

}  // namespace grayfac
