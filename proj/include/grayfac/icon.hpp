#pragma once

// Icons, cubical functors, the universal cubical functor R: A×B ⇝ A⊗B and
// the pseudolimit of a pseudofunctor in the 2-category of icons.

#include <optional>
#include <string>
#include <vector>

#include "grayfac/homs.hpp"
#include "grayfac/kernel.hpp"
#include "grayfac/tensor.hpp"

namespace grayfac {

// -------------------------------------------------------------------- icons

/// α: F ⇒ G between pseudofunctors agreeing on objects; component[f]: Ff ⇒ Gf.
struct Icon {
  PseudoFunctor src;
  PseudoFunctor tgt;
  std::vector<CellId> component;

  /// Throws AxiomViolation naming the failing icon axiom.
  void validate() const;
  bool is_valid() const;
  bool operator==(const Icon& o) const { return component == o.component; }
};

Icon identity_icon(const PseudoFunctor& f);
/// β·α for α: F ⇒ G, β: G ⇒ H.
Icon vcomp(const Icon& beta, const Icon& alpha);
/// β*α: HF ⇒ KG for α: F ⇒ G (A ⇝ B), β: H ⇒ K (B ⇝ C).
Icon hcomp(const Icon& beta, const Icon& alpha);
/// All icons F ⇒ G in component order; empty if F, G differ on objects.
std::vector<Icon> enumerate_icons(const PseudoFunctor& f, const PseudoFunctor& g, const Limits& limits = {});

// ----------------------------------------------------------------- cubical

/// F: a×b ⇝ c is cubical: normal, and the comparison at (g, f) is an
/// identity whenever the first coordinate of f or the second of g is one.
bool is_cubical(const PseudoFunctor& f, const Fin2Category& a, const Fin2Category& b);

/// R(f, g) is the reduced word (g in B, then f in A); comparison cells are
/// the Gray cells over identity pair cells.
PseudoFunctor universal_R(const GrayTensor& t);

/// Evaluation Ps(B,C) × B ⇝ C: (η, α) ↦ η_b ∘ Fα. prod must be ps.cat × ps.a.
PseudoFunctor ev_cubical(const HomCategory& ps, const Fin2CategoryPtr& prod);

/// L ↦ L∘R.
PseudoFunctor cubical_from_2functor(const GrayTensor& t, const TwoFunctor& l);
/// The 2-functor L on t.cat with L∘R = f: letters go to the images of their
/// K-images, a Gray cell (w1, w2, p) to φ_{w2}·f(p)·φ_{w1}⁻¹ where φ_w is
/// built from the comparison cells of f.
TwoFunctor two_functor_from_cubical(const GrayTensor& t, const PseudoFunctor& f);

/// All cubical functors a×b ⇝ c by brute-force search, validated.
std::vector<PseudoFunctor> enumerate_cubical(const Fin2CategoryPtr& prod, const Fin2CategoryPtr& a,
                                             const Fin2CategoryPtr& b, const Fin2CategoryPtr& c,
                                             const Limits& limits = {});

/// The transpose of L: A⊗B → C as a 2-functor A → Ps(B,C). Throws
/// AxiomViolation if an image is missing from ps.
TwoFunctor curry(const GrayTensor& t, const HomCategory& ps, const TwoFunctor& l);

/// Ps(B,H): Ps(B,C) → Ps(B,C') for H: C → C'.
TwoFunctor postcompose(const HomCategory& src, const HomCategory& tgt, const TwoFunctor& h);

// ------------------------------------------------------------- pseudolimit

/// Apex C with 1-cells (f, θ, g), θ: g ≅ Ff, projections S, T and the icon
/// λ: T ⇒ F∘S whose component at (f, θ, g) is θ.
struct PseudolimitCone {
  Fin2CategoryPtr apex;
  TwoFunctor s;
  TwoFunctor t;
  Icon lambda;

  struct Triple {
    CellId f;
    CellId theta;
    CellId g;
  };
  std::vector<Triple> triples;                     // by 1-cell of apex
  std::vector<std::pair<CellId, CellId>> pairs;    // (β, α) by 2-cell of apex
};

PseudolimitCone pseudolimit_of_arrow(const PseudoFunctor& f, const Limits& limits = {});

struct PseudolimitReport {
  std::size_t cones = 0;          // (P, Q, τ) with P, Q 2-functors out of a probe
  std::size_t cone_failures = 0;  // cones without exactly one factorisation
  std::size_t cell_problems = 0;  // (ρ, σ) pairs checked for 2-cells
  std::size_t cell_failures = 0;
  bool ok() const { return cone_failures == 0 && cell_failures == 0; }
};

/// Both universal-property clauses against every cone with apex in probes,
/// with 2-functors as legs.
PseudolimitReport check_pseudolimit(const PseudolimitCone& cone, const PseudoFunctor& f,
                                    const std::vector<Fin2CategoryPtr>& probes, const Limits& limits = {});

// ------------------------------------------------------ Q as an equivalence

struct IconEquivalence {
  Icon unit;     // 1 ⇒ R∘Q, component (w, R(Qw), identity pair cell)
  Icon counit;   // its inverse R∘Q ⇒ 1
  bool qr_identity = false;       // Q∘R = 1 on all cells, comparisons included
  bool bijective_on_objects = false;
  bool locally_fully_faithful = false;
  bool locally_essentially_surjective = false;
  bool icon_axioms = false;
  bool ok() const {
    return qr_identity && bijective_on_objects && locally_fully_faithful && locally_essentially_surjective &&
           icon_axioms;
  }
};

IconEquivalence icon_equivalence_Q(const GrayTensor& t);

}  // namespace grayfac
