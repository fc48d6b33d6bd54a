#pragma once
// The lifting construction L(−): adjoin a fresh least element.  A partial
// element is either undefined (⊥) or a defined base element; Kleisli
// extension, the functor action, and the two free-extension theorems all
// operate on explicit tables.

#include <span>

#include "dt/map.hpp"
#include "dt/report.hpp"

namespace dt {

struct PartialElement {
  bool defined = false;
  Elem value = 0;  // meaningful only when defined

  friend bool operator==(const PartialElement&, const PartialElement&) = default;
};

inline PartialElement lift_bottom() { return {}; }

struct LiftedPoset {
  Poset base;    // the unlifted carrier
  Poset lifted;  // base plus fresh bottom at index 0
  // Index of base element b inside `lifted` (always b + 1; kept explicit so
  // callers never bake in the offset).
  std::vector<Elem> embed;

  Elem bottom_index() const { return 0; }
  Elem index_of(const PartialElement& pe) const;
  PartialElement element_at(Elem lifted_index) const;
};

// L of a discrete n-element set.  The singleton's element is labeled ⋆ (its
// lift prints η⋆); larger sets use letters.
LiftedPoset lift_set(int n);
// L of an arbitrary finite poset: new bottom below everything, base order
// kept above it.
LiftedPoset lift_poset(const Poset& p);

PartialElement eta(const LiftedPoset& lp, Elem base_element);

// Kleisli extension f^# : L(X) → L(Y) of f : X → L(Y) given as a table of
// partial elements: ⊥ ↦ ⊥, η(x) ↦ f(x).
MonotoneMap kleisli_extend(const LiftedPoset& lx, const LiftedPoset& ly,
                           std::span<const PartialElement> f);

// Functor action L(f) for f : X → Y (a plain table on bases).
MonotoneMap lift_functor(const LiftedPoset& lx, const LiftedPoset& ly,
                         std::span<const Elem> f);

// Unique strict continuous extension L(X) → D of f : X → D, D pointed
// (NotPointed otherwise).  X is a set, so f is a plain table.
MonotoneMap free_extension_set(const LiftedPoset& lx, const Poset& d,
                               std::span<const Elem> f);

// Unique strict continuous extension L(D) → E of a continuous f : D → E
// with E pointed.  Generalizes free_extension_set (lift_set = lift of the
// discrete order).
MonotoneMap free_extension_dcpo(const LiftedPoset& ld, const MonotoneMap& f);

// Monad laws (unit, Kleisli-of-unit, associativity) brute-forced over all
// Kleisli tables between lifts of sets of size ≤ max_base_size.
Report verify_monad_laws(int max_base_size);

}  // namespace dt
