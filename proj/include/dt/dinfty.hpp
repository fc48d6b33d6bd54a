#pragma once
// The reflexive tower D_0 = L(1), D_{n+1} = D_n^{D_n}, with step pairs
// ε_n(f) = ε_{n-1} ∘ f ∘ π_{n-1} and π_n(g) = π_{n-1} ∘ g ∘ ε_{n-1}, and the
// finitary Φ/Ψ witnesses of D_∞ ≅ D_∞^{D_∞} acting on compact elements.
//
// A FinFun (n ≥ 1, f ∈ D_n) denotes the finitary function Φ_n(f) =
// ε_{n-1,∞} ∘ f ∘ π_{n-1,∞}; like compacts, FinFuns canonicalize by lowering
// through ε-preimages (but never below level 1).

#include "dt/bilimit.hpp"
#include "dt/constructions.hpp"
#include "dt/lifting.hpp"

namespace dt {

struct FinFun {
  int level = 1;  // ≥ 1
  Elem elem = 0;  // index into D_level

  friend bool operator==(const FinFun&, const FinFun&) = default;
};

class DnTower {
 public:
  const Tower& tower() const { return tower_; }
  int depth() const { return tower_.depth(); }
  const Poset& level(int n) const { return tower_.level(n); }
  const LiftedPoset& base() const { return base_; }
  // Exponential structure of level n ≥ 1 (D_n as D_{n-1}^{D_{n-1}}).
  const ExponentialPoset& exp_at(int n) const;

  DnTower(Tower t, LiftedPoset base, std::vector<ExponentialPoset> exps);

 private:
  Tower tower_;
  LiftedPoset base_;
  std::vector<ExponentialPoset> exps_;
};

// Builds levels, steps, and the fully validated tower.  depth ≥ 4 needs
// allow_deep and still fails on the enumeration budget (D_4 would enumerate
// monotone self-maps of a 120549-element poset).
DnTower build_dn_tower(int depth, long budget = 200000, bool allow_deep = false);

// ⊥_∞ = the level-0 bottom; least among all compacts.
CompactElement dinfty_bottom(const DnTower& t);

// Φ on compacts: level ≥ 1 is already a function; level 0 goes up one step.
FinFun phi(const DnTower& t, const CompactElement& c);

// Application Φ_n(f)(c) = embed(n-1, f(project(c, n-1))).
CompactElement phi_apply(const DnTower& t, const FinFun& f, const CompactElement& c);

// Ψ on finitary functions: the canonical compact at (level, elem).
CompactElement psi(const DnTower& t, const FinFun& f);

// Level-n table of Ψ(F): d ↦ project(F(embed(n-1, d)), n-1), indexed in D_n.
// n = 0 is π_0 ∘ Ψ_1.
Elem psi_n(const DnTower& t, int n, const FinFun& f);

FinFun canonical_finfun(const DnTower& t, const FinFun& f);
bool finfun_leq(const DnTower& t, const FinFun& a, const FinFun& b);
std::vector<FinFun> canonical_finfuns(const DnTower& t, int max_level);

// Roundtrips (ψ∘φ = id on compacts, φ∘ψ = id on FinFuns) and mutual
// order-isomorphism, per level up to max_level.  Pairwise order checks are
// capped at pair_bound representatives per level with a note.
Report verify_iso(const DnTower& t, int max_level, int pair_bound = 2000);

}  // namespace dt
