#pragma once
// Truncated embedding-projection towers and their bilimit of compact
// elements.  A tower holds levels D_0..D_N, one e-p pair per step, and all
// derived composites ε_{i,j}, π_{i,j}.  Compact elements are (level, index)
// pairs kept in canonical lowest-level form: a representative is lowered
// through ε-preimages until it is no longer in the image of the previous
// step's embedding.  Tower is an immutable value; copies share state.

#include <span>

#include "dt/map.hpp"
#include "dt/report.hpp"

namespace dt {

struct CompactElement {
  int level = 0;
  Elem elem = 0;

  friend bool operator==(const CompactElement&, const CompactElement&) = default;
};

class Tower {
 public:
  // Derives composites and validates every invariant: each step (and each
  // composite pair) is an e-p pair, composites satisfy the compatibility
  // equations, and the connecting family κ is constant.  Throws
  // EpLawViolation / CompatibilityViolation with witnesses.
  static Tower build(std::vector<Poset> levels, std::vector<EpPair> steps);

  // Derives composites but skips law validation.  For deserialization and
  // fault-injection tests; run verify() afterwards.
  static Tower assemble_unchecked(std::vector<Poset> levels, std::vector<EpPair> steps);

  int depth() const;
  const Poset& level(int n) const;
  const std::vector<EpPair>& steps() const;
  const MonotoneMap& eps(int i, int j) const;  // ε_{i,j} : D_i → D_j, i ≤ j
  const MonotoneMap& pis(int i, int j) const;  // π_{i,j} : D_j → D_i, i ≤ j
  // Preimage of x under the step embedding ε_{n-1,n} (n ≥ 1), if any.
  std::optional<Elem> step_preimage(int n, Elem x) const;

  // Full law suite as a report (never throws on law failure); quadratic and
  // cubic sweeps are capped at `pair_bound` compacts with an explicit note.
  Report verify(int pair_bound = 2000) const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
  explicit Tower(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static std::shared_ptr<const Data> derive(std::vector<Poset> levels,
                                            std::vector<EpPair> steps);
  void check_level(int n) const;
};

// π_{j,max(i,j)} ∘ ε_{i,max(i,j)} : D_i → D_j (the connecting map).
MonotoneMap rho(const Tower& t, int i, int j);

// κ^x_{i,j}(k) = π_{j,k}(ε_{i,k}(x)) must not depend on k ≥ max(i,j).
bool verify_kappa_constant(const Tower& t, int i, int j,
                           nlohmann::json* witness = nullptr);

// Canonical compact for level-n element x (lowers through ε-preimages).
CompactElement embed_compact(const Tower& t, int n, Elem x);
// Component of c at level i: ρ_{level(c), i}(elem(c)).
Elem project_compact(const Tower& t, const CompactElement& c, int i);
// Compare at the common upper level via ε.
bool compact_leq(const Tower& t, const CompactElement& a, const CompactElement& b);
// Sup of a nonempty family directed under compact_leq: raise everything to
// the max level, take supremum_of there, re-canonicalize.  NotDirected
// otherwise.
CompactElement compact_sup(const Tower& t, std::span<const CompactElement> s);

// All canonical compacts of level ≤ max_level, by level then index.
std::vector<CompactElement> canonical_compacts(const Tower& t, int max_level);

// Mediating map out of the bilimit for a cocone g_i : D_i → E
// (g_i = g_j ∘ ε_{i,j}; CoconeViolation(i,j,x) otherwise).
class ColimitMediator {
 public:
  ColimitMediator(Poset target, std::vector<MonotoneMap> cocone);
  Elem operator()(const CompactElement& c) const;
  const Poset& target() const { return target_; }

 private:
  Poset target_;
  std::vector<MonotoneMap> cocone_;
};
ColimitMediator colimit_mediator(const Tower& t, const Poset& e,
                                 std::vector<MonotoneMap> cocone);

// Mediating map into the bilimit for a cone f_i : E → D_i
// (f_i = π_{i,j} ∘ f_j; ConeViolation(i,j,y) otherwise).  The image of y is
// the thread (f_0(y), ..., f_N(y)); at finite depth every thread is the
// component family of the canonical compact embed(N, f_N(y)).
class LimitMediator {
 public:
  LimitMediator(Tower t, std::vector<MonotoneMap> cone);
  std::vector<Elem> thread_of(Elem y) const;
  CompactElement compact_of(Elem y) const;

 private:
  Tower tower_;
  std::vector<MonotoneMap> cone_;
};
LimitMediator limit_mediator(const Tower& t, const Poset& e,
                             std::vector<MonotoneMap> cone);

}  // namespace dt
