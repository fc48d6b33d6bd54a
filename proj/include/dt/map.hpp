#pragma once
// Monotone (equivalently, Scott-continuous) maps between finite posets,
// stored as explicit tables.  checked() validates monotonicity pairwise;
// trusted() is for maps that are monotone by construction (compositions,
// canonical embeddings/projections) where a quadratic re-check would be
// wasteful or infeasible.

#include <optional>
#include <span>
#include <vector>

#include "dt/poset.hpp"

namespace dt {

class MonotoneMap {
 public:
  // Validates table length, range, and monotonicity (NotMonotone(i,j) with
  // the first witnessing pair in scan order).
  static MonotoneMap checked(Poset source, Poset target, std::vector<Elem> table);
  // Skips the monotonicity scan; shape is still validated.
  static MonotoneMap trusted(Poset source, Poset target, std::vector<Elem> table);
  static MonotoneMap identity(Poset p);
  static MonotoneMap constant(Poset source, Poset target, Elem value);

  Elem operator()(Elem x) const;
  const std::vector<Elem>& table() const { return table_; }
  const Poset& source() const { return source_; }
  const Poset& target() const { return target_; }

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
    return a.table_ == b.table_ && a.source_.same_as(b.source_) &&
           a.target_.same_as(b.target_);
  }

 private:
  MonotoneMap(Poset s, Poset t, std::vector<Elem> tab);
  Poset source_, target_;
  std::vector<Elem> table_;
};

// g after f; throws SourceTargetMismatch when the carriers do not line up.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

// Exhaustive continuity check over all directed subsets of the source.
// Quantifies over 2^|source| subsets, so the source must fit under the bound
// (SizeLimitExceeded otherwise).  On finite posets this agrees with
// monotonicity; the agreement is itself a tested property.
bool is_scott_continuous(const MonotoneMap& m, int exhaustive_bound = 12);

// Also accepts raw tables (not necessarily monotone) for oracle comparisons.
bool table_is_scott_continuous(const Poset& source, const Poset& target,
                               std::span<const Elem> table,
                               int exhaustive_bound = 12);

bool is_strict(const MonotoneMap& m);     // NotPointed if either side lacks ⊥
bool is_deflation(const MonotoneMap& m);  // NotEndo unless source == target

struct EpPair {
  MonotoneMap e;  // embedding (section)
  MonotoneMap p;  // projection
};

// Checks p∘e = id (NotSection(x)) and e∘p ⊑ id (NotDeflation(y)).
EpPair validate_ep_pair(MonotoneMap e, MonotoneMap p);

// All monotone maps source → target in a canonical deterministic order:
// backtracking over a fixed linear extension of the source, candidate values
// ascending, so the output is lexicographic in linear-extension coordinates.
// Throws BudgetExceeded if the count (or the upfront |source|² guard)
// exceeds the budget.
std::vector<std::vector<Elem>> enumerate_monotone_tables(const Poset& source,
                                                         const Poset& target,
                                                         long budget = 200000);
std::vector<MonotoneMap> enumerate_continuous_maps(const Poset& source,
                                                   const Poset& target,
                                                   long budget = 200000);

// Order isomorphism test: returns the inverse map when m is a bijection
// whose inverse is monotone.
std::optional<MonotoneMap> is_isomorphism(const MonotoneMap& m);

// r∘s = id on s's source.
bool is_continuous_retract(const MonotoneMap& s, const MonotoneMap& r);

// Fixed linear extension used by the enumeration order: ascending down-set
// size, ties by index.
std::vector<Elem> linear_extension(const Poset& p);

}  // namespace dt
