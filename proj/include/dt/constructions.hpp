#pragma once
// Finite products and exponentials, evaluation/currying, and Kleene least
// fixed points.  Exponential elements are explicit monotone tables held in a
// canonical order (lexicographic over a fixed linear extension of the
// domain), which makes indices stable across runs and lets membership be a
// binary search.

#include <memory>

#include "dt/map.hpp"

namespace dt {

struct ProductPoset {
  Poset left;
  Poset right;
  Poset poset;  // carrier of size |left|·|right|, index = i·|right| + j
  MonotoneMap pr1;
  MonotoneMap pr2;

  Elem pair_index(Elem i, Elem j) const { return i * right.size() + j; }
  std::pair<Elem, Elem> unpair(Elem x) const {
    return {x / right.size(), x % right.size()};
  }
};

// Componentwise order; BudgetExceeded when |left|·|right| > budget.
ProductPoset product(const Poset& left, const Poset& right, long budget = 200000);

// Unique mediating map ⟨f, g⟩ : E → left × right for f : E → left,
// g : E → right with a common source.
MonotoneMap pair_mediator(const ProductPoset& prod, const MonotoneMap& f,
                          const MonotoneMap& g);

class ExponentialPoset {
 public:
  Poset dom;
  Poset cod;
  Poset poset;  // one element per continuous map dom → cod

  int size() const { return poset.size(); }
  const std::vector<Elem>& table_of(Elem f) const;
  // Canonical index of a table; nullopt when the table is not monotone (or
  // not a table over dom at all).
  std::optional<Elem> index_of(std::span<const Elem> table) const;
  MonotoneMap map_at(Elem f) const;

  std::shared_ptr<const std::vector<std::vector<Elem>>> tables;
  std::vector<Elem> order;  // linear extension of dom fixing the enumeration
};

// All continuous maps dom → cod, pointwise order.  Small carriers (≤ 1024
// elements) are densified for O(1) order queries; larger ones keep the
// implicit pointwise order.  BudgetExceeded via the enumeration budget.
ExponentialPoset exponential(const Poset& dom, const Poset& cod, long budget = 200000);

struct EvalMap {
  ProductPoset domain;  // exp × dom
  MonotoneMap map;      // (f, x) ↦ f(x)
};
EvalMap eval_map(const ExponentialPoset& exp, long budget = 200000);

// curry(f) : D' → E^D for f : D' × D → E presented on `prod` = D' × D.
MonotoneMap curry(const ProductPoset& prod, const ExponentialPoset& exp,
                  const MonotoneMap& f);

// Least fixed point of a continuous endomap on a pointed poset by Kleene
// iteration from ⊥; stabilizes within |P| steps.  NotPointed / NotEndo.
Elem lfp(const MonotoneMap& f);

// f ↦ lfp(f) as a map P^P → P (continuous; certified by construction and
// validated when the function space is desk-scale).
MonotoneMap lfp_map(const ExponentialPoset& endos);

}  // namespace dt
