#pragma once
// Finite posets with a decidable order.  A poset is an immutable value:
// copies share the underlying representation.  The order relation lives
// either in a dense bit matrix (anything desk-scale) or implicitly as the
// pointwise order of an exponential / componentwise order of a product, so
// large derived posets (the depth-3 function space has 120549 elements)
// never materialize a quadratic matrix.  All queries go through leq().

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dt/error.hpp"

namespace dt {

using Elem = int;

class Poset {
 public:
  Poset();  // the empty poset

  // Validates reflexivity, antisymmetry and transitivity; throws
  // ReflexivityViolation(i) / AntisymmetryViolation(i,j) /
  // TransitivityViolation(i,j,k) with the first witness in scan order.
  static Poset validated(int size, const std::vector<std::vector<bool>>& leq,
                         std::vector<std::string> labels = {});

  static Poset chain(int n);      // 0 < 1 < ... < n-1
  static Poset antichain(int n);  // discrete order

  // Trusted constructors for orders that are correct by construction.
  // `bits` is the row-major packed relation; callers guarantee the axioms.
  static Poset dense_trusted(int size, std::vector<std::uint64_t> bits,
                             std::vector<std::string> labels = {});
  // Pointwise order on explicit function tables over dom, with values in cod.
  static Poset exponential_order(
      Poset dom, Poset cod,
      std::shared_ptr<const std::vector<std::vector<Elem>>> tables);
  // Componentwise order on pairs, index = i * right.size() + j.
  static Poset product_order(Poset left, Poset right);

  int size() const;
  bool leq(Elem a, Elem b) const;
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  std::string label(Elem a) const;
  Poset with_labels(std::vector<std::string> labels) const;

  // Carrier identity: same size and same order relation.  Shared
  // representations short-circuit; labels are cosmetic and ignored.
  bool same_as(const Poset& other) const;

  // Re-asserts the three order axioms; throws like validated().  Guarded by
  // a size bound (the check is cubic).
  void check_axioms(int max_size = 4096) const;

  bool is_dense() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit Poset(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

// --- subsets -------------------------------------------------------------
// Subsets are passed as index vectors and treated as sets; members must be
// in range (IndexOutOfRange otherwise).

bool is_directed_subset(const Poset& p, std::span<const Elem> subset);
bool is_semidirected_subset(const Poset& p, std::span<const Elem> subset);

// Least upper bound if one exists.
std::optional<Elem> supremum_of(const Poset& p, std::span<const Elem> subset);

std::optional<Elem> least_element(const Poset& p);
bool is_maximal(const Poset& p, Elem x);

// Sup of a stabilized ascending chain given as a finite prefix.  Throws
// NotAscending(n) at the first descent; NotStabilized when the prefix does
// not certify stabilization (certificate: final repeat, or the last entry is
// maximal and hence cannot grow).
Elem omega_chain_sup(const Poset& p, std::span<const Elem> chain);

// Sup of a semidirected family in a pointed poset, computed as
// sup(subset ∪ {bottom}).  Throws NotPointed / NotSemidirected.
Elem semidirected_sup(const Poset& p, std::span<const Elem> subset);

// Transitive reduction: all pairs (a, b) with a covered by b.
std::vector<std::pair<Elem, Elem>> hasse_covers(const Poset& p);

// Lattice of subsets of {0..n-1} ordered by inclusion; element index is the
// subset bitmask.  Throws SizeLimitExceeded above the bound.
Poset powerset_lattice(int n, int max_n = 6);

}  // namespace dt
