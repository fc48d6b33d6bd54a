#pragma once
// Exhaustive generation of small posets, used by the law suites.  Labeled
// posets are generated by assigning each unordered pair one of three states
// (incomparable, <, >) and filtering for transitivity; representatives
// reduce the labeled list modulo order-isomorphism.

#include "dt/poset.hpp"

namespace dt {

// All labeled posets on {0..n-1}; n ≤ 5 (counts 1, 1, 3, 19, 219, 4231).
std::vector<Poset> all_posets(int n);

// One representative per isomorphism class; n ≤ 5 (counts 1, 1, 2, 5, 16, 63).
std::vector<Poset> poset_iso_representatives(int n);

// All |cod|^|dom| tables, lexicographic, for naive-filter oracles.
std::vector<std::vector<Elem>> all_tables(int dom_size, int cod_size);

}  // namespace dt
