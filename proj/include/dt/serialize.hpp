#pragma once
// JSON and DOT interchange.  Poset files carry the full relation (every
// related pair, reflexive pairs included, sorted lexicographically), so
// output is byte-identical across runs.  Tower files inline small levels
// and record large exponential levels as {"kind": "exponential", "dom": i,
// "cod": j} references to earlier levels; reconstruction re-enumerates the
// exponential, whose canonical element order makes indices stable.

#include <optional>

#include "dt/dinfty.hpp"

namespace dt {

nlohmann::json poset_to_json(const Poset& p);
Poset poset_from_json(const nlohmann::json& j);  // validates the axioms

nlohmann::json map_to_json(const MonotoneMap& m);  // inline source/target

nlohmann::json exponential_to_json(const ExponentialPoset& e);
nlohmann::json product_to_json(const ProductPoset& p);

std::string poset_to_dot(const Poset& p);  // one edge per Hasse cover

nlohmann::json tower_to_json(const Tower& t);
nlohmann::json dn_tower_to_json(const DnTower& t);

struct TowerBundle {
  Tower tower;
  // Present when the file describes a reflexive tower (level 0 = L(1),
  // level n+1 = D_n^{D_n}); required by the iso/denotation machinery.
  std::optional<DnTower> dn;
  std::vector<std::string> notes;  // e.g. skipped monotonicity re-checks
};

// Parses and reconstructs; step maps are re-validated for monotonicity up
// to the pair-scan bound (a note is recorded above it).  Law validation is
// NOT run here — callers decide between Tower::verify() and trusting.
TowerBundle tower_from_json(const nlohmann::json& j, long budget = 200000);

}  // namespace dt
