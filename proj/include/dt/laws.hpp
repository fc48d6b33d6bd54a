#pragma once
// Brute-force law suites behind the `laws` CLI subcommand.  Each suite
// sweeps exhaustively generated inputs and reports one named check per law,
// with a JSON witness on failure.

#include "dt/report.hpp"

namespace dt {

Report laws_poset(int max_size = 4);        // order axioms, sup clauses, directedness
Report laws_continuity(int max_size = 3);   // monotone ⇔ Scott-continuous; enumeration completeness
Report laws_monad(int max_size = 3);        // lifting monad laws
Report laws_free(int max_size = 4);         // freeness: unique strict continuous extension
Report laws_product(int max_size = 3);      // product universal property
Report laws_exponential(int max_size = 3);  // exponential universal property
Report laws_lfp(int max_size = 4);          // lfp properties + continuity of lfp_map

}  // namespace dt
