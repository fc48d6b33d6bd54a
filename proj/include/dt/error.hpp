#pragma once
// Error reporting.  Every failed validation throws dt::Error carrying a
// stable code plus a machine-readable witness (the indices that broke the
// law), so callers and the CLI can print counterexamples verbatim.

#include <stdexcept>
#include <string>

#include "json.hpp"

namespace dt {

enum class Errc {
  reflexivity_violation,
  antisymmetry_violation,
  transitivity_violation,
  index_out_of_range,
  size_limit_exceeded,
  budget_exceeded,
  depth_limit_exceeded,
  not_monotone,
  source_target_mismatch,
  not_pointed,
  not_endo,
  not_section,
  not_deflation,
  not_ascending,
  not_stabilized,
  not_semidirected,
  not_directed,
  ep_law_violation,
  compatibility_violation,
  cocone_violation,
  cone_violation,
  level_out_of_range,
  unbound_variable,
  syntax_error,
  bad_input,
  internal_invariant,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, nlohmann::json witness, const std::string& message);

  Errc code() const { return code_; }
  const nlohmann::json& witness() const { return witness_; }

 private:
  Errc code_;
  nlohmann::json witness_;
};

[[noreturn]] void fail(Errc code, nlohmann::json witness, const std::string& message);

}  // namespace dt
