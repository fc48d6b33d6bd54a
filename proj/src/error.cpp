#include "dt/error.hpp"

namespace dt {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::reflexivity_violation: return "ReflexivityViolation";
    case Errc::antisymmetry_violation: return "AntisymmetryViolation";
    case Errc::transitivity_violation: return "TransitivityViolation";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::size_limit_exceeded: return "SizeLimitExceeded";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::depth_limit_exceeded: return "DepthLimitExceeded";
    case Errc::not_monotone: return "NotMonotone";
    case Errc::source_target_mismatch: return "SourceTargetMismatch";
    case Errc::not_pointed: return "NotPointed";
    case Errc::not_endo: return "NotEndo";
    case Errc::not_section: return "NotSection";
    case Errc::not_deflation: return "NotDeflation";
    case Errc::not_ascending: return "NotAscending";
    case Errc::not_stabilized: return "NotStabilized";
    case Errc::not_semidirected: return "NotSemidirected";
    case Errc::not_directed: return "NotDirected";
    case Errc::ep_law_violation: return "EpLawViolation";
    case Errc::compatibility_violation: return "CompatibilityViolation";
    case Errc::cocone_violation: return "CoconeViolation";
    case Errc::cone_violation: return "ConeViolation";
    case Errc::level_out_of_range: return "LevelOutOfRange";
    case Errc::unbound_variable: return "UnboundVariable";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::bad_input: return "BadInput";
    case Errc::internal_invariant: return "InternalInvariant";
  }
  return "UnknownError";
}

namespace {
std::string format_message(Errc code, const nlohmann::json& witness,
                           const std::string& message) {
  std::string out = errc_name(code);
  if (!witness.is_null()) {
    out += " ";
    out += witness.dump();
  }
  if (!message.empty()) {
    out += ": ";
    out += message;
  }
  return out;
}
}  // namespace

Error::Error(Errc code, nlohmann::json witness, const std::string& message)
    : std::runtime_error(format_message(code, witness, message)),
      code_(code),
      witness_(std::move(witness)) {}

void fail(Errc code, nlohmann::json witness, const std::string& message) {
  throw Error(code, std::move(witness), message);
}

}  // namespace dt
