#pragma once
// Untyped λ-terms and their denotation in the reflexive tower at a cutoff.
// Grammar:  term ::= λ id . term | term term | id | ( term )
// with λ written "\" or "λ", application left-associative, and abstraction
// bodies extending as far right as possible.

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "dt/dinfty.hpp"

namespace dt {

struct LambdaTerm;
using TermPtr = std::shared_ptr<const LambdaTerm>;

struct LambdaTerm {
  enum class Kind { variable, abstraction, application };
  Kind kind;
  std::string name;  // variable name or binder
  TermPtr fn;        // abstraction body, or application head
  TermPtr arg;       // application argument
};

TermPtr make_var(std::string name);
TermPtr make_lam(std::string binder, TermPtr body);
TermPtr make_app(TermPtr fn, TermPtr arg);

// Throws SyntaxError with the byte position and what was expected there.
TermPtr parse_term(std::string_view source);

std::string to_string(const LambdaTerm& term);

using Environment = std::map<std::string, CompactElement>;

// Denotation at cutoff n (needs n + 1 ≤ depth): variables look up the
// environment (UnboundVariable otherwise); application is phi_apply after
// phi; abstraction tabulates the body over D_n, checks monotonicity of the
// table (a non-monotone table is a hard internal failure, surfaced as
// NotMonotone rather than silently repaired), and returns the canonical
// compact of the resulting element of D_{n+1}.
CompactElement denote(const DnTower& t, const LambdaTerm& term,
                      const Environment& env, int cutoff);

}  // namespace dt
