#include "dt/lambda.hpp"

#include <cctype>

namespace dt {

TermPtr make_var(std::string name) {
  return std::make_shared<LambdaTerm>(
      LambdaTerm{LambdaTerm::Kind::variable, std::move(name), nullptr, nullptr});
}

TermPtr make_lam(std::string binder, TermPtr body) {
  return std::make_shared<LambdaTerm>(LambdaTerm{LambdaTerm::Kind::abstraction,
                                                 std::move(binder), std::move(body),
                                                 nullptr});
}

TermPtr make_app(TermPtr fn, TermPtr arg) {
  return std::make_shared<LambdaTerm>(
      LambdaTerm{LambdaTerm::Kind::application, {}, std::move(fn), std::move(arg)});
}

// --- parser --------------------------------------------------------------

namespace {

struct Parser {
  std::string_view src;
  std::size_t pos = 0;

  [[noreturn]] void expected(const std::string& what) {
    fail(Errc::syntax_error, {{"position", pos}, {"expected", what}},
         "while parsing a term");
  }

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool at_lambda() {
    if (pos < src.size() && src[pos] == '\\') return true;
    // UTF-8 "λ" = 0xCE 0xBB
    return pos + 1 < src.size() && static_cast<unsigned char>(src[pos]) == 0xCE &&
           static_cast<unsigned char>(src[pos + 1]) == 0xBB;
  }

  void eat_lambda() { pos += (src[pos] == '\\') ? 1 : 2; }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_cont(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  std::string identifier() {
    skip_ws();
    if (pos >= src.size() || !ident_start(src[pos])) expected("identifier");
    std::size_t start = pos;
    while (pos < src.size() && ident_cont(src[pos])) ++pos;
    return std::string(src.substr(start, pos - start));
  }

  TermPtr term() {
    skip_ws();
    if (at_lambda()) {
      eat_lambda();
      std::string binder = identifier();
      skip_ws();
      if (pos >= src.size() || src[pos] != '.') expected("'.'");
      ++pos;
      return make_lam(std::move(binder), term());  // body is maximal
    }
    return application();
  }

  TermPtr application() {
    TermPtr head = atom(true);
    while (true) {
      skip_ws();
      if (at_lambda()) {  // λ binds the rest: e.g.  f λx.x  ≡  f (λx.x)
        head = make_app(std::move(head), term());
        return head;
      }
      TermPtr next = atom(false);
      if (!next) return head;
      head = make_app(std::move(head), std::move(next));
    }
  }

  // required: fail instead of returning null when no atom starts here.
  TermPtr atom(bool required) {
    skip_ws();
    if (pos >= src.size()) {
      if (required) expected("term");
      return nullptr;
    }
    char c = src[pos];
    if (c == '(') {
      ++pos;
      TermPtr inner = term();
      skip_ws();
      if (pos >= src.size() || src[pos] != ')') expected("')'");
      ++pos;
      return inner;
    }
    if (ident_start(c)) return make_var(identifier());
    if (required) expected("term");
    return nullptr;
  }
};

}  // namespace

TermPtr parse_term(std::string_view source) {
  Parser p{source};
  TermPtr t = p.term();
  p.skip_ws();
  if (p.pos != source.size()) p.expected("end of input");
  return t;
}

std::string to_string(const LambdaTerm& term) {
  switch (term.kind) {
    case LambdaTerm::Kind::variable:
      return term.name;
    case LambdaTerm::Kind::abstraction:
      return "\\" + term.name + "." + to_string(*term.fn);
    case LambdaTerm::Kind::application: {
      std::string f = to_string(*term.fn);
      std::string a = to_string(*term.arg);
      if (term.fn->kind == LambdaTerm::Kind::abstraction) f = "(" + f + ")";
      if (term.arg->kind != LambdaTerm::Kind::variable) a = "(" + a + ")";
      return f + " " + a;
    }
  }
  return "?";
}

// --- denotation -----------------------------------------------------------

CompactElement denote(const DnTower& t, const LambdaTerm& term,
                      const Environment& env, int cutoff) {
  if (cutoff < 0 || cutoff + 1 > t.depth())
    fail(Errc::level_out_of_range, {{"cutoff", cutoff}, {"depth", t.depth()}},
         "denotation needs cutoff + 1 <= depth");
  switch (term.kind) {
    case LambdaTerm::Kind::variable: {
      auto it = env.find(term.name);
      if (it == env.end())
        fail(Errc::unbound_variable, {{"name", term.name}}, "free variable");
      return it->second;
    }
    case LambdaTerm::Kind::application: {
      CompactElement f = denote(t, *term.fn, env, cutoff);
      CompactElement a = denote(t, *term.arg, env, cutoff);
      return phi_apply(t, phi(t, f), a);
    }
    case LambdaTerm::Kind::abstraction: {
      const Poset& dn = t.level(cutoff);
      std::vector<Elem> table(dn.size());
      Environment inner = env;
      for (Elem d = 0; d < dn.size(); ++d) {
        inner[term.name] = embed_compact(t.tower(), cutoff, d);
        CompactElement body = denote(t, *term.fn, inner, cutoff);
        table[d] = project_compact(t.tower(), body, cutoff);
      }
      // The table must be monotone; anything else is a soundness bug and is
      // reported loudly instead of being repaired.
      for (Elem i = 0; i < dn.size(); ++i)
        for (Elem j = 0; j < dn.size(); ++j)
          if (dn.leq(i, j) && !dn.leq(table[i], table[j]))
            fail(Errc::not_monotone, {{"i", i}, {"j", j}},
                 "abstraction produced a non-monotone table");
      auto idx = t.exp_at(cutoff + 1).index_of(table);
      if (!idx)
        fail(Errc::internal_invariant, nullptr,
             "monotone table missing from the exponential");
      return psi(t, FinFun{cutoff + 1, *idx});
    }
  }
  fail(Errc::internal_invariant, nullptr, "unreachable term kind");
}

}  // namespace dt
