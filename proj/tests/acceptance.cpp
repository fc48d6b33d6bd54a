// Acceptance gate: twelve end-to-end criteria, one pass/fail line each.
// Runtime caps are pinned here in code; a criterion that exceeds its cap
// fails even if its checks succeed.  Exit status = number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dt/constructions.hpp"
#include "dt/enumerate.hpp"
#include "dt/lambda.hpp"
#include "dt/laws.hpp"
#include "dt/lifting.hpp"
#include "dt/serialize.hpp"

using dt::CompactElement;
using dt::DnTower;
using dt::Elem;
using dt::MonotoneMap;
using dt::Poset;

namespace {

bool naive_monotone(const Poset& p, const Poset& q, const std::vector<Elem>& t) {
  for (Elem i = 0; i < p.size(); ++i)
    for (Elem j = 0; j < p.size(); ++j)
      if (p.leq(i, j) && !q.leq(t[i], t[j])) return false;
  return true;
}

// Criterion 1: the first three tower levels have exactly the cardinalities
// that brute-force enumeration of monotone self-maps predicts.
bool tower_cardinalities() {
  DnTower t = dt::build_dn_tower(2);
  if (t.level(0).size() != 2) return false;

  // oracle for |D_1|: filter all tables over the 2-chain
  Poset c2 = Poset::chain(2);
  std::vector<std::vector<Elem>> d1;
  for (const auto& tab : dt::all_tables(2, 2))
    if (naive_monotone(c2, c2, tab)) d1.push_back(tab);
  if (d1.size() != static_cast<std::size_t>(t.level(1).size())) return false;

  // oracle for |D_2|: order d1 pointwise, filter all 27 tables over it
  auto d1_leq = [&](Elem a, Elem b) {
    return d1[a][0] <= d1[b][0] && d1[a][1] <= d1[b][1];
  };
  std::size_t d2 = 0;
  for (const auto& tab : dt::all_tables(3, 3)) {
    bool mono = true;
    for (Elem a = 0; a < 3; ++a)
      for (Elem b = 0; b < 3; ++b)
        if (d1_leq(a, b) && !d1_leq(tab[a], tab[b])) mono = false;
    if (mono) ++d2;
  }
  return d2 == 10 && t.level(2).size() == 10 && t.level(1).size() == 3;
}

// Criterion 2: every derived pair (eps, pis) between levels of the depth-2
// tower satisfies the section and deflation laws, checked exactly.
bool step_laws() {
  DnTower t = dt::build_dn_tower(2);
  for (int i = 0; i <= 2; ++i)
    for (int j = i; j <= 2; ++j) {
      try {
        dt::validate_ep_pair(t.tower().eps(i, j), t.tower().pis(i, j));
      } catch (const dt::Error&) {
        return false;
      }
    }
  return true;
}

// Criterion 3: the connecting family between any two levels of the depth-3
// tower is independent of the stage it is computed through.
bool connecting_family_constant() {
  DnTower t = dt::build_dn_tower(3);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      if (!dt::verify_kappa_constant(t.tower(), i, j)) return false;
  return true;
}

// Criterion 4: monad laws for lifting, brute-forced over all Kleisli tables
// between lifts of sets with at most three elements.
bool monad_laws() { return dt::verify_monad_laws(3).ok(); }

// Criterion 5: the strict extension along eta exists and is unique, for
// every set of size <= 2 and every pointed labeled poset of size <= 4.
bool free_extension_uniqueness() { return dt::laws_free(4).ok(); }

// Criterion 6: Kleene iteration yields the least fixed point for every
// monotone endomap of every pointed labeled poset of size <= 5, and the
// fixed-point operator is itself continuous on small function spaces.
bool least_fixed_points() { return dt::laws_lfp(5).ok(); }

// Criterion 7: phi and psi witness the depth-2 function-space isomorphism:
// both roundtrips are identities and both directions preserve and reflect
// the order.
bool function_space_isomorphism() {
  DnTower t = dt::build_dn_tower(2);
  return dt::verify_iso(t, 2).ok();
}

// Criterion 8: for each n <= 2, the compacts of level <= n reconstruct D_n
// up to order isomorphism via their level-n components.
bool truncation_reconstruction() {
  DnTower t = dt::build_dn_tower(2);
  for (int n = 0; n <= 2; ++n) {
    auto compacts = dt::canonical_compacts(t.tower(), n);
    if (compacts.size() != static_cast<std::size_t>(t.level(n).size())) return false;
    std::vector<Elem> image;
    std::vector<bool> seen(t.level(n).size(), false);
    for (const auto& c : compacts) {
      Elem x = dt::project_compact(t.tower(), c, n);
      if (seen[x]) return false;
      seen[x] = true;
      image.push_back(x);
    }
    for (std::size_t a = 0; a < compacts.size(); ++a)
      for (std::size_t b = 0; b < compacts.size(); ++b)
        if (dt::compact_leq(t.tower(), compacts[a], compacts[b]) !=
            t.level(n).leq(image[a], image[b]))
          return false;
  }
  return true;
}

// Criterion 9: universal properties of products and exponentials, swept over
// all labeled posets of size <= 3 in every role.
bool universal_properties() {
  return dt::laws_product(3).ok() && dt::laws_exponential(3).ok();
}

// Criterion 10: monotone and Scott-continuous agree in both directions,
// checked against the naive table filter over representatives of size <= 4.
bool continuity_agreement() {
  for (int n = 0; n <= 4; ++n)
    for (const Poset& p : dt::poset_iso_representatives(n))
      for (int m = 0; m <= 4; ++m)
        for (const Poset& q : dt::poset_iso_representatives(m))
          for (const auto& tab : dt::all_tables(p.size(), q.size()))
            if (naive_monotone(p, q, tab) != dt::table_is_scott_continuous(p, q, tab))
              return false;
  return dt::laws_continuity(4).ok();
}

// Independent evaluator for criterion 11: interprets a term directly as an
// element of D_{cutoff+1} using only step maps and exponential tables.
Elem eval_direct(const DnTower& t, const dt::LambdaTerm& term,
                 const std::map<std::string, Elem>& env, int level) {
  const dt::Tower& tw = t.tower();
  switch (term.kind) {
    case dt::LambdaTerm::Kind::variable:
      return env.at(term.name);
    case dt::LambdaTerm::Kind::application: {
      Elem f = eval_direct(t, *term.fn, env, level);
      Elem a = eval_direct(t, *term.arg, env, level);
      Elem rd = t.exp_at(level).table_of(f)[tw.pis(level - 1, level)(a)];
      return tw.eps(level - 1, level)(rd);
    }
    case dt::LambdaTerm::Kind::abstraction: {
      std::vector<Elem> table(t.level(level - 1).size());
      for (Elem d = 0; d < t.level(level - 1).size(); ++d) {
        auto inner = env;
        inner[term.name] = tw.eps(level - 1, level)(d);
        table[d] = tw.pis(level - 1, level)(eval_direct(t, *term.fn, inner, level));
      }
      return *t.exp_at(level).index_of(table);
    }
  }
  return 0;
}

// Criterion 11: denotations of the identity and of the divergent
// self-application come out right at cutoffs 1 and 2, and agree with the
// independent fixed-level evaluator.
bool term_denotation() {
  DnTower t2 = dt::build_dn_tower(2);
  dt::TermPtr id = dt::parse_term("\\x.x");
  dt::TermPtr omega = dt::parse_term("(\\x.x x) (\\x.x x)");
  dt::TermPtr self = dt::parse_term("\\x.x x");

  CompactElement idc = dt::denote(t2, *id, {}, 1);
  if (!(idc == CompactElement{2, 4})) return false;
  if (t2.exp_at(2).table_of(4) != std::vector<Elem>{0, 1, 2}) return false;
  if (!(dt::denote(t2, *omega, {}, 1) == CompactElement{0, 0})) return false;

  for (const dt::TermPtr& term : {id, omega, self}) {
    CompactElement got = dt::denote(t2, *term, {}, 1);
    if (dt::project_compact(t2.tower(), got, 2) != eval_direct(t2, *term, {}, 2))
      return false;
  }

  DnTower t3 = dt::build_dn_tower(3);
  if (!(dt::denote(t3, *omega, {}, 2) == CompactElement{0, 0})) return false;
  return dt::project_compact(t3.tower(), dt::denote(t3, *id, {}, 2), 3) ==
         eval_direct(t3, *id, {}, 3);
}

// Criterion 12: in the powerset lattice, the supremum of every family of
// subsets is the union, for ground sets of size <= 3.
bool powerset_suprema() {
  for (int n = 0; n <= 3; ++n) {
    Poset p = dt::powerset_lattice(n);
    int sz = p.size();
    for (std::uint32_t family = 0; family < (1u << sz); ++family) {
      std::vector<Elem> subset;
      Elem unioned = 0;
      for (Elem i = 0; i < sz; ++i)
        if (family & (1u << i)) {
          subset.push_back(i);
          unioned |= i;
        }
      auto sup = dt::supremum_of(p, subset);
      if (!sup || *sup != unioned) return false;
    }
  }
  return true;
}

struct Criterion {
  int number;
  const char* name;
  double cap_seconds;  // <= 0: no cap
  std::function<bool()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "tower-cardinalities", 1.0, tower_cardinalities},
      {2, "step-laws", 0, step_laws},
      {3, "connecting-family-constant", 0, connecting_family_constant},
      {4, "monad-laws", 10.0, monad_laws},
      {5, "free-extension-uniqueness", 0, free_extension_uniqueness},
      {6, "least-fixed-points", 0, least_fixed_points},
      {7, "function-space-isomorphism", 5.0, function_space_isomorphism},
      {8, "truncation-reconstruction", 0, truncation_reconstruction},
      {9, "universal-properties", 0, universal_properties},
      {10, "continuity-agreement", 0, continuity_agreement},
      {11, "term-denotation", 5.0, term_denotation},
      {12, "powerset-suprema", 0, powerset_suprema},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.cap_seconds > 0 && secs > c.cap_seconds) {
      ok = false;
      detail = "exceeded the " + std::to_string(c.cap_seconds) + "s cap";
    }
    std::printf("%s %2d %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.number, c.name,
                secs, detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++failures;
  }
  return failures;
}
