#include "dt/laws.hpp"

#include <map>

#include "dt/constructions.hpp"
#include "dt/enumerate.hpp"
#include "dt/lifting.hpp"

namespace dt {

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["title"] = title;
  j["ok"] = ok();
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json cj;
    cj["law"] = c.law;
    cj["ok"] = c.ok;
    cj["witness"] = c.witness;
    if (!c.note.empty()) cj["note"] = c.note;
    cs.push_back(cj);
  }
  j["checks"] = cs;
  return j;
}

namespace {

std::vector<Elem> mask_subset(std::uint64_t mask, int n) {
  std::vector<Elem> out;
  for (int i = 0; i < n; ++i)
    if (mask & (std::uint64_t{1} << i)) out.push_back(i);
  return out;
}

bool table_monotone(const Poset& p, const Poset& q, const std::vector<Elem>& t) {
  for (Elem i = 0; i < p.size(); ++i)
    for (Elem j = 0; j < p.size(); ++j)
      if (p.leq(i, j) && !q.leq(t[i], t[j])) return false;
  return true;
}

}  // namespace

Report laws_poset(int max_size) {
  Report rep{"poset laws", {}};
  if (max_size < 0 || max_size > 5)
    fail(Errc::size_limit_exceeded, {{"max", max_size}, {"bound", 5}},
         "poset sweep enumerates all labeled posets");

  bool axioms_ok = true, sup_ok = true, directed_ok = true, semi_ok = true;
  for (int n = 0; n <= max_size; ++n) {
    for (std::size_t pi = 0; pi < all_posets(n).size(); ++pi) {
      // regenerate to keep peak memory flat at n = 5
      Poset p = all_posets(n)[pi];
      p.check_axioms();
      auto bot = least_element(p);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        auto s = mask_subset(mask, n);
        auto sup = supremum_of(p, s);
        if (sup) {
          for (Elem x : s)
            if (!p.leq(x, *sup)) {
              rep.fail_check("sup-is-upper-bound", {{"n", n}, {"poset", pi}, {"mask", mask}});
              sup_ok = false;
            }
          for (Elem u = 0; u < n && sup_ok; ++u) {
            bool ub = true;
            for (Elem x : s)
              if (!p.leq(x, u)) { ub = false; break; }
            if (ub && !p.leq(*sup, u)) {
              rep.fail_check("sup-is-least", {{"n", n}, {"poset", pi}, {"mask", mask}, {"u", u}});
              sup_ok = false;
            }
          }
        } else {
          // no LUB: every upper bound must fail to be least
          for (Elem u = 0; u < n && sup_ok; ++u) {
            bool ub = true, least = true;
            for (Elem x : s)
              if (!p.leq(x, u)) { ub = false; break; }
            if (!ub) continue;
            for (Elem v = 0; v < n && least; ++v) {
              bool vub = true;
              for (Elem x : s)
                if (!p.leq(x, v)) { vub = false; break; }
              if (vub && !p.leq(u, v)) least = false;
            }
            if (least) {
              rep.fail_check("sup-absence", {{"n", n}, {"poset", pi}, {"mask", mask}, {"u", u}});
              sup_ok = false;
            }
          }
        }
        if (directed_ok && is_directed_subset(p, s)) {
          // a finite directed family contains its supremum as its maximum
          if (!sup || std::find(s.begin(), s.end(), *sup) == s.end()) {
            rep.fail_check("directed-has-max", {{"n", n}, {"poset", pi}, {"mask", mask}});
            directed_ok = false;
          }
        }
        if (semi_ok && bot && is_semidirected_subset(p, s)) {
          auto with_bot = s;
          with_bot.push_back(*bot);
          auto expect = supremum_of(p, with_bot);
          if (!expect || semidirected_sup(p, s) != *expect) {
            rep.fail_check("semidirected-sup", {{"n", n}, {"poset", pi}, {"mask", mask}});
            semi_ok = false;
          }
        }
      }
      if (!(axioms_ok && sup_ok && directed_ok && semi_ok)) break;
    }
  }
  if (axioms_ok) rep.pass("order-axioms");
  if (sup_ok) {
    rep.pass("sup-is-upper-bound");
    rep.pass("sup-is-least");
    rep.pass("sup-absence");
  }
  if (directed_ok) rep.pass("directed-has-max");
  if (semi_ok) rep.pass("semidirected-sup");
  return rep;
}

Report laws_continuity(int max_size) {
  Report rep{"continuity laws", {}};
  if (max_size < 0 || max_size > 4)
    fail(Errc::size_limit_exceeded, {{"max", max_size}, {"bound", 4}},
         "continuity sweep is exponential");

  // Representatives modulo isomorphism: the monotone/continuous agreement is
  // invariant under relabeling either side, so this still covers every map
  // space up to iso.
  std::vector<Poset> reps;
  for (int n = 0; n <= max_size; ++n)
    for (const Poset& p : poset_iso_representatives(n)) reps.push_back(p);

  bool agree_ok = true, enum_ok = true;
  for (const Poset& p : reps) {
    for (const Poset& q : reps) {
      std::vector<std::vector<Elem>> monotone;
      for (const auto& t : all_tables(p.size(), q.size())) {
        bool mono = table_monotone(p, q, t);
        bool cont = table_is_scott_continuous(p, q, t);
        if (mono != cont) {
          rep.fail_check("monotone-iff-continuous",
                         {{"p", p.size()}, {"q", q.size()}, {"table", t},
                          {"monotone", mono}, {"continuous", cont}});
          agree_ok = false;
        }
        if (mono) monotone.push_back(t);
      }
      if (enum_ok) {
        auto enumerated = enumerate_monotone_tables(p, q);
        // same set, no duplicates (canonical order may differ from the
        // oracle's lexicographic order, so compare as sorted sets)
        auto a = enumerated;
        auto b = monotone;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        bool dup = std::adjacent_find(a.begin(), a.end()) != a.end();
        if (a != b || dup) {
          rep.fail_check("enumeration-completeness",
                         {{"p", p.size()}, {"q", q.size()},
                          {"enumerated", enumerated.size()}, {"expected", monotone.size()}});
          enum_ok = false;
        }
      }
      if (!agree_ok && !enum_ok) break;
    }
    if (!agree_ok && !enum_ok) break;
  }
  if (agree_ok) rep.pass("monotone-iff-continuous");
  if (enum_ok) rep.pass("enumeration-completeness");
  return rep;
}

Report laws_monad(int max_size) { return verify_monad_laws(max_size); }

Report laws_free(int max_size) {
  Report rep{"freeness laws", {}};
  if (max_size < 1 || max_size > 4)
    fail(Errc::size_limit_exceeded, {{"max", max_size}, {"bound", 4}},
         "freeness sweep enumerates all pointed posets");

  bool unique_ok = true, agree_ok = true;
  for (int nx = 0; nx <= 2 && unique_ok; ++nx) {
    LiftedPoset lx = lift_set(nx);
    for (int nd = 1; nd <= max_size && unique_ok; ++nd) {
      for (const Poset& d : all_posets(nd)) {
        auto bot = least_element(d);
        if (!bot) continue;  // only pointed targets
        for (const auto& f : all_tables(nx, nd)) {
          // candidates: all tables L(X) → D that are monotone, strict, and
          // extend f along eta
          int found = 0;
          std::vector<Elem> unique_table;
          for (const auto& t : all_tables(nx + 1, nd)) {
            if (t[0] != *bot) continue;
            bool extends = true;
            for (Elem x = 0; x < nx; ++x)
              if (t[lx.embed[x]] != f[x]) { extends = false; break; }
            if (!extends) continue;
            if (!table_monotone(lx.lifted, d, t)) continue;
            ++found;
            unique_table = t;
          }
          MonotoneMap built = free_extension_set(lx, d, f);
          if (found != 1) {
            rep.fail_check("strict-extension-unique",
                           {{"x_size", nx}, {"d_size", nd}, {"f", f}, {"found", found}});
            unique_ok = false;
            break;
          }
          if (built.table() != unique_table) {
            rep.fail_check("strict-extension-agrees",
                           {{"x_size", nx}, {"d_size", nd}, {"f", f}});
            agree_ok = false;
            break;
          }
          // the dcpo-level extension generalizes the set-level one
          MonotoneMap via_dcpo = free_extension_dcpo(
              lx, MonotoneMap::checked(lx.base, d, std::vector<Elem>(f)));
          if (!(via_dcpo == built)) {
            rep.fail_check("dcpo-extension-generalizes",
                           {{"x_size", nx}, {"d_size", nd}, {"f", f}});
            agree_ok = false;
            break;
          }
        }
        if (!unique_ok || !agree_ok) break;
      }
    }
  }
  if (unique_ok) rep.pass("strict-extension-unique");
  if (agree_ok) {
    rep.pass("strict-extension-agrees");
    rep.pass("dcpo-extension-generalizes");
  }
  return rep;
}

Report laws_product(int max_size) {
  Report rep{"product universal property", {}};
  if (max_size < 0 || max_size > 3)
    fail(Errc::size_limit_exceeded, {{"max", max_size}, {"bound", 3}},
         "product sweep is over all labeled poset triples");

  std::vector<Poset> posets;
  for (int n = 0; n <= max_size; ++n)
    for (const Poset& p : all_posets(n)) posets.push_back(p);

  bool proj_ok = true, exist_ok = true, unique_ok = true;
  for (const Poset& p : posets)
    for (const Poset& q : posets) {
      ProductPoset prod = product(p, q);
      // projections are continuous maps (monotone by the pair scan)
      if (!table_monotone(prod.poset, p, prod.pr1.table()) ||
          !table_monotone(prod.poset, q, prod.pr2.table())) {
        rep.fail_check("projections-monotone", {{"p", p.size()}, {"q", q.size()}});
        proj_ok = false;
      }
      for (const Poset& e : posets) {
        auto fs = enumerate_monotone_tables(e, p);
        auto gs = enumerate_monotone_tables(e, q);
        auto ks = enumerate_monotone_tables(e, prod.poset);
        // index every mediator candidate by its projections
        std::map<std::pair<std::vector<Elem>, std::vector<Elem>>, int> by_legs;
        for (const auto& k : ks) {
          std::vector<Elem> f1(e.size()), f2(e.size());
          for (Elem x = 0; x < e.size(); ++x) {
            f1[x] = prod.pr1(k[x]);
            f2[x] = prod.pr2(k[x]);
          }
          ++by_legs[{f1, f2}];
        }
        if (ks.size() != fs.size() * gs.size()) {
          rep.fail_check("mediator-bijection",
                         {{"e", e.size()}, {"p", p.size()}, {"q", q.size()},
                          {"maps_into_product", ks.size()},
                          {"leg_pairs", fs.size() * gs.size()}});
          unique_ok = false;
        }
        for (const auto& f : fs) {
          for (const auto& g : gs) {
            MonotoneMap med = pair_mediator(prod,
                                            MonotoneMap::trusted(e, p, std::vector<Elem>(f)),
                                            MonotoneMap::trusted(e, q, std::vector<Elem>(g)));
            bool legs = true;
            for (Elem x = 0; x < e.size(); ++x)
              if (prod.pr1(med(x)) != f[x] || prod.pr2(med(x)) != g[x]) legs = false;
            if (!legs) {
              rep.fail_check("mediator-exists",
                             {{"e", e.size()}, {"p", p.size()}, {"q", q.size()},
                              {"f", f}, {"g", g}});
              exist_ok = false;
              break;
            }
            auto it = by_legs.find({f, g});
            if (it == by_legs.end() || it->second != 1) {
              rep.fail_check("mediator-unique",
                             {{"e", e.size()}, {"p", p.size()}, {"q", q.size()},
                              {"f", f}, {"g", g},
                              {"count", it == by_legs.end() ? 0 : it->second}});
              unique_ok = false;
              break;
            }
          }
          if (!exist_ok || !unique_ok) break;
        }
        if (!exist_ok || !unique_ok) break;
      }
      if (!proj_ok || !exist_ok || !unique_ok) break;
    }
  if (proj_ok) rep.pass("projections-monotone");
  if (exist_ok) rep.pass("mediator-exists");
  if (unique_ok) {
    rep.pass("mediator-unique");
    rep.pass("mediator-bijection");
  }
  return rep;
}

Report laws_exponential(int max_size) {
  Report rep{"exponential universal property", {}};
  if (max_size < 0 || max_size > 3)
    fail(Errc::size_limit_exceeded, {{"max", max_size}, {"bound", 3}},
         "exponential sweep is over all labeled poset triples");

  std::vector<Poset> posets;
  for (int n = 0; n <= max_size; ++n)
    for (const Poset& p : all_posets(n)) posets.push_back(p);

  bool eval_ok = true, curry_ok = true, unique_ok = true;
  for (const Poset& d : posets) {
    for (const Poset& e : posets) {
      ExponentialPoset exp = exponential(d, e);
      EvalMap ev = eval_map(exp);
      if (!table_monotone(ev.domain.poset, e, ev.map.table())) {
        rep.fail_check("eval-monotone", {{"d", d.size()}, {"e", e.size()}});
        eval_ok = false;
      }
      for (const Poset& dp : posets) {
        ProductPoset prod = product(dp, d);
        auto fs = enumerate_monotone_tables(prod.poset, e);
        auto hs = enumerate_monotone_tables(dp, exp.poset);
        // induced map of each candidate h : D' → E^D
        std::map<std::vector<Elem>, std::pair<int, std::vector<Elem>>> induced;
        for (const auto& h : hs) {
          std::vector<Elem> f(prod.poset.size());
          for (Elem x = 0; x < dp.size(); ++x)
            for (Elem y = 0; y < d.size(); ++y)
              f[prod.pair_index(x, y)] = exp.table_of(h[x])[y];
          auto& slot = induced[f];
          ++slot.first;
          slot.second = h;
        }
        if (hs.size() != fs.size()) {
          rep.fail_check("curry-bijection",
                         {{"dp", dp.size()}, {"d", d.size()}, {"e", e.size()},
                          {"maps", fs.size()}, {"curried", hs.size()}});
          unique_ok = false;
        }
        for (const auto& f : fs) {
          MonotoneMap fm = MonotoneMap::trusted(prod.poset, e, std::vector<Elem>(f));
          MonotoneMap h = curry(prod, exp, fm);
          if (!table_monotone(dp, exp.poset, h.table())) {
            rep.fail_check("curry-monotone",
                           {{"dp", dp.size()}, {"d", d.size()}, {"e", e.size()}, {"f", f}});
            curry_ok = false;
            break;
          }
          bool tri = true;  // ev ∘ (h × id) = f
          for (Elem x = 0; x < dp.size() && tri; ++x)
            for (Elem y = 0; y < d.size(); ++y)
              if (ev.map(ev.domain.pair_index(h(x), y)) != f[prod.pair_index(x, y)]) {
                tri = false;
                break;
              }
          if (!tri) {
            rep.fail_check("curry-triangle",
                           {{"dp", dp.size()}, {"d", d.size()}, {"e", e.size()}, {"f", f}});
            curry_ok = false;
            break;
          }
          auto it = induced.find(f);
          if (it == induced.end() || it->second.first != 1 || it->second.second != h.table()) {
            rep.fail_check("curry-unique",
                           {{"dp", dp.size()}, {"d", d.size()}, {"e", e.size()}, {"f", f}});
            unique_ok = false;
            break;
          }
        }
        if (!curry_ok || !unique_ok) break;
      }
      if (!eval_ok || !curry_ok || !unique_ok) break;
    }
    if (!eval_ok || !curry_ok || !unique_ok) break;
  }
  if (eval_ok) rep.pass("eval-monotone");
  if (curry_ok) {
    rep.pass("curry-monotone");
    rep.pass("curry-triangle");
  }
  if (unique_ok) {
    rep.pass("curry-unique");
    rep.pass("curry-bijection");
  }
  return rep;
}

Report laws_lfp(int max_size) {
  Report rep{"least fixed point laws", {}};
  if (max_size < 0 || max_size > 5)
    fail(Errc::size_limit_exceeded, {{"max", max_size}, {"bound", 5}},
         "lfp sweep enumerates all labeled posets");

  bool fix_ok = true, least_ok = true, iter_ok = true, mono_ok = true;
  for (int n = 1; n <= max_size; ++n) {
    for (const Poset& p : all_posets(n)) {
      auto bot = least_element(p);
      if (!bot) continue;
      for (const auto& t : enumerate_monotone_tables(p, p)) {
        MonotoneMap f = MonotoneMap::trusted(p, p, std::vector<Elem>(t));
        Elem x = lfp(f);
        if (f(x) != x) {
          rep.fail_check("lfp-is-fixed", {{"n", n}, {"f", t}, {"x", x}});
          fix_ok = false;
          break;
        }
        for (Elem y = 0; y < n; ++y)
          if (p.leq(f(y), y) && !p.leq(x, y)) {
            rep.fail_check("lfp-is-least-prefixed", {{"n", n}, {"f", t}, {"y", y}});
            least_ok = false;
            break;
          }
        // independent oracle: literal Kleene iteration
        Elem it = *bot;
        for (int step = 0; step < n + 1; ++step) it = f(it);
        if (it != x) {
          rep.fail_check("lfp-matches-iteration", {{"n", n}, {"f", t}});
          iter_ok = false;
          break;
        }
      }
      if (!(fix_ok && least_ok && iter_ok)) break;
    }
    if (!(fix_ok && least_ok && iter_ok)) break;
  }

  // f ↦ lfp(f) is itself a continuous map on P^P for small pointed P.
  for (int n = 1; n <= std::min(max_size, 3) && mono_ok; ++n) {
    for (const Poset& p : all_posets(n)) {
      if (!least_element(p)) continue;
      ExponentialPoset endos = exponential(p, p);
      MonotoneMap mu = lfp_map(endos);  // checked() inside at this scale
      if (endos.size() <= 12 && !is_scott_continuous(mu)) {
        rep.fail_check("lfp-map-continuous", {{"n", n}});
        mono_ok = false;
        break;
      }
    }
  }
  if (fix_ok) rep.pass("lfp-is-fixed");
  if (least_ok) rep.pass("lfp-is-least-prefixed");
  if (iter_ok) rep.pass("lfp-matches-iteration");
  if (mono_ok) rep.pass("lfp-map-continuous");
  return rep;
}

}  // namespace dt
