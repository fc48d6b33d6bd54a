#include "dt/dinfty.hpp"

#include <algorithm>

namespace dt {

DnTower::DnTower(Tower t, LiftedPoset base, std::vector<ExponentialPoset> exps)
    : tower_(std::move(t)), base_(std::move(base)), exps_(std::move(exps)) {
  if (static_cast<int>(exps_.size()) != tower_.depth())
    fail(Errc::bad_input, {{"exps", exps_.size()}, {"depth", tower_.depth()}},
         "one exponential per level above 0");
}

const ExponentialPoset& DnTower::exp_at(int n) const {
  if (n < 1 || n > depth())
    fail(Errc::level_out_of_range, {{"level", n}, {"depth", depth()}},
         "levels n >= 1 carry exponential structure");
  return exps_[n - 1];
}

DnTower build_dn_tower(int depth, long budget, bool allow_deep) {
  if (depth < 0) fail(Errc::bad_input, {{"depth", depth}}, "negative depth");
  if (depth > 3 && !allow_deep)
    fail(Errc::depth_limit_exceeded, {{"depth", depth}, {"bound", 3}},
         "depth 4 means enumerating monotone self-maps of the 120549-element "
         "D_3; pass allow_deep to attempt it against the budget");

  LiftedPoset base = lift_set(1);  // D_0 = L(1), the two-point chain
  std::vector<Poset> levels{base.lifted};
  std::vector<ExponentialPoset> exps;
  std::vector<EpPair> steps;

  for (int n = 0; n < depth; ++n) {
    exps.push_back(exponential(levels[n], levels[n], budget));
    levels.push_back(exps.back().poset);
  }

  for (int n = 0; n < depth; ++n) {
    const Poset& dn = levels[n];
    const Poset& dn1 = levels[n + 1];
    std::vector<Elem> e_table(dn.size());
    std::vector<Elem> p_table(dn1.size());
    if (n == 0) {
      // ε_0(x) = const_x, π_0(f) = f(⊥).
      for (Elem x = 0; x < dn.size(); ++x) {
        std::vector<Elem> constant(dn.size(), x);
        auto idx = exps[0].index_of(constant);
        if (!idx) fail(Errc::internal_invariant, {{"x", x}}, "const map missing from D_1");
        e_table[x] = *idx;
      }
      for (Elem f = 0; f < dn1.size(); ++f)
        p_table[f] = exps[0].table_of(f)[base.bottom_index()];
    } else {
      const ExponentialPoset& lower = exps[n - 1];
      const ExponentialPoset& upper = exps[n];
      const std::vector<Elem>& e_prev = steps[n - 1].e.table();
      const std::vector<Elem>& p_prev = steps[n - 1].p.table();
      // ε_n(f) = ε_{n-1} ∘ f ∘ π_{n-1} as a table over D_n.
      for (Elem f = 0; f < dn.size(); ++f) {
        const std::vector<Elem>& tf = lower.table_of(f);
        std::vector<Elem> comp(dn.size());
        for (Elem g = 0; g < dn.size(); ++g) comp[g] = e_prev[tf[p_prev[g]]];
        auto idx = upper.index_of(comp);
        if (!idx)
          fail(Errc::internal_invariant, {{"level", n}, {"f", f}},
               "embedded map missing from the next level");
        e_table[f] = *idx;
      }
      // π_n(h) = π_{n-1} ∘ h ∘ ε_{n-1} as a table over D_{n-1}.
      const int prev_size = levels[n - 1].size();
      for (Elem h = 0; h < dn1.size(); ++h) {
        const std::vector<Elem>& th = upper.table_of(h);
        std::vector<Elem> comp(prev_size);
        for (Elem x = 0; x < prev_size; ++x) comp[x] = p_prev[th[e_prev[x]]];
        auto idx = lower.index_of(comp);
        if (!idx)
          fail(Errc::internal_invariant, {{"level", n}, {"h", h}},
               "projected map missing from the previous level");
        p_table[h] = *idx;
      }
    }
    steps.push_back(EpPair{MonotoneMap::trusted(dn, dn1, std::move(e_table)),
                           MonotoneMap::trusted(dn1, dn, std::move(p_table))});
  }

  Tower tower = Tower::build(std::move(levels), std::move(steps));
  return DnTower(std::move(tower), std::move(base), std::move(exps));
}

CompactElement dinfty_bottom(const DnTower& t) {
  return CompactElement{0, t.base().bottom_index()};
}

FinFun phi(const DnTower& t, const CompactElement& c) {
  if (c.level < 0 || c.level > t.depth())
    fail(Errc::level_out_of_range, {{"level", c.level}, {"depth", t.depth()}}, "phi");
  if (c.level >= 1) return FinFun{c.level, c.elem};
  if (t.depth() < 1)
    fail(Errc::level_out_of_range, {{"depth", t.depth()}},
         "phi at level 0 needs depth >= 1");
  return FinFun{1, t.tower().steps()[0].e(c.elem)};
}

CompactElement phi_apply(const DnTower& t, const FinFun& f, const CompactElement& c) {
  if (f.level < 1 || f.level > t.depth())
    fail(Errc::level_out_of_range, {{"level", f.level}, {"depth", t.depth()}},
         "phi_apply");
  Elem arg = project_compact(t.tower(), c, f.level - 1);
  Elem out = t.exp_at(f.level).table_of(f.elem)[arg];
  return embed_compact(t.tower(), f.level - 1, out);
}

CompactElement psi(const DnTower& t, const FinFun& f) {
  if (f.level < 1 || f.level > t.depth())
    fail(Errc::level_out_of_range, {{"level", f.level}, {"depth", t.depth()}}, "psi");
  return embed_compact(t.tower(), f.level, f.elem);
}

Elem psi_n(const DnTower& t, int n, const FinFun& f) {
  if (n < 0 || n > t.depth())
    fail(Errc::level_out_of_range, {{"level", n}, {"depth", t.depth()}}, "psi_n");
  if (n == 0) return t.tower().steps()[0].p(psi_n(t, 1, f));
  const Poset& below = t.level(n - 1);
  std::vector<Elem> table(below.size());
  for (Elem d = 0; d < below.size(); ++d) {
    CompactElement cd = embed_compact(t.tower(), n - 1, d);
    table[d] = project_compact(t.tower(), phi_apply(t, f, cd), n - 1);
  }
  auto idx = t.exp_at(n).index_of(table);
  if (!idx)
    fail(Errc::internal_invariant, {{"level", n}},
         "psi table of a finitary function must be monotone");
  return *idx;
}

FinFun canonical_finfun(const DnTower& t, const FinFun& f) {
  if (f.level < 1 || f.level > t.depth())
    fail(Errc::level_out_of_range, {{"level", f.level}, {"depth", t.depth()}},
         "canonical_finfun");
  FinFun out = f;
  while (out.level > 1) {
    auto pre = t.tower().step_preimage(out.level, out.elem);
    if (!pre) break;
    out = FinFun{out.level - 1, *pre};
  }
  return out;
}

bool finfun_leq(const DnTower& t, const FinFun& a, const FinFun& b) {
  int k = std::max(a.level, b.level);
  Elem ra = t.tower().eps(a.level, k)(a.elem);
  Elem rb = t.tower().eps(b.level, k)(b.elem);
  return t.level(k).leq(ra, rb);
}

std::vector<FinFun> canonical_finfuns(const DnTower& t, int max_level) {
  if (max_level < 0 || max_level > t.depth())
    fail(Errc::level_out_of_range, {{"level", max_level}, {"depth", t.depth()}},
         "canonical_finfuns");
  std::vector<FinFun> out;
  for (int n = 1; n <= max_level; ++n)
    for (Elem f = 0; f < t.level(n).size(); ++f)
      if (n == 1 || !t.tower().step_preimage(n, f))
        out.push_back(FinFun{n, f});
  return out;
}

Report verify_iso(const DnTower& t, int max_level, int pair_bound) {
  Report rep{"D_infinity isomorphism", {}};
  if (max_level < 0 || max_level > t.depth())
    fail(Errc::level_out_of_range, {{"level", max_level}, {"depth", t.depth()}},
         "verify_iso");
  if (max_level == 0) {
    rep.pass("psi-after-phi", "vacuous at depth 0");
    rep.pass("phi-after-psi", "vacuous at depth 0");
    rep.pass("order-isomorphism", "vacuous at depth 0");
    return rep;
  }

  auto compacts = canonical_compacts(t.tower(), max_level);
  auto finfuns = canonical_finfuns(t, max_level);

  bool pf_ok = true;
  for (const auto& c : compacts)
    if (!(psi(t, phi(t, c)) == c)) {
      rep.fail_check("psi-after-phi", {{"level", c.level}, {"elem", c.elem}});
      pf_ok = false;
      break;
    }
  if (pf_ok) rep.pass("psi-after-phi");

  bool fp_ok = true;
  for (const auto& f : finfuns) {
    CompactElement c = psi(t, f);
    if (!(canonical_finfun(t, phi(t, c)) == f)) {
      rep.fail_check("phi-after-psi", {{"level", f.level}, {"elem", f.elem}});
      fp_ok = false;
      break;
    }
  }
  if (fp_ok) rep.pass("phi-after-psi");

  // Mutual order-isomorphism between canonical compacts and canonical
  // FinFuns, quadratic, so capped.
  const int climit = std::min<int>(static_cast<int>(compacts.size()), pair_bound);
  const int flimit = std::min<int>(static_cast<int>(finfuns.size()), pair_bound);
  std::string note;
  if (climit < static_cast<int>(compacts.size()) ||
      flimit < static_cast<int>(finfuns.size()))
    note = "capped at " + std::to_string(pair_bound) + " representatives";

  bool ord_ok = true;
  for (int a = 0; a < climit && ord_ok; ++a)
    for (int b = 0; b < climit; ++b) {
      bool lhs = compact_leq(t.tower(), compacts[a], compacts[b]);
      bool rhs = finfun_leq(t, phi(t, compacts[a]), phi(t, compacts[b]));
      if (lhs != rhs) {
        rep.fail_check("phi-order-iso",
                       {{"a", {{"level", compacts[a].level}, {"elem", compacts[a].elem}}},
                        {"b", {{"level", compacts[b].level}, {"elem", compacts[b].elem}}}});
        ord_ok = false;
        break;
      }
    }
  for (int a = 0; a < flimit && ord_ok; ++a)
    for (int b = 0; b < flimit; ++b) {
      bool lhs = finfun_leq(t, finfuns[a], finfuns[b]);
      bool rhs = compact_leq(t.tower(), psi(t, finfuns[a]), psi(t, finfuns[b]));
      if (lhs != rhs) {
        rep.fail_check("psi-order-iso",
                       {{"a", {{"level", finfuns[a].level}, {"elem", finfuns[a].elem}}},
                        {"b", {{"level", finfuns[b].level}, {"elem", finfuns[b].elem}}}});
        ord_ok = false;
        break;
      }
    }
  if (ord_ok) rep.pass("order-isomorphism", note);

  return rep;
}

}  // namespace dt
