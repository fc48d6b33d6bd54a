#include "dt/lifting.hpp"

namespace dt {

Elem LiftedPoset::index_of(const PartialElement& pe) const {
  if (!pe.defined) return 0;
  if (pe.value < 0 || pe.value >= base.size())
    fail(Errc::index_out_of_range, {{"value", pe.value}, {"base", base.size()}},
         "partial element outside base");
  return embed[pe.value];
}

PartialElement LiftedPoset::element_at(Elem lifted_index) const {
  if (lifted_index < 0 || lifted_index >= lifted.size())
    fail(Errc::index_out_of_range,
         {{"index", lifted_index}, {"lifted", lifted.size()}}, "lifted index");
  if (lifted_index == 0) return lift_bottom();
  return PartialElement{true, lifted_index - 1};
}

namespace {
std::string base_letter(int i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i);
}

LiftedPoset make_lift(const Poset& base, const std::vector<std::string>& base_labels) {
  const int n = base.size();
  const int sz = n + 1;
  std::vector<std::vector<bool>> rel(sz, std::vector<bool>(sz, false));
  for (Elem j = 0; j < sz; ++j) rel[0][j] = true;  // fresh bottom
  for (Elem i = 0; i < n; ++i) rel[i + 1][i + 1] = true;
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      if (base.leq(i, j)) rel[i + 1][j + 1] = true;
  std::vector<std::string> labels(sz);
  labels[0] = "⊥";
  for (Elem i = 0; i < n; ++i) {
    const std::string& b = base_labels[i];
    labels[i + 1] = (b == "⋆") ? "η⋆" : "η(" + b + ")";
  }
  std::vector<Elem> embed(n);
  for (Elem i = 0; i < n; ++i) embed[i] = i + 1;
  // validated() re-checks the axioms; cheap at these sizes and keeps the
  // lift honest even if the base was handed to us malformed.
  Poset lifted = Poset::validated(sz, rel, std::move(labels));
  return LiftedPoset{base, std::move(lifted), std::move(embed)};
}
}  // namespace

LiftedPoset lift_set(int n) {
  if (n < 0) fail(Errc::bad_input, {{"n", n}}, "negative base");
  std::vector<std::string> base_labels(n);
  for (int i = 0; i < n; ++i) base_labels[i] = (n == 1) ? "⋆" : base_letter(i);
  Poset base = Poset::antichain(n);
  if (n > 0) base = base.with_labels(base_labels);
  return make_lift(base, base_labels);
}

LiftedPoset lift_poset(const Poset& p) {
  std::vector<std::string> base_labels(p.size());
  for (Elem i = 0; i < p.size(); ++i) base_labels[i] = p.label(i);
  return make_lift(p, base_labels);
}

PartialElement eta(const LiftedPoset& lp, Elem base_element) {
  if (base_element < 0 || base_element >= lp.base.size())
    fail(Errc::index_out_of_range,
         {{"element", base_element}, {"base", lp.base.size()}}, "eta argument");
  return PartialElement{true, base_element};
}

MonotoneMap kleisli_extend(const LiftedPoset& lx, const LiftedPoset& ly,
                           std::span<const PartialElement> f) {
  if (static_cast<int>(f.size()) != lx.base.size())
    fail(Errc::bad_input, {{"table", f.size()}, {"base", lx.base.size()}},
         "Kleisli table must cover the base");
  std::vector<Elem> table(lx.lifted.size());
  table[0] = ly.bottom_index();
  for (Elem x = 0; x < lx.base.size(); ++x) table[lx.embed[x]] = ly.index_of(f[x]);
  // checked(): monotone automatically when X is a set; catches abuse when a
  // caller hands a lifted *poset* with an incompatible table.
  return MonotoneMap::checked(lx.lifted, ly.lifted, std::move(table));
}

MonotoneMap lift_functor(const LiftedPoset& lx, const LiftedPoset& ly,
                         std::span<const Elem> f) {
  if (static_cast<int>(f.size()) != lx.base.size())
    fail(Errc::bad_input, {{"table", f.size()}, {"base", lx.base.size()}},
         "functor table must cover the base");
  std::vector<PartialElement> kf(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) kf[x] = eta(ly, f[x]);
  return kleisli_extend(lx, ly, kf);
}

MonotoneMap free_extension_set(const LiftedPoset& lx, const Poset& d,
                               std::span<const Elem> f) {
  auto bot = least_element(d);
  if (!bot) fail(Errc::not_pointed, nullptr, "free extension needs pointed target");
  if (static_cast<int>(f.size()) != lx.base.size())
    fail(Errc::bad_input, {{"table", f.size()}, {"base", lx.base.size()}},
         "table must cover the base");
  std::vector<Elem> table(lx.lifted.size());
  table[0] = *bot;
  for (Elem x = 0; x < lx.base.size(); ++x) {
    if (f[x] < 0 || f[x] >= d.size())
      fail(Errc::index_out_of_range, {{"at", x}, {"value", f[x]}, {"target", d.size()}},
           "table value outside target");
    table[lx.embed[x]] = f[x];
  }
  return MonotoneMap::checked(lx.lifted, d, std::move(table));
}

MonotoneMap free_extension_dcpo(const LiftedPoset& ld, const MonotoneMap& f) {
  if (!f.source().same_as(ld.base))
    fail(Errc::source_target_mismatch,
         {{"f_source", f.source().size()}, {"base", ld.base.size()}},
         "f must start at the lifted base");
  auto bot = least_element(f.target());
  if (!bot) fail(Errc::not_pointed, nullptr, "free extension needs pointed target");
  std::vector<Elem> table(ld.lifted.size());
  table[0] = *bot;
  for (Elem x = 0; x < ld.base.size(); ++x) table[ld.embed[x]] = f(x);
  return MonotoneMap::checked(ld.lifted, f.target(), std::move(table));
}

// --- monad laws -------------------------------------------------------------

namespace {
// All tables X → L(Y) encoded as values in 0..|Y| (0 = ⊥, v = η(v-1)).
std::vector<std::vector<PartialElement>> all_kleisli_tables(int x, int y) {
  std::vector<std::vector<PartialElement>> out;
  std::vector<int> digits(x, 0);
  while (true) {
    std::vector<PartialElement> t(x);
    for (int i = 0; i < x; ++i)
      t[i] = digits[i] == 0 ? lift_bottom() : PartialElement{true, digits[i] - 1};
    out.push_back(std::move(t));
    int i = 0;
    for (; i < x; ++i) {
      if (++digits[i] <= y) break;
      digits[i] = 0;
    }
    if (i == x) break;
  }
  return out;
}

nlohmann::json partial_json(const PartialElement& pe) {
  if (!pe.defined) return "⊥";
  return pe.value;
}

nlohmann::json table_json(const std::vector<PartialElement>& t) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& pe : t) j.push_back(partial_json(pe));
  return j;
}
}  // namespace

Report verify_monad_laws(int max_base_size) {
  Report rep{"monad laws (lifting)", {}};
  if (max_base_size < 0 || max_base_size > 4)
    fail(Errc::size_limit_exceeded, {{"max", max_base_size}, {"bound", 4}},
         "monad sweep is exponential in the base size");

  bool unit_ok = true, left_ok = true, assoc_ok = true;

  for (int nx = 0; nx <= max_base_size && unit_ok; ++nx) {
    LiftedPoset lx = lift_set(nx);
    std::vector<PartialElement> eta_table(nx);
    for (Elem x = 0; x < nx; ++x) eta_table[x] = eta(lx, x);
    if (!(kleisli_extend(lx, lx, eta_table) == MonotoneMap::identity(lx.lifted))) {
      rep.fail_check("eta-extension-is-identity", {{"x_size", nx}});
      unit_ok = false;
    }
  }
  if (unit_ok) rep.pass("eta-extension-is-identity");

  for (int nx = 0; nx <= max_base_size; ++nx) {
    LiftedPoset lx = lift_set(nx);
    for (int ny = 0; ny <= max_base_size; ++ny) {
      LiftedPoset ly = lift_set(ny);
      auto fs = all_kleisli_tables(nx, ny);
      for (const auto& f : fs) {
        if (!left_ok) break;
        MonotoneMap fsharp = kleisli_extend(lx, ly, f);
        for (Elem x = 0; x < nx; ++x)
          if (fsharp(lx.index_of(eta(lx, x))) != ly.index_of(f[x])) {
            rep.fail_check("extension-after-eta-is-f",
                           {{"x_size", nx}, {"y_size", ny}, {"f", table_json(f)}, {"at", x}});
            left_ok = false;
            break;
          }
      }
      for (int nz = 0; nz <= max_base_size && assoc_ok; ++nz) {
        LiftedPoset lz = lift_set(nz);
        auto gs = all_kleisli_tables(ny, nz);
        for (const auto& f : fs) {
          if (!assoc_ok) break;
          MonotoneMap fsharp = kleisli_extend(lx, ly, f);
          for (const auto& g : gs) {
            MonotoneMap gsharp = kleisli_extend(ly, lz, g);
            // h = g^# ∘ f as a Kleisli table X → L(Z)
            std::vector<PartialElement> h(nx);
            for (Elem x = 0; x < nx; ++x)
              h[x] = lz.element_at(gsharp(ly.index_of(f[x])));
            if (!(kleisli_extend(lx, lz, h) == compose(gsharp, fsharp))) {
              rep.fail_check("kleisli-associativity",
                             {{"x_size", nx},
                              {"y_size", ny},
                              {"z_size", nz},
                              {"f", table_json(f)},
                              {"g", table_json(g)}});
              assoc_ok = false;
              break;
            }
          }
        }
      }
    }
  }
  if (left_ok) rep.pass("extension-after-eta-is-f");
  if (assoc_ok) rep.pass("kleisli-associativity");
  return rep;
}

}  // namespace dt
