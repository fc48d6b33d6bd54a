#include "dt/map.hpp"

#include <algorithm>
#include <numeric>

namespace dt {

MonotoneMap::MonotoneMap(Poset s, Poset t, std::vector<Elem> tab)
    : source_(std::move(s)), target_(std::move(t)), table_(std::move(tab)) {}

namespace {
void check_shape(const Poset& source, const Poset& target,
                 const std::vector<Elem>& table) {
  if (static_cast<int>(table.size()) != source.size())
    fail(Errc::bad_input, {{"table", table.size()}, {"source", source.size()}},
         "table length must equal source size");
  for (std::size_t x = 0; x < table.size(); ++x)
    if (table[x] < 0 || table[x] >= target.size())
      fail(Errc::index_out_of_range,
           {{"at", x}, {"value", table[x]}, {"target", target.size()}},
           "table value outside target");
}
}  // namespace

MonotoneMap MonotoneMap::checked(Poset source, Poset target, std::vector<Elem> table) {
  check_shape(source, target, table);
  const int n = source.size();
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      if (source.leq(i, j) && !target.leq(table[i], table[j]))
        fail(Errc::not_monotone, {{"i", i}, {"j", j}},
             "i <= j in the source but f(i) !<= f(j)");
  return MonotoneMap(std::move(source), std::move(target), std::move(table));
}

MonotoneMap MonotoneMap::trusted(Poset source, Poset target, std::vector<Elem> table) {
  check_shape(source, target, table);
  return MonotoneMap(std::move(source), std::move(target), std::move(table));
}

MonotoneMap MonotoneMap::identity(Poset p) {
  std::vector<Elem> t(p.size());
  std::iota(t.begin(), t.end(), 0);
  Poset copy = p;
  return MonotoneMap(std::move(copy), std::move(p), std::move(t));
}

MonotoneMap MonotoneMap::constant(Poset source, Poset target, Elem value) {
  if (value < 0 || value >= target.size())
    fail(Errc::index_out_of_range, {{"value", value}, {"target", target.size()}},
         "constant outside target");
  std::vector<Elem> t(source.size(), value);
  return MonotoneMap(std::move(source), std::move(target), std::move(t));
}

Elem MonotoneMap::operator()(Elem x) const {
  if (x < 0 || x >= static_cast<int>(table_.size()))
    fail(Errc::index_out_of_range, {{"x", x}, {"source", table_.size()}},
         "application outside source");
  return table_[x];
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!f.target().same_as(g.source()))
    fail(Errc::source_target_mismatch,
         {{"inner_target", f.target().size()}, {"outer_source", g.source().size()}},
         "compose(g, f) needs target(f) = source(g)");
  std::vector<Elem> t(f.source().size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = g(f.table()[x]);
  return MonotoneMap::trusted(f.source(), g.target(), std::move(t));
}

bool table_is_scott_continuous(const Poset& source, const Poset& target,
                               std::span<const Elem> table, int exhaustive_bound) {
  const int n = source.size();
  if (n > exhaustive_bound)
    fail(Errc::size_limit_exceeded, {{"size", n}, {"bound", exhaustive_bound}},
         "exhaustive continuity walks 2^n subsets");
  if (static_cast<int>(table.size()) != n)
    fail(Errc::bad_input, {{"table", table.size()}, {"source", n}}, "table length");
  std::vector<Elem> subset, image;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    subset.clear();
    image.clear();
    for (int i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) {
        subset.push_back(i);
        image.push_back(table[i]);
      }
    if (!is_directed_subset(source, subset)) continue;
    auto sup = supremum_of(source, subset);
    if (!sup)
      fail(Errc::internal_invariant, nullptr,
           "finite directed subset must have a supremum");
    auto img_sup = supremum_of(target, image);
    if (!img_sup || *img_sup != table[*sup]) return false;
  }
  return true;
}

bool is_scott_continuous(const MonotoneMap& m, int exhaustive_bound) {
  return table_is_scott_continuous(m.source(), m.target(), m.table(),
                                   exhaustive_bound);
}

bool is_strict(const MonotoneMap& m) {
  auto sb = least_element(m.source());
  auto tb = least_element(m.target());
  if (!sb || !tb)
    fail(Errc::not_pointed, nullptr, "strictness needs pointed source and target");
  return m(*sb) == *tb;
}

bool is_deflation(const MonotoneMap& m) {
  if (!m.source().same_as(m.target()))
    fail(Errc::not_endo, nullptr, "deflation is a property of endomaps");
  for (Elem x = 0; x < m.source().size(); ++x)
    if (!m.source().leq(m(x), x)) return false;
  return true;
}

EpPair validate_ep_pair(MonotoneMap e, MonotoneMap p) {
  if (!e.source().same_as(p.target()) || !e.target().same_as(p.source()))
    fail(Errc::source_target_mismatch,
         {{"e_source", e.source().size()},
          {"e_target", e.target().size()},
          {"p_source", p.source().size()},
          {"p_target", p.target().size()}},
         "e : D -> E must pair with p : E -> D");
  for (Elem x = 0; x < e.source().size(); ++x)
    if (p(e(x)) != x)
      fail(Errc::not_section, {{"x", x}}, "p(e(x)) != x");
  for (Elem y = 0; y < e.target().size(); ++y)
    if (!e.target().leq(e(p(y)), y))
      fail(Errc::not_deflation, {{"y", y}}, "e(p(y)) !<= y");
  return EpPair{std::move(e), std::move(p)};
}

std::vector<Elem> linear_extension(const Poset& p) {
  const int n = p.size();
  std::vector<int> down(n, 0);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      if (p.leq(j, i)) ++down[i];
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return down[a] < down[b]; });
  return order;
}

std::vector<std::vector<Elem>> enumerate_monotone_tables(const Poset& source,
                                                         const Poset& target,
                                                         long budget) {
  const int n = source.size();
  const int m = target.size();
  if (budget <= 0) fail(Errc::bad_input, {{"budget", budget}}, "budget must be positive");
  if (static_cast<long long>(n) * n > budget)
    fail(Errc::budget_exceeded, {{"source", n}, {"budget", budget}},
         "enumeration bookkeeping for this source exceeds the budget");
  if (n == 0) return {std::vector<Elem>{}};
  if (m == 0) return {};  // no maps out of a nonempty source

  const std::vector<Elem> order = linear_extension(source);
  // Predecessors (in source order) of each position among earlier positions.
  std::vector<std::vector<Elem>> preds(n);
  for (int k = 0; k < n; ++k)
    for (int q = 0; q < k; ++q)
      if (source.leq(order[q], order[k])) preds[k].push_back(order[q]);

  std::vector<std::vector<Elem>> out;
  std::vector<Elem> table(n, -1);
  long count = 0;

  // Iterative backtracking: cand[k] is the next candidate value at position k.
  std::vector<Elem> cand(n + 1, 0);
  int k = 0;
  while (k >= 0) {
    if (k == n) {
      if (++count > budget)
        fail(Errc::budget_exceeded,
             {{"count", count}, {"budget", budget}},
             "monotone map count exceeds the budget");
      out.push_back(table);
      --k;
      continue;
    }
    Elem x = order[k];
    bool advanced = false;
    for (Elem v = cand[k]; v < m; ++v) {
      bool ok = true;
      for (Elem q : preds[k])
        if (!target.leq(table[q], v)) { ok = false; break; }
      if (ok) {
        table[x] = v;
        cand[k] = v + 1;
        cand[k + 1] = 0;
        ++k;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      table[x] = -1;
      cand[k] = 0;
      --k;
    }
  }
  return out;
}

std::vector<MonotoneMap> enumerate_continuous_maps(const Poset& source,
                                                   const Poset& target,
                                                   long budget) {
  std::vector<MonotoneMap> maps;
  for (auto& t : enumerate_monotone_tables(source, target, budget))
    maps.push_back(MonotoneMap::trusted(source, target, std::move(t)));
  return maps;
}

std::optional<MonotoneMap> is_isomorphism(const MonotoneMap& m) {
  if (m.source().size() != m.target().size()) return std::nullopt;
  const int n = m.source().size();
  std::vector<Elem> inv(n, -1);
  for (Elem x = 0; x < n; ++x) {
    Elem y = m(x);
    if (inv[y] != -1) return std::nullopt;  // not injective
    inv[y] = x;
  }
  for (Elem y = 0; y < n; ++y)
    for (Elem z = 0; z < n; ++z)
      if (m.target().leq(y, z) && !m.source().leq(inv[y], inv[z]))
        return std::nullopt;  // inverse not monotone
  return MonotoneMap::trusted(m.target(), m.source(), std::move(inv));
}

bool is_continuous_retract(const MonotoneMap& s, const MonotoneMap& r) {
  if (!s.target().same_as(r.source()) || !s.source().same_as(r.target()))
    fail(Errc::source_target_mismatch, nullptr,
         "retract pair needs s : D -> E and r : E -> D");
  for (Elem x = 0; x < s.source().size(); ++x)
    if (r(s(x)) != x) return false;
  return true;
}

}  // namespace dt
