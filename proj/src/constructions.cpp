#include "dt/constructions.hpp"

#include <algorithm>

namespace dt {

ProductPoset product(const Poset& left, const Poset& right, long budget) {
  long long n = static_cast<long long>(left.size()) * right.size();
  if (n > budget)
    fail(Errc::budget_exceeded,
         {{"left", left.size()}, {"right", right.size()}, {"budget", budget}},
         "product carrier exceeds the budget");
  Poset carrier = Poset::product_order(left, right);
  std::vector<Elem> t1(carrier.size()), t2(carrier.size());
  for (Elem x = 0; x < carrier.size(); ++x) {
    t1[x] = x / right.size();
    t2[x] = x % right.size();
  }
  MonotoneMap pr1 = MonotoneMap::trusted(carrier, left, std::move(t1));
  MonotoneMap pr2 = MonotoneMap::trusted(carrier, right, std::move(t2));
  return ProductPoset{left, right, carrier, std::move(pr1), std::move(pr2)};
}

MonotoneMap pair_mediator(const ProductPoset& prod, const MonotoneMap& f,
                          const MonotoneMap& g) {
  if (!f.source().same_as(g.source()))
    fail(Errc::source_target_mismatch, nullptr, "mediator legs need a common source");
  if (!f.target().same_as(prod.left) || !g.target().same_as(prod.right))
    fail(Errc::source_target_mismatch, nullptr,
         "legs must land in the product's factors");
  std::vector<Elem> table(f.source().size());
  for (Elem x = 0; x < f.source().size(); ++x)
    table[x] = prod.pair_index(f(x), g(x));
  return MonotoneMap::trusted(f.source(), prod.poset, std::move(table));
}

// --- exponentials ------------------------------------------------------------

const std::vector<Elem>& ExponentialPoset::table_of(Elem f) const {
  if (f < 0 || f >= size())
    fail(Errc::index_out_of_range, {{"f", f}, {"size", size()}}, "exponential index");
  return (*tables)[f];
}

std::optional<Elem> ExponentialPoset::index_of(std::span<const Elem> table) const {
  if (static_cast<int>(table.size()) != dom.size()) return std::nullopt;
  // Tables are stored sorted lexicographically in linear-extension
  // coordinates, so membership is a binary search with the same key.
  auto key_less = [&](const std::vector<Elem>& a, std::span<const Elem> b) {
    for (Elem pos : order) {
      if (a[pos] != b[pos]) return a[pos] < b[pos];
    }
    return false;
  };
  int lo = 0, hi = size();
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (key_less((*tables)[mid], table))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size() && std::equal(table.begin(), table.end(), (*tables)[lo].begin()))
    return lo;
  return std::nullopt;
}

MonotoneMap ExponentialPoset::map_at(Elem f) const {
  return MonotoneMap::trusted(dom, cod, table_of(f));
}

namespace {
constexpr int kDenseExponentialMax = 1024;

std::size_t words(int n) { return (static_cast<std::size_t>(n) * n + 63) / 64; }
}  // namespace

ExponentialPoset exponential(const Poset& dom, const Poset& cod, long budget) {
  auto tables = std::make_shared<std::vector<std::vector<Elem>>>(
      enumerate_monotone_tables(dom, cod, budget));
  const int n = static_cast<int>(tables->size());

  Poset carrier;
  if (n <= kDenseExponentialMax) {
    // Densify: O(1) order queries dominate downstream law checking.
    std::vector<std::uint64_t> bits(words(n), 0);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const auto& ta = (*tables)[a];
        const auto& tb = (*tables)[b];
        bool le = true;
        for (Elem x = 0; x < dom.size() && le; ++x) le = cod.leq(ta[x], tb[x]);
        if (le) {
          std::size_t idx = static_cast<std::size_t>(a) * n + b;
          bits[idx >> 6] |= std::uint64_t{1} << (idx & 63);
        }
      }
    std::vector<std::string> labels(n);
    for (Elem a = 0; a < n; ++a) {
      std::string s = "[";
      const auto& t = (*tables)[a];
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(t[i]);
      }
      labels[a] = s + "]";
    }
    carrier = Poset::dense_trusted(n, std::move(bits), std::move(labels));
  } else {
    carrier = Poset::exponential_order(dom, cod, tables);
  }

  ExponentialPoset out;
  out.dom = dom;
  out.cod = cod;
  out.poset = std::move(carrier);
  out.tables = std::move(tables);
  out.order = linear_extension(dom);
  return out;
}

EvalMap eval_map(const ExponentialPoset& exp, long budget) {
  ProductPoset prod = product(exp.poset, exp.dom, budget);
  std::vector<Elem> table(prod.poset.size());
  for (Elem f = 0; f < exp.size(); ++f) {
    const auto& tf = exp.table_of(f);
    for (Elem x = 0; x < exp.dom.size(); ++x)
      table[prod.pair_index(f, x)] = tf[x];
  }
  MonotoneMap ev = MonotoneMap::trusted(prod.poset, exp.cod, std::move(table));
  return EvalMap{std::move(prod), std::move(ev)};
}

MonotoneMap curry(const ProductPoset& prod, const ExponentialPoset& exp,
                  const MonotoneMap& f) {
  if (!f.source().same_as(prod.poset))
    fail(Errc::source_target_mismatch, nullptr, "curry argument must live on the product");
  if (!f.target().same_as(exp.cod) || !prod.right.same_as(exp.dom))
    fail(Errc::source_target_mismatch, nullptr,
         "curry target must be the matching exponential");
  std::vector<Elem> table(prod.left.size());
  std::vector<Elem> row(prod.right.size());
  for (Elem dp = 0; dp < prod.left.size(); ++dp) {
    for (Elem d = 0; d < prod.right.size(); ++d) row[d] = f(prod.pair_index(dp, d));
    auto idx = exp.index_of(row);
    if (!idx)
      fail(Errc::internal_invariant, {{"row_of", dp}},
           "section of a continuous map must be continuous");
    table[dp] = *idx;
  }
  return MonotoneMap::trusted(prod.left, exp.poset, std::move(table));
}

// --- least fixed points -------------------------------------------------------

Elem lfp(const MonotoneMap& f) {
  if (!f.source().same_as(f.target()))
    fail(Errc::not_endo, nullptr, "least fixed point of a non-endomap");
  const Poset& p = f.source();
  auto bot = least_element(p);
  if (!bot) fail(Errc::not_pointed, nullptr, "Kleene iteration needs a bottom");
  Elem x = *bot;
  for (int step = 0; step <= p.size(); ++step) {
    Elem next = f(x);
    if (!p.leq(x, next))
      fail(Errc::internal_invariant, {{"x", x}, {"fx", next}},
           "Kleene chain must ascend");
    if (next == x) {
      // Double-check the defining properties before handing the value out.
      for (Elem y = 0; y < p.size(); ++y)
        if (p.leq(f(y), y) && !p.leq(x, y))
          fail(Errc::internal_invariant, {{"x", x}, {"prefixed", y}},
               "fixed point is not least among pre-fixed points");
      return x;
    }
    x = next;
  }
  fail(Errc::internal_invariant, nullptr,
       "Kleene chain failed to stabilize within |P| steps");
}

MonotoneMap lfp_map(const ExponentialPoset& endos) {
  if (!endos.dom.same_as(endos.cod))
    fail(Errc::not_endo, nullptr, "lfp_map needs the endomap space P^P");
  auto bot = least_element(endos.dom);
  if (!bot) fail(Errc::not_pointed, nullptr, "lfp_map needs a pointed P");
  std::vector<Elem> table(endos.size());
  for (Elem f = 0; f < endos.size(); ++f) table[f] = lfp(endos.map_at(f));
  if (endos.size() <= 1024)
    return MonotoneMap::checked(endos.poset, endos.dom, std::move(table));
  return MonotoneMap::trusted(endos.poset, endos.dom, std::move(table));
}

}  // namespace dt
