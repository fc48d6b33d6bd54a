#include "dt/poset.hpp"

#include <algorithm>
#include <string>

namespace dt {

namespace {

struct ExpOrder {
  Poset dom;
  Poset cod;
  std::shared_ptr<const std::vector<std::vector<Elem>>> tables;
};

struct ProdOrder {
  Poset left;
  Poset right;
};

std::size_t word_count(int n) {
  return (static_cast<std::size_t>(n) * n + 63) / 64;
}

}  // namespace

struct Poset::Impl {
  int n = 0;
  std::vector<std::string> labels;       // empty -> synthesized labels
  std::vector<std::uint64_t> bits;       // dense backing (row-major) if nonempty
  std::shared_ptr<const ExpOrder> expo;  // pointwise backing
  std::shared_ptr<const ProdOrder> prod; // componentwise backing

  bool bit(Elem a, Elem b) const {
    std::size_t idx = static_cast<std::size_t>(a) * n + b;
    return (bits[idx >> 6] >> (idx & 63)) & 1u;
  }
};

Poset::Poset() : impl_(std::make_shared<Impl>()) {}

int Poset::size() const { return impl_->n; }

bool Poset::is_dense() const { return !impl_->bits.empty() || impl_->n == 0; }

bool Poset::leq(Elem a, Elem b) const {
  const Impl& im = *impl_;
  if (a < 0 || b < 0 || a >= im.n || b >= im.n)
    fail(Errc::index_out_of_range, {{"a", a}, {"b", b}, {"size", im.n}},
         "leq argument outside carrier");
  if (!im.bits.empty()) return im.bit(a, b);
  if (im.expo) {
    const auto& ta = (*im.expo->tables)[a];
    const auto& tb = (*im.expo->tables)[b];
    int dn = im.expo->dom.size();
    for (Elem x = 0; x < dn; ++x)
      if (!im.expo->cod.leq(ta[x], tb[x])) return false;
    return true;
  }
  if (im.prod) {
    int rn = im.prod->right.size();
    return im.prod->left.leq(a / rn, b / rn) && im.prod->right.leq(a % rn, b % rn);
  }
  fail(Errc::internal_invariant, nullptr, "poset without backing");
}

std::string Poset::label(Elem a) const {
  const Impl& im = *impl_;
  if (a < 0 || a >= im.n)
    fail(Errc::index_out_of_range, {{"a", a}, {"size", im.n}}, "label index");
  if (!im.labels.empty()) return im.labels[a];
  if (im.expo) {
    const auto& t = (*im.expo->tables)[a];
    std::string out = "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(t[i]);
    }
    return out + "]";
  }
  if (im.prod) {
    int rn = im.prod->right.size();
    return "(" + im.prod->left.label(a / rn) + "," + im.prod->right.label(a % rn) + ")";
  }
  return std::to_string(a);
}

Poset Poset::with_labels(std::vector<std::string> labels) const {
  if (static_cast<int>(labels.size()) != impl_->n)
    fail(Errc::bad_input, {{"labels", labels.size()}, {"size", impl_->n}},
         "label count must match carrier size");
  auto im = std::make_shared<Impl>(*impl_);
  im->labels = std::move(labels);
  return Poset(std::move(im));
}

bool Poset::same_as(const Poset& other) const {
  if (impl_ == other.impl_) return true;
  const Impl& a = *impl_;
  const Impl& b = *other.impl_;
  if (a.n != b.n) return false;
  if (!a.bits.empty() && !b.bits.empty()) return a.bits == b.bits;
  if (a.expo && b.expo) {
    if (a.expo->tables == b.expo->tables ||
        *a.expo->tables == *b.expo->tables)
      return a.expo->dom.same_as(b.expo->dom) && a.expo->cod.same_as(b.expo->cod);
    return false;
  }
  if (a.prod && b.prod)
    return a.prod->left.same_as(b.prod->left) && a.prod->right.same_as(b.prod->right);
  // Mixed backings: fall back to comparing the relations pointwise.  Only
  // reachable for desk-scale posets (dense ones are never huge).
  for (Elem i = 0; i < a.n; ++i)
    for (Elem j = 0; j < a.n; ++j)
      if (leq(i, j) != other.leq(i, j)) return false;
  return true;
}

Poset Poset::validated(int size, const std::vector<std::vector<bool>>& leq,
                       std::vector<std::string> labels) {
  if (size < 0) fail(Errc::bad_input, {{"size", size}}, "negative size");
  if (static_cast<int>(leq.size()) != size)
    fail(Errc::bad_input, {{"rows", leq.size()}, {"size", size}},
         "relation must have one row per element");
  for (int i = 0; i < size; ++i)
    if (static_cast<int>(leq[i].size()) != size)
      fail(Errc::bad_input, {{"row", i}, {"cols", leq[i].size()}, {"size", size}},
           "relation rows must be square");
  if (!labels.empty() && static_cast<int>(labels.size()) != size)
    fail(Errc::bad_input, {{"labels", labels.size()}, {"size", size}},
         "label count must match carrier size");

  auto im = std::make_shared<Impl>();
  im->n = size;
  im->labels = std::move(labels);
  im->bits.assign(word_count(size), 0);
  for (Elem i = 0; i < size; ++i)
    for (Elem j = 0; j < size; ++j)
      if (leq[i][j]) {
        std::size_t idx = static_cast<std::size_t>(i) * size + j;
        im->bits[idx >> 6] |= std::uint64_t{1} << (idx & 63);
      }
  Poset p(std::move(im));
  p.check_axioms(size);  // always check what we were handed
  return p;
}

void Poset::check_axioms(int max_size) const {
  const int n = impl_->n;
  if (n > max_size)
    fail(Errc::size_limit_exceeded, {{"size", n}, {"bound", max_size}},
         "axiom re-check is cubic; raise the bound explicitly if intended");
  for (Elem i = 0; i < n; ++i)
    if (!leq(i, i))
      fail(Errc::reflexivity_violation, {{"i", i}}, "missing i <= i");
  for (Elem i = 0; i < n; ++i)
    for (Elem j = i + 1; j < n; ++j)
      if (leq(i, j) && leq(j, i))
        fail(Errc::antisymmetry_violation, {{"i", i}, {"j", j}},
             "distinct elements below each other");
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      if (!leq(i, j)) continue;
      for (Elem k = 0; k < n; ++k)
        if (leq(j, k) && !leq(i, k))
          fail(Errc::transitivity_violation, {{"i", i}, {"j", j}, {"k", k}},
               "i <= j <= k but not i <= k");
    }
}

Poset Poset::chain(int n) {
  if (n < 0) fail(Errc::bad_input, {{"n", n}}, "negative size");
  auto im = std::make_shared<Impl>();
  im->n = n;
  im->bits.assign(word_count(n), 0);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = i; j < n; ++j) {
      std::size_t idx = static_cast<std::size_t>(i) * n + j;
      im->bits[idx >> 6] |= std::uint64_t{1} << (idx & 63);
    }
  return Poset(std::move(im));
}

Poset Poset::antichain(int n) {
  if (n < 0) fail(Errc::bad_input, {{"n", n}}, "negative size");
  auto im = std::make_shared<Impl>();
  im->n = n;
  im->bits.assign(word_count(n), 0);
  for (Elem i = 0; i < n; ++i) {
    std::size_t idx = static_cast<std::size_t>(i) * n + i;
    im->bits[idx >> 6] |= std::uint64_t{1} << (idx & 63);
  }
  return Poset(std::move(im));
}

Poset Poset::dense_trusted(int size, std::vector<std::uint64_t> bits,
                           std::vector<std::string> labels) {
  auto im = std::make_shared<Impl>();
  im->n = size;
  im->bits = std::move(bits);
  im->labels = std::move(labels);
  if (im->bits.size() != word_count(size))
    fail(Errc::internal_invariant, {{"size", size}}, "bit matrix shape");
  return Poset(std::move(im));
}

Poset Poset::exponential_order(
    Poset dom, Poset cod,
    std::shared_ptr<const std::vector<std::vector<Elem>>> tables) {
  auto im = std::make_shared<Impl>();
  im->n = static_cast<int>(tables->size());
  im->expo = std::make_shared<ExpOrder>(
      ExpOrder{std::move(dom), std::move(cod), std::move(tables)});
  return Poset(std::move(im));
}

Poset Poset::product_order(Poset left, Poset right) {
  auto im = std::make_shared<Impl>();
  im->n = left.size() * right.size();
  im->prod = std::make_shared<ProdOrder>(ProdOrder{std::move(left), std::move(right)});
  return Poset(std::move(im));
}

// --- subsets ---------------------------------------------------------------

namespace {
void check_members(const Poset& p, std::span<const Elem> subset) {
  for (Elem x : subset)
    if (x < 0 || x >= p.size())
      fail(Errc::index_out_of_range, {{"element", x}, {"size", p.size()}},
           "subset member outside carrier");
}

bool has_internal_upper_bound(const Poset& p, std::span<const Elem> s, Elem a, Elem b) {
  for (Elem c : s)
    if (p.leq(a, c) && p.leq(b, c)) return true;
  return false;
}
}  // namespace

bool is_directed_subset(const Poset& p, std::span<const Elem> subset) {
  check_members(p, subset);
  if (subset.empty()) return false;
  for (Elem a : subset)
    for (Elem b : subset)
      if (!has_internal_upper_bound(p, subset, a, b)) return false;
  return true;
}

bool is_semidirected_subset(const Poset& p, std::span<const Elem> subset) {
  check_members(p, subset);
  for (Elem a : subset)
    for (Elem b : subset)
      if (!has_internal_upper_bound(p, subset, a, b)) return false;
  return true;  // vacuously semidirected when empty
}

std::optional<Elem> supremum_of(const Poset& p, std::span<const Elem> subset) {
  check_members(p, subset);
  std::vector<Elem> ubs;
  for (Elem u = 0; u < p.size(); ++u) {
    bool ok = true;
    for (Elem s : subset)
      if (!p.leq(s, u)) { ok = false; break; }
    if (ok) ubs.push_back(u);
  }
  if (ubs.empty()) return std::nullopt;
  Elem best = ubs[0];
  for (Elem u : ubs)
    if (p.leq(u, best)) best = u;
  for (Elem u : ubs)
    if (!p.leq(best, u)) return std::nullopt;  // no least upper bound
  return best;
}

std::optional<Elem> least_element(const Poset& p) {
  if (p.size() == 0) return std::nullopt;
  Elem best = 0;
  for (Elem x = 1; x < p.size(); ++x)
    if (p.leq(x, best)) best = x;
  for (Elem x = 0; x < p.size(); ++x)
    if (!p.leq(best, x)) return std::nullopt;
  return best;
}

bool is_maximal(const Poset& p, Elem x) {
  if (x < 0 || x >= p.size())
    fail(Errc::index_out_of_range, {{"element", x}, {"size", p.size()}}, "is_maximal");
  for (Elem y = 0; y < p.size(); ++y)
    if (y != x && p.leq(x, y)) return false;
  return true;
}

Elem omega_chain_sup(const Poset& p, std::span<const Elem> chain) {
  check_members(p, chain);
  if (chain.empty())
    fail(Errc::not_stabilized, {{"length", 0}}, "empty chain prefix");
  for (std::size_t n = 0; n + 1 < chain.size(); ++n)
    if (!p.leq(chain[n], chain[n + 1]))
      fail(Errc::not_ascending, {{"n", n}}, "chain descends at position n");
  Elem last = chain.back();
  bool repeated = chain.size() >= 2 && chain[chain.size() - 2] == last;
  if (!repeated && !is_maximal(p, last))
    fail(Errc::not_stabilized, {{"length", chain.size()}},
         "prefix does not certify stabilization");
  return last;  // sup of an ascending chain is its last element
}

Elem semidirected_sup(const Poset& p, std::span<const Elem> subset) {
  auto bot = least_element(p);
  if (!bot)
    fail(Errc::not_pointed, nullptr, "semidirected sup needs a least element");
  if (!is_semidirected_subset(p, subset))
    fail(Errc::not_semidirected, nullptr, "pair without internal upper bound");
  std::vector<Elem> with_bot(subset.begin(), subset.end());
  with_bot.push_back(*bot);
  auto sup = supremum_of(p, with_bot);
  if (!sup)
    fail(Errc::internal_invariant, nullptr,
         "directed finite family must contain its supremum");
  return *sup;
}

std::vector<std::pair<Elem, Elem>> hasse_covers(const Poset& p) {
  std::vector<std::pair<Elem, Elem>> covers;
  const int n = p.size();
  if (n > 4096)
    fail(Errc::size_limit_exceeded, {{"size", n}, {"bound", 4096}},
         "cover computation is cubic");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (a == b || !p.leq(a, b)) continue;
      bool cover = true;
      for (Elem c = 0; c < n; ++c)
        if (c != a && c != b && p.leq(a, c) && p.leq(c, b)) { cover = false; break; }
      if (cover) covers.emplace_back(a, b);
    }
  return covers;
}

Poset powerset_lattice(int n, int max_n) {
  if (n < 0) fail(Errc::bad_input, {{"n", n}}, "negative ground set");
  if (n > max_n)
    fail(Errc::size_limit_exceeded, {{"n", n}, {"bound", max_n}},
         "powerset lattice grows as 2^n");
  const int sz = 1 << n;
  std::vector<std::uint64_t> bits(word_count(sz), 0);
  for (Elem a = 0; a < sz; ++a)
    for (Elem b = 0; b < sz; ++b)
      if ((a & ~b) == 0) {
        std::size_t idx = static_cast<std::size_t>(a) * sz + b;
        bits[idx >> 6] |= std::uint64_t{1} << (idx & 63);
      }
  std::vector<std::string> labels(sz);
  for (Elem a = 0; a < sz; ++a) {
    if (a == 0) { labels[a] = "∅"; continue; }
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < n; ++i)
      if (a & (1 << i)) {
        if (!first) s += ",";
        s += static_cast<char>('a' + i);
        first = false;
      }
    labels[a] = s + "}";
  }
  return Poset::dense_trusted(sz, std::move(bits), std::move(labels));
}

}  // namespace dt
