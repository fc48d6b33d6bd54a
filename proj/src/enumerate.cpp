#include "dt/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dt {

namespace {

std::size_t words(int n) { return (static_cast<std::size_t>(n) * n + 63) / 64; }

void set_bit(std::vector<std::uint64_t>& bits, int n, Elem i, Elem j) {
  std::size_t idx = static_cast<std::size_t>(i) * n + j;
  bits[idx >> 6] |= std::uint64_t{1} << (idx & 63);
}

bool get_bit(const std::vector<std::uint64_t>& bits, int n, Elem i, Elem j) {
  std::size_t idx = static_cast<std::size_t>(i) * n + j;
  return (bits[idx >> 6] >> (idx & 63)) & 1u;
}

}  // namespace

std::vector<Poset> all_posets(int n) {
  if (n < 0 || n > 5)
    fail(Errc::size_limit_exceeded, {{"n", n}, {"bound", 5}},
         "labeled poset enumeration is 3^(n(n-1)/2)");
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem i = 0; i < n; ++i)
    for (Elem j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<Poset> out;
  std::vector<int> state(pairs.size(), 0);  // 0 incomparable, 1 i<j, 2 j<i
  while (true) {
    std::vector<std::uint64_t> bits(words(n), 0);
    for (Elem i = 0; i < n; ++i) set_bit(bits, n, i, i);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (state[k] == 1) set_bit(bits, n, pairs[k].first, pairs[k].second);
      if (state[k] == 2) set_bit(bits, n, pairs[k].second, pairs[k].first);
    }
    bool transitive = true;
    for (Elem i = 0; i < n && transitive; ++i)
      for (Elem j = 0; j < n && transitive; ++j) {
        if (!get_bit(bits, n, i, j)) continue;
        for (Elem k = 0; k < n; ++k)
          if (get_bit(bits, n, j, k) && !get_bit(bits, n, i, k)) {
            transitive = false;
            break;
          }
      }
    if (transitive) out.push_back(Poset::dense_trusted(n, bits));

    std::size_t k = 0;
    for (; k < pairs.size(); ++k) {
      if (++state[k] <= 2) break;
      state[k] = 0;
    }
    if (k == pairs.size()) break;
  }
  return out;
}

std::vector<Poset> poset_iso_representatives(int n) {
  std::vector<Poset> labeled = all_posets(n);
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  std::set<std::vector<bool>> seen;
  std::vector<Poset> out;
  for (const Poset& p : labeled) {
    // Canonical key: lexicographically least relabeled relation.
    std::vector<bool> best;
    std::vector<Elem> q = perm;
    do {
      std::vector<bool> key(static_cast<std::size_t>(n) * n);
      for (Elem i = 0; i < n; ++i)
        for (Elem j = 0; j < n; ++j)
          key[static_cast<std::size_t>(i) * n + j] = p.leq(q[i], q[j]);
      if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(q.begin(), q.end()));
    if (best.empty()) best = {};  // n == 0
    if (seen.insert(best).second) out.push_back(p);
  }
  return out;
}

std::vector<std::vector<Elem>> all_tables(int dom_size, int cod_size) {
  std::vector<std::vector<Elem>> out;
  if (dom_size == 0) {
    out.push_back({});
    return out;
  }
  if (cod_size == 0) return out;
  std::vector<Elem> t(dom_size, 0);
  while (true) {
    out.push_back(t);
    int i = 0;
    for (; i < dom_size; ++i) {
      if (++t[i] < cod_size) break;
      t[i] = 0;
    }
    if (i == dom_size) break;
  }
  return out;
}

}  // namespace dt
