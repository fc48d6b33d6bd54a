#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "dt/enumerate.hpp"
#include "dt/map.hpp"
#include "test_util.hpp"

using dt::Elem;
using dt::Errc;
using dt::MonotoneMap;
using dt::Poset;
using dtest::catch_error;

namespace {

bool naive_monotone(const Poset& p, const Poset& q, const std::vector<Elem>& t) {
  for (Elem i = 0; i < p.size(); ++i)
    for (Elem j = 0; j < p.size(); ++j)
      if (p.leq(i, j) && !q.leq(t[i], t[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("checked rejects non-monotone tables with the first witness") {
  Poset c2 = Poset::chain(2);
  CHECK_NOTHROW(MonotoneMap::checked(c2, c2, {0, 1}));
  auto r = catch_error([&] { MonotoneMap::checked(c2, c2, {1, 0}); });
  REQUIRE(r);
  CHECK(r->code == Errc::not_monotone);
  CHECK(r->witness["i"] == 0);
  CHECK(r->witness["j"] == 1);

  r = catch_error([&] { MonotoneMap::checked(c2, c2, {0}); });
  REQUIRE(r);
  CHECK(r->code == Errc::bad_input);
  r = catch_error([&] { MonotoneMap::checked(c2, c2, {0, 2}); });
  REQUIRE(r);
  CHECK(r->code == Errc::index_out_of_range);
}

TEST_CASE("identity, constant, application, equality") {
  Poset c3 = Poset::chain(3);
  MonotoneMap id = MonotoneMap::identity(c3);
  for (Elem x = 0; x < 3; ++x) CHECK(id(x) == x);
  MonotoneMap k = MonotoneMap::constant(c3, c3, 1);
  for (Elem x = 0; x < 3; ++x) CHECK(k(x) == 1);
  CHECK(id == MonotoneMap::identity(Poset::chain(3)));
  CHECK(!(id == k));
  auto r = catch_error([&] { id(3); });
  REQUIRE(r);
  CHECK(r->code == Errc::index_out_of_range);
}

TEST_CASE("compose is associative and checks carriers") {
  Poset c3 = Poset::chain(3);
  MonotoneMap f = MonotoneMap::checked(c3, c3, {0, 0, 1});
  MonotoneMap g = MonotoneMap::checked(c3, c3, {1, 2, 2});
  MonotoneMap h = MonotoneMap::checked(c3, c3, {0, 2, 2});
  CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
  CHECK(compose(g, f).table() == std::vector<Elem>{1, 1, 2});
  CHECK(compose(f, MonotoneMap::identity(c3)) == f);
  CHECK(compose(MonotoneMap::identity(c3), f) == f);

  auto r = catch_error([&] { compose(f, MonotoneMap::identity(Poset::chain(2))); });
  REQUIRE(r);
  CHECK(r->code == Errc::source_target_mismatch);
}

TEST_CASE("enumeration agrees with the naive filter and is canonically ordered") {
  // representative shapes: chains, antichains, V, diamond
  std::vector<Poset> shapes{Poset::chain(1), Poset::chain(2), Poset::chain(3),
                            Poset::antichain(2), Poset::antichain(3),
                            Poset::validated(3, {{true, true, true},
                                                 {false, true, false},
                                                 {false, false, true}}),
                            Poset::validated(4, {{true, true, true, true},
                                                 {false, true, false, true},
                                                 {false, false, true, true},
                                                 {false, false, false, true}})};
  for (const Poset& p : shapes) {
    for (const Poset& q : shapes) {
      std::vector<std::vector<Elem>> naive;
      for (const auto& t : dt::all_tables(p.size(), q.size()))
        if (naive_monotone(p, q, t)) naive.push_back(t);
      auto got = dt::enumerate_monotone_tables(p, q);
      auto sorted_got = got;
      std::sort(sorted_got.begin(), sorted_got.end());
      std::sort(naive.begin(), naive.end());
      CHECK(sorted_got == naive);
      CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
      // canonical order: lexicographic in linear-extension coordinates
      auto order = dt::linear_extension(p);
      auto key = [&](const std::vector<Elem>& t) {
        std::vector<Elem> k;
        for (Elem x : order) k.push_back(t[x]);
        return k;
      };
      for (std::size_t i = 0; i + 1 < got.size(); ++i) CHECK(key(got[i]) < key(got[i + 1]));
    }
  }
  // pinned count: monotone self-maps of the 3-chain (binomial(5, 2) = 10)
  CHECK(dt::enumerate_monotone_tables(Poset::chain(3), Poset::chain(3)).size() == 10);
}

TEST_CASE("enumeration budget guards both the count and the upfront size") {
  // 3-antichain to 8-antichain: 512 tables, all monotone
  auto r = catch_error([] {
    dt::enumerate_monotone_tables(Poset::antichain(3), Poset::antichain(8), 100);
  });
  REQUIRE(r);
  CHECK(r->code == Errc::budget_exceeded);
  // the quadratic scan over a 600-element source is rejected before any work
  r = catch_error([] {
    dt::enumerate_monotone_tables(Poset::antichain(600), Poset::chain(2));
  });
  REQUIRE(r);
  CHECK(r->code == Errc::budget_exceeded);
}

TEST_CASE("monotone tables are Scott-continuous and vice versa at this scale") {
  for (int n = 0; n <= 3; ++n)
    for (const Poset& p : dt::poset_iso_representatives(n))
      for (int m = 0; m <= 3; ++m)
        for (const Poset& q : dt::poset_iso_representatives(m))
          for (const auto& t : dt::all_tables(p.size(), q.size()))
            CHECK(naive_monotone(p, q, t) == dt::table_is_scott_continuous(p, q, t));

  MonotoneMap f = MonotoneMap::checked(Poset::chain(3), Poset::chain(3), {0, 0, 2});
  CHECK(dt::is_scott_continuous(f));
  auto r = catch_error([] {
    dt::is_scott_continuous(MonotoneMap::identity(Poset::chain(13)));
  });
  REQUIRE(r);
  CHECK(r->code == Errc::size_limit_exceeded);
}

TEST_CASE("strictness") {
  Poset c2 = Poset::chain(2), c3 = Poset::chain(3);
  CHECK(dt::is_strict(MonotoneMap::checked(c2, c3, {0, 2})));
  CHECK(!dt::is_strict(MonotoneMap::constant(c2, c3, 1)));
  auto r = catch_error([&] { dt::is_strict(MonotoneMap::identity(Poset::antichain(2))); });
  REQUIRE(r);
  CHECK(r->code == Errc::not_pointed);
  // composition preserves strictness (sweep over small pointed chains)
  for (const auto& ft : dt::enumerate_monotone_tables(c3, c3))
    for (const auto& gt : dt::enumerate_monotone_tables(c3, c3)) {
      MonotoneMap f = MonotoneMap::trusted(c3, c3, std::vector<Elem>(ft));
      MonotoneMap g = MonotoneMap::trusted(c3, c3, std::vector<Elem>(gt));
      if (dt::is_strict(f) && dt::is_strict(g)) CHECK(dt::is_strict(compose(g, f)));
    }
}

TEST_CASE("deflations") {
  Poset c3 = Poset::chain(3);
  CHECK(dt::is_deflation(MonotoneMap::checked(c3, c3, {0, 0, 1})));
  CHECK(dt::is_deflation(MonotoneMap::identity(c3)));
  CHECK(!dt::is_deflation(MonotoneMap::checked(c3, c3, {1, 1, 2})));
  auto r = catch_error([&] { dt::is_deflation(MonotoneMap::checked(c3, Poset::chain(2), {0, 0, 1})); });
  REQUIRE(r);
  CHECK(r->code == Errc::not_endo);
}

TEST_CASE("e-p pair validation") {
  Poset c2 = Poset::chain(2), c3 = Poset::chain(3);
  MonotoneMap e = MonotoneMap::checked(c2, c3, {0, 2});
  MonotoneMap p = MonotoneMap::checked(c3, c2, {0, 0, 1});
  CHECK_NOTHROW(dt::validate_ep_pair(e, p));

  // p(e(1)) = 0 != 1: not a section
  MonotoneMap p_bad = MonotoneMap::checked(c3, c2, {0, 0, 0});
  auto r = catch_error([&] { dt::validate_ep_pair(e, p_bad); });
  REQUIRE(r);
  CHECK(r->code == Errc::not_section);
  CHECK(r->witness["x"] == 1);

  // e(p(1)) = e(1) = 2 is not below 1: not a deflation
  MonotoneMap p_up = MonotoneMap::checked(c3, c2, {0, 1, 1});
  r = catch_error([&] { dt::validate_ep_pair(e, p_up); });
  REQUIRE(r);
  CHECK(r->code == Errc::not_deflation);
  CHECK(r->witness["y"] == 1);

  r = catch_error([&] { dt::validate_ep_pair(e, MonotoneMap::identity(c3)); });
  REQUIRE(r);
  CHECK(r->code == Errc::source_target_mismatch);
}

TEST_CASE("isomorphisms and retracts") {
  Poset c3 = Poset::chain(3);
  auto inv = dt::is_isomorphism(MonotoneMap::identity(c3));
  REQUIRE(inv);
  CHECK(inv->table() == std::vector<Elem>{0, 1, 2});
  CHECK(!dt::is_isomorphism(MonotoneMap::constant(c3, c3, 0)).has_value());
  // relabeled copy of V: 0<1, 0<2 vs 1<0, 1<2 under the swap 0<->1
  Poset v1 = Poset::validated(3, {{true, true, true}, {false, true, false}, {false, false, true}});
  Poset v2 = Poset::validated(3, {{true, false, false}, {true, true, true}, {false, false, true}});
  auto sw = dt::is_isomorphism(MonotoneMap::checked(v1, v2, {1, 0, 2}));
  REQUIRE(sw);
  CHECK(sw->table() == std::vector<Elem>{1, 0, 2});
  // a monotone bijection whose inverse is not monotone: antichain -> chain
  CHECK(!dt::is_isomorphism(MonotoneMap::checked(Poset::antichain(2), Poset::chain(2), {0, 1}))
             .has_value());

  MonotoneMap s = MonotoneMap::checked(Poset::chain(2), c3, {0, 2});
  MonotoneMap rr = MonotoneMap::checked(c3, Poset::chain(2), {0, 0, 1});
  CHECK(dt::is_continuous_retract(s, rr));
  CHECK(!dt::is_continuous_retract(s, MonotoneMap::constant(c3, Poset::chain(2), 0)));
  // every isomorphism between pointed posets is strict
  for (int n = 1; n <= 4; ++n)
    for (const Poset& p : dt::poset_iso_representatives(n)) {
      if (!least_element(p)) continue;
      for (const auto& t : dt::enumerate_monotone_tables(p, p)) {
        MonotoneMap m = MonotoneMap::trusted(p, p, std::vector<Elem>(t));
        if (dt::is_isomorphism(m)) CHECK(dt::is_strict(m));
      }
    }
}

TEST_CASE("linear_extension is a topological order sorted by down-set size") {
  for (int n = 0; n <= 4; ++n)
    for (const Poset& p : dt::poset_iso_representatives(n)) {
      auto order = dt::linear_extension(p);
      REQUIRE(order.size() == static_cast<std::size_t>(p.size()));
      std::vector<int> pos(p.size());
      for (int i = 0; i < p.size(); ++i) pos[order[i]] = i;
      for (Elem a = 0; a < p.size(); ++a)
        for (Elem b = 0; b < p.size(); ++b)
          if (p.lt(a, b)) CHECK(pos[a] < pos[b]);
      auto downset = [&](Elem x) {
        int c = 0;
        for (Elem y = 0; y < p.size(); ++y)
          if (p.leq(y, x)) ++c;
        return c;
      };
      for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        int da = downset(order[i]), db = downset(order[i + 1]);
        CHECK((da < db || (da == db && order[i] < order[i + 1])));
      }
    }
}
