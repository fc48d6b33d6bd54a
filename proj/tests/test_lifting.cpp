#include <vector>

#include "doctest.h"
#include "dt/enumerate.hpp"
#include "dt/lifting.hpp"
#include "test_util.hpp"

using dt::Elem;
using dt::Errc;
using dt::LiftedPoset;
using dt::MonotoneMap;
using dt::PartialElement;
using dt::Poset;
using dtest::catch_error;

TEST_CASE("lift_set adjoins a fresh bottom below an antichain") {
  LiftedPoset l0 = dt::lift_set(0);
  CHECK(l0.base.size() == 0);
  CHECK(l0.lifted.size() == 1);
  CHECK(dt::least_element(l0.lifted) == 0);

  LiftedPoset l1 = dt::lift_set(1);
  CHECK(l1.lifted.size() == 2);
  CHECK(l1.lifted.label(0) == "⊥");
  CHECK(l1.lifted.label(1) == "η⋆");
  CHECK(l1.lifted.leq(0, 1));
  CHECK(!l1.lifted.leq(1, 0));

  LiftedPoset l3 = dt::lift_set(3);
  CHECK(l3.lifted.size() == 4);
  CHECK(l3.lifted.label(1) == "η(a)");
  for (Elem b = 0; b < 3; ++b) {
    CHECK(l3.embed[b] == b + 1);
    CHECK(l3.lifted.leq(0, l3.embed[b]));
    for (Elem c = 0; c < 3; ++c)
      CHECK(l3.lifted.leq(l3.embed[b], l3.embed[c]) == (b == c));
  }
}

TEST_CASE("lift_poset keeps the base order above the new bottom") {
  Poset c2 = Poset::chain(2);
  LiftedPoset l = dt::lift_poset(c2);
  REQUIRE(l.lifted.size() == 3);
  CHECK(dt::least_element(l.lifted) == l.bottom_index());
  for (Elem a = 0; a < 2; ++a)
    for (Elem b = 0; b < 2; ++b) CHECK(l.lifted.leq(l.embed[a], l.embed[b]) == c2.leq(a, b));
  // the new bottom is fresh even when the base already had one
  CHECK(l.lifted.leq(l.bottom_index(), l.embed[0]));
  CHECK(!l.lifted.leq(l.embed[0], l.bottom_index()));
}

TEST_CASE("partial elements round-trip through indices") {
  LiftedPoset l = dt::lift_set(2);
  CHECK(l.index_of(dt::lift_bottom()) == 0);
  CHECK(l.element_at(0) == dt::lift_bottom());
  for (Elem b = 0; b < 2; ++b) {
    PartialElement pe = dt::eta(l, b);
    CHECK(pe.defined);
    CHECK(pe.value == b);
    CHECK(l.element_at(l.index_of(pe)) == pe);
    CHECK(l.index_of(pe) == l.embed[b]);
  }
}

TEST_CASE("kleisli extension is strict and extends its table") {
  LiftedPoset lx = dt::lift_set(2), ly = dt::lift_set(2);
  // f: a -> eta(b), b -> bottom
  std::vector<PartialElement> f{dt::eta(lx, 1), dt::lift_bottom()};
  MonotoneMap fs = dt::kleisli_extend(lx, ly, f);
  CHECK(fs(lx.bottom_index()) == ly.bottom_index());
  CHECK(fs(lx.embed[0]) == ly.index_of(f[0]));
  CHECK(fs(lx.embed[1]) == ly.index_of(f[1]));
  CHECK(dt::is_strict(fs));
}

TEST_CASE("lift_functor is functorial on small sets") {
  LiftedPoset l2 = dt::lift_set(2), l3 = dt::lift_set(3);
  // identity law
  CHECK(dt::lift_functor(l2, l2, std::vector<Elem>{0, 1}) ==
        MonotoneMap::identity(l2.lifted));
  // composition law, swept over all plain tables 2 -> 3 -> 2
  for (const auto& f : dt::all_tables(2, 3))
    for (const auto& g : dt::all_tables(3, 2)) {
      std::vector<Elem> gf(2);
      for (Elem x = 0; x < 2; ++x) gf[x] = g[f[x]];
      CHECK(dt::lift_functor(l2, l2, gf) ==
            compose(dt::lift_functor(l3, l2, g), dt::lift_functor(l2, l3, f)));
    }
}

TEST_CASE("free extension on sets: existence, strictness, uniqueness") {
  LiftedPoset lx = dt::lift_set(2);
  Poset d = Poset::chain(3);
  std::vector<Elem> f{2, 1};
  MonotoneMap ext = dt::free_extension_set(lx, d, f);
  CHECK(ext(lx.bottom_index()) == 0);
  CHECK(ext(lx.embed[0]) == 2);
  CHECK(ext(lx.embed[1]) == 1);
  CHECK(dt::is_strict(ext));

  // uniqueness among all strict monotone extensions, via the naive filter
  int count = 0;
  for (const auto& t : dt::all_tables(3, 3)) {
    if (t[0] != 0 || t[1] != 2 || t[2] != 1) continue;
    bool mono = true;
    for (Elem i = 0; i < 3; ++i)
      for (Elem j = 0; j < 3; ++j)
        if (lx.lifted.leq(i, j) && !d.leq(t[i], t[j])) mono = false;
    if (mono) ++count;
  }
  CHECK(count == 1);

  auto r = catch_error([&] {
    dt::free_extension_set(lx, Poset::antichain(2), std::vector<Elem>{0, 1});
  });
  REQUIRE(r);
  CHECK(r->code == Errc::not_pointed);
}

TEST_CASE("free extension on lifted posets generalizes the set case") {
  // D = lifted 2-chain, E = 3-chain; f continuous
  LiftedPoset ld = dt::lift_poset(Poset::chain(2));
  Poset e = Poset::chain(3);
  MonotoneMap f = MonotoneMap::checked(ld.base, e, {1, 2});
  MonotoneMap ext = dt::free_extension_dcpo(ld, f);
  CHECK(ext(ld.bottom_index()) == 0);
  for (Elem b = 0; b < 2; ++b) CHECK(ext(ld.embed[b]) == f(b));
  CHECK(dt::is_strict(ext));
}

TEST_CASE("monad laws hold for all Kleisli tables over sets of size up to 3") {
  dt::Report rep = dt::verify_monad_laws(3);
  CHECK(rep.ok());
  REQUIRE(rep.checks.size() == 3);
  CHECK(rep.checks[0].law == "eta-extension-is-identity");
  auto r = catch_error([] { dt::verify_monad_laws(9); });
  REQUIRE(r);
  CHECK(r->code == Errc::size_limit_exceeded);
}
