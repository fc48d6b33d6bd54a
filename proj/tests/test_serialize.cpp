#include <string>
#include <vector>

#include "doctest.h"
#include "dt/serialize.hpp"
#include "test_util.hpp"

using dt::Elem;
using dt::Errc;
using dt::MonotoneMap;
using dt::Poset;
using dtest::catch_error;

TEST_CASE("poset JSON is byte-stable and carries the full relation") {
  nlohmann::json j = dt::poset_to_json(Poset::chain(2));
  CHECK(j.dump() == R"({"labels":["0","1"],"leq":[[0,0],[0,1],[1,1]],"size":2})");

  Poset d = Poset::validated(4, {{true, true, true, true},
                                 {false, true, false, true},
                                 {false, false, true, true},
                                 {false, false, false, true}},
                             {"bot", "a", "b", "top"});
  nlohmann::json dj = dt::poset_to_json(d);
  Poset back = dt::poset_from_json(dj);
  CHECK(back.same_as(d));
  CHECK(back.label(0) == "bot");
  CHECK(back.label(3) == "top");
  CHECK(dt::poset_to_json(back).dump() == dj.dump());
}

TEST_CASE("poset JSON parsing validates shape and axioms") {
  auto r = catch_error([] { dt::poset_from_json(nlohmann::json::object()); });
  REQUIRE(r);
  CHECK(r->code == Errc::bad_input);

  r = catch_error([] {
    dt::poset_from_json({{"size", 2}, {"leq", {{0, 5}}}});
  });
  REQUIRE(r);
  CHECK(r->code == Errc::index_out_of_range);

  // relation present but not transitive
  r = catch_error([] {
    dt::poset_from_json(
        {{"size", 3}, {"leq", {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}}});
  });
  REQUIRE(r);
  CHECK(r->code == Errc::transitivity_violation);

  r = catch_error([] {
    dt::poset_from_json({{"size", 2}, {"leq", {{0, 0}, {1, 1}}}, {"labels", {"only"}}});
  });
  REQUIRE(r);
  CHECK(r->code == Errc::bad_input);
}

TEST_CASE("map and construction JSON carry their provenance") {
  Poset c2 = Poset::chain(2);
  nlohmann::json mj = dt::map_to_json(MonotoneMap::identity(c2));
  CHECK(mj.contains("source"));
  CHECK(mj.contains("target"));
  CHECK(mj["table"] == nlohmann::json::array({0, 1}));

  nlohmann::json ej = dt::exponential_to_json(dt::exponential(c2, c2));
  CHECK(ej["kind"] == "exponential");
  CHECK(ej["poset"]["size"] == 3);
  nlohmann::json pj = dt::product_to_json(dt::product(c2, c2));
  CHECK(pj["kind"] == "product");
  CHECK(pj["poset"]["size"] == 4);
}

TEST_CASE("DOT export draws the Hasse diagram upward") {
  CHECK(dt::poset_to_dot(Poset::chain(2)) ==
        "digraph poset {\n"
        "  rankdir=BT;\n"
        "  n0 [label=\"0\"];\n"
        "  n1 [label=\"1\"];\n"
        "  n0 -> n1;\n"
        "}\n");
  // labels with DOT metacharacters are escaped
  Poset weird = Poset::chain(1).with_labels({"a\"b\\c"});
  std::string dot = dt::poset_to_dot(weird);
  CHECK(dot.find("label=\"a\\\"b\\\\c\"") != std::string::npos);
}

TEST_CASE("reflexive tower JSON round-trips with exponential references") {
  dt::DnTower t = dt::build_dn_tower(2);
  nlohmann::json j = dt::dn_tower_to_json(t);
  CHECK(j["depth"] == 2);
  CHECK(j["levels"][0]["size"] == 2);
  CHECK(j["levels"][1] ==
        nlohmann::json({{"kind", "exponential"}, {"dom", 0}, {"cod", 0}}));
  CHECK(j["levels"][2] ==
        nlohmann::json({{"kind", "exponential"}, {"dom", 1}, {"cod", 1}}));

  dt::TowerBundle bundle = dt::tower_from_json(j);
  CHECK(bundle.notes.empty());
  REQUIRE(bundle.dn.has_value());
  CHECK(bundle.tower.verify().ok());
  CHECK(bundle.tower.eps(1, 2).table() == t.tower().eps(1, 2).table());
  // serializing the reconstruction reproduces the bytes
  CHECK(dt::dn_tower_to_json(*bundle.dn).dump() == j.dump());
}

TEST_CASE("hand towers inline every level and skip the dn machinery") {
  Poset d0 = Poset::chain(2), d1 = Poset::chain(3);
  dt::EpPair s{MonotoneMap::checked(d0, d1, {0, 2}),
               MonotoneMap::checked(d1, d0, {0, 0, 1})};
  dt::Tower t = dt::Tower::build({d0, d1}, {s});
  nlohmann::json j = dt::tower_to_json(t);
  CHECK(j["levels"][1]["size"] == 3);

  dt::TowerBundle bundle = dt::tower_from_json(j);
  CHECK(!bundle.dn.has_value());
  CHECK(bundle.tower.verify().ok());
  CHECK(bundle.tower.level(1).same_as(d1));
}

TEST_CASE("corrupted step tables are caught by verification after load") {
  nlohmann::json j = dt::dn_tower_to_json(dt::build_dn_tower(2));
  // break the section law of the second step while staying monotone
  j["eps"][1][1] = 3;
  dt::TowerBundle bundle = dt::tower_from_json(j);
  dt::Report rep = bundle.tower.verify();
  CHECK(!rep.ok());
  bool section_failed = false;
  for (const auto& c : rep.checks)
    if (c.law == "section" && !c.ok) section_failed = true;
  CHECK(section_failed);

  // a non-monotone corruption is rejected during the load re-check
  nlohmann::json j2 = dt::dn_tower_to_json(dt::build_dn_tower(2));
  j2["pis"][1] = std::vector<Elem>{2, 1, 0, 0, 0, 0, 0, 0, 0, 0};
  auto r = catch_error([&] { dt::tower_from_json(j2); });
  REQUIRE(r);
  CHECK(r->code == Errc::not_monotone);
}

TEST_CASE("tower JSON parsing rejects malformed shapes") {
  auto r = catch_error([] { dt::tower_from_json(nlohmann::json::object()); });
  REQUIRE(r);
  CHECK(r->code == Errc::bad_input);

  nlohmann::json j = dt::dn_tower_to_json(dt::build_dn_tower(1));
  nlohmann::json missing = j;
  missing.erase("pis");
  r = catch_error([&] { dt::tower_from_json(missing); });
  REQUIRE(r);
  CHECK(r->code == Errc::bad_input);

  nlohmann::json forward = j;
  forward["levels"][1] = {{"kind", "exponential"}, {"dom", 1}, {"cod", 1}};
  r = catch_error([&] { dt::tower_from_json(forward); });
  REQUIRE(r);
  CHECK(r->code == Errc::bad_input);

  nlohmann::json unknown = j;
  unknown["levels"][1] = {{"kind", "mystery"}};
  r = catch_error([&] { dt::tower_from_json(unknown); });
  REQUIRE(r);
  CHECK(r->code == Errc::bad_input);
}

TEST_CASE("deep towers record a note instead of a quadratic re-check") {
  dt::DnTower t3 = dt::build_dn_tower(3);
  nlohmann::json j = dt::dn_tower_to_json(t3);
  dt::TowerBundle bundle = dt::tower_from_json(j);
  REQUIRE(bundle.dn.has_value());
  CHECK(!bundle.notes.empty());
  CHECK(bundle.tower.level(3).size() == 120549);
  CHECK(bundle.tower.eps(1, 2).table() == std::vector<Elem>{0, 2, 9});
  // the reconstructed top level answers order queries like the original
  for (Elem f : {0, 7, 120548})
    CHECK(bundle.tower.level(3).leq(0, f) == t3.level(3).leq(0, f));
}
