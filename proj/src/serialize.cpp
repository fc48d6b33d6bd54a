#include "dt/serialize.hpp"

namespace dt {

namespace {
constexpr int kInlineLevelMax = 4096;   // larger posets never inline into JSON
constexpr int kRecheckPairBound = 1500; // full monotonicity pair scan up to this

nlohmann::json poset_body(const Poset& p) {
  nlohmann::json j;
  j["size"] = p.size();
  nlohmann::json labels = nlohmann::json::array();
  for (Elem i = 0; i < p.size(); ++i) labels.push_back(p.label(i));
  j["labels"] = labels;
  nlohmann::json leq = nlohmann::json::array();
  for (Elem i = 0; i < p.size(); ++i)
    for (Elem k = 0; k < p.size(); ++k)
      if (p.leq(i, k)) leq.push_back(nlohmann::json::array({i, k}));
  j["leq"] = leq;
  return j;
}
}  // namespace

nlohmann::json poset_to_json(const Poset& p) {
  if (p.size() > kInlineLevelMax)
    fail(Errc::size_limit_exceeded, {{"size", p.size()}, {"bound", kInlineLevelMax}},
         "the full relation of a poset this large is not serialized");
  return poset_body(p);
}

Poset poset_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("leq"))
    fail(Errc::bad_input, nullptr, "poset JSON needs \"size\" and \"leq\"");
  int n = j.at("size").get<int>();
  if (n < 0 || n > kInlineLevelMax)
    fail(Errc::bad_input, {{"size", n}}, "poset size out of range");
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (const auto& pair : j.at("leq")) {
    if (!pair.is_array() || pair.size() != 2)
      fail(Errc::bad_input, {{"pair", pair}}, "leq entries are [i, j] pairs");
    int a = pair[0].get<int>();
    int b = pair[1].get<int>();
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(Errc::index_out_of_range, {{"pair", pair}, {"size", n}}, "leq pair");
    rel[a][b] = true;
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
    if (static_cast<int>(labels.size()) != n)
      fail(Errc::bad_input, {{"labels", labels.size()}, {"size", n}},
           "label count must match size");
  }
  return Poset::validated(n, rel, std::move(labels));
}

nlohmann::json map_to_json(const MonotoneMap& m) {
  nlohmann::json j;
  j["source"] = poset_to_json(m.source());
  j["target"] = poset_to_json(m.target());
  j["table"] = m.table();
  return j;
}

nlohmann::json exponential_to_json(const ExponentialPoset& e) {
  nlohmann::json j;
  j["kind"] = "exponential";
  j["dom"] = poset_to_json(e.dom);
  j["cod"] = poset_to_json(e.cod);
  j["poset"] = e.size() <= kInlineLevelMax ? poset_to_json(e.poset)
                                           : nlohmann::json{{"size", e.size()}};
  return j;
}

nlohmann::json product_to_json(const ProductPoset& p) {
  nlohmann::json j;
  j["kind"] = "product";
  j["left"] = poset_to_json(p.left);
  j["right"] = poset_to_json(p.right);
  j["poset"] = p.poset.size() <= kInlineLevelMax
                   ? poset_to_json(p.poset)
                   : nlohmann::json{{"size", p.poset.size()}};
  return j;
}

std::string poset_to_dot(const Poset& p) {
  std::string out = "digraph poset {\n  rankdir=BT;\n";
  for (Elem i = 0; i < p.size(); ++i) {
    std::string label = p.label(i);
    std::string escaped;
    for (char c : label) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    out += "  n" + std::to_string(i) + " [label=\"" + escaped + "\"];\n";
  }
  for (auto [a, b] : hasse_covers(p))
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

// --- towers ----------------------------------------------------------------

namespace {
nlohmann::json tower_body(const Tower& t, const DnTower* dn) {
  nlohmann::json j;
  j["depth"] = t.depth();
  nlohmann::json levels = nlohmann::json::array();
  for (int n = 0; n <= t.depth(); ++n) {
    if (dn && n >= 1) {
      levels.push_back({{"kind", "exponential"}, {"dom", n - 1}, {"cod", n - 1}});
    } else if (t.level(n).size() <= kInlineLevelMax) {
      levels.push_back(poset_to_json(t.level(n)));
    } else {
      fail(Errc::size_limit_exceeded, {{"level", n}, {"size", t.level(n).size()}},
           "level too large to inline and not an exponential of earlier levels");
    }
  }
  j["levels"] = levels;
  nlohmann::json eps = nlohmann::json::array();
  nlohmann::json pis = nlohmann::json::array();
  for (const EpPair& s : t.steps()) {
    eps.push_back(s.e.table());
    pis.push_back(s.p.table());
  }
  j["eps"] = eps;
  j["pis"] = pis;
  return j;
}
}  // namespace

nlohmann::json tower_to_json(const Tower& t) { return tower_body(t, nullptr); }

nlohmann::json dn_tower_to_json(const DnTower& t) {
  return tower_body(t.tower(), &t);
}

TowerBundle tower_from_json(const nlohmann::json& j, long budget) {
  if (!j.is_object() || !j.contains("depth") || !j.contains("levels") ||
      !j.contains("eps") || !j.contains("pis"))
    fail(Errc::bad_input, nullptr,
         "tower JSON needs \"depth\", \"levels\", \"eps\", \"pis\"");
  const int depth = j.at("depth").get<int>();
  if (depth < 0 || static_cast<int>(j.at("levels").size()) != depth + 1)
    fail(Errc::bad_input, {{"depth", depth}, {"levels", j.at("levels").size()}},
         "levels must list depth + 1 posets");
  if (static_cast<int>(j.at("eps").size()) != depth ||
      static_cast<int>(j.at("pis").size()) != depth)
    fail(Errc::bad_input, nullptr, "eps and pis must list one table per step");

  std::vector<Poset> levels;
  std::vector<std::optional<ExponentialPoset>> exps(depth + 1);
  bool dn_shaped = true;
  for (int n = 0; n <= depth; ++n) {
    const auto& lj = j.at("levels")[n];
    if (lj.is_object() && lj.contains("kind")) {
      if (lj.at("kind") != "exponential")
        fail(Errc::bad_input, {{"level", n}, {"kind", lj.at("kind")}},
             "unknown level kind");
      int dom = lj.at("dom").get<int>();
      int cod = lj.at("cod").get<int>();
      if (dom < 0 || dom >= n || cod < 0 || cod >= n)
        fail(Errc::bad_input, {{"level", n}, {"dom", dom}, {"cod", cod}},
             "exponential levels may only reference earlier levels");
      exps[n] = exponential(levels[dom], levels[cod], budget);
      levels.push_back(exps[n]->poset);
      if (dom != n - 1 || cod != n - 1) dn_shaped = false;
    } else {
      levels.push_back(poset_from_json(lj));
      if (n >= 1) dn_shaped = false;
    }
  }

  LiftedPoset base = lift_set(1);
  if (!levels[0].same_as(base.lifted)) dn_shaped = false;

  std::vector<std::string> notes;
  std::vector<EpPair> steps;
  for (int n = 0; n < depth; ++n) {
    auto e_table = j.at("eps")[n].get<std::vector<Elem>>();
    auto p_table = j.at("pis")[n].get<std::vector<Elem>>();
    bool recheck = levels[n].size() <= kRecheckPairBound &&
                   levels[n + 1].size() <= kRecheckPairBound;
    if (!recheck)
      notes.push_back("step " + std::to_string(n) +
                      ": monotonicity above the pair-scan bound, not re-checked");
    MonotoneMap e = recheck
                        ? MonotoneMap::checked(levels[n], levels[n + 1], std::move(e_table))
                        : MonotoneMap::trusted(levels[n], levels[n + 1], std::move(e_table));
    MonotoneMap p = recheck
                        ? MonotoneMap::checked(levels[n + 1], levels[n], std::move(p_table))
                        : MonotoneMap::trusted(levels[n + 1], levels[n], std::move(p_table));
    steps.push_back(EpPair{std::move(e), std::move(p)});
  }

  Tower tower = Tower::assemble_unchecked(levels, std::move(steps));
  TowerBundle bundle{tower, std::nullopt, std::move(notes)};
  if (dn_shaped) {
    std::vector<ExponentialPoset> dn_exps;
    for (int n = 1; n <= depth; ++n) dn_exps.push_back(*exps[n]);
    bundle.dn = DnTower(tower, base, std::move(dn_exps));
  }
  return bundle;
}

}  // namespace dt
