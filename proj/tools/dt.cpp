// dt — command-line front end for the finite domain-theory library.
//
// Exit codes: 0 success, 1 a verification/law check failed (a JSON witness
// is printed), 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dt/bilimit.hpp"
#include "dt/constructions.hpp"
#include "dt/dinfty.hpp"
#include "dt/error.hpp"
#include "dt/lambda.hpp"
#include "dt/laws.hpp"
#include "dt/lifting.hpp"
#include "dt/serialize.hpp"

namespace {

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) dt::fail(dt::Errc::bad_input, {{"path", path}}, "cannot open file");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    dt::fail(dt::Errc::bad_input, {{"path", path}},
             std::string("malformed JSON: ") + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) dt::fail(dt::Errc::bad_input, {{"path", path}}, "cannot open file for writing");
  out << text;
  if (!out) dt::fail(dt::Errc::bad_input, {{"path", path}}, "write failed");
}

// Errors that mean "the math failed" exit 1; everything else is a usage or
// input problem and exits 2.
bool is_usage_error(dt::Errc c) {
  switch (c) {
    case dt::Errc::index_out_of_range:
    case dt::Errc::size_limit_exceeded:
    case dt::Errc::budget_exceeded:
    case dt::Errc::depth_limit_exceeded:
    case dt::Errc::level_out_of_range:
    case dt::Errc::unbound_variable:
    case dt::Errc::syntax_error:
    case dt::Errc::bad_input:
    case dt::Errc::internal_invariant:
      return true;
    default:
      return false;
  }
}

int print_report(const dt::Report& rep, bool as_json) {
  if (as_json) {
    std::cout << rep.to_json().dump(2) << "\n";
    return rep.ok() ? 0 : 1;
  }
  for (const auto& c : rep.checks) {
    std::cout << (c.ok ? "pass " : "FAIL ") << c.law;
    if (!c.ok) std::cout << " " << c.witness.dump();
    if (!c.note.empty()) std::cout << "  (" << c.note << ")";
    std::cout << "\n";
  }
  return rep.ok() ? 0 : 1;
}

dt::CompactElement parse_env_value(const dt::DnTower& t, const std::string& name,
                                   const std::string& spec) {
  if (spec == "bot") return dt::dinfty_bottom(t);
  if (spec == "eta")
    return dt::embed_compact(t.tower(), 0, t.base().embed.at(0));
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    dt::fail(dt::Errc::bad_input, {{"name", name}, {"value", spec}},
             "environment value must be bot, eta, or level:index");
  int level = 0;
  dt::Elem index = 0;
  try {
    level = std::stoi(spec.substr(0, colon));
    index = std::stoi(spec.substr(colon + 1));
  } catch (const std::exception&) {
    dt::fail(dt::Errc::bad_input, {{"name", name}, {"value", spec}},
             "level:index must be two integers");
  }
  if (level < 0 || level > t.depth())
    dt::fail(dt::Errc::level_out_of_range,
             {{"name", name}, {"level", level}, {"depth", t.depth()}},
             "environment level exceeds tower depth");
  if (index < 0 || index >= t.level(level).size())
    dt::fail(dt::Errc::index_out_of_range,
             {{"name", name}, {"index", index}, {"size", t.level(level).size()}},
             "environment index exceeds level size");
  return dt::embed_compact(t.tower(), level, index);
}

dt::Environment parse_env(const dt::DnTower& t, const std::vector<std::string>& specs) {
  dt::Environment env;
  for (const std::string& s : specs) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
      dt::fail(dt::Errc::bad_input, {{"entry", s}}, "environment entries look like name=value");
    env[s.substr(0, eq)] = parse_env_value(t, s.substr(0, eq), s.substr(eq + 1));
  }
  return env;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite posets, Scott-continuous maps, lifting, reflexive towers"};
  app.require_subcommand(1);
  int rc = 0;

  // ---- validate ----------------------------------------------------------
  auto* validate = app.add_subcommand("validate", "check a poset JSON file against the order axioms");
  auto validate_file = std::make_shared<std::string>();
  auto validate_json = std::make_shared<bool>(false);
  validate->add_option("file", *validate_file, "poset JSON file")->required();
  validate->add_flag("--json", *validate_json, "emit the result as JSON");
  validate->callback([&rc, validate_file, validate_json] {
    dt::Poset p = dt::poset_from_json(load_json(*validate_file));
    long pairs = 0;
    for (dt::Elem i = 0; i < p.size(); ++i)
      for (dt::Elem j = 0; j < p.size(); ++j)
        if (p.leq(i, j)) ++pairs;
    if (*validate_json)
      std::cout << nlohmann::json{{"ok", true}, {"size", p.size()}, {"pairs", pairs}}.dump()
                << "\n";
    else
      std::cout << "ok: " << p.size() << " elements, " << pairs << " related pairs\n";
    rc = 0;
  });

  // ---- tower build / verify ----------------------------------------------
  auto* tower = app.add_subcommand("tower", "build or verify reflexive towers");
  tower->require_subcommand(1);

  auto* tbuild = tower->add_subcommand("build", "build D_0..D_N and print the level sizes");
  auto tb_depth = std::make_shared<int>(2);
  auto tb_budget = std::make_shared<long>(200000);
  auto tb_allow_deep = std::make_shared<bool>(false);
  auto tb_out = std::make_shared<std::string>();
  tbuild->add_option("--depth", *tb_depth, "tower depth N")->required();
  tbuild->add_option("--budget", *tb_budget, "enumeration budget per level");
  tbuild->add_flag("--allow-deep", *tb_allow_deep, "permit depth >= 4 (will exhaust any sane budget)");
  tbuild->add_option("--out", *tb_out, "write the tower as JSON to this file");
  tbuild->callback([&rc, tb_depth, tb_budget, tb_allow_deep, tb_out] {
    dt::DnTower t = dt::build_dn_tower(*tb_depth, *tb_budget, *tb_allow_deep);
    for (int n = 0; n <= t.depth(); ++n)
      std::cout << (n ? " " : "") << t.level(n).size();
    std::cout << "\n";
    if (!tb_out->empty()) write_text(*tb_out, dt::dn_tower_to_json(t).dump(2) + "\n");
    rc = 0;
  });

  auto* tverify = tower->add_subcommand("verify", "re-derive and check every tower law in a file");
  auto tv_file = std::make_shared<std::string>();
  auto tv_budget = std::make_shared<long>(200000);
  auto tv_json = std::make_shared<bool>(false);
  tverify->add_option("file", *tv_file, "tower JSON file")->required();
  tverify->add_option("--budget", *tv_budget, "enumeration budget for exponential levels");
  tverify->add_flag("--json", *tv_json, "emit the report as JSON");
  tverify->callback([&rc, tv_file, tv_budget, tv_json] {
    dt::TowerBundle bundle = dt::tower_from_json(load_json(*tv_file), *tv_budget);
    for (const std::string& note : bundle.notes) std::cout << "note: " << note << "\n";
    rc = print_report(bundle.tower.verify(), *tv_json);
    if (rc == 0 && !*tv_json) std::cout << "tower ok: depth " << bundle.tower.depth() << "\n";
  });

  // ---- iso verify ----------------------------------------------------------
  auto* iso = app.add_subcommand("iso", "check the D-infinity isomorphism witnesses");
  iso->require_subcommand(1);
  auto* iverify = iso->add_subcommand("verify", "phi/psi roundtrips and order-isomorphism");
  auto iv_file = std::make_shared<std::string>();
  auto iv_max_level = std::make_shared<int>(-1);
  auto iv_budget = std::make_shared<long>(200000);
  auto iv_json = std::make_shared<bool>(false);
  iverify->add_option("file", *iv_file, "tower JSON file (must be a reflexive tower)")->required();
  iverify->add_option("--max-level", *iv_max_level, "check levels 0..K (default: full depth)");
  iverify->add_option("--budget", *iv_budget, "enumeration budget for exponential levels");
  iverify->add_flag("--json", *iv_json, "emit the report as JSON");
  iverify->callback([&rc, iv_file, iv_max_level, iv_budget, iv_json] {
    dt::TowerBundle bundle = dt::tower_from_json(load_json(*iv_file), *iv_budget);
    if (!bundle.dn)
      dt::fail(dt::Errc::bad_input, {{"file", *iv_file}},
               "file is not a reflexive tower (levels must be L(1), then D_n^{D_n})");
    int max_level = *iv_max_level < 0 ? bundle.dn->depth() : *iv_max_level;
    rc = print_report(dt::verify_iso(*bundle.dn, max_level), *iv_json);
    if (rc == 0 && !*iv_json) std::cout << "isomorphism ok up to level " << max_level << "\n";
  });

  // ---- denote ---------------------------------------------------------------
  auto* denote = app.add_subcommand("denote", "interpret an untyped lambda term at a cutoff");
  auto dn_term = std::make_shared<std::string>();
  auto dn_env = std::make_shared<std::vector<std::string>>();
  auto dn_cutoff = std::make_shared<int>(1);
  auto dn_budget = std::make_shared<long>(200000);
  auto dn_allow_deep = std::make_shared<bool>(false);
  auto dn_components = std::make_shared<bool>(false);
  auto dn_json = std::make_shared<bool>(false);
  denote->add_option("term", *dn_term, "lambda term, e.g. \"(\\x.x) y\"")->required();
  denote->add_option("--env", *dn_env, "free-variable bindings name=bot|eta|level:index")
      ->delimiter(',');
  denote->add_option("--cutoff", *dn_cutoff, "abstraction cutoff (tower depth = cutoff+1)");
  denote->add_option("--budget", *dn_budget, "enumeration budget per tower level");
  denote->add_flag("--allow-deep", *dn_allow_deep, "permit cutoff >= 3");
  denote->add_flag("--components", *dn_components, "also print the component at every level");
  denote->add_flag("--json", *dn_json, "emit the result as JSON");
  denote->callback([&rc, dn_term, dn_env, dn_cutoff, dn_budget, dn_allow_deep, dn_components,
                    dn_json] {
    if (*dn_cutoff < 0)
      dt::fail(dt::Errc::bad_input, {{"cutoff", *dn_cutoff}}, "cutoff must be nonnegative");
    dt::TermPtr term = dt::parse_term(*dn_term);
    dt::DnTower t = dt::build_dn_tower(*dn_cutoff + 1, *dn_budget, *dn_allow_deep);
    dt::Environment env = parse_env(t, *dn_env);
    dt::CompactElement c = dt::denote(t, *term, env, *dn_cutoff);
    if (*dn_json) {
      nlohmann::json j{{"level", c.level},
                       {"index", c.elem},
                       {"label", t.level(c.level).label(c.elem)}};
      if (*dn_components) {
        nlohmann::json comps = nlohmann::json::array();
        for (int i = 0; i <= t.depth(); ++i)
          comps.push_back(t.level(i).label(dt::project_compact(t.tower(), c, i)));
        j["components"] = comps;
      }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "(" << c.level << ") " << t.level(c.level).label(c.elem) << "\n";
      if (*dn_components)
        for (int i = 0; i <= t.depth(); ++i)
          std::cout << "  D_" << i << ": "
                    << t.level(i).label(dt::project_compact(t.tower(), c, i)) << "\n";
    }
    rc = 0;
  });

  // ---- laws -----------------------------------------------------------------
  auto* laws = app.add_subcommand("laws", "run an exhaustive law suite at desk scale");
  auto law_suite = std::make_shared<std::string>();
  auto law_max = std::make_shared<int>(-1);
  auto law_json = std::make_shared<bool>(false);
  laws->add_option("suite", *law_suite, "which suite to run")
      ->required()
      ->check(CLI::IsMember(
          {"poset", "continuity", "monad", "free", "product", "exponential", "lfp"}));
  laws->add_option("--max-size", *law_max, "largest poset size in the sweep (suite default)");
  laws->add_flag("--json", *law_json, "emit the report as JSON");
  laws->callback([&rc, law_suite, law_max, law_json] {
    int ms = *law_max;
    dt::Report rep;
    if (*law_suite == "poset") rep = dt::laws_poset(ms < 0 ? 4 : ms);
    else if (*law_suite == "continuity") rep = dt::laws_continuity(ms < 0 ? 3 : ms);
    else if (*law_suite == "monad") rep = dt::laws_monad(ms < 0 ? 3 : ms);
    else if (*law_suite == "free") rep = dt::laws_free(ms < 0 ? 4 : ms);
    else if (*law_suite == "product") rep = dt::laws_product(ms < 0 ? 3 : ms);
    else if (*law_suite == "exponential") rep = dt::laws_exponential(ms < 0 ? 3 : ms);
    else rep = dt::laws_lfp(ms < 0 ? 4 : ms);
    rc = print_report(rep, *law_json);
    if (!*law_json) std::cout << (rc == 0 ? "all laws pass" : "laws FAILED") << "\n";
  });

  // ---- export ----------------------------------------------------------------
  auto* exp = app.add_subcommand("export", "convert artifacts to other formats");
  exp->require_subcommand(1);
  auto* expdot = exp->add_subcommand("dot", "print a poset's Hasse diagram as Graphviz DOT");
  auto ed_file = std::make_shared<std::string>();
  expdot->add_option("file", *ed_file, "poset JSON file")->required();
  expdot->callback([&rc, ed_file] {
    std::cout << dt::poset_to_dot(dt::poset_from_json(load_json(*ed_file)));
    rc = 0;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int cli_rc = app.exit(e);
    return cli_rc == 0 ? 0 : 2;
  } catch (const dt::Error& e) {
    nlohmann::json j{{"error", dt::errc_name(e.code())},
                     {"witness", e.witness()},
                     {"message", e.what()}};
    std::cerr << j.dump(2) << "\n";
    return is_usage_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
