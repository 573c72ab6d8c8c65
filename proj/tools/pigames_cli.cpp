// Copyright 2026 The pigames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pigames/pigames.hpp"

namespace {

using namespace pigames;

constexpr int kExitOk = 0;
constexpr int kExitVerdictFailure = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  bool json = false;
  std::uint64_t seed = 0;
  long long max_oracle_units = 12;
};

PISituation load(const std::string& path) {
  const ValidatedSituation v = load_situation(path);
  for (const std::string& w : v.warnings) std::cerr << "warning: " << w << "\n";
  return v.situation;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_rational(tok));
  return out;
}

Coalition parse_coalition(const std::string& text, int n) {
  std::vector<int> members;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const int idx = std::stoi(tok);
    if (idx < 1 || idx > n)
      throw std::invalid_argument("player index " + tok + " outside 1.." + std::to_string(n));
    members.push_back(idx - 1);
  }
  if (members.empty()) throw std::invalid_argument("empty coalition");
  return Coalition::of(members, n);
}

std::string vec_string(const std::vector<Rat>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

std::string vec_string(const std::vector<long long>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

json allocation_json(const std::vector<std::string>& players, const Allocation& x) {
  json out = json::object();
  for (std::size_t i = 0; i < players.size(); ++i) out[players[i]] = rational_to_json(x[i]);
  return out;
}

void emit(const GlobalOptions& opt, const json& j, const std::string& text) {
  if (opt.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// --- subcommand bodies ------------------------------------------------------

int run_solve(const GlobalOptions& opt, const std::string& path,
              const std::string& coalition_arg) {
  const PISituation sit = load(path);
  const int n = sit.player_count();
  const Coalition s =
      coalition_arg.empty() ? Coalition::full(n) : parse_coalition(coalition_arg, n);
  const CoalitionParams p = aggregate(sit, s);
  const std::vector<Rat> y = dual_solution(p);
  const Rat value = char_value(p);
  const PrimalPlan plan = primal_plan(sit, s);

  json j;
  j["coalition"] = json::parse("[" + coalition_key(s) + "]");
  j["value"] = rational_to_json(value);
  json yj = json::array();
  for (const Rat& v : y) yj.push_back(rational_to_json(v));
  j["dual_prices"] = std::move(yj);
  j["plan"] = {{"production", plan.production},
               {"inventory", plan.inventory},
               {"backlog", plan.backlog},
               {"cost", rational_to_json(plan.cost)}};

  std::ostringstream text;
  text << "coalition " << to_string(s) << "\n"
       << "c(S) = " << to_string(value) << "\n"
       << "y*(S) = " << vec_string(y) << "\n"
       << "plan: q = " << vec_string(plan.production) << ", I = " << vec_string(plan.inventory)
       << ", E = " << vec_string(plan.backlog) << ", cost = " << to_string(plan.cost) << "\n";
  emit(opt, j, text.str());
  return kExitOk;
}

int run_game(const GlobalOptions& opt, const std::string& path,
             const std::optional<std::string>& out_path) {
  const PISituation sit = load(path);
  const TUGame g = build_game(sit);
  if (out_path) save_game(*out_path, g);
  std::ostringstream text;
  for_each_coalition(g.player_count(), [&](Mask m) {
    text << to_string(Coalition(m, g.player_count())) << ": " << to_string(g.values[m]) << "\n";
  });
  emit(opt, game_to_json(g), text.str());
  return kExitOk;
}

int run_owen(const GlobalOptions& opt, const std::string& path) {
  const PISituation sit = load(path);
  const Allocation o = owen_point(sit);
  std::ostringstream text;
  for (int i = 0; i < sit.player_count(); ++i)
    text << sit.players[i] << ": " << to_string(o[i]) << "\n";
  emit(opt, json{{"owen", allocation_json(sit.players, o)}}, text.str());
  return kExitOk;
}

int run_core(const GlobalOptions& opt, const std::string& path, const std::string& alloc_arg) {
  const PISituation sit = load(path);
  const Allocation x = parse_rat_list(alloc_arg);
  if (static_cast<int>(x.size()) != sit.player_count())
    throw std::invalid_argument("--alloc needs one value per player");
  const TUGame g = build_game(sit);
  const CoreCheck check = in_core(g, x);

  json j;
  j["allocation"] = allocation_json(sit.players, x);
  j["in_core"] = check.in_core;
  std::ostringstream text;
  if (check.in_core) {
    text << "in core: yes\n";
  } else {
    const Coalition& s = *check.violation;
    j["violation"] = json::parse("[" + coalition_key(s) + "]");
    text << "in core: no (coalition " << to_string(s) << " pays "
         << to_string(coalition_sum(x, s.mask())) << " > c = " << to_string(g.value(s))
         << ")\n";
    if (s.is_full())
      text << "  (allocation is not efficient: sum differs from c(N))\n";
  }
  emit(opt, j, text.str());
  return check.in_core ? kExitOk : kExitVerdictFailure;
}

int run_pmas(const GlobalOptions& opt, const std::string& path) {
  const PISituation sit = load(path);
  const int n = sit.player_count();
  const Pmas scheme = pmas(sit);
  const TUGame g = build_game(sit);
  const auto violation = pmas_violation(g, scheme);

  json j;
  json sj = json::object();
  std::ostringstream text;
  for_each_coalition(n, [&](Mask m) {
    const Coalition s(m, n);
    json row = json::object();
    const std::vector<int> members = s.members();
    text << to_string(s) << ":";
    for (std::size_t k = 0; k < members.size(); ++k) {
      row[sit.players[members[k]]] = rational_to_json(scheme.scheme[m][k]);
      text << " " << sit.players[members[k]] << "=" << to_string(scheme.scheme[m][k]);
    }
    text << "\n";
    sj[coalition_key(s)] = std::move(row);
  });
  j["scheme"] = std::move(sj);
  j["valid"] = !violation.has_value();
  if (violation) {
    text << "scheme INVALID\n";
  } else {
    text << "scheme is efficient per coalition and population monotone\n";
  }
  emit(opt, j, text.str());
  return violation ? kExitVerdictFailure : kExitOk;
}

int run_essential(const GlobalOptions& opt, const std::string& path) {
  const PISituation sit = load(path);
  const EssentialReport report = essential_players(sit);

  json j;
  json ess = json::array();
  std::ostringstream text;
  for (int i = 0; i < sit.player_count(); ++i) {
    if (!report.essential[i]) continue;
    ess.push_back(json{{"player", sit.players[i]},
                       {"witness_period", report.witness_period[i] + 1}});
    text << sit.players[i] << ": essential (witness period "
         << report.witness_period[i] + 1 << ")\n";
  }
  for (int i = 0; i < sit.player_count(); ++i)
    if (!report.essential[i]) text << sit.players[i] << ": inessential\n";
  j["essential"] = std::move(ess);
  j["core_is_owen_singleton"] = report.essential_set().empty();
  text << "core shrinks to the owen point: "
       << (report.essential_set().empty() ? "yes" : "no") << "\n";
  emit(opt, j, text.str());
  return kExitOk;
}

int run_combine(const GlobalOptions& opt, const std::string& path1, const std::string& path2,
                const std::string& out_path) {
  const PISituation a = load(path1);
  const PISituation b = load(path2);
  const PISituation combined = sum_situations(a, b);
  save_situation(out_path, combined);
  std::ostringstream text;
  text << "wrote combined situation (T = " << combined.periods << ") to " << out_path << "\n";
  emit(opt, json{{"T", combined.periods}, {"output", out_path}}, text.str());
  return kExitOk;
}

int run_from_veto(const GlobalOptions& opt, const std::string& game_path,
                  const std::string& out_path) {
  const TUGame g = load_game(game_path);
  const PISituation sit = veto_game_to_situation(g);
  save_situation(out_path, sit);
  const bool roundtrip = build_game(sit).values == g.values;
  std::ostringstream text;
  text << "wrote situation (T = " << sit.periods << ") to " << out_path << "\n"
       << "round-trip: " << (roundtrip ? "game reproduced exactly" : "MISMATCH") << "\n";
  emit(opt, json{{"T", sit.periods}, {"output", out_path}, {"roundtrip", roundtrip}},
       text.str());
  return roundtrip ? kExitOk : kExitVerdictFailure;
}

int run_axioms(const GlobalOptions& opt, const std::string& path, const std::string& rule_filter) {
  const PISituation sit = load(path);
  const CharacterizationReport report = characterization_suite(sit, opt.seed);

  json j;
  json rules = json::object();
  std::ostringstream text;
  text << "rule        EF  NE  PO  IR  IE  AP  PM  AN\n";
  for (const RuleVerdicts& rv : report.rules) {
    if (!rule_filter.empty() && rv.rule != rule_filter) continue;
    json verdicts = json::object();
    text << rv.rule << std::string(rv.rule.size() < 12 ? 12 - rv.rule.size() : 1, ' ');
    for (const AxiomVerdict& v : rv.verdicts) {
      verdicts[to_string(v.axiom)] =
          v.pass ? json{{"pass", true}} : json{{"pass", false}, {"witness", v.detail}};
      text << (v.pass ? "ok " : "FAIL") << " ";
    }
    text << "\n";
    rules[rv.rule] = std::move(verdicts);
  }
  j["rules"] = std::move(rules);
  j["owen_all_pass"] = report.owen_all_pass;
  j["ap_identity"] = report.ap_identity_ok;
  json patterns = json::array();
  bool patterns_ok = true;
  for (const PatternCheck& pc : report.patterns) {
    patterns_ok = patterns_ok && pc.matches;
    json p;
    p["rule"] = pc.rule;
    p["in_witness_domain"] = pc.in_witness_domain;
    p["matches_advertised"] = pc.matches;
    json failed = json::array();
    for (Axiom a : pc.observed) failed.push_back(to_string(a));
    p["observed_failures"] = std::move(failed);
    patterns.push_back(std::move(p));
  }
  j["patterns"] = std::move(patterns);
  j["all_inessential"] = report.all_inessential;
  if (report.all_inessential)
    j["inessential_uniqueness"] = report.inessential_uniqueness_ok;
  j["ok"] = report.ok();

  text << "owen passes all eight axioms: " << (report.owen_all_pass ? "yes" : "NO") << "\n"
       << "demand-additivity identity c(D) = sum_i c(D_i): "
       << (report.ap_identity_ok ? "ok" : "VIOLATED") << "\n"
       << "counterexample patterns: " << (patterns_ok ? "as advertised" : "MISMATCH") << "\n";
  if (report.all_inessential)
    text << "all players inessential; EF+NE+IE pin the owen point: "
         << (report.inessential_uniqueness_ok ? "ok" : "VIOLATED") << "\n";
  emit(opt, j, text.str());
  return report.ok() ? kExitOk : kExitVerdictFailure;
}

int run_verify(const GlobalOptions& opt, const std::string& path) {
  const PISituation sit = load(path);
  const int n = sit.player_count();
  OracleLimits limits;
  limits.max_total_demand = opt.max_oracle_units;

  int total = 0, agreed = 0, skipped_oracle = 0;
  std::ostringstream text;
  json details = json::array();
  bool all_ok = true;
  for_each_coalition(n, [&](Mask m) {
    const Coalition s(m, n);
    ++total;
    const Rat closed = char_value(sit, s);
    const LpSolution lp = solve_lp(build_dlpi(sit, s));
    std::optional<Rat> oracle;
    try {
      oracle = oracle_cost(sit, s, limits);
    } catch (const std::domain_error&) {
      ++skipped_oracle;
    }
    const bool ok = lp.status == LpStatus::Optimal && lp.value == closed &&
                    (!oracle || *oracle == closed);
    if (ok) {
      ++agreed;
    } else {
      all_ok = false;
      text << "MISMATCH at " << to_string(s) << ": closed-form " << to_string(closed)
           << ", LP " << to_string(lp.value);
      if (oracle) text << ", oracle " << to_string(*oracle);
      text << "\n";
    }
    json d;
    d["coalition"] = json::parse("[" + coalition_key(s) + "]");
    d["closed_form"] = rational_to_json(closed);
    d["lp"] = rational_to_json(lp.value);
    if (oracle) d["oracle"] = rational_to_json(*oracle);
    d["ok"] = ok;
    details.push_back(std::move(d));
  });

  text << agreed << "/" << total << " coalitions: closed-form = "
       << (skipped_oracle < total ? "oracle = " : "") << "LP\n";
  if (skipped_oracle > 0)
    text << "(oracle skipped for " << skipped_oracle
         << " coalitions over the enumeration guard; raise --max-oracle-units)\n";
  json j;
  j["coalitions"] = std::move(details);
  j["agreed"] = agreed;
  j["total"] = total;
  j["oracle_skipped"] = skipped_oracle;
  j["ok"] = all_ok;
  emit(opt, j, text.str());
  return all_ok ? kExitOk : kExitVerdictFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"production-inventory cooperative games: coalition costs, the Owen point, "
               "core and PMAS checks, game constructions and axiom verification"};
  app.require_subcommand(1);

  GlobalOptions opt;
  app.add_flag("--json", opt.json, "emit machine-readable JSON instead of text");
  app.add_option("--seed", opt.seed, "seed for sampled checks (large-n anonymity orbits)");
  app.add_option("--max-oracle-units", opt.max_oracle_units,
                 "total-demand guard for the brute-force oracle (default 12)");

  std::string sit_path, sit_path2, game_path, out_path, coalition_arg, alloc_arg, rule_filter;
  std::optional<std::string> game_out;

  CLI::App* solve = app.add_subcommand("solve", "cost, dual prices and a plan for a coalition");
  solve->add_option("situation", sit_path)->required();
  solve->add_option("--coalition", coalition_arg, "comma-separated 1-based players (default: all)");

  CLI::App* game = app.add_subcommand("game", "full characteristic-function table");
  game->add_option("situation", sit_path)->required();
  std::string game_out_str;
  game->add_option("-o,--output", game_out_str, "also write the game as JSON");

  CLI::App* owen = app.add_subcommand("owen", "the Owen point");
  owen->add_option("situation", sit_path)->required();

  CLI::App* core = app.add_subcommand("core", "exact core-membership check");
  core->add_option("situation", sit_path)->required();
  core->add_option("--alloc", alloc_arg, "comma-separated allocation, e.g. 1,3/2")->required();

  CLI::App* pmas_cmd = app.add_subcommand("pmas", "per-coalition scheme + monotonicity verdict");
  pmas_cmd->add_option("situation", sit_path)->required();

  CLI::App* essential = app.add_subcommand("essential", "essential-player report");
  essential->add_option("situation", sit_path)->required();

  CLI::App* combine = app.add_subcommand("combine", "sum construction of two situations");
  combine->add_option("situation1", sit_path)->required();
  combine->add_option("situation2", sit_path2)->required();
  combine->add_option("-o,--output", out_path)->required();

  CLI::App* from_veto =
      app.add_subcommand("from-veto", "situation realizing a 0-monotone simple veto game");
  from_veto->add_option("game", game_path)->required();
  from_veto->add_option("-o,--output", out_path)->required();

  CLI::App* axioms = app.add_subcommand("axioms", "axiom verdicts and characterization checks");
  axioms->add_option("situation", sit_path)->required();
  axioms->add_option("--rule", rule_filter, "limit the table to one rule");

  CLI::App* verify =
      app.add_subcommand("verify", "closed form vs brute-force oracle vs LP, all coalitions");
  verify->add_option("situation", sit_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(opt, sit_path, coalition_arg);
    if (game->parsed())
      return run_game(opt, sit_path,
                      game_out_str.empty() ? std::nullopt
                                           : std::optional<std::string>(game_out_str));
    if (owen->parsed()) return run_owen(opt, sit_path);
    if (core->parsed()) return run_core(opt, sit_path, alloc_arg);
    if (pmas_cmd->parsed()) return run_pmas(opt, sit_path);
    if (essential->parsed()) return run_essential(opt, sit_path);
    if (combine->parsed()) return run_combine(opt, sit_path, sit_path2, out_path);
    if (from_veto->parsed()) return run_from_veto(opt, game_path, out_path);
    if (axioms->parsed()) return run_axioms(opt, sit_path, rule_filter);
    if (verify->parsed()) return run_verify(opt, sit_path);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
