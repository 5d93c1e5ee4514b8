// Copyright 2026 The itervote Authors
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

#include "itervote_cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "itervote/analysis.hpp"
#include "itervote/constructions.hpp"
#include "itervote/error.hpp"
#include "itervote_cli/dot.hpp"
#include "itervote_cli/gamefile.hpp"

namespace itervote::cli {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

[[noreturn]] void usage(const std::string& what) { fail(ErrorKind::kInvalidInput, what); }

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size()) usage("bad " + what + " '" + text + "'");
  return v;
}

ReplyKind parse_policy(const std::string& s) {
  if (s == "better") return ReplyKind::kBetter;
  if (s == "best") return ReplyKind::kBest;
  if (s == "direct") return ReplyKind::kDirect;
  if (s == "direct-best") return ReplyKind::kDirectBest;
  usage("unknown policy '" + s + "'");
}

ComparatorMode parse_comparator(const std::string& s) {
  if (s == "lex") return ComparatorMode::kLexSingleton;
  if (s == "eu") return ComparatorMode::kExpectedUtility;
  if (s == "sd") return ComparatorMode::kStochasticDominance;
  if (s == "ld") return ComparatorMode::kLocalDominance;
  if (s == "k") return ComparatorMode::kKOnly;
  usage("unknown comparator '" + s + "'");
}

ReplyPolicy policy_for(const Game& game, const std::string& policy,
                       const std::string& comparator) {
  return {parse_policy(policy),
          comparator.empty() ? default_comparator(game) : parse_comparator(comparator)};
}

// Policy for form-level runs, where no utilities exist yet.
ReplyPolicy policy_for_form(const GameForm& form, const std::string& policy,
                            const std::string& comparator) {
  if (!comparator.empty()) return {parse_policy(policy), parse_comparator(comparator)};
  Game probe;
  probe.form = form;
  ComparatorMode mode = default_comparator(probe);
  if (mode == ComparatorMode::kStochasticDominance) mode = ComparatorMode::kExpectedUtility;
  return {parse_policy(policy), mode};
}

Profile parse_profile(const Game& game, const std::string& text) {
  if (text == "truthful") return truthful_profile(game);
  std::string body = text;
  body.erase(std::remove(body.begin(), body.end(), '('), body.end());
  body.erase(std::remove(body.begin(), body.end(), ')'), body.end());
  return game.form.profile_of(split(body, ','));
}

SchedulerSpec parse_scheduler(const std::string& agents, const std::string& actions) {
  SchedulerSpec spec;
  auto colon = [](const std::string& s) {
    const auto k = s.find(':');
    return std::make_pair(s.substr(0, k), k == std::string::npos ? std::string() : s.substr(k + 1));
  };
  auto voters = [](const std::string& list) {
    std::vector<int> out;
    for (const std::string& w : split(list, ',')) {
      const std::uint64_t v = parse_u64(w, "voter");
      if (v < 1) usage("voters are numbered from 1");
      out.push_back(static_cast<int>(v) - 1);
    }
    return out;
  };
  const auto [ak, av] = colon(agents);
  using AK = AgentScheduler::Kind;
  if (ak == "round-robin") {
    spec.agent.kind = AK::kRoundRobin;
    spec.agent.start = av.empty() ? 0 : voters(av).front();
  } else if (ak == "priority") {
    spec.agent.kind = AK::kFixedPriority;
    spec.agent.order = voters(av);
  } else if (ak == "random") {
    spec.agent.kind = AK::kSeededRandom;
    spec.agent.seed = av.empty() ? 0 : parse_u64(av, "seed");
  } else if (ak == "scripted") {
    spec.agent.kind = AK::kScripted;
    spec.agent.script = voters(av);
  } else {
    usage("unknown agent scheduler '" + agents + "'");
  }
  const auto [ck, cv] = colon(actions);
  using CK = ActionScheduler::Kind;
  if (ck == "unique") {
    spec.action.kind = CK::kPolicyUnique;
  } else if (ck == "most-preferred") {
    spec.action.kind = CK::kPreferMostPreferred;
  } else if (ck == "least-preferred") {
    spec.action.kind = CK::kLeastPreferred;
  } else if (ck == "random") {
    spec.action.kind = CK::kSeededRandom;
    spec.action.seed = cv.empty() ? 0 : parse_u64(cv, "seed");
  } else if (ck == "scripted") {
    spec.action.kind = CK::kScripted;
    spec.action.script = split(cv, ',');
  } else {
    usage("unknown action scheduler '" + actions + "'");
  }
  return spec;
}

std::uint64_t default_node_limit() {
  if (const char* env = std::getenv("ITERVOTE_NODE_LIMIT")) {
    return parse_u64(env, "ITERVOTE_NODE_LIMIT");
  }
  return kDefaultNodeLimit;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) fail(ErrorKind::kInvalidInput, "cannot write " + path);
  f << text;
}

int verdict(bool holds) { return holds ? kExitOk : kExitPropertyFails; }

struct Options {
  std::string file;
  std::string policy = "better";
  std::string comparator;
  std::string start = "truthful";
  std::string agents = "round-robin";
  std::string actions = "most-preferred";
  std::size_t max_steps = 1000;
  std::string scope = "game";
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int utility_samples = 5;
  std::uint64_t node_limit = 0;
  std::uint64_t budget = kDefaultSearchBudget;
  std::string query = "all";
  std::vector<std::string> starts;
  std::string dot;
  bool highlight = false;
  std::vector<std::string> catalog_args;
  std::string what;
  std::string output;
  std::uint64_t trials = 1000;
  ScanParams scan;
};

int run_simulate(const Options& o, std::ostream& out) {
  const Game game = load_game_file(o.file).game();
  const ReplyPolicy policy = policy_for(game, o.policy, o.comparator);
  const Profile start = parse_profile(game, o.start);
  const SchedulerSpec scheduler = parse_scheduler(o.agents, o.actions);
  const PathResult path = run_path(game, start, scheduler, policy, o.max_steps);
  const GameForm& form = game.form;
  out << "policy: " << to_string(policy) << '\n';
  out << "start: " << form.format_profile(start) << ' ' << form.format_outcome(form.outcome(start))
      << '\n';
  out << "trace:\n" << format_trace(form, path);
  out << "status: " << to_string(path.status) << '\n';
  out << "steps: " << path.steps.size() << '\n';
  if (path.status == PathStatus::kCycleDetected) {
    out << "cycle-length: " << path.cycle_length() << '\n';
    out << "cycle-start: " << form.format_profile(path.states[path.cycle_start]) << '\n';
  }
  out << "final: " << form.format_profile(path.final_profile()) << ' '
      << form.format_outcome(form.outcome(path.final_profile())) << '\n';
  return path.status == PathStatus::kConverged ? kExitOk : kExitPropertyFails;
}

int query_code(const std::string& query, bool ne, bool fip, bool weak, bool restricted) {
  if (query == "ne") return verdict(ne);
  if (query == "fip") return verdict(fip);
  if (query == "weak-fip") return verdict(weak);
  if (query == "restricted-fip") return verdict(restricted);
  return verdict(ne && fip && weak && restricted);
}

int run_classify(const Options& o, std::ostream& out) {
  const GameFile file = load_game_file(o.file);
  ClassifyOptions options;
  options.node_limit = o.node_limit;
  options.search_budget = o.budget;
  if (o.scope == "form") {
    const ReplyPolicy policy = policy_for_form(file.form, o.policy, o.comparator);
    FormScope scope;
    if (o.samples > 0 && !o.exhaustive) {
      scope.kind = FormScope::Kind::kSample;
      scope.samples = o.samples;
    }
    scope.seed = o.seed;
    scope.utility_samples = o.utility_samples;
    const FormReport r = classify_game_form(file.form, policy, scope, options);
    out << format_form_report(file.form, r);
    return query_code(o.query, r.has_ne, r.fip, r.weak_fip, r.restricted_fip);
  }
  const Game game = file.game();
  const ReplyPolicy policy = policy_for(game, o.policy, o.comparator);
  for (const std::string& s : o.starts) options.starts.push_back(parse_profile(game, s));
  const ClassificationReport r = classify_game(game, policy, options);
  out << format_report(game, r);
  return query_code(o.query, r.has_ne, r.fip.fip, r.weak.weak_fip, r.restricted.restricted_fip);
}

int run_graph(const Options& o, std::ostream& out) {
  const Game game = load_game_file(o.file).game();
  const ReplyPolicy policy = policy_for(game, o.policy, o.comparator);
  const BetterReplyGraph g = build_graph(game, policy, o.node_limit);
  if (!o.dot.empty()) write_output(o.dot, export_dot(g, o.highlight), out);
  if (o.dot != "-") {
    out << "policy: " << to_string(policy) << '\n';
    out << "nodes: " << g.num_nodes() << '\n';
    out << "edges: " << g.num_edges() << '\n';
    out << "sinks: " << g.sinks().size() << '\n';
  }
  return kExitOk;
}

std::string export_entry(const CatalogEntry& e) {
  std::string text = "# " + e.name + ": " + e.summary + "\n";
  text += "# start: " + e.game.form.format_profile(e.start) + "\n";
  return text + serialize_game(e.game);
}

int run_catalog(const Options& o, std::ostream& out) {
  const std::vector<std::string>& a = o.catalog_args;
  const std::string verb = a.empty() ? "list" : a[0];
  auto select = [&](std::size_t pos) {
    if (a.size() <= pos) return catalog();
    auto e = catalog_entry(a[pos]);
    if (!e) usage("no catalog entry named '" + a[pos] + "'");
    return std::vector<CatalogEntry>{*e};
  };
  if (verb == "list") {
    for (const CatalogEntry& e : catalog()) out << e.name << ": " << e.summary << '\n';
    return kExitOk;
  }
  if (verb == "verify") {
    bool ok = true;
    for (const CatalogEntry& e : select(1)) {
      const VerifyResult v = verify_entry(e);
      if (v.ok) {
        out << "ok " << e.name << " (" << v.path.steps.size() << " steps)\n";
      } else {
        ok = false;
        for (const std::string& p : v.problems) out << "FAIL " << p << '\n';
      }
    }
    return verdict(ok);
  }
  if (verb == "export") {
    if (a.size() < 2) usage("catalog export needs an entry name");
    write_output(o.output, export_entry(select(1).front()), out);
    return kExitOk;
  }
  usage("unknown catalog command '" + verb + "'");
}

int run_construct(const Options& o, std::ostream& out) {
  if (o.what == "f-star") {
    write_output(o.output, serialize_game(g_star_game()), out);
  } else {
    const HammingForm h = hamming_fip_form();
    std::string text = "# range " + std::to_string(h.certificate.range_size) +
                       ", action budget " + std::to_string(h.certificate.action_budget) +
                       ", min distance " + std::to_string(h.certificate.min_pairwise_distance) +
                       "\n";
    write_output(o.output, text + serialize_game_file(GameFile{h.form, {}, {}}), out);
  }
  return kExitOk;
}

int run_scan(const Options& o, std::ostream& out) {
  const ScanReport r = conjecture_scan(o.scan, o.trials, o.seed);
  out << "trials: " << r.trials << '\n';
  out << "confirmed: " << r.confirmed << '\n';
  out << "cyclic: " << r.cyclic << '\n';
  out << "violations: " << r.violations.size() << '\n';
  for (const Game& g : r.violations) out << "---\n" << serialize_game(g);
  return verdict(r.violations.empty());
}

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::kResourceLimit ? kExitResourceLimit : kExitUsage;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Iterative voting dynamics and acyclicity analysis", "itervote"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "itervote 0.1.0");

  auto add_policy = [&](CLI::App* cmd) {
    cmd->add_option("--policy", o.policy, "better|best|direct|direct-best")
        ->check(CLI::IsMember({"better", "best", "direct", "direct-best"}));
    cmd->add_option("--comparator", o.comparator, "lex|eu|sd|ld|k (default from the form)")
        ->check(CLI::IsMember({"lex", "eu", "sd", "ld", "k"}));
    cmd->add_option("--node-limit", o.node_limit, "largest state space to enumerate");
  };

  CLI::App* sim = app.add_subcommand("simulate", "Run one improvement path");
  sim->add_option("file", o.file, "game file")->required();
  sim->add_option("--start", o.start, "truthful or a profile such as (b,c)");
  sim->add_option("--agents", o.agents,
                  "round-robin[:i] | priority:i,j,.. | random:seed | scripted:i,j,..");
  sim->add_option("--actions", o.actions,
                  "unique | most-preferred | least-preferred | random:seed | scripted:a,b,..");
  sim->add_option("--max-steps", o.max_steps)->check(CLI::PositiveNumber);
  add_policy(sim);

  CLI::App* cls = app.add_subcommand("classify", "Decide FIP, weak-FIP and restricted-FIP");
  cls->add_option("file", o.file, "game file")->required();
  cls->add_option("--scope", o.scope)->check(CLI::IsMember({"game", "form"}));
  cls->add_flag("--exhaustive", o.exhaustive, "all preference profiles (form scope)");
  cls->add_option("--samples", o.samples, "sampled preference profiles (form scope)");
  cls->add_option("--seed", o.seed);
  cls->add_option("--utility-samples", o.utility_samples)->check(CLI::PositiveNumber);
  cls->add_option("--budget", o.budget, "restricted-FIP search budget");
  cls->add_option("--query", o.query, "property deciding the exit code")
      ->check(CLI::IsMember({"all", "ne", "fip", "weak-fip", "restricted-fip"}));
  cls->add_option("--start", o.starts, "also decide from this profile");
  add_policy(cls);

  CLI::App* gr = app.add_subcommand("graph", "Build the improvement graph");
  gr->add_option("file", o.file, "game file")->required();
  gr->add_option("--dot", o.dot, "write Graphviz output (- for stdout)");
  gr->add_flag("--highlight-cycles", o.highlight, "bold edges inside cycles");
  add_policy(gr);

  CLI::App* cat = app.add_subcommand("catalog", "List, verify or export the built-in games");
  cat->add_option("args", o.catalog_args, "list | verify [name] | export <name>");
  cat->add_option("-o,--output", o.output);

  CLI::App* con = app.add_subcommand("construct", "Write a constructed game form");
  con->add_option("what", o.what)->required()->check(CLI::IsMember({"f-star", "hamming"}));
  con->add_option("-o,--output", o.output);

  CLI::App* scan = app.add_subcommand("scan", "Search random weighted games for counterexamples");
  scan->add_option("what", o.what)->required()->check(CLI::IsMember({"weighted-weak-fdrp"}));
  scan->add_option("--trials", o.trials);
  scan->add_option("--seed", o.seed);
  scan->add_option("--max-m", o.scan.max_m)->check(CLI::Range(2, 8));
  scan->add_option("--max-n", o.scan.max_n)->check(CLI::Range(1, 8));
  scan->add_option("--weight-bound", o.scan.weight_bound)->check(CLI::PositiveNumber);
  scan->add_option("--score-bound", o.scan.score_bound)->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (o.node_limit == 0) o.node_limit = default_node_limit();
    if (sim->parsed()) return run_simulate(o, out);
    if (cls->parsed()) return run_classify(o, out);
    if (gr->parsed()) return run_graph(o, out);
    if (cat->parsed()) return run_catalog(o, out);
    if (con->parsed()) return run_construct(o, out);
    if (scan->parsed()) return run_scan(o, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}

}  // namespace itervote::cli
