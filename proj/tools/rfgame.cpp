// Copyright 2026 The rfgames Authors
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

// Command-line front end: validate, classify, reduce, solve, evaluate,
// derandomize, verify and tables.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "rfg/derandomize.hpp"
#include "rfg/error.hpp"
#include "rfg/evaluate.hpp"
#include "rfg/io.hpp"
#include "rfg/reductions.hpp"
#include "rfg/solvers.hpp"
#include "rfg/tables.hpp"
#include "rfg/verify.hpp"

namespace {

using namespace rfg;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string load(const std::string& path) {
  try {
    return read_file(path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

StateId initial_state(const Game& game, const std::string& name) {
  if (!name.empty()) return game.state(name);
  if (!game.initial()) throw UsageError("game has no 'init' line; pass --init");
  return *game.initial();
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10f", v);
  return buf;
}

// validate ----------------------------------------------------------------

int cmd_validate(const std::string& file) {
  ParseOptions lenient;
  lenient.validate = false;
  const GameDocument doc = parse_game_document(load(file), lenient);
  const ValidationReport report = validate(doc.game);
  for (const auto& v : report.violations) std::cout << "violation: " << v << "\n";
  for (const auto& n : report.notes) std::cout << "note: " << n << "\n";
  std::cout << "interaction-separated: " << (report.interaction_separated ? "yes" : "no") << "\n";
  std::cout << (report.ok() ? "valid" : "invalid") << "\n";
  return report.ok() ? kOk : kCheckFailed;
}

// classify ----------------------------------------------------------------

int cmd_classify(const std::string& file) {
  const Game game = parse_game(load(file));
  std::cout << "class: " << to_string(classify_game(game)) << "\n";
  for (StateId s = 0; s < game.num_states(); ++s) {
    const StateKind k = classify_state(game, s);
    std::cout << "state " << game.state_name(s) << ": " << to_string(k.turn)
              << (k.deterministic ? " deterministic" : "") << "\n";
  }
  return kOk;
}

// reduce ------------------------------------------------------------------

int cmd_reduce(const std::string& kind_text, const std::string& file, const std::string& out,
               const std::string& informed_text) {
  const auto kind = parse_reduction_kind(kind_text);
  if (!kind) throw UsageError("unknown reduction kind '" + kind_text + "'");
  const GameDocument doc = parse_game_document(load(file));
  Reduction r;
  switch (*kind) {
    case ReductionKind::Separate: r = separate_interaction(doc.game); break;
    case ReductionKind::Uniformize: r = uniformize(doc.game); break;
    case ReductionKind::CocGadget: r = coc_gadget(doc.game); break;
    case ReductionKind::OstGadget:
      r = ost_gadget(doc.game, informed_text == "1" ? Player::One : Player::Two);
      break;
    case ReductionKind::NaiveBinary: r = naive_binary_reduction(doc.game); break;
  }
  std::optional<Objective> objective;
  if (doc.objective) objective = lift_objective(*doc.objective, r.witness);
  const std::string game_text = serialize_game(r.game, objective);
  const std::string witness_text = serialize_witness(r.witness, doc.game, r.game);
  if (out.empty()) {
    std::cout << game_text << witness_text;
  } else {
    write_file(out, game_text);
    write_file(out + ".witness", witness_text);
    std::cout << "wrote " << out << " (" << r.game.num_states() << " states, n=" << r.witness.n << ") and "
              << out << ".witness\n";
  }
  return kOk;
}

// solve -------------------------------------------------------------------

int cmd_solve(const std::string& file, const std::string& objective_text, double tol, std::size_t max_iter) {
  const GameDocument doc = parse_game_document(load(file));
  const Game& game = doc.game;
  std::string keyword = "reach";
  StateSet target;
  if (!objective_text.empty()) {
    const auto colon = objective_text.find(':');
    if (colon == std::string::npos) throw UsageError("--objective expects <kind>:<states>");
    keyword = objective_text.substr(0, colon);
    target = make_state_set(game, split_names(objective_text.substr(colon + 1)));
  } else if (doc.objective && std::holds_alternative<Reach>(*doc.objective)) {
    target = std::get<Reach>(*doc.objective).target;
  } else if (doc.objective && std::holds_alternative<Buechi>(*doc.objective)) {
    keyword = "buchi";
    target = std::get<Buechi>(*doc.objective).target;
  } else {
    throw UsageError("no objective: pass --objective reach:<states>");
  }
  const GameClass cls = classify_game(game);
  const bool mdp = cls.players == PlayerCount::OneAndHalf;
  if (keyword == "buchi" || keyword == "almost-reach") {
    if (!mdp) throw Error(ErrorCode::NotMdp, "almost-sure analysis needs an MDP");
    const Objective o = keyword == "buchi" ? Objective{Buechi{target}} : Objective{Reach{target}};
    const StateSet win = mdp_almost_sure(game, o);
    std::cout << "almost-sure winning states:";
    for (StateId s : win) std::cout << " " << game.state_name(s);
    std::cout << "\n";
    return kOk;
  }
  if (keyword != "reach") throw UsageError("unsupported objective '" + keyword + "'");
  if (cls.observation != ObservationClass::Co) {
    throw Error(ErrorCode::NotCompleteObservation, "solve needs complete observation");
  }
  ValueVector values;
  if (mdp) {
    const MdpSolution sol = mdp_reach_value(game, target);
    values = sol.values;
    std::cout << "mode: exact (MDP controlled by player " << static_cast<int>(sol.controller) << ")\n";
  } else {
    ShapleyOptions options;
    options.tolerance = tol;
    options.max_iterations = max_iter;
    values = concurrent_reach_value(game, target, options);
    std::cout << "mode: approx (tolerance " << tol << ", " << values.iterations << " iterations)\n";
  }
  for (StateId s = 0; s < game.num_states(); ++s) {
    std::cout << game.state_name(s) << ": "
              << (values.mode == ValueVector::Mode::Exact ? values.exact[s].str() : format_value(values.approx[s]))
              << "\n";
  }
  return kOk;
}

// evaluate ----------------------------------------------------------------

struct EvaluateArgs {
  std::string file, s1, s2, target, init, witness, original;
  std::size_t horizon = 0;
};

std::unique_ptr<Strategy> load_strategy(const std::string& path, const Game& game) {
  if (path.empty()) return nullptr;
  return std::make_unique<Strategy>(parse_strategy(load(path), game));
}

const Policy* pick(const std::unique_ptr<Strategy>& a, const std::unique_ptr<Strategy>& b, Player p) {
  if (a && a->owner() == p) return a.get();
  if (b && b->owner() == p) return b.get();
  return nullptr;
}

int cmd_evaluate(const EvaluateArgs& args) {
  const Game game = parse_game(load(args.file));
  if (args.witness.empty() != args.original.empty()) throw UsageError("--witness and --original go together");
  if (args.witness.empty()) {
    const StateId init = initial_state(game, args.init);
    const auto a = load_strategy(args.s1, game);
    const auto b = load_strategy(args.s2, game);
    const BoundedReach objective{make_state_set(game, split_names(args.target)), args.horizon};
    std::cout << evaluate_fixed(game, init, pick(a, b, Player::One), pick(a, b, Player::Two), objective).str()
              << "\n";
    return kOk;
  }
  // Replay: strategies and target refer to the original game, which is
  // translated through the witness onto the reduced game given as <file>.
  const Game original = parse_game(load(args.original));
  const ReductionWitness w = parse_witness(load(args.witness), original, game);
  const StateId init = initial_state(original, args.init);
  const auto a = load_strategy(args.s1, original);
  const auto b = load_strategy(args.s2, original);
  const BoundedReach objective{make_state_set(original, split_names(args.target)), args.horizon};
  const Rational lhs = evaluate_fixed(original, init, pick(a, b, Player::One), pick(a, b, Player::Two), objective);
  std::unique_ptr<Policy> t1, t2;
  if (const Policy* p = pick(a, b, Player::One)) t1 = translate_policy(*p, original, game, w, init);
  if (const Policy* p = pick(a, b, Player::Two)) t2 = translate_policy(*p, original, game, w, init);
  const auto lifted = std::get<BoundedReach>(lift_objective(objective, w));
  const Rational rhs = evaluate_fixed(game, w.embedding[init], t1.get(), t2.get(), lifted);
  std::cout << "original (horizon " << args.horizon << "): " << lhs.str() << "\n";
  std::cout << "reduced (horizon " << lifted.horizon << "): " << rhs.str() << "\n";
  std::cout << (lhs == rhs ? "agree" : "DISAGREE") << "\n";
  return lhs == rhs ? kOk : kCheckFailed;
}

// derandomize -------------------------------------------------------------

int cmd_derandomize(const std::string& file, const std::string& strategy_file, const std::string& opponent_file,
                    std::size_t horizon, const std::string& target, const std::string& init_name,
                    const std::string& out) {
  const Game game = parse_game(load(file));
  const StateId init = initial_state(game, init_name);
  const Strategy sigma = parse_strategy(load(strategy_file), game);
  const auto opponent = load_strategy(opponent_file, game);
  const BoundedReach objective{make_state_set(game, split_names(target)), horizon};
  const IntegralIdentity id = verify_integral_identity(game, init, sigma, objective, opponent.get());
  std::size_t k = 0;
  for (const auto& cell : id.decomposition.cells) {
    std::cout << "cell " << k++ << " weight " << cell.weight.str() << "\n";
    std::istringstream body(serialize_strategy(cell.pure, game));
    std::string line;
    std::getline(body, line);  // header is the same for every cell
    while (std::getline(body, line)) std::cout << "  " << line << "\n";
  }
  std::cout << "lhs: " << id.lhs.str() << "\n";
  std::cout << "rhs: " << id.rhs.str() << "\n";
  std::cout << "identity: " << (id.equal ? "holds" : "FAILS") << "\n";
  const BestPure best = best_pure(game, init, sigma, objective, opponent.get());
  std::cout << "best pure value: " << best.value.str() << "\n";
  const std::string text = serialize_strategy(best.strategy, game);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
    std::cout << "wrote " << out << "\n";
  }
  return id.equal && best.value >= id.lhs ? kOk : kCheckFailed;
}

// verify ------------------------------------------------------------------

int cmd_verify(const std::string& kind_text, const VerifyOptions& base) {
  const auto kind = parse_reduction_kind(kind_text);
  if (!kind || (*kind != ReductionKind::Separate && *kind != ReductionKind::CocGadget &&
                *kind != ReductionKind::OstGadget)) {
    throw UsageError("--reduction must be coc, ost or separate");
  }
  VerifyOptions options = base;
  options.kind = *kind;
  const VerifyReport report = run_verification(options);
  std::cout << report.render();
  return report.pass() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reductions and derandomization for stochastic games"};
  app.require_subcommand(1);

  std::string file, out, kind, objective, target, init, strategy, s1, s2, informed = "2";
  double tol = 1e-9;
  std::size_t max_iter = 100000, horizon = 0;
  EvaluateArgs eval;
  VerifyOptions vopt;
  std::string vkind;

  auto* validate_cmd = app.add_subcommand("validate", "report violations of the game model");
  validate_cmd->add_option("file", file, "game file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "print the game class and per-state kinds");
  classify_cmd->add_option("file", file, "game file")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "apply a reduction and write the reduced game and witness");
  reduce_cmd->add_option("--kind", kind, "separate|uniformize|coc|ost|naive-binary")->required();
  reduce_cmd->add_option("-o,--output", out, "reduced game file; the witness goes to <out>.witness");
  reduce_cmd->add_option("--informed", informed, "complete-observation player of the ost gadget (1 or 2)")
      ->check(CLI::IsMember({"1", "2"}));
  reduce_cmd->add_option("file", file, "game file")->required();

  auto* solve_cmd = app.add_subcommand("solve", "value vector of a reachability objective");
  solve_cmd->add_option("--objective", objective, "reach:<s1,s2,...> (also buchi: and almost-reach: on MDPs)");
  solve_cmd->add_option("--tol", tol, "stopping tolerance of value iteration")->capture_default_str();
  solve_cmd->add_option("--max-iter", max_iter, "iteration cap")->capture_default_str();
  solve_cmd->add_option("file", file, "game file")->required();

  auto* eval_cmd = app.add_subcommand("evaluate", "exact bounded reachability probability of a strategy pair");
  eval_cmd->add_option("--s1", eval.s1, "strategy file")->required();
  eval_cmd->add_option("--s2", eval.s2, "strategy file of the other player");
  eval_cmd->add_option("--horizon", eval.horizon, "number of steps")->required();
  eval_cmd->add_option("--target", eval.target, "comma-separated target states")->required();
  eval_cmd->add_option("--init", eval.init, "initial state (defaults to the game's init)");
  eval_cmd->add_option("--witness", eval.witness, "replay through this witness; <file> is the reduced game");
  eval_cmd->add_option("--original", eval.original, "original game of the witness");
  eval_cmd->add_option("file", eval.file, "game file")->required();

  auto* derand_cmd = app.add_subcommand("derandomize", "cell decomposition and best pure strategy");
  derand_cmd->add_option("--strategy", strategy, "randomized strategy file")->required();
  derand_cmd->add_option("--opponent", s2, "fixed strategy of the other player");
  derand_cmd->add_option("--horizon", horizon, "number of steps")->required();
  derand_cmd->add_option("--target", target, "comma-separated target states")->required();
  derand_cmd->add_option("--init", init, "initial state (defaults to the game's init)");
  derand_cmd->add_option("-o,--output", out, "write the best pure strategy here");
  derand_cmd->add_option("file", file, "game file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "batch-check a reduction on random games");
  verify_cmd->add_option("--reduction", vkind, "coc|ost|separate")->required();
  verify_cmd->add_option("--trials", vopt.trials, "number of random games")->capture_default_str();
  verify_cmd->add_option("--seed", vopt.seed, "random seed")->capture_default_str();
  verify_cmd->add_option("--max-states", vopt.max_states, "largest random game")->capture_default_str();
  verify_cmd->add_option("--tol", vopt.tolerance, "allowed value gap")->capture_default_str();
  verify_cmd->add_option("--solver-tol", vopt.solver_tolerance, "value iteration tolerance")->capture_default_str();

  auto* tables_cmd = app.add_subcommand("tables", "print the randomness classification tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(file);
    if (*classify_cmd) return cmd_classify(file);
    if (*reduce_cmd) return cmd_reduce(kind, file, out, informed);
    if (*solve_cmd) return cmd_solve(file, objective, tol, max_iter);
    if (*eval_cmd) return cmd_evaluate(eval);
    if (*derand_cmd) return cmd_derandomize(file, strategy, s2, horizon, target, init, out);
    if (*verify_cmd) return cmd_verify(vkind, vopt);
    if (*tables_cmd) {
      std::cout << render_tables();
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::Parse || e.code() == ErrorCode::UnknownIdentifier;
    return usage ? kUsage : kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
