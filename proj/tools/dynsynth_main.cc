// Copyright 2026 The dynsynth Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dynsynth/drwa.h"
#include "dynsynth/game.h"
#include "dynsynth/ltl.h"
#include "dynsynth/model.h"
#include "dynsynth/reduction.h"
#include "dynsynth/solver.h"
#include "dynsynth/synth.h"
#include "dynsynth/verify.h"

namespace {

using namespace dynsynth;

constexpr int kExitRealizable = 0;
constexpr int kExitUnrealizable = 1;
constexpr int kExitError = 2;
constexpr int kExitUnknown = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << content;
}

ProblemInstance load_instance(const std::string& path) {
  return parse_instance_json(read_file(path));
}

struct SpecArgs {
  std::string formula, automaton;
};

void add_spec_options(CLI::App* cmd, SpecArgs& a) {
  auto* f = cmd->add_option("--spec", a.formula, "LTL formula file")->check(CLI::ExistingFile);
  auto* g = cmd->add_option("--automaton", a.automaton, "DRWA text file")->check(CLI::ExistingFile);
  f->excludes(g);
}

Drwa load_spec_automaton(const ProblemInstance& inst, const SpecArgs& a) {
  if (!a.automaton.empty()) {
    Drwa d = parse_drwa_text(read_file(a.automaton));
    if (!(d.inst == inst)) throw Error("automaton alphabet does not match the instance");
    return d;
  }
  if (a.formula.empty()) throw Error("give --spec or --automaton");
  Ltl f = parse_ltl(inst, read_file(a.formula));
  require_decidable(inst);
  return spec_automaton(inst, f);
}

struct AlgorithmArgs {
  std::string file;
  bool reference_psi = false;
  std::string constant;
};

void add_algorithm_options(CLI::App* cmd, AlgorithmArgs& a) {
  auto* f = cmd->add_option("--algorithm", a.file, "algorithm machine file")->check(CLI::ExistingFile);
  auto* r = cmd->add_flag("--reference-psi", a.reference_psi, "built-in block-start algorithm");
  auto* c = cmd->add_option("--constant", a.constant, "constant outputs 'y1 y2'");
  f->excludes(r)->excludes(c);
  r->excludes(c);
}

AlgorithmMachine load_algorithm(const ProblemInstance& inst, const AlgorithmArgs& a) {
  if (a.reference_psi) return reference_psi_algorithm(inst).machine;
  if (!a.constant.empty()) return constant_algorithm(inst, parse_output(inst, a.constant)).machine;
  if (a.file.empty()) throw Error("give --algorithm, --reference-psi or --constant");
  return parse_algorithm_text(inst, read_file(a.file));
}

std::string format_lasso(const ProblemInstance& inst, const Lasso<ExecutionStep>& e) {
  std::ostringstream out;
  out << "prefix:\n";
  for (const auto& s : e.prefix) out << "  " << format_step(inst, s) << "\n";
  out << "loop:\n";
  for (const auto& s : e.loop) out << "  " << format_step(inst, s) << "\n";
  return out.str();
}

Engine parse_engine(const std::string& name) {
  if (name == "complete") return Engine::kComplete;
  if (name == "bounded") return Engine::kBounded;
  return Engine::kBoth;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::kRealizable: return kExitRealizable;
    case Verdict::kUnrealizable: return kExitUnrealizable;
    case Verdict::kUnknown: return kExitUnknown;
  }
  return kExitError;
}

int cmd_synth(const std::string& instance_path, const SpecArgs& spec, const SynthOptions& opt,
              const std::string& out_dir) {
  ProblemInstance inst = load_instance(instance_path);
  SynthReport r;
  if (!spec.automaton.empty()) {
    r = synthesize(load_spec_automaton(inst, spec), opt);
  } else {
    if (spec.formula.empty()) throw Error("give --spec or --automaton");
    r = synthesize(inst, parse_ltl(inst, read_file(spec.formula)), opt);
  }
  const std::string report = format_report(r);
  std::cout << report;
  if (!out_dir.empty()) {
    std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / "report.txt", report);
    write_file(dir / "spec.drwa", drwa_to_text(r.spec));
    write_file(dir / "working.drwa", drwa_to_text(r.working));
    write_file(dir / "game.txt", game_to_text(r.game));
    if (r.profile) {
      write_file(dir / "player1.machine", machine_to_text(r.profile->g1));
      write_file(dir / "player2.machine", machine_to_text(r.profile->g2));
    }
    if (r.algorithm) write_file(dir / "algorithm.txt", algorithm_to_text(r.algorithm->machine));
  }
  return exit_code(r.verdict);
}

int cmd_check(const std::string& instance_path, const SpecArgs& spec, const AlgorithmArgs& alg) {
  ProblemInstance inst = load_instance(instance_path);
  Drwa d = load_spec_automaton(inst, spec);
  AlgorithmMachine m = load_algorithm(inst, alg);
  auto bad = verify_profile(m, d);
  if (!bad) {
    std::cout << "ok: every execution of the algorithm satisfies the specification\n";
    return 0;
  }
  std::cout << "counterexample: the specification rejects this execution\n"
            << format_lasso(inst, run_machine(m, *bad));
  return 1;
}

int cmd_simulate(const std::string& instance_path, const AlgorithmArgs& alg,
                 const std::string& script, std::uint64_t seed, int rounds) {
  ProblemInstance inst = load_instance(instance_path);
  AlgorithmMachine m = load_algorithm(inst, alg);
  Word w = script.empty() ? random_schedule(inst, rounds, seed) : parse_word(inst, read_file(script));
  std::cout << format_trace(inst, run_machine(m, w));
  return 0;
}

int cmd_translate(const std::string& instance_path, const std::string& input) {
  ProblemInstance inst = load_instance(instance_path);
  RoleTransducer t(inst);
  Word w = parse_word(inst, read_file(input));
  std::cout << format_word(t.target(), translate(t, w));
  return 0;
}

int cmd_view(const std::string& instance_path, const std::string& input, int p) {
  ProblemInstance inst = load_instance(instance_path);
  Word w = parse_word(inst, read_file(input));
  for (const auto& letter : view(p, w)) std::cout << format_view_letter(inst, letter) << "\n";
  return 0;
}

int cmd_solve_game(const std::string& game_path, const std::string& engine, int memory,
                   const std::string& out_dir) {
  Game21 g = parse_game_text(read_file(game_path));
  Verdict verdict = Verdict::kUnknown;
  std::optional<Profile> profile;
  if (engine != "bounded") {
    SolveResult r = solve_21(g);
    verdict = r.realizable ? Verdict::kRealizable : Verdict::kUnrealizable;
    profile = r.profile;
    if (!r.realizable)
      std::cout << "emptiness certificate: " << r.losing_states.size()
                << " tree automaton states accept no tree\n";
  }
  if (engine != "complete") {
    BoundedResult b = bounded_search(g, memory);
    if (b.profile && verdict == Verdict::kUnrealizable)
      throw Error("internal error: engines disagree");
    if (b.profile) {
      verdict = Verdict::kRealizable;
      if (!profile) profile = b.profile;
    }
  }
  std::cout << "verdict: " << verdict_name(verdict) << "\n";
  if (profile) {
    if (!profile_wins(g, profile->g1, profile->g2))
      throw Error("internal error: profile fails verification");
    if (out_dir.empty()) {
      std::cout << "player 1:\n" << machine_to_text(profile->g1) << "player 2:\n"
                << machine_to_text(profile->g2);
    } else {
      std::filesystem::create_directories(out_dir);
      write_file(std::filesystem::path(out_dir) / "player1.machine", machine_to_text(profile->g1));
      write_file(std::filesystem::path(out_dir) / "player2.machine", machine_to_text(profile->g2));
    }
  }
  return exit_code(verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthesis of two-process algorithms over dynamic links"};
  app.require_subcommand(1);

  std::string instance, out_dir, engine = "complete", script, input, game;
  int memory = 1, rounds = 10, process = 1;
  std::uint64_t seed = 1;
  SpecArgs spec;
  AlgorithmArgs alg;

  auto* synth = app.add_subcommand("synth", "decide realizability and synthesize an algorithm");
  synth->add_option("--instance", instance, "instance JSON")->required()->check(CLI::ExistingFile);
  add_spec_options(synth, spec);
  synth->add_option("--engine", engine, "complete, bounded or both")
      ->check(CLI::IsMember({"complete", "bounded", "both"}));
  synth->add_option("--memory", memory, "memory bound of the bounded engine")->check(CLI::PositiveNumber);
  synth->add_option("--out", out_dir, "directory for intermediate artifacts");

  auto* check = app.add_subcommand("check", "verify an algorithm against a specification");
  check->add_option("--instance", instance, "instance JSON")->required()->check(CLI::ExistingFile);
  add_spec_options(check, spec);
  add_algorithm_options(check, alg);

  auto* simulate = app.add_subcommand("simulate", "print the execution of an algorithm");
  simulate->add_option("--instance", instance, "instance JSON")->required()->check(CLI::ExistingFile);
  add_algorithm_options(simulate, alg);
  simulate->add_option("--script", script, "signal word file")->check(CLI::ExistingFile);
  simulate->add_option("--seed", seed, "seed for random signals");
  simulate->add_option("--rounds", rounds, "number of random rounds")->check(CLI::NonNegativeNumber);

  auto* translate_cmd = app.add_subcommand("translate", "apply the role transducer to a word");
  translate_cmd->add_option("--instance", instance, "instance JSON")->required()->check(CLI::ExistingFile);
  translate_cmd->add_option("--input", input, "signal word file")->required()->check(CLI::ExistingFile);

  auto* view_cmd = app.add_subcommand("view", "print the view of one process");
  view_cmd->add_option("--instance", instance, "instance JSON")->required()->check(CLI::ExistingFile);
  view_cmd->add_option("--input", input, "signal word file")->required()->check(CLI::ExistingFile);
  view_cmd->add_option("--process", process, "1 or 2")->check(CLI::IsMember({1, 2}));

  auto* solve = app.add_subcommand("solve-game", "solve a game given in text form");
  solve->add_option("--game", game, "game text file")->required()->check(CLI::ExistingFile);
  solve->add_option("--engine", engine, "complete, bounded or both")
      ->check(CLI::IsMember({"complete", "bounded", "both"}));
  solve->add_option("--memory", memory, "memory bound of the bounded engine")->check(CLI::PositiveNumber);
  solve->add_option("--out", out_dir, "directory for the strategy machines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*synth) {
      SynthOptions opt;
      opt.engine = parse_engine(engine);
      opt.bounded_memory = memory;
      return cmd_synth(instance, spec, opt, out_dir);
    }
    if (*check) return cmd_check(instance, spec, alg);
    if (*simulate) return cmd_simulate(instance, alg, script, seed, rounds);
    if (*translate_cmd) return cmd_translate(instance, input);
    if (*view_cmd) return cmd_view(instance, input, process);
    if (*solve) return cmd_solve_game(game, engine, memory, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
