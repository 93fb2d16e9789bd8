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

#include "dynsynth/synth.h"

#include <sstream>

#include "dynsynth/block.h"
#include "dynsynth/nba.h"
#include "dynsynth/reduction.h"
#include "dynsynth/safra.h"
#include "dynsynth/verify.h"

namespace dynsynth {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kRealizable: return "REALIZABLE";
    case Verdict::kUnrealizable: return "UNREALIZABLE";
    case Verdict::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

void require_decidable(const ProblemInstance& inst) {
  if (inst.has_link(Link::kEmpty))
    throw Error(
        "undecidable network model: synthesis is decidable exactly for models "
        "without the empty link '-'");
}

Drwa spec_automaton(const ProblemInstance& inst, const Ltl& f) {
  return normalize_drwa(determinize_safra(ltl_to_nba(inst, f)));
}

namespace {

const std::vector<Link> kThreeLinks{Link::kLeft, Link::kRight, Link::kBoth};
const std::vector<Link> kSyncLinks{Link::kLeft, Link::kBoth};

const std::vector<Link>& working_links(const ProblemInstance& inst) {
  return inst.has_link(Link::kRight) ? kThreeLinks : kSyncLinks;
}

// Spot check that the view functions and the machine agree.
void compare_forms(const SynthesizedAlgorithm& alg) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Word w = random_schedule(alg.machine.inst, 12, seed);
    if (outcome(alg.views, w) != run_machine(alg.machine, w))
      throw Error("internal error: view functions disagree with the algorithm machine");
  }
}

SynthReport finish(SynthReport r, const Drwa& relativized, const SynthOptions& opt) {
  r.sizes.push_back({"relativized automaton", relativized.num_states});
  r.working = r.inst.has_link(Link::kRight) ? build_reduced_spec(relativized) : relativized;
  if (r.inst.has_link(Link::kRight)) r.sizes.push_back({"reduced automaton", r.working.num_states});
  Drwa adjusted = adjust_sync_start(r.working);
  r.game = build_sync_game(adjusted);
  r.sizes.push_back({"game nodes", r.game.num_nodes});
  r.sizes.push_back({"game environment actions", r.game.num_env});

  if (opt.engine != Engine::kBounded) {
    r.complete = solve_21(r.game, opt.limits);
    r.sizes.push_back({"parity game nodes", r.complete->stats.parity_nodes});
    r.sizes.push_back({"alternating tree automaton states", r.complete->stats.apt_states});
    r.sizes.push_back({"nondeterministic tree automaton states", r.complete->stats.npt_states});
    r.sizes.push_back({"emptiness game nodes", r.complete->stats.emptiness_arena});
    r.verdict = r.complete->realizable ? Verdict::kRealizable : Verdict::kUnrealizable;
    r.profile = r.complete->profile;
  }
  if (opt.engine != Engine::kComplete) {
    r.bounded = bounded_search(r.game, opt.bounded_memory, opt.bounded_candidates);
    r.sizes.push_back({"bounded search candidates", r.bounded->candidates});
    if (r.bounded->profile) {
      if (r.verdict == Verdict::kUnrealizable)
        throw Error("internal error: bounded search found a profile the complete engine ruled out");
      if (!r.profile) r.profile = r.bounded->profile;
      r.verdict = Verdict::kRealizable;
    }
  }
  if (r.verdict != Verdict::kRealizable) return r;

  r.sizes.push_back({"player 1 memory", r.profile->g1.num_states});
  r.sizes.push_back({"player 2 memory", r.profile->g2.num_states});
  r.algorithm = extract_algorithm(r.inst, r.game, *r.profile);
  r.sizes.push_back({"algorithm machine states", r.algorithm->machine.num_states});
  compare_forms(*r.algorithm);
  if (auto bad = verify_profile(r.algorithm->machine, r.spec))
    throw Error("internal error: synthesized algorithm fails verification on input " +
                format_word(r.inst, bad->prefix) + " / loop " + format_word(r.inst, bad->loop));
  return r;
}

}  // namespace

SynthReport synthesize(const ProblemInstance& inst, const Ltl& f, const SynthOptions& opt) {
  inst.validate();
  require_decidable(inst);
  check_formula(inst, f);
  SynthReport r;
  r.inst = inst;
  r.spec = spec_automaton(inst, f);
  r.sizes.push_back({"specification automaton", r.spec.num_states});
  const auto& links = working_links(inst);
  Drwa rel = spec_automaton(with_links(inst, links), relativize(f, inst.links, links));
  return finish(std::move(r), rel, opt);
}

SynthReport synthesize(const Drwa& spec, const SynthOptions& opt) {
  spec.check();
  require_decidable(spec.inst);
  SynthReport r;
  r.inst = spec.inst;
  r.spec = spec;
  r.sizes.push_back({"specification automaton", r.spec.num_states});
  Drwa rel = normalize_drwa(drwa_relativize(spec, working_links(spec.inst)));
  return finish(std::move(r), rel, opt);
}

std::string format_report(const SynthReport& r) {
  std::ostringstream out;
  out << "verdict: " << verdict_name(r.verdict) << "\n";
  for (const auto& s : r.sizes) out << "  " << s.stage << ": " << s.size << "\n";
  if (r.verdict == Verdict::kRealizable) out << "verification: ok\n";
  if (r.verdict == Verdict::kUnknown)
    out << "note: no profile within the memory bound; the bounded engine cannot refute\n";
  return out.str();
}

}  // namespace dynsynth
