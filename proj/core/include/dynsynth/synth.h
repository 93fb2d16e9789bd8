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

#ifndef DYNSYNTH_SYNTH_H_
#define DYNSYNTH_SYNTH_H_

#include <optional>
#include <string>
#include <vector>

#include "dynsynth/drwa.h"
#include "dynsynth/extract.h"
#include "dynsynth/game.h"
#include "dynsynth/ltl.h"
#include "dynsynth/solver.h"
#include "dynsynth/tree_automata.h"

namespace dynsynth {

enum class Engine { kComplete, kBounded, kBoth };

struct SynthOptions {
  Engine engine = Engine::kComplete;
  int bounded_memory = 1;
  long long bounded_candidates = 2'000'000;
  AlternationLimits limits;
};

enum class Verdict { kRealizable, kUnrealizable, kUnknown };
const char* verdict_name(Verdict v);

struct StageSize {
  std::string stage;
  long long size = 0;
};

// Everything the pipeline produced. `spec` is the automaton of the
// original problem and is what the synthesized algorithm is checked
// against; `working` is the automaton the game is built from.
struct SynthReport {
  Verdict verdict = Verdict::kUnknown;
  ProblemInstance inst;
  Drwa spec;
  Drwa working;
  Game21 game;
  std::optional<Profile> profile;
  std::optional<SynthesizedAlgorithm> algorithm;
  std::optional<SolveResult> complete;
  std::optional<BoundedResult> bounded;
  std::vector<StageSize> sizes;
};

// Throws Error for models containing the empty link.
void require_decidable(const ProblemInstance& inst);

// Normalized deterministic automaton of `f` over `inst`.
Drwa spec_automaton(const ProblemInstance& inst, const Ltl& f);

// Decides realizability of `f` over `inst` and, when realizable, returns a
// distributed algorithm that has been verified against the specification.
SynthReport synthesize(const ProblemInstance& inst, const Ltl& f, const SynthOptions& opt = {});
// Same for a specification given as an automaton over its instance.
SynthReport synthesize(const Drwa& spec, const SynthOptions& opt = {});

// Human-readable summary: verdict, stage sizes and verification result.
std::string format_report(const SynthReport& r);

}  // namespace dynsynth

#endif  // DYNSYNTH_SYNTH_H_
