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

#ifndef DYNSYNTH_VERIFY_H_
#define DYNSYNTH_VERIFY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dynsynth/drwa.h"
#include "dynsynth/model.h"

namespace dynsynth {

// Finite-memory distributed algorithm in global form: one Mealy machine
// that reads the signals of `inst` and emits both outputs of the round.
// Being implementable from views is a property of how the machine was
// built, not something this type enforces.
struct AlgorithmMachine {
  ProblemInstance inst;
  int num_states = 1;
  int initial = 0;
  std::vector<int> next;    // next[m * num_signals + signal]
  std::vector<int> output;  // output index, same layout

  int step(int m, const Signal& s, OutputPair* out) const;
  void check() const;
};

// "algorithm", "states:", "init:", then one "m x1 LINK x2 -> m' / y1 y2"
// line per state and signal of the instance.
std::string algorithm_to_text(const AlgorithmMachine& m);
AlgorithmMachine parse_algorithm_text(const ProblemInstance& inst, std::string_view text);

// An algorithm in both forms: the view functions and the equivalent
// machine.
struct SynthesizedAlgorithm {
  AlgorithmMachine machine;
  DistributedAlgorithm views;
};

Execution run_machine(const AlgorithmMachine& m, std::span<const Signal> w);
// Outcome on an ultimately periodic input; the loop is repeated until the
// machine state at its start recurs.
Lasso<ExecutionStep> run_machine(const AlgorithmMachine& m, const Lasso<Signal>& w);

// Input lasso whose outcome `spec` rejects, or nothing when every input
// word over the machine's signals yields an accepted execution. The spec
// must use the machine's alphabets and contain its links.
std::optional<Lasso<Signal>> verify_profile(const AlgorithmMachine& m, const Drwa& spec);

// Uniformly random signals of `inst`, reproducible for a seed.
Word random_schedule(const ProblemInstance& inst, int rounds, std::uint64_t seed);
// Rows "round y1 x1 LINK x2 y2" under a header line.
std::string format_trace(const ProblemInstance& inst, std::span<const ExecutionStep> e);

// Both processes output 0, except in the first round of a maximal block of
// rounds with equal links, where they output 1 iff the previous block has
// a round in which both inputs are 1. Needs inputs and outputs named "0"
// and "1" and links {<-, ->}.
SynthesizedAlgorithm reference_psi_algorithm(const ProblemInstance& inst);

// Constant outputs in every round.
SynthesizedAlgorithm constant_algorithm(const ProblemInstance& inst, OutputPair out);

}  // namespace dynsynth

#endif  // DYNSYNTH_VERIFY_H_
