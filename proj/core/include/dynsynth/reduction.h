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

#ifndef DYNSYNTH_REDUCTION_H_
#define DYNSYNTH_REDUCTION_H_

#include <span>
#include <vector>

#include "dynsynth/drwa.h"
#include "dynsynth/model.h"

namespace dynsynth {

// Alphabets of the two-link problem that simulates `inst`: both input
// alphabets are x1 followed by the new names of x2 and then "#", the output
// alphabets are built the same way, and the links are {<-, <->}. Requires
// the links of `inst` to lie within {<-, ->, <->} and "#" to be unused.
ProblemInstance reduced_instance(const ProblemInstance& inst);

// Two-state role transducer. State 1 passes <-> and <- letters through;
// a -> letter emits the dummy (#,<->,#) followed by the swapped letter
// (x2,<-,x1) and enters state 2. State 2 swaps <-> letters, turns -> into
// swapped <- letters, and on <- emits the dummy followed by the letter
// itself, returning to state 1. Outputs are swapped alongside and the dummy
// carries (#,#).
class RoleTransducer {
 public:
  explicit RoleTransducer(const ProblemInstance& inst);

  const ProblemInstance& source() const { return source_; }
  const ProblemInstance& target() const { return target_; }

  // Applies one letter from `state` (1 or 2) and returns the new state.
  int step(int state, const Signal& s, std::vector<Signal>& out) const;
  int step(int state, const ExecutionStep& s,
           std::vector<ExecutionStep>& out) const;
  // State after reading a letter with this link.
  static int next_state(int state, Link link);
  // Whether reading `link` in `state` inserts a dummy letter.
  static bool inserts_dummy(int state, Link link);
  // Whether the emitted non-dummy letter has its components swapped.
  static bool swaps(int state, Link link);

  // Target symbol index of a source symbol and back (-1 when the target
  // symbol is not a symbol of that source alphabet).
  int x_to_target(int p, int x) const { return x_map_[p - 1][x]; }
  int y_to_target(int p, int y) const { return y_map_[p - 1][y]; }
  int x_from_target(int p, int x) const { return x_back_[p - 1][x]; }
  int y_from_target(int p, int y) const { return y_back_[p - 1][y]; }
  int dummy_x() const { return static_cast<int>(target_.x1.size()) - 1; }
  int dummy_y() const { return static_cast<int>(target_.y1.size()) - 1; }
  Signal dummy_signal() const { return {dummy_x(), Link::kBoth, dummy_x()}; }

 private:
  ProblemInstance source_;
  ProblemInstance target_;
  std::vector<int> x_map_[2], y_map_[2], x_back_[2], y_back_[2];
};

Word translate(const RoleTransducer& t, std::span<const Signal> w);
Execution translate(const RoleTransducer& t, std::span<const ExecutionStep> e);
// The loop is repeated until the transducer state at its start recurs.
Lasso<Signal> translate(const RoleTransducer& t, const Lasso<Signal>& w);
Lasso<ExecutionStep> translate(const RoleTransducer& t,
                               const Lasso<ExecutionStep>& e);

// Process simulated by process p after reading w.
int sim(int p, std::span<const Signal> w);

// Automaton over the reduced letters accepting exactly the translations of
// words accepted by `a`. It follows `a` alongside the transducer state and
// a flag marking that a dummy letter was just read; every letter that no
// translation can produce leads to a rejecting sink.
Drwa transform_automaton(const Drwa& a);
// Accepts the reduced words whose signal projection is not the translation
// of any signal word over the links of `inst`. Outputs are ignored.
Drwa image_complement_automaton(const ProblemInstance& inst);
// Normalized union of the two automata above.
Drwa build_reduced_spec(const Drwa& a);

}  // namespace dynsynth

#endif  // DYNSYNTH_REDUCTION_H_
