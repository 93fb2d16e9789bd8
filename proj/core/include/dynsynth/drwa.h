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

#ifndef DYNSYNTH_DRWA_H_
#define DYNSYNTH_DRWA_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dynsynth/graph.h"
#include "dynsynth/model.h"
#include "dynsynth/parity.h"

namespace dynsynth {

// Deterministic Rabin word automaton over the execution letters of `inst`.
// A run is accepting iff for some pair, Inf meets f and avoids fp.
struct Drwa {
  ProblemInstance inst;
  int num_states = 0;
  int initial = 0;
  std::vector<int> delta;  // delta[s * num_letters + letter]
  RabinPairs pairs;

  int num_letters() const { return inst.num_letters(); }
  int next(int s, int letter) const {
    return delta[static_cast<size_t>(s) * num_letters() + letter];
  }
  int run(int s, const ExecutionStep& step) const {
    return next(s, inst.letter_index(step));
  }
  void check() const;
  // Successor graph over states (letters forgotten, duplicates removed).
  Digraph graph() const;
};

// States visited infinitely often by the run on prefix.loop^omega.
NodeSet drwa_inf_set(const Drwa& a, const Lasso<ExecutionStep>& e);
bool drwa_accepts_lasso(const Drwa& a, const Lasso<ExecutionStep>& e);
bool rabin_accepts(const RabinPairs& pairs, const NodeSet& inf);

Drwa drwa_accept_all(const ProblemInstance& inst);
Drwa drwa_reject_all(const ProblemInstance& inst);

// Product automaton over reachable state pairs; L = L(a) u L(b).
Drwa drwa_union(const Drwa& a, const Drwa& b);

// Same automaton over the alphabets of `inst` with the larger link set
// `links`; a letter with a link outside the original model leads to an
// accepting sink.
Drwa drwa_relativize(const Drwa& a, const std::vector<Link>& links);

// Reachable part only.
Drwa drwa_trim(const Drwa& a);

// Priorities when the pairs are chain shaped (see chain_priorities).
std::optional<std::vector<int>> drwa_priorities(const Drwa& a);

// Language-preserving normal form: unreachable states dropped, states with
// universal or empty language collapsed into two sinks, pairs turned into a
// chain (index appearance records when needed), and the result minimized
// by priority-respecting bisimulation. The pairs of the result are chain
// shaped and come from a priority function.
Drwa normalize_drwa(const Drwa& a);

// Same language with a deterministic parity presentation.
struct ParityAutomaton {
  Drwa automaton;
  std::vector<int> priority;  // min-even convention
};
ParityAutomaton drwa_to_parity(const Drwa& a);

std::string drwa_to_text(const Drwa& a);
Drwa parse_drwa_text(std::string_view text);

}  // namespace dynsynth

#endif  // DYNSYNTH_DRWA_H_
