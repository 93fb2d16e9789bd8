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

#ifndef DYNSYNTH_NBA_H_
#define DYNSYNTH_NBA_H_

#include <string>
#include <string_view>
#include <vector>

#include "dynsynth/ltl.h"
#include "dynsynth/model.h"

namespace dynsynth {

// Nondeterministic Buechi automaton over the execution letters of an
// instance (letter ids as in ProblemInstance::letter_index).
struct Nba {
  ProblemInstance inst;
  int num_states = 0;
  std::vector<int> initial;
  std::vector<bool> accepting;
  // succ[state][letter] = successor states, sorted.
  std::vector<std::vector<std::vector<int>>> succ;

  int num_letters() const { return inst.num_letters(); }
  void check() const;
};

// Tableau translation followed by degeneralization and pruning of states
// with empty language. L(result) = L(f).
Nba ltl_to_nba(const ProblemInstance& inst, const Ltl& f);

// Whether prefix.loop^omega has an accepting run.
bool nba_accepts_lasso(const Nba& a, const Lasso<ExecutionStep>& e);

// Quotient by the coarsest bisimulation that respects acceptance.
Nba reduce_nba(const Nba& a);

std::string nba_to_text(const Nba& a);
Nba parse_nba_text(std::string_view text);

}  // namespace dynsynth

#endif  // DYNSYNTH_NBA_H_
