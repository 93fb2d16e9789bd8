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

#ifndef DYNSYNTH_TREE_AUTOMATA_H_
#define DYNSYNTH_TREE_AUTOMATA_H_

#include <optional>
#include <utility>
#include <vector>

#include "dynsynth/strategy.h"

namespace dynsynth {

// Alternating parity tree automaton over label-annotated trees with
// directions 0..num_dirs-1. Transitions are in disjunctive normal form: a
// state reading a label picks one conjunct and sends a copy in state q'
// into direction d for every atom (d, q') of it. An empty disjunction is
// false, an empty conjunct is true. Min-even parity on every branch.
struct AptAtom {
  int dir = 0;
  int state = 0;
  friend bool operator==(const AptAtom&, const AptAtom&) = default;
  friend auto operator<=>(const AptAtom&, const AptAtom&) = default;
};
using AptConjunct = std::vector<AptAtom>;  // sorted, duplicate free

struct Apt {
  int num_states = 1;
  int initial = 0;
  int num_dirs = 1;
  int num_labels = 1;
  std::vector<int> priority;
  std::vector<std::vector<AptConjunct>> delta;  // delta[q * num_labels + label]

  const std::vector<AptConjunct>& transition(int q, int label) const {
    return delta[static_cast<size_t>(q) * num_labels + label];
  }
  void check() const;
};

// Whether the tree generated by `t` (directions = observations, labels =
// actions) is accepted; decided by the finite membership parity game.
bool apt_accepts_regular_tree(const Apt& a, const RegularTree& t);

// Nondeterministic parity tree automaton. A transition fixes the label and
// one successor state per direction; directions not listed go to state 0,
// which accepts every tree.
struct NptChoice {
  int label = 0;
  std::vector<std::pair<int, int>> moves;  // (direction, state), sorted
};
struct Npt {
  int num_states = 1;
  int initial = 0;
  int num_dirs = 1;
  int num_labels = 1;
  std::vector<int> priority;
  std::vector<std::vector<NptChoice>> delta;  // delta[q]

  void check() const;
};

bool npt_accepts_regular_tree(const Npt& n, const RegularTree& t);

struct AlternationLimits {
  int max_states = 200'000;
  // Per state and label, bound on the enumerated conjunct combinations.
  long long max_combinations = 1 << 20;
};
// Equivalent nondeterministic automaton. Each state is a Safra tree over
// the threads of a run (Apt state plus a guessed odd priority that the
// thread will settle on); the transition picks one conjunct per Apt state
// present. Throws Error when a limit is exceeded.
Npt remove_alternation(const Apt& a, const AlternationLimits& limits = {});

// Empty, or a regular witness tree accepted by the automaton.
struct NptEmptiness {
  bool empty = true;
  std::optional<RegularTree> witness;
  // Automaton states from which no tree is accepted.
  std::vector<int> losing_states;
  int arena_size = 0;
};
NptEmptiness npt_emptiness(const Npt& n);

}  // namespace dynsynth

#endif  // DYNSYNTH_TREE_AUTOMATA_H_
