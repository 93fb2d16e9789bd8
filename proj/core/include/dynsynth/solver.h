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

#ifndef DYNSYNTH_SOLVER_H_
#define DYNSYNTH_SOLVER_H_

#include <optional>
#include <vector>

#include "dynsynth/game.h"
#include "dynsynth/strategy.h"
#include "dynsynth/tree_automata.h"

namespace dynsynth {

// A game whose Rabin condition has been replaced by node priorities
// (min-even). Nodes are pairs of an original node and an index appearance
// record unless the pairs already form a chain. Player 2 observes exactly
// what it observed in the original game; player 1 observes the expanded
// node and the environment action.
struct ParityGame21 {
  Game21 game;                 // its `win` encodes `priority`
  std::vector<int> priority;   // per expanded node
  std::vector<int> node_of;    // original node of each expanded node
};
ParityGame21 to_parity_game(const Game21& g);

// Tree automaton over player-2 strategy trees (directions = Obs2,
// labels = A2) accepting exactly those trees against which player 1 has a
// winning full-information answer. State 0 reads the root; state
// 1 + v * E + e is a copy at node v that has just seen environment action e.
Apt build_apt(const ParityGame21& pg);

struct Profile {
  StrategyMachine g1, g2;
};

// Player 1's best answer to a fixed player-2 machine. Requires obs1 to be
// the identity.
struct BestResponse {
  bool wins = false;
  std::optional<StrategyMachine> g1;
};
BestResponse best_response_player1(const Game21& g, const StrategyMachine& g2);

// Environment actions producing a losing play against the profile, if any.
std::optional<Lasso<int>> find_losing_play(const Game21& g, const StrategyMachine& g1,
                                           const StrategyMachine& g2);
inline bool profile_wins(const Game21& g, const StrategyMachine& g1,
                         const StrategyMachine& g2) {
  return !find_losing_play(g, g1, g2).has_value();
}

struct SolveStats {
  int parity_nodes = 0;
  int apt_states = 0;
  int npt_states = 0;
  int emptiness_arena = 0;
};

// Complete decision procedure for games where player 1 sees everything.
// A positive answer always carries a profile checked by profile_wins; a
// negative one carries the automaton states of the emptiness game that no
// tree escapes from.
struct SolveResult {
  bool realizable = false;
  std::optional<Profile> profile;
  std::vector<int> losing_states;
  SolveStats stats;
};
SolveResult solve_21(const Game21& g, const AlternationLimits& limits = {});

// Enumerates player-2 machines with at most `max_memory` states, one per
// class of reachable-part isomorphism, and answers each with
// best_response_player1. `exhausted` is false when the candidate budget ran
// out before a profile was found.
struct BoundedResult {
  std::optional<Profile> profile;
  bool exhausted = true;
  long long candidates = 0;
};
BoundedResult bounded_search(const Game21& g, int max_memory,
                             long long max_candidates = 2'000'000);

}  // namespace dynsynth

#endif  // DYNSYNTH_SOLVER_H_
