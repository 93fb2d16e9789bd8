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

#ifndef DYNSYNTH_TESTS_SUPPORT_GAME_ORACLES_H_
#define DYNSYNTH_TESTS_SUPPORT_GAME_ORACLES_H_

// Reference checks for games, strategy machines and tree automata. All
// decisions are made by explicit enumeration or by plain graph searches
// written here.

#include <optional>
#include <vector>

#include "dynsynth/game.h"
#include "dynsynth/parity.h"
#include "dynsynth/strategy.h"
#include "dynsynth/tree_automata.h"
#include "support/oracles.h"

namespace dynsynth::testing {

// Game with obs1 the identity and random obs2, moves and pairs.
Game21 random_game(Rng& rng, int max_nodes, int max_env, int max_a1, int max_a2, int max_obs2);

StrategyMachine random_machine(Rng& rng, int states, int num_obs, int num_actions);

// Every machine with exactly `states` states (initial 0).
std::vector<StrategyMachine> all_machines(int states, int num_obs, int num_actions);

// Whether a cycle reachable from `start` has a label set L with, for every
// pair, L disjoint from f or L meeting fp (a cycle violating the pairs).
bool oracle_bad_cycle(const Digraph& g, int start, const std::vector<int>& label,
                      const RabinPairs& pairs);

// Every play of the profile satisfies the pairs.
bool oracle_profile_wins(const Game21& g, const StrategyMachine& g1, const StrategyMachine& g2);

// Player 1 beats every environment against g2, decided by enumerating
// positional strategies on (node, memory of g2, environment action).
bool oracle_best_response_wins(const Game21& g, const StrategyMachine& g2);

Apt random_apt(Rng& rng, int states, int dirs, int labels);
// State 0 accepts everything; the initial state is random.
Npt random_npt(Rng& rng, int states, int dirs, int labels);

// Membership by enumerating the automaton's choices at every (state,
// generator state) position and searching the remaining one-player graph
// for a rejecting cycle.
bool oracle_apt_accepts(const Apt& a, const RegularTree& t);
bool oracle_npt_accepts(const Npt& n, const RegularTree& t);

// Arena with n nodes, random owners and up to max_out successors each.
ParityArena random_arena(Rng& rng, int n, int max_prio, int max_out);

// Winner per node (0 or 1) by enumerating memoryless strategies of both
// players.
std::vector<int> oracle_parity_winner(const ParityArena& a);

}  // namespace dynsynth::testing

#endif  // DYNSYNTH_TESTS_SUPPORT_GAME_ORACLES_H_
