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

#ifndef DYNSYNTH_GAME_H_
#define DYNSYNTH_GAME_H_

#include <string>
#include <string_view>
#include <vector>

#include "dynsynth/block.h"
#include "dynsynth/drwa.h"
#include "dynsynth/parity.h"
#include "dynsynth/strategy.h"

namespace dynsynth {

// Two cooperating players against an environment. In each round at node v
// the environment picks e, player p observes obs_p(v, e) and answers with
// an action; the next node is delta(v, e, a1, a2). A play is won by the
// players iff its node sequence satisfies the Rabin pairs `win`.
struct Game21 {
  int num_nodes = 1;
  int initial = 0;
  int num_env = 1;
  int num_a1 = 1;
  int num_a2 = 1;
  int num_obs1 = 1;
  int num_obs2 = 1;
  std::vector<int> obs1;   // obs1[v * num_env + e]
  std::vector<int> obs2;   // obs2[v * num_env + e]
  std::vector<int> delta;  // delta[((v * num_env + e) * num_a1 + a1) * num_a2 + a2]
  RabinPairs win;
  // Display names; empty vectors mean plain numbers.
  std::vector<std::string> node_names, env_names, a1_names, a2_names;

  int move(int v, int e, int a1, int a2) const {
    return delta[((static_cast<size_t>(v) * num_env + e) * num_a1 + a1) * num_a2 + a2];
  }
  int observe(int p, int v, int e) const {
    return (p == 1 ? obs1 : obs2)[static_cast<size_t>(v) * num_env + e];
  }
  // Whether obs1 is the identity on node-action pairs.
  bool obs1_is_identity() const;
  void check() const;
};

// Game over the states of `a`, read letter by letter: environment actions
// are the signals of a.inst (links within {<->, <-}), player actions are
// the outputs, obs1 is the identity and obs2 reveals (v, e) on <-> signals
// and only x2 on <- signals. Observation ids: x2 for <- signals, then
// num_x2 + v * (number of <-> signals) + k for the k-th <-> signal.
Game21 game_from_automaton(const Drwa& a, RabinPairs win);
// The game over the block automaton; each pair (F, F') of the base
// automaton becomes (F x 2^S, F' x 2^S).
Game21 build_game(const BlockAutomaton& block, const Drwa& base);
// The game over the states of an automaton directly (its own pairs).
Game21 build_sync_game(const Drwa& adjusted);

// Sequence of (node, environment action).
struct PlayStep {
  int node = 0;
  int env = 0;
  friend bool operator==(const PlayStep&, const PlayStep&) = default;
};
using Play = std::vector<PlayStep>;

std::vector<int> obs_trace(const Game21& g, int p, const Play& play);

// The unique play compatible with the machines on the given environment
// actions; node r+1 follows node r under the actions answered to the
// observation traces up to round r. Also returns the actions.
struct PlayOutcome {
  Play play;
  std::vector<int> a1, a2;
  int final_node = 0;
};
PlayOutcome play_outcome(const Game21& g, const StrategyMachine& m1,
                         const StrategyMachine& m2, const std::vector<int>& env);

std::string game_to_text(const Game21& g);
Game21 parse_game_text(std::string_view text);

}  // namespace dynsynth

#endif  // DYNSYNTH_GAME_H_
