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

#ifndef DYNSYNTH_PARITY_H_
#define DYNSYNTH_PARITY_H_

#include <optional>
#include <vector>

#include "dynsynth/graph.h"

namespace dynsynth {

// Priority-labeled game graph. Convention used everywhere in the library:
// the minimal priority seen infinitely often decides, even wins for
// player 0. Every node needs an outgoing edge.
struct ParityArena {
  Digraph succ;
  std::vector<int> priority;
  std::vector<int> owner;  // 0 or 1

  int size() const { return static_cast<int>(succ.size()); }
  int add_node(int prio, int own) {
    succ.emplace_back();
    priority.push_back(prio);
    owner.push_back(own);
    return size() - 1;
  }
  void check() const;
};

struct ParitySolution {
  std::vector<int> winner;    // 0 or 1 per node
  std::vector<int> strategy;  // chosen successor for nodes owned by winner,
                              // -1 elsewhere
};

// Recursive (Zielonka) algorithm.
ParitySolution solve_parity(const ParityArena& arena);

// Whether the path with this infinitely repeated priority set wins for
// player 0.
inline bool parity_even_wins(int min_priority) { return min_priority % 2 == 0; }

// Rabin pair over nodes: accepted iff f is visited infinitely often and fp
// only finitely often.
using RabinPairs = std::vector<NodePair>;

// Equivalent priorities when the fp sets form a chain under inclusion.
// Node v gets 2j+1 if v is in fp_j, or 2j+2 if v is in f_j, for the first
// pair j of the chain mentioning v; unmentioned nodes get 2k+1.
std::optional<std::vector<int>> chain_priorities(int num_nodes,
                                                 const RabinPairs& pairs);

// Chain-shaped pairs equivalent to a priority function.
RabinPairs priorities_to_pairs(const std::vector<int>& priority);

// One step of an index appearance record: pairs whose fp contains v move
// to the back; the returned priority is min(2r+1, 2g+2) with r the first
// old position of such a pair and g the first old position of a pair whose
// f (but not fp) contains v; 2k+1 when neither exists.
struct IarStep {
  std::vector<int> record;
  int priority = 0;
};
IarStep iar_visit(const RabinPairs& pairs, int v,
                  const std::vector<int>& record);

// Expansion of a graph by index appearance records. `node_of[x]` is the
// original node of expanded node x; x is reachable from
// `initial_expanded[i]` for each initial node i. An infinite path satisfies
// the Rabin pairs iff its expansion satisfies the parity condition.
struct RabinExpansion {
  ParityArena arena;
  std::vector<int> node_of;
  std::vector<int> initial_expanded;
};
RabinExpansion rabin_to_priorities(const Digraph& g,
                                   const std::vector<int>& owner,
                                   const std::vector<int>& initial,
                                   const RabinPairs& pairs);

// Attractor of `target` for `player` inside `alive`.
NodeSet attractor(const ParityArena& arena, const NodeSet& alive,
                  const NodeSet& target, int player,
                  std::vector<int>* strategy = nullptr);

}  // namespace dynsynth

#endif  // DYNSYNTH_PARITY_H_
