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

#ifndef DYNSYNTH_GRAPH_H_
#define DYNSYNTH_GRAPH_H_

#include <optional>
#include <vector>

#include "dynsynth/model.h"

namespace dynsynth {

// Adjacency-list digraph over nodes 0..n-1.
using Digraph = std::vector<std::vector<int>>;

// Node membership flags.
using NodeSet = std::vector<bool>;

// Strongly connected components of the subgraph induced by `alive` (all
// nodes when empty). Returns comp[v] (-1 for dead nodes) and the number of
// components. Components are numbered in reverse topological order.
struct SccResult {
  std::vector<int> comp;
  int count = 0;
};
SccResult strongly_connected_components(const Digraph& g,
                                        const NodeSet& alive = {});

// Whether component members carry at least one internal edge.
std::vector<bool> nontrivial_components(const Digraph& g, const SccResult& s);

// Nodes reachable from `sources`.
NodeSet reachable_from(const Digraph& g, const std::vector<int>& sources);

// Nodes that can reach `targets`.
NodeSet can_reach(const Digraph& g, const NodeSet& targets);

// Shortest path from `from` to some node in `to` inside `alive` (all nodes
// when empty); the result starts with `from` and ends in `to`. Empty when
// no path exists.
std::vector<int> shortest_path(const Digraph& g, int from, const NodeSet& to,
                               const NodeSet& alive = {});

// A cycle through every node of the strongly connected set `component`,
// starting at `start`. Nodes are listed once per visit, without repeating
// `start` at the end.
std::vector<int> covering_cycle(const Digraph& g, const NodeSet& component,
                                int start);

// Streett pair: a run satisfies it iff Inf meets `fp` whenever Inf meets `f`.
struct NodePair {
  NodeSet f;
  NodeSet fp;
};

// A lasso of nodes from `init` whose set of loop nodes satisfies every
// Streett pair, if one exists. Classical SCC refinement.
std::optional<Lasso<int>> find_streett_lasso(const Digraph& g, int init,
                                             const std::vector<NodePair>& pairs);

// Nodes from which some path satisfies every Streett pair.
NodeSet streett_nonempty_nodes(const Digraph& g,
                               const std::vector<NodePair>& pairs);

// Nodes from which some path satisfies the Rabin condition given by `pairs`
// (some pair hit infinitely often in f while fp is visited finitely often).
NodeSet rabin_nonempty_nodes(const Digraph& g,
                             const std::vector<NodePair>& pairs);

// Nodes from which every path satisfies the Rabin condition `pairs`.
NodeSet rabin_universal_nodes(const Digraph& g,
                              const std::vector<NodePair>& pairs);

}  // namespace dynsynth

#endif  // DYNSYNTH_GRAPH_H_
