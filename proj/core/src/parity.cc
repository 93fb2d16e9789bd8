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

#include "dynsynth/parity.h"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <tuple>

namespace dynsynth {

void ParityArena::check() const {
  if (priority.size() != succ.size() || owner.size() != succ.size())
    throw Error("parity arena: inconsistent sizes");
  for (int v = 0; v < size(); ++v) {
    if (succ[v].empty())
      throw Error("parity arena: node " + std::to_string(v) + " is a dead end");
    if (priority[v] < 0) throw Error("parity arena: negative priority");
    if (owner[v] != 0 && owner[v] != 1)
      throw Error("parity arena: owner must be 0 or 1");
  }
}

namespace {

class Zielonka {
 public:
  explicit Zielonka(const ParityArena& a) : a_(a), pred_(a.size()) {
    for (int v = 0; v < a.size(); ++v)
      for (int w : a.succ[v]) pred_[w].push_back(v);
    sol_.winner.assign(a.size(), -1);
    sol_.strategy.assign(a.size(), -1);
  }

  ParitySolution run() {
    NodeSet all(a_.size(), true);
    auto w = solve(all);
    for (int v = 0; v < a_.size(); ++v) sol_.winner[v] = w[0][v] ? 0 : 1;
    // Only keep strategies of the winning owner.
    for (int v = 0; v < a_.size(); ++v)
      if (a_.owner[v] != sol_.winner[v]) sol_.strategy[v] = -1;
    return std::move(sol_);
  }

  const std::vector<int>& strategy() const { return sol_.strategy; }

  NodeSet attr(const NodeSet& alive, const NodeSet& target, int player,
               bool record) {
    const int n = a_.size();
    NodeSet in = target;
    std::vector<int> count(n, 0);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      if (in[v]) {
        queue.push_back(v);
        continue;
      }
      for (int w : a_.succ[v])
        if (alive[w]) ++count[v];
    }
    while (!queue.empty()) {
      int w = queue.back();
      queue.pop_back();
      for (int v : pred_[w]) {
        if (!alive[v] || in[v]) continue;
        if (a_.owner[v] == player) {
          in[v] = true;
          if (record) sol_.strategy[v] = w;
          queue.push_back(v);
        } else if (--count[v] == 0) {
          in[v] = true;
          queue.push_back(v);
        }
      }
    }
    return in;
  }

 private:
  std::array<NodeSet, 2> solve(const NodeSet& alive) {
    const int n = a_.size();
    std::array<NodeSet, 2> w{NodeSet(n, false), NodeSet(n, false)};
    int min_p = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && (min_p < 0 || a_.priority[v] < min_p))
        min_p = a_.priority[v];
    if (min_p < 0) return w;
    const int i = min_p % 2;
    NodeSet top(n, false);
    for (int v = 0; v < n; ++v)
      if (alive[v] && a_.priority[v] == min_p) top[v] = true;
    NodeSet attr_i = attr(alive, top, i, true);
    NodeSet rest = alive;
    for (int v = 0; v < n; ++v)
      if (attr_i[v]) rest[v] = false;
    auto sub = solve(rest);
    bool opp_empty = std::none_of(sub[1 - i].begin(), sub[1 - i].end(),
                                  [](bool b) { return b; });
    if (opp_empty) {
      w[i] = alive;
      for (int v = 0; v < n; ++v) {
        if (top[v] && a_.owner[v] == i) {
          for (int s : a_.succ[v])
            if (alive[s]) {
              sol_.strategy[v] = s;
              break;
            }
        }
      }
      return w;
    }
    NodeSet attr_opp = attr(alive, sub[1 - i], 1 - i, true);
    NodeSet rest2 = alive;
    for (int v = 0; v < n; ++v)
      if (attr_opp[v]) rest2[v] = false;
    auto sub2 = solve(rest2);
    w[1 - i] = attr_opp;
    for (int v = 0; v < n; ++v)
      if (sub2[1 - i][v]) w[1 - i][v] = true;
    w[i] = sub2[i];
    return w;
  }

  const ParityArena& a_;
  Digraph pred_;
  ParitySolution sol_;
};

}  // namespace

ParitySolution solve_parity(const ParityArena& arena) {
  arena.check();
  return Zielonka(arena).run();
}

NodeSet attractor(const ParityArena& arena, const NodeSet& alive,
                  const NodeSet& target, int player,
                  std::vector<int>* strategy) {
  Zielonka z(arena);
  NodeSet a = alive.empty() ? NodeSet(arena.size(), true) : alive;
  NodeSet res = z.attr(a, target, player, strategy != nullptr);
  if (strategy) *strategy = z.strategy();
  return res;
}

std::optional<std::vector<int>> chain_priorities(int num_nodes,
                                                 const RabinPairs& pairs) {
  const int k = static_cast<int>(pairs.size());
  auto count = [](const NodeSet& s) {
    return static_cast<int>(std::count(s.begin(), s.end(), true));
  };
  auto member = [](const NodeSet& s, int v) { return !s.empty() && s[v]; };
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> fp_size(k);
  for (int i = 0; i < k; ++i) fp_size[i] = count(pairs[i].fp);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return fp_size[a] < fp_size[b]; });
  for (int j = 0; j + 1 < k; ++j) {
    const auto& lo = pairs[order[j]].fp;
    const auto& hi = pairs[order[j + 1]].fp;
    for (int v = 0; v < num_nodes; ++v)
      if (member(lo, v) && !member(hi, v)) return std::nullopt;
  }
  std::vector<int> prio(num_nodes, 2 * k + 1);
  for (int v = 0; v < num_nodes; ++v) {
    for (int j = 0; j < k; ++j) {
      const auto& p = pairs[order[j]];
      if (member(p.fp, v)) {
        prio[v] = 2 * j + 1;
        break;
      }
      if (member(p.f, v)) {
        prio[v] = 2 * j + 2;
        break;
      }
    }
  }
  return prio;
}

RabinPairs priorities_to_pairs(const std::vector<int>& priority) {
  const int n = static_cast<int>(priority.size());
  int max_p = 0;
  for (int p : priority) max_p = std::max(max_p, p);
  RabinPairs pairs;
  for (int p = 0; p <= max_p; p += 2) {
    NodePair pair{NodeSet(n, false), NodeSet(n, false)};
    bool any = false;
    for (int v = 0; v < n; ++v) {
      if (priority[v] == p) pair.f[v] = any = true;
      if (priority[v] < p) pair.fp[v] = true;
    }
    if (any) pairs.push_back(std::move(pair));
  }
  return pairs;
}

IarStep iar_visit(const RabinPairs& pairs, int v,
                  const std::vector<int>& record) {
  const int k = static_cast<int>(pairs.size());
  auto member = [](const NodeSet& s, int x) { return !s.empty() && s[x]; };
  IarStep out;
  std::vector<int> reset;
  int r = k, g = k;
  for (int pos = 0; pos < k; ++pos) {
    int i = record[pos];
    if (member(pairs[i].fp, v)) {
      reset.push_back(i);
      r = std::min(r, pos);
    } else {
      out.record.push_back(i);
      if (member(pairs[i].f, v)) g = std::min(g, pos);
    }
  }
  out.record.insert(out.record.end(), reset.begin(), reset.end());
  out.priority = std::min(2 * r + 1, 2 * g + 2);
  return out;
}

RabinExpansion rabin_to_priorities(const Digraph& g,
                                   const std::vector<int>& owner,
                                   const std::vector<int>& initial,
                                   const RabinPairs& pairs) {
  const int n = static_cast<int>(g.size());
  RabinExpansion out;
  if (auto chain = chain_priorities(n, pairs)) {
    out.arena.succ = g;
    out.arena.priority = *chain;
    out.arena.owner = owner;
    out.node_of.resize(n);
    std::iota(out.node_of.begin(), out.node_of.end(), 0);
    out.initial_expanded = initial;
    return out;
  }
  const int k = static_cast<int>(pairs.size());
  // Record: permutation of pair indices. Expanded node = (v, priority,
  // record after visiting v).
  using Key = std::tuple<int, int, std::vector<int>>;
  std::map<Key, int> index;
  std::vector<Key> keys;
  auto visit = [&](int v, const std::vector<int>& before) {
    IarStep step = iar_visit(pairs, v, before);
    int prio = step.priority;
    std::vector<int>& after = step.record;
    Key key{v, prio, after};
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = out.arena.add_node(prio, owner.empty() ? 0 : owner[v]);
    out.node_of.push_back(v);
    index.emplace(key, id);
    keys.push_back(std::move(key));
    return id;
  };
  std::vector<int> start(k);
  std::iota(start.begin(), start.end(), 0);
  for (int v : initial) out.initial_expanded.push_back(visit(v, start));
  for (size_t x = 0; x < keys.size(); ++x) {
    const int v = std::get<0>(keys[x]);
    const std::vector<int> rec = std::get<2>(keys[x]);
    std::vector<int> succs;
    for (int w : g[v]) succs.push_back(visit(w, rec));
    out.arena.succ[x] = std::move(succs);
  }
  return out;
}

}  // namespace dynsynth
