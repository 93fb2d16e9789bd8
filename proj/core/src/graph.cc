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

#include "dynsynth/graph.h"

#include <algorithm>
#include <deque>

namespace dynsynth {

SccResult strongly_connected_components(const Digraph& g,
                                        const NodeSet& alive) {
  const int n = static_cast<int>(g.size());
  auto live = [&](int v) { return alive.empty() || alive[v]; };
  SccResult res;
  res.comp.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::pair<int, size_t>> call;
  int counter = 0;
  for (int root = 0; root < n; ++root) {
    if (!live(root) || index[root] >= 0) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i < g[v].size()) {
        int w = g[v][i++];
        if (!live(w)) continue;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      int done = v;
      call.pop_back();
      if (!call.empty())
        low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          res.comp[w] = res.count;
        } while (w != done);
        ++res.count;
      }
    }
  }
  return res;
}

std::vector<bool> nontrivial_components(const Digraph& g, const SccResult& s) {
  std::vector<bool> out(s.count, false);
  for (size_t v = 0; v < g.size(); ++v) {
    if (s.comp[v] < 0) continue;
    for (int w : g[v])
      if (s.comp[w] == s.comp[v]) out[s.comp[v]] = true;
  }
  return out;
}

NodeSet reachable_from(const Digraph& g, const std::vector<int>& sources) {
  NodeSet seen(g.size(), false);
  std::vector<int> todo;
  for (int s : sources)
    if (!seen[s]) seen[s] = true, todo.push_back(s);
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    for (int w : g[v])
      if (!seen[w]) seen[w] = true, todo.push_back(w);
  }
  return seen;
}

NodeSet can_reach(const Digraph& g, const NodeSet& targets) {
  const int n = static_cast<int>(g.size());
  Digraph rev(n);
  for (int v = 0; v < n; ++v)
    for (int w : g[v]) rev[w].push_back(v);
  std::vector<int> sources;
  for (int v = 0; v < n; ++v)
    if (targets[v]) sources.push_back(v);
  return reachable_from(rev, sources);
}

std::vector<int> shortest_path(const Digraph& g, int from, const NodeSet& to,
                               const NodeSet& alive) {
  const int n = static_cast<int>(g.size());
  auto live = [&](int v) { return alive.empty() || alive[v]; };
  std::vector<int> parent(n, -2);
  std::deque<int> queue{from};
  parent[from] = -1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (to[v]) {
      std::vector<int> path;
      for (int u = v; u != -1; u = parent[u]) path.push_back(u);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int w : g[v]) {
      if (live(w) && parent[w] == -2) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return {};
}

std::vector<int> covering_cycle(const Digraph& g, const NodeSet& component,
                                int start) {
  std::vector<int> cycle{start};
  NodeSet visited(g.size(), false);
  visited[start] = true;
  int cur = start;
  NodeSet target(g.size(), false);
  for (size_t v = 0; v < g.size(); ++v) {
    if (!component[v] || visited[v]) continue;
    std::fill(target.begin(), target.end(), false);
    target[v] = true;
    auto path = shortest_path(g, cur, target, component);
    for (size_t i = 1; i < path.size(); ++i) {
      cycle.push_back(path[i]);
      visited[path[i]] = true;
    }
    cur = static_cast<int>(v);
  }
  // Close the cycle with at least one edge.
  std::fill(target.begin(), target.end(), false);
  target[start] = true;
  std::vector<int> back;
  if (cur == start) {
    for (int w : g[start]) {
      if (!component[w]) continue;
      auto path = shortest_path(g, w, target, component);
      if (!path.empty()) {
        back.push_back(start);
        back.insert(back.end(), path.begin(), path.end());
        break;
      }
    }
  } else {
    back = shortest_path(g, cur, target, component);
  }
  for (size_t i = 1; i + 1 < back.size(); ++i) cycle.push_back(back[i]);
  return cycle;
}

namespace {

// Tarjan restricted to a node list, with buffers reused across calls.
class SubgraphScc {
 public:
  explicit SubgraphScc(const Digraph& g)
      : g_(g), in_(g.size(), 0), index_(g.size(), -1), low_(g.size(), 0),
        on_stack_(g.size(), false) {}

  // Components of the subgraph induced by `nodes` that carry an edge.
  std::vector<std::vector<int>> nontrivial(const std::vector<int>& nodes) {
    ++stamp_;
    for (int v : nodes) in_[v] = stamp_, index_[v] = -1;
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    std::vector<std::pair<int, size_t>> call;
    int counter = 0;
    for (int root : nodes) {
      if (index_[root] >= 0) continue;
      call.push_back({root, 0});
      index_[root] = low_[root] = counter++;
      stack.push_back(root);
      on_stack_[root] = true;
      while (!call.empty()) {
        auto& [v, i] = call.back();
        if (i < g_[v].size()) {
          int w = g_[v][i++];
          if (in_[w] != stamp_) continue;
          if (index_[w] < 0) {
            index_[w] = low_[w] = counter++;
            stack.push_back(w);
            on_stack_[w] = true;
            call.push_back({w, 0});
          } else if (on_stack_[w]) {
            low_[v] = std::min(low_[v], index_[w]);
          }
          continue;
        }
        int done = v;
        call.pop_back();
        if (!call.empty())
          low_[call.back().first] = std::min(low_[call.back().first], low_[done]);
        if (low_[done] != index_[done]) continue;
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack_[w] = false;
          comp.push_back(w);
        } while (w != done);
        bool edge = comp.size() > 1;
        if (!edge)
          for (int x : g_[done]) edge = edge || x == done;
        if (edge) out.push_back(std::move(comp));
      }
    }
    return out;
  }

 private:
  const Digraph& g_;
  std::vector<int> in_;
  std::vector<int> index_, low_;
  std::vector<bool> on_stack_;
  int stamp_ = 0;
};

bool member(const NodeSet& s, int v) { return !s.empty() && s[v]; }

// Maximal node sets, each strongly connected, whose cycles can satisfy all
// Streett pairs; `first_only` stops at the first one found.
std::vector<std::vector<int>> streett_cores(const Digraph& g,
                                            std::vector<int> nodes,
                                            const std::vector<NodePair>& pairs,
                                            bool first_only) {
  SubgraphScc scc(g);
  std::vector<std::vector<int>> found;
  std::vector<std::vector<int>> work{std::move(nodes)};
  while (!work.empty()) {
    std::vector<int> cur = std::move(work.back());
    work.pop_back();
    for (auto& comp : scc.nontrivial(cur)) {
      std::vector<bool> drop_pair(pairs.size(), false);
      bool bad = false;
      for (size_t k = 0; k < pairs.size(); ++k) {
        bool hits_f = false, hits_fp = false;
        for (int v : comp) {
          hits_f = hits_f || member(pairs[k].f, v);
          hits_fp = hits_fp || member(pairs[k].fp, v);
        }
        if (hits_f && !hits_fp) drop_pair[k] = bad = true;
      }
      if (!bad) {
        found.push_back(std::move(comp));
        if (first_only) return found;
        continue;
      }
      std::vector<int> rest;
      for (int v : comp) {
        bool keep = true;
        for (size_t k = 0; k < pairs.size() && keep; ++k)
          if (drop_pair[k] && member(pairs[k].f, v)) keep = false;
        if (keep) rest.push_back(v);
      }
      if (!rest.empty()) work.push_back(std::move(rest));
    }
  }
  return found;
}

std::vector<int> all_nodes(const NodeSet& s) {
  std::vector<int> out;
  for (size_t v = 0; v < s.size(); ++v)
    if (s[v]) out.push_back(static_cast<int>(v));
  return out;
}

}  // namespace

std::optional<Lasso<int>> find_streett_lasso(
    const Digraph& g, int init, const std::vector<NodePair>& pairs) {
  auto cores = streett_cores(g, all_nodes(reachable_from(g, {init})), pairs, true);
  if (cores.empty()) return std::nullopt;
  NodeSet comp(g.size(), false);
  for (int v : cores.front()) comp[v] = true;
  auto stem = shortest_path(g, init, comp);
  Lasso<int> out;
  int entry = stem.back();
  stem.pop_back();
  out.prefix = std::move(stem);
  out.loop = covering_cycle(g, comp, entry);
  return out;
}

NodeSet streett_nonempty_nodes(const Digraph& g,
                               const std::vector<NodePair>& pairs) {
  NodeSet good(g.size(), false);
  for (const auto& c :
       streett_cores(g, all_nodes(NodeSet(g.size(), true)), pairs, false))
    for (int v : c) good[v] = true;
  return can_reach(g, good);
}

NodeSet rabin_nonempty_nodes(const Digraph& g,
                             const std::vector<NodePair>& pairs) {
  const int n = static_cast<int>(g.size());
  NodeSet good(n, false);
  SubgraphScc scc(g);
  for (const auto& p : pairs) {
    std::vector<int> nodes;
    for (int v = 0; v < n; ++v)
      if (!member(p.fp, v)) nodes.push_back(v);
    for (const auto& comp : scc.nontrivial(nodes))
      for (int v : comp)
        if (member(p.f, v)) good[v] = true;
  }
  return can_reach(g, good);
}

NodeSet rabin_universal_nodes(const Digraph& g,
                              const std::vector<NodePair>& pairs) {
  // The complement of a Rabin condition is the Streett condition on the
  // same pairs.
  NodeSet bad = streett_nonempty_nodes(g, pairs);
  bad.flip();
  return bad;
}

}  // namespace dynsynth
