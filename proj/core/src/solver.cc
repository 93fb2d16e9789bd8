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

#include "dynsynth/solver.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

#include "dynsynth/model.h"
#include "dynsynth/parity.h"

namespace dynsynth {

ParityGame21 to_parity_game(const Game21& g) {
  g.check();
  ParityGame21 pg;
  if (auto chain = chain_priorities(g.num_nodes, g.win)) {
    pg.game = g;
    pg.priority = std::move(*chain);
    pg.node_of.resize(g.num_nodes);
    std::iota(pg.node_of.begin(), pg.node_of.end(), 0);
  } else {
    using Key = std::tuple<int, int, std::vector<int>>;
    std::map<Key, int> index;
    std::vector<Key> keys;
    auto visit = [&](int v, const std::vector<int>& before) {
      IarStep step = iar_visit(g.win, v, before);
      Key key{v, step.priority, std::move(step.record)};
      auto it = index.find(key);
      if (it != index.end()) return it->second;
      int id = static_cast<int>(keys.size());
      index.emplace(key, id);
      keys.push_back(std::move(key));
      return id;
    };
    std::vector<int> start(g.win.size());
    std::iota(start.begin(), start.end(), 0);
    Game21& h = pg.game;
    h.initial = visit(g.initial, start);
    for (size_t x = 0; x < keys.size(); ++x) {
      const int v = std::get<0>(keys[x]);
      const std::vector<int> rec = std::get<2>(keys[x]);
      for (int e = 0; e < g.num_env; ++e)
        for (int a1 = 0; a1 < g.num_a1; ++a1)
          for (int a2 = 0; a2 < g.num_a2; ++a2) h.delta.push_back(visit(g.move(v, e, a1, a2), rec));
      for (int e = 0; e < g.num_env; ++e) h.obs2.push_back(g.observe(2, v, e));
    }
    h.num_nodes = static_cast<int>(keys.size());
    h.num_env = g.num_env;
    h.num_a1 = g.num_a1;
    h.num_a2 = g.num_a2;
    h.num_obs2 = g.num_obs2;
    h.env_names = g.env_names;
    h.a1_names = g.a1_names;
    h.a2_names = g.a2_names;
    for (const auto& k : keys) {
      pg.node_of.push_back(std::get<0>(k));
      pg.priority.push_back(std::get<1>(k));
    }
  }
  Game21& h = pg.game;
  h.num_obs1 = h.num_nodes * h.num_env;
  h.obs1.resize(static_cast<size_t>(h.num_obs1));
  std::iota(h.obs1.begin(), h.obs1.end(), 0);
  h.win = priorities_to_pairs(pg.priority);
  h.check();
  return pg;
}

Apt build_apt(const ParityGame21& pg) {
  const Game21& g = pg.game;
  g.check();
  if (!g.obs1_is_identity()) throw Error("tree automaton construction needs obs1 = identity");
  const int E = g.num_env;
  Apt a;
  a.num_states = 1 + g.num_nodes * E;
  a.initial = 0;
  a.num_dirs = g.num_obs2;
  a.num_labels = g.num_a2;
  a.priority.resize(a.num_states);
  a.delta.resize(static_cast<size_t>(a.num_states) * a.num_labels);
  auto spread = [&](int v) {
    AptConjunct c;
    for (int e = 0; e < E; ++e) c.push_back({g.observe(2, v, e), 1 + v * E + e});
    std::sort(c.begin(), c.end());
    return c;
  };
  std::vector<AptConjunct> after(g.num_nodes);
  for (int v = 0; v < g.num_nodes; ++v) after[v] = spread(v);
  a.priority[0] = pg.priority[g.initial];
  for (int l = 0; l < a.num_labels; ++l) a.delta[l] = {after[g.initial]};
  for (int v = 0; v < g.num_nodes; ++v)
    for (int e = 0; e < E; ++e) {
      const int q = 1 + v * E + e;
      a.priority[q] = pg.priority[v];
      for (int a2 = 0; a2 < g.num_a2; ++a2) {
        std::vector<int> targets;
        for (int a1 = 0; a1 < g.num_a1; ++a1) targets.push_back(g.move(v, e, a1, a2));
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        auto& disj = a.delta[static_cast<size_t>(q) * a.num_labels + a2];
        for (int t : targets) disj.push_back(after[t]);
      }
    }
  a.check();
  return a;
}

BestResponse best_response_player1(const Game21& g, const StrategyMachine& g2) {
  g.check();
  g2.check();
  if (!g.obs1_is_identity()) throw Error("best response needs obs1 = identity");
  if (g2.num_obs != g.num_obs2 || g2.num_actions != g.num_a2)
    throw Error("player-2 machine alphabets do not match the game");
  const int S = g2.num_states, E = g.num_env, V = g.num_nodes;
  // Environment nodes (v, s) come first, then (v, s, e) where player 1 moves.
  const int num_env_nodes = V * S;
  auto env_node = [&](int v, int s) { return v * S + s; };
  auto mid_node = [&](int v, int s, int e) { return num_env_nodes + (v * S + s) * E + e; };
  const int total = num_env_nodes * (1 + E);
  Digraph graph(total);
  std::vector<int> owner(total, 0);
  for (int v = 0; v < V; ++v)
    for (int s = 0; s < S; ++s) {
      owner[env_node(v, s)] = 1;
      for (int e = 0; e < E; ++e) {
        graph[env_node(v, s)].push_back(mid_node(v, s, e));
        const int s2 = g2.next(s, g.observe(2, v, e));
        auto& out = graph[mid_node(v, s, e)];
        for (int a1 = 0; a1 < g.num_a1; ++a1)
          out.push_back(env_node(g.move(v, e, a1, g2.output[s2]), s2));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
      }
    }
  RabinPairs pairs;
  for (const auto& p : g.win) {
    NodePair q{NodeSet(total, false), NodeSet(total, false)};
    for (int v = 0; v < V; ++v)
      for (int s = 0; s < S; ++s) {
        q.f[env_node(v, s)] = p.f[v];
        q.fp[env_node(v, s)] = p.fp[v];
      }
    pairs.push_back(std::move(q));
  }
  RabinExpansion ex =
      rabin_to_priorities(graph, owner, {env_node(g.initial, g2.initial)}, pairs);
  ParitySolution sol = solve_parity(ex.arena);
  BestResponse res;
  const int x0 = ex.initial_expanded[0];
  res.wins = sol.winner[x0] == 0;
  if (!res.wins) return res;

  // Machine states: (expanded environment node, last action), plus a sink
  // for observations that cannot occur.
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> states{{x0, 0}};
  id[{x0, 0}] = 0;
  StrategyMachine m;
  m.num_obs = g.num_obs1;
  m.num_actions = g.num_a1;
  std::vector<std::vector<int>> rows;
  int sink = -1;
  auto get_sink = [&] {
    if (sink < 0) {
      sink = static_cast<int>(states.size());
      states.push_back({-1, 0});
    }
    return sink;
  };
  for (size_t i = 0; i < states.size(); ++i) {
    auto [x, act] = states[i];
    std::vector<int> row(m.num_obs);
    if (x < 0) {
      std::fill(row.begin(), row.end(), static_cast<int>(i));
      rows.push_back(std::move(row));
      continue;
    }
    const int pv = ex.node_of[x];
    const int v = pv / S, s = pv % S;
    for (int o = 0; o < m.num_obs; ++o) {
      const int ov = o / E, e = o % E;
      if (ov != v) {
        row[o] = get_sink();
        continue;
      }
      int y = -1;
      for (int c : ex.arena.succ[x])
        if (ex.node_of[c] == mid_node(v, s, e)) y = c;
      const int z = sol.strategy[y];
      const int target = ex.node_of[z];
      const int s2 = target % S;
      const int a2 = g2.output[s2];
      int a1 = 0;
      while (env_node(g.move(v, e, a1, a2), s2) != target) ++a1;
      auto [it, fresh] = id.emplace(std::make_pair(z, a1), static_cast<int>(states.size()));
      if (fresh) states.push_back({z, a1});
      row[o] = it->second;
    }
    rows.push_back(std::move(row));
  }
  m.num_states = static_cast<int>(states.size());
  m.initial = 0;
  for (const auto& r : rows) m.update.insert(m.update.end(), r.begin(), r.end());
  for (const auto& st : states) m.output.push_back(st.second);
  m.check();
  res.g1 = minimize_machine(m);
  if (!profile_wins(g, *res.g1, g2))
    throw Error("internal error: best response failed re-verification");
  return res;
}

std::optional<Lasso<int>> find_losing_play(const Game21& g, const StrategyMachine& g1,
                                           const StrategyMachine& g2) {
  g.check();
  g1.check();
  g2.check();
  if (g1.num_obs != g.num_obs1 || g2.num_obs != g.num_obs2 || g1.num_actions != g.num_a1 ||
      g2.num_actions != g.num_a2)
    throw Error("strategy machine alphabets do not match the game");
  using Key = std::tuple<int, int, int>;
  std::map<Key, int> index;
  std::vector<Key> keys;
  auto node = [&](int v, int s1, int s2) {
    auto [it, fresh] = index.emplace(Key{v, s1, s2}, static_cast<int>(keys.size()));
    if (fresh) keys.push_back({v, s1, s2});
    return it->second;
  };
  node(g.initial, g1.initial, g2.initial);
  Digraph graph;
  std::map<std::pair<int, int>, int> letter;
  for (size_t i = 0; i < keys.size(); ++i) {
    auto [v, s1, s2] = keys[i];
    std::vector<int> out;
    for (int e = 0; e < g.num_env; ++e) {
      int t1 = g1.next(s1, g.observe(1, v, e)), t2 = g2.next(s2, g.observe(2, v, e));
      int w = node(g.move(v, e, g1.output[t1], g2.output[t2]), t1, t2);
      if (letter.emplace(std::make_pair(static_cast<int>(i), w), e).second) out.push_back(w);
    }
    graph.push_back(std::move(out));
  }
  std::vector<NodePair> streett;
  for (const auto& p : g.win) {
    NodePair q{NodeSet(keys.size(), false), NodeSet(keys.size(), false)};
    for (size_t i = 0; i < keys.size(); ++i) {
      q.f[i] = p.f[std::get<0>(keys[i])];
      q.fp[i] = p.fp[std::get<0>(keys[i])];
    }
    streett.push_back(std::move(q));
  }
  auto lasso = find_streett_lasso(graph, 0, streett);
  if (!lasso) return std::nullopt;
  Lasso<int> word;
  const int n = lasso->positions();
  auto at = [&](int i) { return i < lasso->stem() ? lasso->prefix[i] : lasso->loop[i - lasso->stem()]; };
  for (int i = 0; i < n; ++i) {
    int e = letter.at({at(i), at(lasso->next(i))});
    (i < lasso->stem() ? word.prefix : word.loop).push_back(e);
  }
  return word;
}

SolveResult solve_21(const Game21& g, const AlternationLimits& limits) {
  g.check();
  if (!g.obs1_is_identity()) throw Error("the complete engine needs obs1 = identity");
  SolveResult res;
  ParityGame21 pg = to_parity_game(g);
  res.stats.parity_nodes = pg.game.num_nodes;
  Apt apt = build_apt(pg);
  res.stats.apt_states = apt.num_states;
  Npt npt = remove_alternation(apt, limits);
  res.stats.npt_states = npt.num_states;
  NptEmptiness em = npt_emptiness(npt);
  res.stats.emptiness_arena = em.arena_size;
  if (em.empty) {
    res.losing_states = std::move(em.losing_states);
    return res;
  }
  StrategyMachine g2 = minimize_machine(*em.witness);
  BestResponse br = best_response_player1(g, g2);
  if (!br.wins) throw Error("internal error: tree witness admits no winning answer");
  res.realizable = true;
  res.profile = Profile{std::move(*br.g1), std::move(g2)};
  return res;
}

namespace {

// Calls `visit` on every machine whose states are numbered in breadth-first
// order of discovery from state 0, with at most `k` states; stops when it
// returns true.
bool enumerate_machines(int k, int num_obs, int num_actions,
                        const std::function<bool(const StrategyMachine&)>& visit,
                        long long& budget) {
  StrategyMachine m;
  m.num_obs = num_obs;
  m.num_actions = num_actions;
  m.initial = 0;
  std::vector<int> update;
  std::function<bool(int, int)> fill = [&](int pos, int found) -> bool {
    if (pos == found * num_obs) {
      m.num_states = found;
      m.update = update;
      m.output.assign(found, 0);
      for (;;) {
        if (budget-- <= 0) return true;
        if (visit(m)) return true;
        int i = 0;
        while (i < found && ++m.output[i] == num_actions) m.output[i++] = 0;
        if (i == found) return false;
      }
    }
    for (int t = 0; t <= std::min(found, k - 1); ++t) {
      update.push_back(t);
      bool stop = fill(pos + 1, t == found ? found + 1 : found);
      update.pop_back();
      if (stop) return true;
    }
    return false;
  };
  return fill(0, 1);
}

}  // namespace

BoundedResult bounded_search(const Game21& g, int max_memory, long long max_candidates) {
  if (max_memory < 1) throw Error("memory bound must be at least 1");
  g.check();
  BoundedResult res;
  long long budget = max_candidates;
  enumerate_machines(max_memory, g.num_obs2, g.num_a2,
                     [&](const StrategyMachine& m2) {
                       ++res.candidates;
                       BestResponse br = best_response_player1(g, m2);
                       if (!br.wins) return false;
                       res.profile = Profile{std::move(*br.g1), m2};
                       return true;
                     },
                     budget);
  res.exhausted = res.profile.has_value() || budget >= 0;
  return res;
}

}  // namespace dynsynth
