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

#include "dynsynth/tree_automata.h"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "dynsynth/graph.h"
#include "dynsynth/model.h"
#include "dynsynth/parity.h"
#include "safra_core.h"

namespace dynsynth {

void Apt::check() const {
  if (num_states < 1 || num_dirs < 1 || num_labels < 1)
    throw Error("tree automaton sizes must be positive");
  if (initial < 0 || initial >= num_states) throw Error("tree automaton initial state out of range");
  if (priority.size() != static_cast<size_t>(num_states) ||
      delta.size() != static_cast<size_t>(num_states) * num_labels)
    throw Error("tree automaton tables have the wrong size");
  for (int p : priority)
    if (p < 0) throw Error("priorities must be nonnegative");
  for (const auto& disj : delta)
    for (const auto& conj : disj)
      for (const auto& at : conj)
        if (at.dir < 0 || at.dir >= num_dirs || at.state < 0 || at.state >= num_states)
          throw Error("tree automaton atom out of range");
}

void Npt::check() const {
  if (num_states < 1 || num_dirs < 1 || num_labels < 1)
    throw Error("tree automaton sizes must be positive");
  if (initial < 0 || initial >= num_states) throw Error("tree automaton initial state out of range");
  if (priority.size() != static_cast<size_t>(num_states) ||
      delta.size() != static_cast<size_t>(num_states))
    throw Error("tree automaton tables have the wrong size");
  for (const auto& choices : delta)
    for (const auto& c : choices) {
      if (c.label < 0 || c.label >= num_labels) throw Error("label out of range");
      for (const auto& [d, s] : c.moves)
        if (d < 0 || d >= num_dirs || s < 0 || s >= num_states)
          throw Error("tree automaton move out of range");
    }
}

namespace {

void require_tree_alphabets(int dirs, int labels, const RegularTree& t) {
  t.check();
  if (t.num_obs != dirs || t.num_actions != labels)
    throw Error("tree generator alphabets do not match the automaton");
}

// Arena builder with two absorbing sinks and lazily numbered positions.
struct MembershipArena {
  ParityArena arena;
  int win_sink, lose_sink;
  std::unordered_map<long long, int> index;
  std::vector<std::pair<int, int>> key_of;

  MembershipArena() {
    win_sink = arena.add_node(0, 0);
    arena.succ[win_sink] = {win_sink};
    lose_sink = arena.add_node(1, 0);
    arena.succ[lose_sink] = {lose_sink};
  }
  // Returns the node and whether it was new.
  std::pair<int, bool> position(int q, int m, int num_m, int prio) {
    long long key = static_cast<long long>(q) * num_m + m;
    auto it = index.find(key);
    if (it != index.end()) return {it->second, false};
    int id = arena.add_node(prio, 0);
    index.emplace(key, id);
    key_of.resize(arena.size());
    key_of[id] = {q, m};
    return {id, true};
  }
};

int max_priority(const std::vector<int>& prio) {
  int m = 0;
  for (int p : prio) m = std::max(m, p);
  return m;
}

}  // namespace

bool apt_accepts_regular_tree(const Apt& a, const RegularTree& t) {
  a.check();
  require_tree_alphabets(a.num_dirs, a.num_labels, t);
  const int neutral = max_priority(a.priority);
  MembershipArena mb;
  auto [start, fresh] = mb.position(a.initial, t.initial, t.num_states, a.priority[a.initial]);
  std::vector<int> work{start};
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    auto [q, m] = mb.key_of[x];
    const auto& disj = a.transition(q, t.output[m]);
    if (disj.empty()) mb.arena.succ[x].push_back(mb.lose_sink);
    for (const auto& conj : disj) {
      int c = mb.arena.add_node(neutral, 1);
      mb.arena.succ[x].push_back(c);
      if (conj.empty()) mb.arena.succ[c].push_back(mb.win_sink);
      for (const auto& at : conj) {
        auto [y, is_new] = mb.position(at.state, t.next(m, at.dir), t.num_states,
                                       a.priority[at.state]);
        mb.arena.succ[c].push_back(y);
        if (is_new) work.push_back(y);
      }
    }
  }
  return solve_parity(mb.arena).winner[start] == 0;
}

bool npt_accepts_regular_tree(const Npt& n, const RegularTree& t) {
  n.check();
  require_tree_alphabets(n.num_dirs, n.num_labels, t);
  const int neutral = max_priority(n.priority);
  MembershipArena mb;
  auto [start, fresh] = mb.position(n.initial, t.initial, t.num_states, n.priority[n.initial]);
  std::vector<int> work{start};
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    auto [q, m] = mb.key_of[x];
    if (q == 0) {
      mb.arena.succ[x].push_back(mb.win_sink);
      continue;
    }
    const int label = t.output[m];
    for (const auto& c : n.delta[q]) {
      if (c.label != label) continue;
      int cn = mb.arena.add_node(neutral, 1);
      mb.arena.succ[x].push_back(cn);
      size_t k = 0;
      for (int d = 0; d < n.num_dirs; ++d) {
        int s = 0;
        if (k < c.moves.size() && c.moves[k].first == d) s = c.moves[k++].second;
        auto [y, is_new] = mb.position(s, t.next(m, d), t.num_states, n.priority[s]);
        mb.arena.succ[cn].push_back(y);
        if (is_new) work.push_back(y);
      }
    }
    if (mb.arena.succ[x].empty()) mb.arena.succ[x].push_back(mb.lose_sink);
  }
  return solve_parity(mb.arena).winner[start] == 0;
}

namespace {

// Conjuncts per state and label after removing choices that cannot be
// part of an accepting run, and states whose copies never need tracking.
struct PrunedApt {
  std::vector<std::vector<AptConjunct>> delta;
  std::vector<bool> sure;  // every run from here accepts
};

PrunedApt prune(const Apt& a) {
  const int n = a.num_states, L = a.num_labels;
  const int neutral = max_priority(a.priority);
  // Relaxed game where every copy may pick its own label: states lost
  // there accept no tree at all.
  ParityArena g;
  for (int q = 0; q < n; ++q) g.add_node(a.priority[q], 0);
  int win = g.add_node(0, 0), lose = g.add_node(1, 0);
  g.succ[win] = {win};
  g.succ[lose] = {lose};
  for (int q = 0; q < n; ++q) {
    for (int l = 0; l < L; ++l)
      for (const auto& conj : a.transition(q, l)) {
        int c = g.add_node(neutral, 1);
        g.succ[q].push_back(c);
        if (conj.empty()) g.succ[c].push_back(win);
        for (const auto& at : conj) g.succ[c].push_back(at.state);
      }
    if (g.succ[q].empty()) g.succ[q].push_back(lose);
  }
  auto sol = solve_parity(g);
  PrunedApt out;
  out.delta.resize(a.delta.size());
  for (int q = 0; q < n; ++q)
    for (int l = 0; l < L; ++l) {
      std::vector<AptConjunct> kept;
      for (const auto& conj : a.transition(q, l)) {
        bool ok = true;
        for (const auto& at : conj) ok = ok && sol.winner[at.state] == 0;
        if (ok) kept.push_back(conj);
      }
      std::sort(kept.begin(), kept.end());
      kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
      // A conjunct containing another one is never needed.
      std::vector<AptConjunct> minimal;
      for (size_t i = 0; i < kept.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < kept.size() && !dominated; ++j)
          dominated = j != i && kept[j].size() < kept[i].size() &&
                      std::includes(kept[i].begin(), kept[i].end(), kept[j].begin(),
                                    kept[j].end());
        if (!dominated) minimal.push_back(kept[i]);
      }
      out.delta[static_cast<size_t>(q) * L + l] = std::move(minimal);
    }
  // States from which every label has a conjunct and every path through
  // any conjunct is accepting.
  Digraph graph(n + 2);
  const int good = n, bad = n + 1;
  graph[good] = {good};
  graph[bad] = {bad};
  std::vector<int> prio(a.priority);
  prio.push_back(0);
  prio.push_back(1);
  for (int q = 0; q < n; ++q) {
    for (int l = 0; l < L; ++l) {
      const auto& disj = out.delta[static_cast<size_t>(q) * L + l];
      if (disj.empty()) graph[q].push_back(bad);
      for (const auto& conj : disj)
        for (const auto& at : conj) graph[q].push_back(at.state);
    }
    if (graph[q].empty()) graph[q].push_back(good);
    std::sort(graph[q].begin(), graph[q].end());
    graph[q].erase(std::unique(graph[q].begin(), graph[q].end()), graph[q].end());
  }
  NodeSet uni = rabin_universal_nodes(graph, priorities_to_pairs(prio));
  out.sure.assign(n, false);
  for (int q = 0; q < n; ++q) out.sure[q] = uni[q];
  return out;
}

}  // namespace

Npt remove_alternation(const Apt& a, const AlternationLimits& limits) {
  a.check();
  PrunedApt pr = prune(a);
  const int L = a.num_labels;
  std::vector<int> odds;
  for (int p : a.priority)
    if (p % 2 == 1) odds.push_back(p);
  std::sort(odds.begin(), odds.end());
  odds.erase(std::unique(odds.begin(), odds.end()), odds.end());
  // Thread states: (q, g) with g = 0 before guessing, g = k for the guess
  // that the thread's minimal recurring priority is odds[k-1].
  const int layers = static_cast<int>(odds.size()) + 1;
  const int num_threads = a.num_states * layers;
  std::vector<bool> accepting(num_threads, false);
  for (int q = 0; q < a.num_states; ++q)
    for (int k = 1; k < layers; ++k) accepting[q * layers + k] = a.priority[q] == odds[k - 1];
  detail::SafraStepper stepper(num_threads, accepting);

  Npt out;
  out.num_dirs = a.num_dirs;
  out.num_labels = L;
  std::unordered_map<std::vector<int>, int, detail::VecHash> index;
  std::vector<std::vector<int>> codes;
  auto state_of = [&](std::vector<int> code, int prio) {
    if (code.empty()) return 0;
    code.push_back(prio);
    auto it = index.find(code);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(codes.size());
    if (id >= limits.max_states) throw Error("alternation removal exceeds the state limit");
    index.emplace(code, id);
    codes.push_back(std::move(code));
    out.priority.push_back(prio + 1);
    return id;
  };
  // State 0 accepts everything.
  codes.emplace_back();
  out.priority.push_back(0);
  out.initial = pr.sure[a.initial]
                    ? 0
                    : state_of(stepper.initial_code({a.initial * layers}), stepper.neutral());

  auto add_successors = [&](int q2, int g, std::vector<int>& dst) {
    if (pr.sure[q2]) return;
    const int p = a.priority[q2];
    if (g == 0) {
      dst.push_back(q2 * layers);
      for (int k = 1; k < layers; ++k)
        if (p >= odds[k - 1]) dst.push_back(q2 * layers + k);
    } else if (p >= odds[g - 1]) {
      dst.push_back(q2 * layers + g);
    }
  };

  std::vector<int> support;
  std::vector<const std::vector<AptConjunct>*> options;
  std::vector<int> pick;
  std::vector<int> dirs;
  std::vector<const AptConjunct*> chosen(a.num_states, nullptr);
  for (size_t s = 1; s < codes.size(); ++s) {
    const std::vector<int> code(codes[s].begin(), codes[s].end() - 1);
    support.clear();
    for (int t : detail::SafraStepper::root_label(code)) support.push_back(t / layers);
    support.erase(std::unique(support.begin(), support.end()), support.end());
    std::vector<NptChoice> choices;
    std::map<std::pair<int, std::vector<std::pair<int, int>>>, bool> seen;
    for (int l = 0; l < L; ++l) {
      options.clear();
      long long combos = 1;
      for (int q : support) {
        options.push_back(&pr.delta[static_cast<size_t>(q) * L + l]);
        combos *= static_cast<long long>(options.back()->size());
        if (combos > limits.max_combinations)
          throw Error("alternation removal exceeds the choice limit");
      }
      if (combos == 0) continue;
      pick.assign(support.size(), 0);
      for (long long c = 0; c < combos; ++c) {
        dirs.clear();
        for (size_t i = 0; i < support.size(); ++i) {
          chosen[support[i]] = &(*options[i])[pick[i]];
          for (const auto& at : *chosen[support[i]]) dirs.push_back(at.dir);
        }
        std::sort(dirs.begin(), dirs.end());
        dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
        NptChoice choice;
        choice.label = l;
        for (int d : dirs) {
          auto r = stepper.step(code, [&](int t, std::vector<int>& dst) {
            const int q = t / layers, g = t % layers;
            for (const auto& at : *chosen[q])
              if (at.dir == d) add_successors(at.state, g, dst);
          });
          int target = state_of(std::move(r.code), r.priority);
          if (target != 0) choice.moves.emplace_back(d, target);
        }
        if (seen.emplace(std::make_pair(l, choice.moves), true).second)
          choices.push_back(std::move(choice));
        for (size_t i = 0; i < pick.size(); ++i) {
          if (++pick[i] < static_cast<int>(options[i]->size())) break;
          pick[i] = 0;
        }
      }
    }
    out.delta.resize(codes.size());
    out.delta[s] = std::move(choices);
  }
  out.num_states = static_cast<int>(codes.size());
  out.delta.resize(out.num_states);
  out.check();
  return out;
}

NptEmptiness npt_emptiness(const Npt& n) {
  n.check();
  // Team nodes 0..num_states-1, then choice nodes, then a losing sink.
  ParityArena g;
  std::vector<int> distinct(n.priority);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  // Consecutive priorities of equal parity merge into one.
  std::map<int, int> squeeze;
  int level = -1;
  for (int p : distinct) {
    if (level < 0) level = p % 2;
    else if (level % 2 != p % 2) ++level;
    squeeze[p] = level;
  }
  int top = level + 1;
  for (int q = 0; q < n.num_states; ++q) g.add_node(squeeze[n.priority[q]], 0);
  g.succ[0] = {0};
  g.priority[0] = 0;
  std::vector<std::pair<int, int>> choice_of;  // arena node -> (state, choice)
  choice_of.assign(n.num_states, {-1, -1});
  int lose = -1;
  for (int q = 1; q < n.num_states; ++q) {
    for (size_t c = 0; c < n.delta[q].size(); ++c) {
      const auto& ch = n.delta[q][c];
      int x = g.add_node(top, 1);
      choice_of.emplace_back(q, static_cast<int>(c));
      g.succ[q].push_back(x);
      for (const auto& [d, s] : ch.moves) g.succ[x].push_back(s);
      if (static_cast<int>(ch.moves.size()) < n.num_dirs) g.succ[x].push_back(0);
      std::sort(g.succ[x].begin(), g.succ[x].end());
      g.succ[x].erase(std::unique(g.succ[x].begin(), g.succ[x].end()), g.succ[x].end());
    }
    if (g.succ[q].empty()) {
      if (lose < 0) {
        lose = g.add_node(1, 0);
        choice_of.emplace_back(-1, -1);
        g.succ[lose] = {lose};
      }
      g.succ[q].push_back(lose);
    }
  }
  auto sol = solve_parity(g);
  NptEmptiness res;
  res.arena_size = g.size();
  res.empty = sol.winner[n.initial] != 0;
  for (int q = 0; q < n.num_states; ++q)
    if (sol.winner[q] != 0) res.losing_states.push_back(q);
  if (res.empty) return res;
  // Witness: states reached under the winning strategy.
  std::vector<int> id(n.num_states, -1);
  std::vector<int> order{n.initial};
  id[n.initial] = 0;
  if (id[0] < 0) {
    id[0] = 1;
    order.push_back(0);
  }
  RegularTree t;
  t.num_obs = n.num_dirs;
  t.num_actions = n.num_labels;
  t.initial = 0;
  std::vector<const NptChoice*> picked;
  for (size_t i = 0; i < order.size(); ++i) {
    int q = order[i];
    if (q == 0) {
      picked.push_back(nullptr);
      continue;
    }
    int x = sol.strategy[q];
    const NptChoice* ch = &n.delta[q][choice_of[x].second];
    picked.push_back(ch);
    for (const auto& [d, s] : ch->moves)
      if (id[s] < 0) {
        id[s] = static_cast<int>(order.size());
        order.push_back(s);
      }
  }
  t.num_states = static_cast<int>(order.size());
  t.output.assign(t.num_states, 0);
  t.update.assign(static_cast<size_t>(t.num_states) * t.num_obs, id[0]);
  for (int i = 0; i < t.num_states; ++i) {
    if (!picked[i]) {
      for (int d = 0; d < t.num_obs; ++d) t.update[static_cast<size_t>(i) * t.num_obs + d] = i;
      continue;
    }
    t.output[i] = picked[i]->label;
    for (const auto& [d, s] : picked[i]->moves)
      t.update[static_cast<size_t>(i) * t.num_obs + d] = id[s];
  }
  t.check();
  res.witness = minimize_machine(t);
  return res;
}

}  // namespace dynsynth
