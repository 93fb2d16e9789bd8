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

#include "dynsynth/drwa.h"

#include <algorithm>
#include <deque>
#include <tuple>
#include <map>
#include <unordered_map>

#include "dynsynth/text_format.h"

namespace dynsynth {

namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = v.size();
    for (int x : v) h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

bool member(const NodeSet& s, int v) { return !s.empty() && s[v]; }

}  // namespace

void Drwa::check() const {
  inst.validate();
  if (num_states < 1) throw Error("DRWA needs at least one state");
  if (initial < 0 || initial >= num_states)
    throw Error("DRWA: initial state out of range");
  if (delta.size() != static_cast<size_t>(num_states) * num_letters())
    throw Error("DRWA: transition function is not total");
  for (int t : delta)
    if (t < 0 || t >= num_states) throw Error("DRWA: target out of range");
  for (const auto& p : pairs)
    if ((!p.f.empty() && static_cast<int>(p.f.size()) != num_states) ||
        (!p.fp.empty() && static_cast<int>(p.fp.size()) != num_states))
      throw Error("DRWA: acceptance pair does not match the state count");
}

Digraph Drwa::graph() const {
  Digraph g(num_states);
  for (int s = 0; s < num_states; ++s) {
    for (int l = 0; l < num_letters(); ++l) g[s].push_back(next(s, l));
    std::sort(g[s].begin(), g[s].end());
    g[s].erase(std::unique(g[s].begin(), g[s].end()), g[s].end());
  }
  return g;
}

NodeSet drwa_inf_set(const Drwa& a, const Lasso<ExecutionStep>& e) {
  e.check();
  const int positions = e.positions();
  std::vector<int> letters(positions);
  for (int i = 0; i < positions; ++i) letters[i] = a.inst.letter_index(e.at(i));
  std::unordered_map<long long, int> seen;
  std::vector<int> trace;
  int s = a.initial, i = 0;
  for (;;) {
    long long key = static_cast<long long>(s) * positions + i;
    auto it = seen.find(key);
    if (it != seen.end()) {
      NodeSet inf(a.num_states, false);
      for (size_t j = static_cast<size_t>(it->second); j < trace.size(); ++j)
        inf[trace[j]] = true;
      return inf;
    }
    seen.emplace(key, static_cast<int>(trace.size()));
    trace.push_back(s);
    s = a.next(s, letters[i]);
    i = e.next(i);
  }
}

bool rabin_accepts(const RabinPairs& pairs, const NodeSet& inf) {
  for (const auto& p : pairs) {
    bool hit = false, bad = false;
    for (size_t v = 0; v < inf.size(); ++v) {
      if (!inf[v]) continue;
      if (member(p.f, static_cast<int>(v))) hit = true;
      if (member(p.fp, static_cast<int>(v))) bad = true;
    }
    if (hit && !bad) return true;
  }
  return false;
}

bool drwa_accepts_lasso(const Drwa& a, const Lasso<ExecutionStep>& e) {
  return rabin_accepts(a.pairs, drwa_inf_set(a, e));
}

Drwa drwa_accept_all(const ProblemInstance& inst) {
  Drwa a;
  a.inst = inst;
  a.num_states = 1;
  a.delta.assign(inst.num_letters(), 0);
  a.pairs.push_back(NodePair{NodeSet{true}, NodeSet{false}});
  return a;
}

Drwa drwa_reject_all(const ProblemInstance& inst) {
  Drwa a;
  a.inst = inst;
  a.num_states = 1;
  a.delta.assign(inst.num_letters(), 0);
  return a;
}

Drwa drwa_relativize(const Drwa& a, const std::vector<Link>& links) {
  a.check();
  Drwa out;
  out.inst = with_links(a.inst, links);
  for (Link l : a.inst.links)
    if (!out.inst.has_link(l)) throw Error("relativization must keep every original link");
  const int n = a.num_states, sink = n;
  out.num_states = n + 1;
  out.initial = a.initial;
  const int L = out.num_letters();
  out.delta.resize(static_cast<size_t>(out.num_states) * L);
  for (int l = 0; l < L; ++l) {
    const ExecutionStep step = out.inst.letter_at(l);
    const bool old = a.inst.has_link(step.signal.link);
    for (int s = 0; s < n; ++s) out.delta[static_cast<size_t>(s) * L + l] = old ? a.run(s, step) : sink;
    out.delta[static_cast<size_t>(sink) * L + l] = sink;
  }
  for (const auto& p : a.pairs) {
    NodePair q{p.f.empty() ? NodeSet(n, false) : p.f, p.fp.empty() ? NodeSet(n, false) : p.fp};
    q.f.push_back(false);
    q.fp.push_back(false);
    out.pairs.push_back(std::move(q));
  }
  NodePair accept{NodeSet(n + 1, false), NodeSet(n + 1, false)};
  accept.f[sink] = true;
  out.pairs.push_back(std::move(accept));
  out.check();
  return out;
}

Drwa drwa_union(const Drwa& a, const Drwa& b) {
  if (!(a.inst == b.inst)) throw Error("drwa_union: alphabet mismatch");
  const int L = a.num_letters();
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> states;
  auto id = [&](int s, int t) {
    auto it = index.find({s, t});
    if (it != index.end()) return it->second;
    int x = static_cast<int>(states.size());
    index.emplace(std::make_pair(s, t), x);
    states.emplace_back(s, t);
    return x;
  };
  Drwa out;
  out.inst = a.inst;
  out.initial = id(a.initial, b.initial);
  for (size_t x = 0; x < states.size(); ++x) {
    auto [s, t] = states[x];
    for (int l = 0; l < L; ++l) out.delta.push_back(id(a.next(s, l), b.next(t, l)));
  }
  out.num_states = static_cast<int>(states.size());
  auto lift = [&](const NodePair& p, bool first) {
    NodePair q{NodeSet(out.num_states, false), NodeSet(out.num_states, false)};
    for (int x = 0; x < out.num_states; ++x) {
      int c = first ? states[x].first : states[x].second;
      q.f[x] = member(p.f, c);
      q.fp[x] = member(p.fp, c);
    }
    return q;
  };
  for (const auto& p : a.pairs) out.pairs.push_back(lift(p, true));
  for (const auto& p : b.pairs) out.pairs.push_back(lift(p, false));
  return out;
}

Drwa drwa_trim(const Drwa& a) {
  const int L = a.num_letters();
  std::vector<int> remap(a.num_states, -1);
  std::vector<int> order;
  std::deque<int> queue{a.initial};
  remap[a.initial] = 0;
  order.push_back(a.initial);
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int l = 0; l < L; ++l) {
      int t = a.next(s, l);
      if (remap[t] < 0) {
        remap[t] = static_cast<int>(order.size());
        order.push_back(t);
        queue.push_back(t);
      }
    }
  }
  Drwa out;
  out.inst = a.inst;
  out.num_states = static_cast<int>(order.size());
  out.initial = 0;
  out.delta.resize(static_cast<size_t>(out.num_states) * L);
  for (int x = 0; x < out.num_states; ++x)
    for (int l = 0; l < L; ++l)
      out.delta[static_cast<size_t>(x) * L + l] = remap[a.next(order[x], l)];
  for (const auto& p : a.pairs) {
    NodePair q{NodeSet(out.num_states, false), NodeSet(out.num_states, false)};
    bool any_f = false;
    for (int x = 0; x < out.num_states; ++x) {
      q.f[x] = member(p.f, order[x]);
      q.fp[x] = member(p.fp, order[x]);
      any_f = any_f || q.f[x];
    }
    if (any_f) out.pairs.push_back(std::move(q));
  }
  return out;
}

std::optional<std::vector<int>> drwa_priorities(const Drwa& a) {
  return chain_priorities(a.num_states, a.pairs);
}

namespace {

// Parity presentation of a trimmed automaton (no minimization).
ParityAutomaton to_parity_raw(const Drwa& a) {
  if (auto prio = drwa_priorities(a)) return ParityAutomaton{a, *prio};
  const int L = a.num_letters();
  const int k = static_cast<int>(a.pairs.size());
  using Key = std::tuple<int, int, std::vector<int>>;
  std::map<Key, int> index;
  std::vector<Key> keys;
  ParityAutomaton out;
  out.automaton.inst = a.inst;
  auto visit = [&](int v, const std::vector<int>& rec) {
    IarStep st = iar_visit(a.pairs, v, rec);
    Key key{v, st.priority, std::move(st.record)};
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(keys.size());
    index.emplace(key, id);
    keys.push_back(std::move(key));
    out.priority.push_back(st.priority);
    return id;
  };
  std::vector<int> start(k);
  for (int i = 0; i < k; ++i) start[i] = i;
  out.automaton.initial = visit(a.initial, start);
  for (size_t x = 0; x < keys.size(); ++x) {
    const int v = std::get<0>(keys[x]);
    const std::vector<int> rec = std::get<2>(keys[x]);
    for (int l = 0; l < L; ++l) out.automaton.delta.push_back(visit(a.next(v, l), rec));
  }
  out.automaton.num_states = static_cast<int>(keys.size());
  out.automaton.pairs = priorities_to_pairs(out.priority);
  return out;
}

// Dense renumbering that keeps order and parity.
std::vector<int> compress_priorities(const std::vector<int>& prio) {
  std::vector<int> distinct(prio);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::map<int, int> to;
  int cur = -1;
  for (int p : distinct) {
    if (cur < 0) cur = p % 2;
    else if (cur % 2 != p % 2) ++cur;
    to[p] = cur;
  }
  std::vector<int> out(prio.size());
  for (size_t i = 0; i < prio.size(); ++i) out[i] = to[prio[i]];
  return out;
}

// Least priorities inducing the same verdict on every cycle, computed by
// peeling the minimal priority off each strongly connected component.
// Nodes that lie on no cycle of their component get the level of that
// component and are flagged as free: any priority at least that level
// yields the same verdicts.
void canonical_levels(const Digraph& g, const std::vector<int>& prio,
                      const NodeSet& region, int base, std::vector<int>& out,
                      std::vector<bool>& free) {
  SccResult scc = strongly_connected_components(g, region);
  auto nontrivial = nontrivial_components(g, scc);
  const int n = static_cast<int>(g.size());
  std::vector<std::vector<int>> members(scc.count);
  for (int v = 0; v < n; ++v)
    if (scc.comp[v] >= 0) members[scc.comp[v]].push_back(v);
  for (int c = 0; c < scc.count; ++c) {
    if (!nontrivial[c]) {
      for (int v : members[c]) out[v] = base, free[v] = true;
      continue;
    }
    int m = prio[members[c].front()];
    for (int v : members[c]) m = std::min(m, prio[v]);
    const int q = base % 2 == m % 2 ? base : base + 1;
    NodeSet rest(n, false);
    bool any = false;
    for (int v : members[c]) {
      if (prio[v] == m) {
        out[v] = q;
        free[v] = false;
      } else {
        rest[v] = true;
        any = true;
      }
    }
    if (any) canonical_levels(g, prio, rest, q + 1, out, free);
  }
}

// Coarsest bisimulation respecting `key`.
std::vector<int> bisimulation(const Drwa& a, const std::vector<int>& key,
                              int& count) {
  const int n = a.num_states;
  const int L = a.num_letters();
  std::vector<int> cls(n);
  {
    std::map<int, int> by_key;
    for (int s = 0; s < n; ++s)
      cls[s] = by_key.emplace(key[s], static_cast<int>(by_key.size())).first->second;
  }
  count = -1;
  std::vector<int> sig(L + 1);
  for (;;) {
    std::unordered_map<std::vector<int>, int, VecHash> sig_index;
    std::vector<int> next(n);
    for (int s = 0; s < n; ++s) {
      sig[0] = cls[s];
      for (int l = 0; l < L; ++l) sig[l + 1] = cls[a.next(s, l)];
      next[s] = sig_index.emplace(sig, static_cast<int>(sig_index.size())).first->second;
    }
    int c = static_cast<int>(sig_index.size());
    cls = std::move(next);
    if (c == count) break;
    count = c;
  }
  return cls;
}

// Priority-respecting bisimulation quotient with canonical BFS numbering.
// Free nodes adopt the priority of a class they are otherwise
// indistinguishable from, which lets them merge.
ParityAutomaton minimize_parity(const Drwa& a, const std::vector<int>& input_prio) {
  const int n = a.num_states;
  const int L = a.num_letters();
  const Digraph g = a.graph();
  std::vector<int> prio(n, 0);
  std::vector<bool> free(n, false);
  canonical_levels(g, input_prio, NodeSet(n, true), 0, prio, free);
  const std::vector<int> floor = prio;
  int count = 0;
  std::vector<int> cls = bisimulation(a, prio, count);
  for (bool changed = true; changed;) {
    changed = false;
    std::unordered_map<std::vector<int>, int, VecHash> fixed_sig;
    std::vector<int> sig(L);
    auto signature = [&](int s) {
      for (int l = 0; l < L; ++l) sig[l] = cls[a.next(s, l)];
      return sig;
    };
    for (int s = 0; s < n; ++s)
      if (!free[s]) fixed_sig.emplace(signature(s), prio[s]);
    for (int s = 0; s < n; ++s) {
      if (!free[s]) continue;
      auto it = fixed_sig.find(signature(s));
      if (it == fixed_sig.end() || it->second == prio[s] || it->second < floor[s])
        continue;
      prio[s] = it->second;
      changed = true;
    }
    if (changed) {
      int c2 = 0;
      cls = bisimulation(a, prio, c2);
      if (c2 >= count) break;
      count = c2;
    }
  }
  std::vector<int> rep(count, -1);
  for (int s = 0; s < n; ++s)
    if (rep[cls[s]] < 0 || (free[rep[cls[s]]] && !free[s])) rep[cls[s]] = s;
  std::vector<int> order, remap(count, -1);
  std::deque<int> queue{cls[a.initial]};
  remap[cls[a.initial]] = 0;
  order.push_back(cls[a.initial]);
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int l = 0; l < L; ++l) {
      int d = cls[a.next(rep[c], l)];
      if (remap[d] < 0) {
        remap[d] = static_cast<int>(order.size());
        order.push_back(d);
        queue.push_back(d);
      }
    }
  }
  ParityAutomaton out;
  Drwa& m = out.automaton;
  m.inst = a.inst;
  m.num_states = static_cast<int>(order.size());
  m.initial = 0;
  m.delta.resize(static_cast<size_t>(m.num_states) * L);
  out.priority.resize(m.num_states);
  for (int x = 0; x < m.num_states; ++x) {
    int s = rep[order[x]];
    out.priority[x] = prio[s];
    for (int l = 0; l < L; ++l)
      m.delta[static_cast<size_t>(x) * L + l] = remap[cls[a.next(s, l)]];
  }
  out.priority = compress_priorities(out.priority);
  m.pairs = priorities_to_pairs(out.priority);
  return out;
}

}  // namespace

namespace {

// Streett pairs over product nodes saying that the minimal priority seen
// infinitely often has the given parity.
void add_parity_pairs(const std::vector<int>& prio, bool even,
                      std::vector<NodePair>& out) {
  std::vector<int> values(prio);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (int p : values) {
    if ((p % 2 == 0) == even) continue;
    NodePair q{NodeSet(prio.size(), false), NodeSet(prio.size(), false)};
    for (size_t v = 0; v < prio.size(); ++v) {
      q.f[v] = prio[v] == p;
      q.fp[v] = prio[v] < p;
    }
    out.push_back(std::move(q));
  }
}

// Product of two parity automata over the given node pairs (all pairs when
// `from` is empty); node (x, y) has index x * b.num_states + y.
struct ParityProduct {
  Digraph g;
  std::vector<int> prio_a, prio_b;
};

ParityProduct parity_product(const ParityAutomaton& a, const ParityAutomaton& b,
                             const std::vector<int>& from) {
  const int na = a.automaton.num_states, nb = b.automaton.num_states;
  const int L = a.automaton.num_letters();
  ParityProduct p;
  p.g.assign(static_cast<size_t>(na) * nb, {});
  p.prio_a.resize(p.g.size());
  p.prio_b.resize(p.g.size());
  std::vector<bool> seen(p.g.size(), false);
  std::vector<int> todo;
  if (from.empty()) {
    for (size_t v = 0; v < p.g.size(); ++v) todo.push_back(static_cast<int>(v));
    seen.assign(p.g.size(), true);
  } else {
    for (int v : from)
      if (!seen[v]) seen[v] = true, todo.push_back(v);
  }
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    const int x = v / nb, y = v % nb;
    p.prio_a[v] = a.priority[x];
    p.prio_b[v] = b.priority[y];
    auto& out = p.g[v];
    for (int l = 0; l < L; ++l)
      out.push_back(a.automaton.next(x, l) * nb + b.automaton.next(y, l));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (int w : out)
      if (!seen[w]) seen[w] = true, todo.push_back(w);
  }
  return p;
}

std::vector<NodePair> disagreement_pairs(const ParityProduct& p) {
  std::vector<NodePair> pairs;
  add_parity_pairs(p.prio_a, true, pairs);
  add_parity_pairs(p.prio_b, false, pairs);
  return pairs;
}

bool parity_equivalent(const ParityAutomaton& a, const ParityAutomaton& b) {
  const int nb = b.automaton.num_states;
  const int start = a.automaton.initial * nb + b.automaton.initial;
  ParityProduct ab = parity_product(a, b, {start});
  if (find_streett_lasso(ab.g, start, disagreement_pairs(ab))) return false;
  const int na = a.automaton.num_states;
  const int start2 = b.automaton.initial * na + a.automaton.initial;
  ParityProduct ba = parity_product(b, a, {start2});
  return !find_streett_lasso(ba.g, start2, disagreement_pairs(ba));
}

// Merges states with equal languages one pair at a time, keeping a merge
// only when the automaton's language is unchanged.
ParityAutomaton merge_equivalent_states(const ParityAutomaton& in) {
  const int n = in.automaton.num_states;
  if (n <= 2) return in;
  ParityProduct all = parity_product(in, in, {});
  NodeSet differ = streett_nonempty_nodes(all.g, disagreement_pairs(all));
  std::vector<int> cls(n, -1);
  for (int s = 0; s < n; ++s) {
    if (cls[s] >= 0) continue;
    cls[s] = s;
    for (int t = s + 1; t < n; ++t)
      if (cls[t] < 0 && !differ[s * n + t] && !differ[t * n + s]) cls[t] = s;
  }
  ParityAutomaton cur = in;
  bool merged = false;
  for (int t = 0; t < n; ++t) {
    const int r = cls[t];
    if (r == t) continue;
    ParityAutomaton cand = cur;
    for (int& d : cand.automaton.delta)
      if (d == t) d = r;
    if (cand.automaton.initial == t) cand.automaton.initial = r;
    if (parity_equivalent(cur, cand)) {
      cur = std::move(cand);
      merged = true;
    }
  }
  if (!merged) return in;
  Drwa trimmed = drwa_trim(cur.automaton);
  // drwa_trim renumbers by BFS; carry priorities along.
  std::vector<int> prio(trimmed.num_states);
  {
    const int L = cur.automaton.num_letters();
    std::vector<int> to(n, -1);
    std::deque<int> queue{cur.automaton.initial};
    to[cur.automaton.initial] = 0;
    int next = 1;
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      prio[to[s]] = cur.priority[s];
      for (int l = 0; l < L; ++l) {
        int d = cur.automaton.next(s, l);
        if (to[d] < 0) to[d] = next++, queue.push_back(d);
      }
    }
  }
  return minimize_parity(trimmed, prio);
}

}  // namespace

ParityAutomaton drwa_to_parity(const Drwa& input) {
  Drwa a = drwa_trim(input);
  const int L = a.num_letters();
  Digraph g = a.graph();
  NodeSet universal = rabin_universal_nodes(g, a.pairs);
  NodeSet nonempty = rabin_nonempty_nodes(g, a.pairs);
  // Collapse universal and empty states into sinks.
  const int n = a.num_states;
  std::vector<int> remap(n, -1);
  int kept = 0;
  for (int s = 0; s < n; ++s)
    if (!universal[s] && nonempty[s]) remap[s] = kept++;
  const int acc_sink = kept;
  const int rej_sink = kept + 1;
  for (int s = 0; s < n; ++s)
    if (remap[s] < 0) remap[s] = universal[s] ? acc_sink : rej_sink;
  Drwa c;
  c.inst = a.inst;
  c.num_states = kept + 2;
  c.initial = remap[a.initial];
  c.delta.resize(static_cast<size_t>(c.num_states) * L);
  for (int s = 0; s < n; ++s) {
    if (remap[s] >= kept) continue;
    for (int l = 0; l < L; ++l)
      c.delta[static_cast<size_t>(remap[s]) * L + l] = remap[a.next(s, l)];
  }
  for (int l = 0; l < L; ++l) {
    c.delta[static_cast<size_t>(acc_sink) * L + l] = acc_sink;
    c.delta[static_cast<size_t>(rej_sink) * L + l] = rej_sink;
  }
  for (const auto& p : a.pairs) {
    NodePair q{NodeSet(c.num_states, false), NodeSet(c.num_states, false)};
    for (int s = 0; s < n; ++s) {
      if (remap[s] >= kept) continue;
      q.f[remap[s]] = member(p.f, s);
      q.fp[remap[s]] = member(p.fp, s);
    }
    c.pairs.push_back(std::move(q));
  }
  {
    NodePair sink{NodeSet(c.num_states, false), NodeSet(c.num_states, false)};
    sink.f[acc_sink] = true;
    c.pairs.push_back(std::move(sink));
  }
  c = drwa_trim(c);
  ParityAutomaton par = to_parity_raw(c);
  Drwa& pa = par.automaton;
  // States with a definite verdict get the extreme priorities.
  int max_p = 1;
  for (int p : par.priority) max_p = std::max(max_p, p);
  if (max_p % 2 == 0) ++max_p;
  Digraph pg = pa.graph();
  NodeSet pu = rabin_universal_nodes(pg, pa.pairs);
  NodeSet pn = rabin_nonempty_nodes(pg, pa.pairs);
  for (int s = 0; s < pa.num_states; ++s) {
    if (pu[s]) par.priority[s] = 0;
    else if (!pn[s]) par.priority[s] = max_p;
  }
  ParityAutomaton best = minimize_parity(pa, par.priority);
  for (;;) {
    ParityAutomaton again = minimize_parity(best.automaton, best.priority);
    again = merge_equivalent_states(again);
    if (again.automaton.num_states >= best.automaton.num_states) break;
    best = std::move(again);
  }
  return best;
}

Drwa normalize_drwa(const Drwa& a) { return drwa_to_parity(a).automaton; }

std::string drwa_to_text(const Drwa& a) {
  std::string out = "drwa\n";
  out += "alphabet: " + text::format_alphabet(a.inst) + "\n";
  out += "states: " + std::to_string(a.num_states) + "\n";
  out += "init: " + std::to_string(a.initial) + "\n";
  for (int s = 0; s < a.num_states; ++s)
    for (int l = 0; l < a.num_letters(); ++l)
      out += "trans: " + std::to_string(s) + " " +
             text::format_letter(a.inst, l) + " -> " +
             std::to_string(a.next(s, l)) + "\n";
  for (const auto& p : a.pairs) {
    NodeSet f = p.f.empty() ? NodeSet(a.num_states, false) : p.f;
    NodeSet fp = p.fp.empty() ? NodeSet(a.num_states, false) : p.fp;
    out += "rabin: F=" + text::format_set(f) + " Fp=" + text::format_set(fp) +
           "\n";
  }
  return out;
}

Drwa parse_drwa_text(std::string_view textv) {
  text::LineReader r(textv);
  if (!r.next() || r.line() != "drwa") r.fail("expected header 'drwa'");
  Drwa a;
  std::string rest;
  bool have_alpha = false, have_states = false, have_init = false;
  std::vector<bool> defined;
  try {
    while (r.next()) {
      if (r.field("alphabet", &rest)) {
        a.inst = text::parse_alphabet(rest);
        have_alpha = true;
      } else if (r.field("states", &rest)) {
        if (!have_alpha) r.fail("'alphabet:' must precede 'states:'");
        a.num_states = text::parse_int(rest);
        if (a.num_states < 1) r.fail("need at least one state");
        a.delta.assign(static_cast<size_t>(a.num_states) * a.num_letters(), 0);
        defined.assign(a.delta.size(), false);
        have_states = true;
      } else if (r.field("init", &rest)) {
        a.initial = text::parse_int(rest);
        have_init = true;
      } else if (r.field("trans", &rest)) {
        if (!have_states) r.fail("'states:' must come first");
        auto lb = rest.find('['), rb = rest.find(']');
        auto arrow = rb == std::string::npos ? rb : rest.find("->", rb);
        if (lb == std::string::npos || rb == std::string::npos ||
            arrow == std::string::npos)
          r.fail("expected 'trans: s [letter] -> t'");
        int s = text::parse_int(rest.substr(0, lb));
        int l = text::parse_letter(a.inst, rest.substr(lb, rb - lb + 1));
        int t = text::parse_int(rest.substr(arrow + 2));
        if (s < 0 || s >= a.num_states || t < 0 || t >= a.num_states)
          r.fail("state out of range");
        size_t idx = static_cast<size_t>(s) * a.num_letters() + l;
        if (defined[idx]) r.fail("duplicate transition");
        defined[idx] = true;
        a.delta[idx] = t;
      } else if (r.field("rabin", &rest)) {
        if (!have_states) r.fail("'states:' must come first");
        auto fpos = rest.find("F=");
        auto fppos = rest.find("Fp=");
        if (fpos == std::string::npos || fppos == std::string::npos)
          r.fail("expected 'rabin: F={...} Fp={...}'");
        NodePair p{NodeSet(a.num_states, false), NodeSet(a.num_states, false)};
        for (int s : text::parse_list(rest.substr(fpos + 2, fppos - fpos - 2))) {
          if (s < 0 || s >= a.num_states) r.fail("state out of range");
          p.f[s] = true;
        }
        for (int s : text::parse_list(rest.substr(fppos + 3))) {
          if (s < 0 || s >= a.num_states) r.fail("state out of range");
          p.fp[s] = true;
        }
        a.pairs.push_back(std::move(p));
      } else {
        r.fail("unknown line '" + r.line() + "'");
      }
    }
  } catch (const Error& e) {
    std::string msg = e.what();
    if (msg.rfind("line ", 0) == 0) throw;
    r.fail(msg);
  }
  if (!have_states || !have_init) throw Error("DRWA text lacks 'states:' or 'init:'");
  for (size_t i = 0; i < defined.size(); ++i)
    if (!defined[i])
      throw Error("DRWA text: missing transition for state " +
                  std::to_string(i / a.num_letters()) + " letter " +
                  text::format_letter(a.inst, static_cast<int>(i % a.num_letters())));
  a.check();
  return a;
}

}  // namespace dynsynth
