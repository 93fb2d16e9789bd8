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

#include "dynsynth/nba.h"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "dynsynth/graph.h"
#include "dynsynth/text_format.h"

namespace dynsynth {

void Nba::check() const {
  inst.validate();
  if (initial.empty()) throw Error("NBA needs an initial state");
  if (static_cast<int>(accepting.size()) != num_states ||
      static_cast<int>(succ.size()) != num_states)
    throw Error("NBA: inconsistent sizes");
  for (int q : initial)
    if (q < 0 || q >= num_states) throw Error("NBA: bad initial state");
  for (const auto& row : succ) {
    if (static_cast<int>(row.size()) != num_letters())
      throw Error("NBA: transition table does not cover the alphabet");
    for (const auto& targets : row)
      for (int t : targets)
        if (t < 0 || t >= num_states) throw Error("NBA: bad target state");
  }
}

namespace {

using LetterSet = std::vector<bool>;

enum class NKind { kTrue, kFalse, kLit, kAnd, kOr, kNext, kUntil, kRelease };

struct NNode {
  NKind kind;
  int a = -1;
  int b = -1;
};

class Tableau {
 public:
  explicit Tableau(const ProblemInstance& inst) : inst_(inst) {
    true_ = intern(NKind::kTrue, -1, -1);
    false_ = intern(NKind::kFalse, -1, -1);
  }

  int nnf(const Ltl& f, bool neg) {
    switch (f->op) {
      case LtlOp::kTrue: return neg ? false_ : true_;
      case LtlOp::kFalse: return neg ? true_ : false_;
      case LtlOp::kInput:
      case LtlOp::kOutput:
      case LtlOp::kLink: {
        LetterSet g(inst_.num_letters());
        for (int l = 0; l < inst_.num_letters(); ++l)
          g[l] = holds_now(f, inst_.letter_at(l)) != neg;
        return literal(std::move(g));
      }
      case LtlOp::kNot: return nnf(f->lhs, !neg);
      case LtlOp::kAnd:
        return neg ? mk_or(nnf(f->lhs, true), nnf(f->rhs, true))
                   : mk_and(nnf(f->lhs, false), nnf(f->rhs, false));
      case LtlOp::kOr:
        return neg ? mk_and(nnf(f->lhs, true), nnf(f->rhs, true))
                   : mk_or(nnf(f->lhs, false), nnf(f->rhs, false));
      case LtlOp::kImplies:
        return neg ? mk_and(nnf(f->lhs, false), nnf(f->rhs, true))
                   : mk_or(nnf(f->lhs, true), nnf(f->rhs, false));
      case LtlOp::kIff: {
        int a = nnf(f->lhs, false), na = nnf(f->lhs, true);
        int b = nnf(f->rhs, false), nb = nnf(f->rhs, true);
        return neg ? mk_or(mk_and(a, nb), mk_and(na, b))
                   : mk_or(mk_and(a, b), mk_and(na, nb));
      }
      case LtlOp::kNext: return intern(NKind::kNext, nnf(f->lhs, neg), -1);
      case LtlOp::kFinally:
        return neg ? mk_release(false_, nnf(f->lhs, true))
                   : mk_until(true_, nnf(f->lhs, false));
      case LtlOp::kGlobally:
        return neg ? mk_until(true_, nnf(f->lhs, true))
                   : mk_release(false_, nnf(f->lhs, false));
      case LtlOp::kUntil:
        return neg ? mk_release(nnf(f->lhs, true), nnf(f->rhs, true))
                   : mk_until(nnf(f->lhs, false), nnf(f->rhs, false));
    }
    throw Error("nnf: unknown operator");
  }

  Nba build(int root) {
    std::vector<int> untils;
    for (int i = 0; i < static_cast<int>(nodes_.size()); ++i)
      if (nodes_[i].kind == NKind::kUntil) untils.push_back(i);
    const int k = static_cast<int>(untils.size());

    // Transition-based generalized Buechi automaton.
    struct Edge {
      LetterSet guard;
      int target;
      std::vector<bool> acc;
    };
    std::map<std::vector<int>, int> state_index;
    std::vector<std::vector<int>> states;
    std::vector<std::vector<Edge>> edges;
    auto state_of = [&](const std::vector<int>& s) {
      auto it = state_index.find(s);
      if (it != state_index.end()) return it->second;
      int id = static_cast<int>(states.size());
      state_index.emplace(s, id);
      states.push_back(s);
      edges.emplace_back();
      return id;
    };
    state_of({root});
    for (size_t q = 0; q < states.size(); ++q) {
      std::vector<Cover> covers;
      Cover start;
      start.guard.assign(inst_.num_letters(), true);
      expand(states[q], {}, start, covers);
      // Merge covers with the same successor and acceptance.
      std::map<std::pair<std::vector<int>, std::vector<bool>>, LetterSet> merged;
      for (auto& c : covers) {
        std::vector<bool> acc(k);
        for (int j = 0; j < k; ++j) acc[j] = !c.postponed.count(untils[j]);
        std::vector<int> next(c.next.begin(), c.next.end());
        auto key = std::make_pair(std::move(next), std::move(acc));
        auto it = merged.find(key);
        if (it == merged.end()) {
          merged.emplace(std::move(key), std::move(c.guard));
        } else {
          for (size_t l = 0; l < c.guard.size(); ++l)
            if (c.guard[l]) it->second[l] = true;
        }
      }
      std::vector<std::tuple<LetterSet, std::vector<int>, std::vector<bool>>>
          cand;
      for (auto& [key, guard] : merged) cand.emplace_back(guard, key.first, key.second);
      // Drop covers dominated by another one.
      std::vector<bool> dead(cand.size(), false);
      for (size_t i = 0; i < cand.size(); ++i) {
        for (size_t j = 0; j < cand.size() && !dead[i]; ++j) {
          if (i == j || dead[j]) continue;
          const auto& [gi, ni, ai] = cand[i];
          const auto& [gj, nj, aj] = cand[j];
          bool guard_sub = true;
          for (size_t l = 0; l < gi.size() && guard_sub; ++l)
            if (gi[l] && !gj[l]) guard_sub = false;
          if (!guard_sub) continue;
          if (!std::includes(ni.begin(), ni.end(), nj.begin(), nj.end()))
            continue;
          bool acc_sup = true;
          for (int u = 0; u < k && acc_sup; ++u)
            if (ai[u] && !aj[u]) acc_sup = false;
          if (!acc_sup) continue;
          if (gi == gj && ni == nj && ai == aj && j > i) continue;
          dead[i] = true;
        }
      }
      for (size_t i = 0; i < cand.size(); ++i) {
        if (dead[i]) continue;
        auto& [g, n, a] = cand[i];
        int t = state_of(n);
        edges[q].push_back(Edge{g, t, a});
      }
    }

    // Degeneralize with a counter; level k marks acceptance.
    const int levels = k + 1;
    const int nq = static_cast<int>(states.size());
    auto id = [&](int q, int c) { return q * levels + c; };
    Nba out;
    out.inst = inst_;
    out.num_states = nq * levels;
    out.accepting.assign(out.num_states, false);
    out.succ.assign(out.num_states,
                    std::vector<std::vector<int>>(inst_.num_letters()));
    for (int q = 0; q < nq; ++q) {
      for (int c = 0; c < levels; ++c) {
        out.accepting[id(q, c)] = (c == k);
        int base = c == k ? 0 : c;
        for (const auto& e : edges[q]) {
          int j = base;
          while (j < k && e.acc[j]) ++j;
          for (int l = 0; l < inst_.num_letters(); ++l)
            if (e.guard[l]) out.succ[id(q, c)][l].push_back(id(e.target, j));
        }
      }
    }
    out.initial = {id(0, 0)};
    return out;
  }

 private:
  struct Cover {
    LetterSet guard;
    std::set<int> next;
    std::set<int> postponed;
  };

  void expand(std::vector<int> todo, std::set<int> done, Cover cur,
              std::vector<Cover>& out) {
    while (!todo.empty()) {
      int f = todo.back();
      todo.pop_back();
      if (!done.insert(f).second) continue;
      const NNode n = nodes_[f];
      switch (n.kind) {
        case NKind::kTrue: break;
        case NKind::kFalse: return;
        case NKind::kLit: {
          bool any = false;
          const LetterSet& g = guards_[n.a];
          for (size_t l = 0; l < g.size(); ++l) {
            cur.guard[l] = cur.guard[l] && g[l];
            any = any || cur.guard[l];
          }
          if (!any) return;
          break;
        }
        case NKind::kAnd:
          todo.push_back(n.a);
          todo.push_back(n.b);
          break;
        case NKind::kOr: {
          auto todo2 = todo;
          todo2.push_back(n.b);
          expand(std::move(todo2), done, cur, out);
          todo.push_back(n.a);
          break;
        }
        case NKind::kNext: cur.next.insert(n.a); break;
        case NKind::kUntil: {
          // Either fulfil now, or postpone.
          auto todo2 = todo;
          todo2.push_back(n.a);
          Cover c2 = cur;
          c2.next.insert(f);
          c2.postponed.insert(f);
          expand(std::move(todo2), done, std::move(c2), out);
          todo.push_back(n.b);
          break;
        }
        case NKind::kRelease: {
          auto todo2 = todo;
          todo2.push_back(n.b);
          Cover c2 = cur;
          c2.next.insert(f);
          expand(std::move(todo2), done, std::move(c2), out);
          todo.push_back(n.a);
          todo.push_back(n.b);
          break;
        }
      }
    }
    out.push_back(std::move(cur));
  }

  int intern(NKind kind, int a, int b) {
    auto key = std::make_tuple(static_cast<int>(kind), a, b);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(NNode{kind, a, b});
    index_.emplace(key, id);
    return id;
  }

  int literal(LetterSet g) {
    bool all = std::all_of(g.begin(), g.end(), [](bool b) { return b; });
    bool none = std::none_of(g.begin(), g.end(), [](bool b) { return b; });
    if (all) return true_;
    if (none) return false_;
    auto it = guard_index_.find(g);
    int gi;
    if (it == guard_index_.end()) {
      gi = static_cast<int>(guards_.size());
      guard_index_.emplace(g, gi);
      guards_.push_back(std::move(g));
    } else {
      gi = it->second;
    }
    return intern(NKind::kLit, gi, -1);
  }

  int mk_and(int a, int b) {
    if (a == false_ || b == false_) return false_;
    if (a == true_) return b;
    if (b == true_) return a;
    if (a == b) return a;
    if (a > b) std::swap(a, b);
    return intern(NKind::kAnd, a, b);
  }

  int mk_or(int a, int b) {
    if (a == true_ || b == true_) return true_;
    if (a == false_) return b;
    if (b == false_) return a;
    if (a == b) return a;
    if (a > b) std::swap(a, b);
    return intern(NKind::kOr, a, b);
  }

  int mk_until(int a, int b) {
    if (b == true_ || b == false_) return b;
    return intern(NKind::kUntil, a, b);
  }

  int mk_release(int a, int b) {
    if (b == true_ || b == false_) return b;
    return intern(NKind::kRelease, a, b);
  }

  const ProblemInstance& inst_;
  std::vector<NNode> nodes_;
  std::map<std::tuple<int, int, int>, int> index_;
  std::vector<LetterSet> guards_;
  std::map<LetterSet, int> guard_index_;
  int true_ = -1;
  int false_ = -1;
};

// Keeps states reachable from the initial ones that can reach an accepting
// cycle; the initial state survives as a dead state if needed.
Nba prune(const Nba& a) {
  const int n = a.num_states;
  Digraph g(n);
  for (int q = 0; q < n; ++q) {
    for (const auto& ts : a.succ[q]) g[q].insert(g[q].end(), ts.begin(), ts.end());
    std::sort(g[q].begin(), g[q].end());
    g[q].erase(std::unique(g[q].begin(), g[q].end()), g[q].end());
  }
  NodeSet reach = reachable_from(g, a.initial);
  auto scc = strongly_connected_components(g, reach);
  auto nontriv = nontrivial_components(g, scc);
  NodeSet acc_cycle(n, false);
  for (int q = 0; q < n; ++q)
    if (reach[q] && a.accepting[q] && nontriv[scc.comp[q]]) acc_cycle[q] = true;
  NodeSet live = can_reach(g, acc_cycle);
  std::vector<int> remap(n, -1);
  Nba out;
  out.inst = a.inst;
  for (int q = 0; q < n; ++q)
    if (reach[q] && live[q]) remap[q] = out.num_states++;
  for (int q : a.initial)
    if (remap[q] >= 0) out.initial.push_back(remap[q]);
  if (out.initial.empty()) {
    out.num_states = 1;
    out.initial = {0};
    out.accepting = {false};
    out.succ.assign(1, std::vector<std::vector<int>>(a.num_letters()));
    return out;
  }
  out.accepting.assign(out.num_states, false);
  out.succ.assign(out.num_states,
                  std::vector<std::vector<int>>(a.num_letters()));
  for (int q = 0; q < n; ++q) {
    if (remap[q] < 0) continue;
    out.accepting[remap[q]] = a.accepting[q];
    for (int l = 0; l < a.num_letters(); ++l)
      for (int t : a.succ[q][l])
        if (remap[t] >= 0) out.succ[remap[q]][l].push_back(remap[t]);
  }
  std::sort(out.initial.begin(), out.initial.end());
  out.initial.erase(std::unique(out.initial.begin(), out.initial.end()),
                    out.initial.end());
  return out;
}

}  // namespace

Nba reduce_nba(const Nba& a) {
  const int n = a.num_states;
  std::vector<int> cls(n);
  for (int q = 0; q < n; ++q) cls[q] = a.accepting[q] ? 1 : 0;
  int num_classes = 0;
  for (;;) {
    std::map<std::pair<int, std::vector<std::vector<int>>>, int> sig_index;
    std::vector<int> next(n);
    for (int q = 0; q < n; ++q) {
      std::vector<std::vector<int>> sig(a.num_letters());
      for (int l = 0; l < a.num_letters(); ++l) {
        for (int t : a.succ[q][l]) sig[l].push_back(cls[t]);
        std::sort(sig[l].begin(), sig[l].end());
        sig[l].erase(std::unique(sig[l].begin(), sig[l].end()), sig[l].end());
      }
      auto key = std::make_pair(cls[q], std::move(sig));
      auto it = sig_index.find(key);
      if (it == sig_index.end())
        it = sig_index.emplace(std::move(key), static_cast<int>(sig_index.size()))
                 .first;
      next[q] = it->second;
    }
    int count = static_cast<int>(sig_index.size());
    cls = std::move(next);
    if (count == num_classes) break;
    num_classes = count;
  }
  Nba out;
  out.inst = a.inst;
  out.num_states = num_classes;
  out.accepting.assign(num_classes, false);
  out.succ.assign(num_classes, std::vector<std::vector<int>>(a.num_letters()));
  std::vector<bool> filled(num_classes, false);
  for (int q = 0; q < n; ++q) {
    int c = cls[q];
    if (filled[c]) continue;
    filled[c] = true;
    out.accepting[c] = a.accepting[q];
    for (int l = 0; l < a.num_letters(); ++l) {
      auto& ts = out.succ[c][l];
      for (int t : a.succ[q][l]) ts.push_back(cls[t]);
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    }
  }
  for (int q : a.initial) out.initial.push_back(cls[q]);
  std::sort(out.initial.begin(), out.initial.end());
  out.initial.erase(std::unique(out.initial.begin(), out.initial.end()),
                    out.initial.end());
  return out;
}

Nba ltl_to_nba(const ProblemInstance& inst, const Ltl& f) {
  check_formula(inst, f);
  Tableau t(inst);
  int root = t.nnf(f, false);
  Nba raw = t.build(root);
  return reduce_nba(prune(raw));
}

bool nba_accepts_lasso(const Nba& a, const Lasso<ExecutionStep>& e) {
  e.check();
  const int positions = e.positions();
  const int n = a.num_states * positions;
  auto node = [&](int q, int i) { return q * positions + i; };
  Digraph g(n);
  for (int q = 0; q < a.num_states; ++q) {
    for (int i = 0; i < positions; ++i) {
      int letter = a.inst.letter_index(e.at(i));
      for (int t : a.succ[q][letter]) g[node(q, i)].push_back(node(t, e.next(i)));
    }
  }
  std::vector<int> init;
  for (int q : a.initial) init.push_back(node(q, 0));
  NodeSet reach = reachable_from(g, init);
  auto scc = strongly_connected_components(g, reach);
  auto nontriv = nontrivial_components(g, scc);
  for (int q = 0; q < a.num_states; ++q) {
    if (!a.accepting[q]) continue;
    for (int i = 0; i < positions; ++i) {
      int v = node(q, i);
      if (reach[v] && nontriv[scc.comp[v]]) return true;
    }
  }
  return false;
}

std::string nba_to_text(const Nba& a) {
  std::string out = "nba\n";
  out += "alphabet: " + text::format_alphabet(a.inst) + "\n";
  out += "states: " + std::to_string(a.num_states) + "\n";
  out += "init: " + text::format_list(a.initial) + "\n";
  out += "accepting: " + text::format_set(a.accepting) + "\n";
  for (int q = 0; q < a.num_states; ++q)
    for (int l = 0; l < a.num_letters(); ++l)
      for (int t : a.succ[q][l])
        out += "trans: " + std::to_string(q) + " " +
               text::format_letter(a.inst, l) + " -> " + std::to_string(t) +
               "\n";
  return out;
}

Nba parse_nba_text(std::string_view textv) {
  text::LineReader r(textv);
  if (!r.next() || r.line() != "nba") r.fail("expected header 'nba'");
  Nba a;
  std::string rest;
  bool have_alpha = false, have_states = false;
  try {
    while (r.next()) {
      if (r.field("alphabet", &rest)) {
        a.inst = text::parse_alphabet(rest);
        have_alpha = true;
      } else if (r.field("states", &rest)) {
        if (!have_alpha) r.fail("'alphabet:' must precede 'states:'");
        a.num_states = text::parse_int(rest);
        if (a.num_states < 1) r.fail("need at least one state");
        a.accepting.assign(a.num_states, false);
        a.succ.assign(a.num_states,
                      std::vector<std::vector<int>>(a.num_letters()));
        have_states = true;
      } else if (r.field("init", &rest)) {
        a.initial = text::parse_list(rest);
      } else if (r.field("accepting", &rest)) {
        if (!have_states) r.fail("'states:' must come first");
        for (int q : text::parse_list(rest)) {
          if (q < 0 || q >= a.num_states) r.fail("state out of range");
          a.accepting[q] = true;
        }
      } else if (r.field("trans", &rest)) {
        if (!have_states) r.fail("'states:' must come first");
        auto lb = rest.find('['), rb = rest.find(']'), arrow = rest.find("->", rb);
        if (lb == std::string::npos || rb == std::string::npos ||
            arrow == std::string::npos)
          r.fail("expected 'trans: s [letter] -> t'");
        int s = text::parse_int(rest.substr(0, lb));
        int l = text::parse_letter(a.inst, rest.substr(lb, rb - lb + 1));
        int t = text::parse_int(rest.substr(arrow + 2));
        if (s < 0 || s >= a.num_states || t < 0 || t >= a.num_states)
          r.fail("state out of range");
        auto& ts = a.succ[s][l];
        ts.insert(std::upper_bound(ts.begin(), ts.end(), t), t);
      } else {
        r.fail("unknown line '" + r.line() + "'");
      }
    }
  } catch (const Error& e) {
    std::string msg = e.what();
    if (msg.rfind("line ", 0) == 0) throw;
    r.fail(msg);
  }
  if (!have_states) throw Error("NBA text lacks 'states:'");
  a.check();
  return a;
}

}  // namespace dynsynth
