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

#include "dynsynth/block.h"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "dynsynth/text_format.h"

namespace dynsynth {

namespace {

void require_sync_links(const ProblemInstance& inst, const char* what) {
  for (Link l : inst.links)
    if (l != Link::kBoth && l != Link::kLeft)
      throw Error(std::string(what) + ": links must lie within {<->, <-}");
}

Link letter_link(const ProblemInstance& inst, int letter) {
  return inst.letter_at(letter).signal.link;
}

}  // namespace

Drwa adjust_sync_start(const Drwa& a) {
  a.check();
  require_sync_links(a.inst, "adjust_sync_start");
  const int n = a.num_states;
  const int L = a.num_letters();
  Drwa out;
  out.inst = a.inst;
  out.num_states = n + 2;
  const int start = n, sink = n + 1;
  out.initial = start;
  out.delta = a.delta;
  out.delta.resize(static_cast<size_t>(out.num_states) * L);
  for (int l = 0; l < L; ++l) {
    out.delta[static_cast<size_t>(start) * L + l] =
        letter_link(a.inst, l) == Link::kBoth ? a.initial : sink;
    out.delta[static_cast<size_t>(sink) * L + l] = sink;
  }
  for (const auto& p : a.pairs) {
    NodePair q{p.f.empty() ? NodeSet(n, false) : p.f,
               p.fp.empty() ? NodeSet(n, false) : p.fp};
    q.f.resize(n + 2, false);
    q.fp.resize(n + 2, false);
    out.pairs.push_back(std::move(q));
  }
  NodePair accept{NodeSet(n + 2, false), NodeSet(n + 2, false)};
  accept.f[sink] = true;
  out.pairs.push_back(std::move(accept));
  return out;
}

BlockAutomaton build_block_automaton(const Drwa& base) {
  base.check();
  require_sync_links(base.inst, "build_block_automaton");
  const int L = base.num_letters();
  std::vector<bool> sync(L);
  for (int l = 0; l < L; ++l) sync[l] = letter_link(base.inst, l) == Link::kBoth;
  BlockAutomaton b;
  b.automaton.inst = base.inst;
  std::map<std::pair<int, std::vector<int>>, int> index;
  auto state_of = [&](int s, std::vector<int> r) {
    auto key = std::make_pair(s, r);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(b.base_state.size());
    index.emplace(std::move(key), id);
    b.base_state.push_back(s);
    b.visited.push_back(std::move(r));
    return id;
  };
  b.automaton.initial = state_of(base.initial, {});
  for (size_t x = 0; x < b.base_state.size(); ++x) {
    const int s = b.base_state[x];
    for (int l = 0; l < L; ++l) {
      const int t = base.next(s, l);
      std::vector<int> r;
      if (sync[l]) {
        r = {t};
      } else {
        r = b.visited[x];
        auto pos = std::lower_bound(r.begin(), r.end(), t);
        if (pos == r.end() || *pos != t) r.insert(pos, t);
      }
      int y = state_of(t, std::move(r));
      b.automaton.delta.push_back(y);
    }
  }
  const int n = static_cast<int>(b.base_state.size());
  b.automaton.num_states = n;
  for (const auto& p : base.pairs) {
    NodePair q{NodeSet(n, false), NodeSet(n, false)};
    for (int x = 0; x < n; ++x)
      for (int r : b.visited[x]) {
        if (!p.f.empty() && p.f[r]) q.f[x] = true;
        if (!p.fp.empty() && p.fp[r]) q.fp[x] = true;
      }
    b.automaton.pairs.push_back(std::move(q));
  }
  return b;
}

std::string format_block_state(const BlockAutomaton& b, int state) {
  return "(" + std::to_string(b.base_state.at(state)) + "," +
         text::format_list(b.visited.at(state)) + ")";
}

bool sync_sampled_accepts(const BlockAutomaton& b,
                          const Lasso<ExecutionStep>& e) {
  e.check();
  bool loop_sync = false;
  for (const auto& x : e.loop) loop_sync = loop_sync || x.signal.link == Link::kBoth;
  if (!loop_sync)
    throw Error("sync_sampled_accepts: the lasso loop has no <-> letter");
  const Drwa& a = b.automaton;
  // Walk the lasso; at every <-> position (after the first letter) record
  // the state reached so far. Stop once (state, position) repeats at a
  // sampling point; the samples since that repetition recur forever.
  std::unordered_map<long long, int> seen;
  std::vector<int> samples;
  int s = a.initial;
  const int positions = e.positions();
  for (long long i = 0;; ++i) {
    const int pos = i < positions ? static_cast<int>(i)
                                  : e.stem() + static_cast<int>((i - e.stem()) % e.period());
    const ExecutionStep& x = e.at(i);
    if (i > 0 && x.signal.link == Link::kBoth) {
      long long key = static_cast<long long>(s) * positions + pos;
      auto it = seen.find(key);
      if (it != seen.end() && i >= positions) {
        NodeSet inf(a.num_states, false);
        for (size_t k = static_cast<size_t>(it->second); k < samples.size(); ++k)
          inf[samples[k]] = true;
        return rabin_accepts(a.pairs, inf);
      }
      if (i >= positions) seen.emplace(key, static_cast<int>(samples.size()));
      samples.push_back(s);
    }
    s = a.run(s, x);
  }
}

}  // namespace dynsynth
