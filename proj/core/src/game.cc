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

#include "dynsynth/game.h"

#include <sstream>

#include "dynsynth/text_format.h"

namespace dynsynth {

bool Game21::obs1_is_identity() const {
  if (num_obs1 != num_nodes * num_env) return false;
  for (int i = 0; i < num_nodes * num_env; ++i)
    if (obs1[i] != i) return false;
  return true;
}

void Game21::check() const {
  if (num_nodes < 1 || num_env < 1 || num_a1 < 1 || num_a2 < 1 || num_obs1 < 1 ||
      num_obs2 < 1)
    throw Error("game sizes must be positive");
  if (initial < 0 || initial >= num_nodes) throw Error("game initial node out of range");
  const size_t ve = static_cast<size_t>(num_nodes) * num_env;
  if (obs1.size() != ve || obs2.size() != ve ||
      delta.size() != ve * num_a1 * num_a2)
    throw Error("game tables have the wrong size");
  for (int o : obs1)
    if (o < 0 || o >= num_obs1) throw Error("game obs1 out of range");
  for (int o : obs2)
    if (o < 0 || o >= num_obs2) throw Error("game obs2 out of range");
  for (int t : delta)
    if (t < 0 || t >= num_nodes) throw Error("game transition target out of range");
  for (const auto& p : win)
    if (p.f.size() != static_cast<size_t>(num_nodes) ||
        p.fp.size() != static_cast<size_t>(num_nodes))
      throw Error("game winning pair does not match the node count");
}

Game21 game_from_automaton(const Drwa& a, RabinPairs win) {
  a.check();
  const ProblemInstance& inst = a.inst;
  for (Link l : inst.links)
    if (l != Link::kLeft && l != Link::kBoth)
      throw Error("game construction needs links within {<->, <-}");
  Game21 g;
  g.num_nodes = a.num_states;
  g.initial = a.initial;
  g.num_env = inst.num_signals();
  g.num_a1 = static_cast<int>(inst.y1.size());
  g.num_a2 = static_cast<int>(inst.y2.size());
  g.num_obs1 = g.num_nodes * g.num_env;
  const int nx2 = static_cast<int>(inst.x2.size());
  std::vector<int> both_rank(g.num_env, -1);
  int num_both = 0;
  for (int e = 0; e < g.num_env; ++e)
    if (inst.signal_at(e).link == Link::kBoth) both_rank[e] = num_both++;
  g.num_obs2 = nx2 + g.num_nodes * num_both;
  const size_t ve = static_cast<size_t>(g.num_nodes) * g.num_env;
  g.obs1.resize(ve);
  g.obs2.resize(ve);
  g.delta.resize(ve * g.num_a1 * g.num_a2);
  for (int v = 0; v < g.num_nodes; ++v)
    for (int e = 0; e < g.num_env; ++e) {
      size_t ix = static_cast<size_t>(v) * g.num_env + e;
      g.obs1[ix] = static_cast<int>(ix);
      Signal s = inst.signal_at(e);
      g.obs2[ix] = both_rank[e] < 0 ? s.x2 : nx2 + v * num_both + both_rank[e];
      for (int y1 = 0; y1 < g.num_a1; ++y1)
        for (int y2 = 0; y2 < g.num_a2; ++y2)
          g.delta[(ix * g.num_a1 + y1) * g.num_a2 + y2] = a.run(v, {s, {y1, y2}});
    }
  g.win = std::move(win);
  for (int e = 0; e < g.num_env; ++e) g.env_names.push_back(format_signal(inst, inst.signal_at(e)));
  g.a1_names = inst.y1;
  g.a2_names = inst.y2;
  g.check();
  return g;
}

Game21 build_game(const BlockAutomaton& block, const Drwa& base) {
  RabinPairs win;
  const int n = block.automaton.num_states;
  for (const auto& p : base.pairs) {
    NodePair w{NodeSet(n, false), NodeSet(n, false)};
    for (int x = 0; x < n; ++x) {
      w.f[x] = p.f[block.base_state[x]];
      w.fp[x] = p.fp[block.base_state[x]];
    }
    win.push_back(std::move(w));
  }
  Game21 g = game_from_automaton(block.automaton, std::move(win));
  for (int x = 0; x < n; ++x) g.node_names.push_back(format_block_state(block, x));
  return g;
}

Game21 build_sync_game(const Drwa& adjusted) {
  return game_from_automaton(adjusted, adjusted.pairs);
}

std::vector<int> obs_trace(const Game21& g, int p, const Play& play) {
  if (p != 1 && p != 2) throw Error("process id must be 1 or 2");
  std::vector<int> out;
  for (const auto& s : play) out.push_back(g.observe(p, s.node, s.env));
  return out;
}

PlayOutcome play_outcome(const Game21& g, const StrategyMachine& m1,
                         const StrategyMachine& m2, const std::vector<int>& env) {
  if (m1.num_obs != g.num_obs1 || m2.num_obs != g.num_obs2 ||
      m1.num_actions != g.num_a1 || m2.num_actions != g.num_a2)
    throw Error("strategy machine alphabets do not match the game");
  PlayOutcome out;
  int v = g.initial, s1 = m1.initial, s2 = m2.initial;
  for (int e : env) {
    if (e < 0 || e >= g.num_env) throw Error("environment action out of range");
    out.play.push_back({v, e});
    s1 = m1.next(s1, g.observe(1, v, e));
    s2 = m2.next(s2, g.observe(2, v, e));
    int a1 = m1.output[s1], a2 = m2.output[s2];
    out.a1.push_back(a1);
    out.a2.push_back(a2);
    v = g.move(v, e, a1, a2);
  }
  out.final_node = v;
  return out;
}

std::string game_to_text(const Game21& g) {
  std::ostringstream out;
  out << "game\nsizes: nodes=" << g.num_nodes << " env=" << g.num_env
      << " a1=" << g.num_a1 << " a2=" << g.num_a2 << " obs1=" << g.num_obs1
      << " obs2=" << g.num_obs2 << "\ninit: " << g.initial << "\n";
  for (int v = 0; v < g.num_nodes; ++v)
    for (int e = 0; e < g.num_env; ++e)
      for (int a1 = 0; a1 < g.num_a1; ++a1)
        for (int a2 = 0; a2 < g.num_a2; ++a2)
          out << "trans: " << v << " " << e << " " << a1 << " " << a2 << " -> "
              << g.move(v, e, a1, a2) << "\n";
  for (int p = 1; p <= 2; ++p)
    for (int v = 0; v < g.num_nodes; ++v)
      for (int e = 0; e < g.num_env; ++e)
        out << "obs" << p << ": " << v << " " << e << " -> " << g.observe(p, v, e) << "\n";
  for (const auto& w : g.win)
    out << "win: F=" << text::format_set(w.f) << " Fp=" << text::format_set(w.fp) << "\n";
  return out.str();
}

namespace {

std::vector<int> ints_before_arrow(const text::LineReader& r, const std::string& rest,
                                   size_t count, int* target) {
  auto arrow = rest.find("->");
  if (arrow == std::string::npos) r.fail("expected '->'");
  std::istringstream lhs(rest.substr(0, arrow));
  std::vector<int> nums;
  std::string tok;
  while (lhs >> tok) nums.push_back(text::parse_int(tok));
  if (nums.size() != count) r.fail("wrong number of fields before '->'");
  *target = text::parse_int(rest.substr(arrow + 2));
  return nums;
}

}  // namespace

Game21 parse_game_text(std::string_view textv) {
  text::LineReader r(textv);
  if (!r.next() || r.line() != "game") r.fail("expected header 'game'");
  Game21 g;
  std::string rest;
  bool have_sizes = false, have_init = false;
  std::vector<bool> seen_delta, seen_obs[2];
  try {
    while (r.next()) {
      if (r.field("sizes", &rest)) {
        std::istringstream in(rest);
        std::string part;
        int got = 0;
        while (in >> part) {
          auto eq = part.find('=');
          if (eq == std::string::npos) r.fail("bad size entry '" + part + "'");
          std::string key = part.substr(0, eq);
          int value = text::parse_int(part.substr(eq + 1));
          int* slot = key == "nodes" ? &g.num_nodes
                      : key == "env" ? &g.num_env
                      : key == "a1"  ? &g.num_a1
                      : key == "a2"  ? &g.num_a2
                      : key == "obs1" ? &g.num_obs1
                      : key == "obs2" ? &g.num_obs2
                                      : nullptr;
          if (!slot) r.fail("unknown size key '" + key + "'");
          if (value < 1) r.fail("sizes must be positive");
          *slot = value;
          ++got;
        }
        if (got != 6) r.fail("sizes line needs nodes, env, a1, a2, obs1 and obs2");
        const size_t ve = static_cast<size_t>(g.num_nodes) * g.num_env;
        g.obs1.assign(ve, 0);
        g.obs2.assign(ve, 0);
        g.delta.assign(ve * g.num_a1 * g.num_a2, 0);
        seen_delta.assign(g.delta.size(), false);
        seen_obs[0].assign(ve, false);
        seen_obs[1].assign(ve, false);
        have_sizes = true;
      } else if (r.field("init", &rest)) {
        g.initial = text::parse_int(rest);
        have_init = true;
      } else if (r.field("trans", &rest)) {
        if (!have_sizes) r.fail("'sizes:' must come first");
        int t = 0;
        auto n = ints_before_arrow(r, rest, 4, &t);
        if (n[0] < 0 || n[0] >= g.num_nodes || n[1] < 0 || n[1] >= g.num_env ||
            n[2] < 0 || n[2] >= g.num_a1 || n[3] < 0 || n[3] >= g.num_a2 || t < 0 ||
            t >= g.num_nodes)
          r.fail("transition out of range");
        size_t idx = ((static_cast<size_t>(n[0]) * g.num_env + n[1]) * g.num_a1 + n[2]) *
                         g.num_a2 + n[3];
        if (seen_delta[idx]) r.fail("duplicate transition");
        seen_delta[idx] = true;
        g.delta[idx] = t;
      } else if (r.field("obs1", &rest) || r.field("obs2", &rest)) {
        if (!have_sizes) r.fail("'sizes:' must come first");
        int p = r.line()[3] - '0';
        int o = 0;
        auto n = ints_before_arrow(r, rest, 2, &o);
        int limit = p == 1 ? g.num_obs1 : g.num_obs2;
        if (n[0] < 0 || n[0] >= g.num_nodes || n[1] < 0 || n[1] >= g.num_env || o < 0 ||
            o >= limit)
          r.fail("observation entry out of range");
        size_t idx = static_cast<size_t>(n[0]) * g.num_env + n[1];
        if (seen_obs[p - 1][idx]) r.fail("duplicate observation entry");
        seen_obs[p - 1][idx] = true;
        (p == 1 ? g.obs1 : g.obs2)[idx] = o;
      } else if (r.field("win", &rest)) {
        if (!have_sizes) r.fail("'sizes:' must come first");
        auto fpos = rest.find("F="), fppos = rest.find("Fp=");
        if (fpos == std::string::npos || fppos == std::string::npos)
          r.fail("expected 'win: F={...} Fp={...}'");
        NodePair p{NodeSet(g.num_nodes, false), NodeSet(g.num_nodes, false)};
        for (int v : text::parse_list(rest.substr(fpos + 2, fppos - fpos - 2))) {
          if (v < 0 || v >= g.num_nodes) r.fail("node out of range");
          p.f[v] = true;
        }
        for (int v : text::parse_list(rest.substr(fppos + 3))) {
          if (v < 0 || v >= g.num_nodes) r.fail("node out of range");
          p.fp[v] = true;
        }
        g.win.push_back(std::move(p));
      } else {
        r.fail("unknown line '" + r.line() + "'");
      }
    }
  } catch (const Error& e) {
    std::string msg = e.what();
    if (msg.rfind("line ", 0) == 0) throw;
    r.fail(msg);
  }
  if (!have_sizes || !have_init) throw Error("game text lacks 'sizes:' or 'init:'");
  for (bool b : seen_delta)
    if (!b) throw Error("game text: missing transition");
  for (const auto& s : seen_obs)
    for (bool b : s)
      if (!b) throw Error("game text: missing observation entry");
  g.check();
  return g;
}

}  // namespace dynsynth
