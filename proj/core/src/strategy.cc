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

#include "dynsynth/strategy.h"

#include <map>
#include <sstream>

#include "dynsynth/model.h"
#include "dynsynth/text_format.h"

namespace dynsynth {

int StrategyMachine::act(std::span<const int> obs) const {
  int m = initial;
  for (int o : obs) m = next(m, o);
  return output[m];
}

void StrategyMachine::check() const {
  if (num_states < 1) throw Error("machine needs at least one state");
  if (num_obs < 1 || num_actions < 1) throw Error("machine alphabets must be nonempty");
  if (initial < 0 || initial >= num_states) throw Error("machine initial state out of range");
  if (update.size() != static_cast<size_t>(num_states) * num_obs ||
      output.size() != static_cast<size_t>(num_states))
    throw Error("machine tables have the wrong size");
  for (int t : update)
    if (t < 0 || t >= num_states) throw Error("machine update target out of range");
  for (int a : output)
    if (a < 0 || a >= num_actions) throw Error("machine action out of range");
}

StrategyMachine constant_machine(int num_obs, int num_actions, int action) {
  StrategyMachine m;
  m.num_obs = num_obs;
  m.num_actions = num_actions;
  m.update.assign(static_cast<size_t>(num_obs), 0);
  m.output = {action};
  m.check();
  return m;
}

StrategyMachine minimize_machine(const StrategyMachine& m) {
  m.check();
  std::vector<int> order{m.initial};
  std::vector<int> id(m.num_states, -1);
  id[m.initial] = 0;
  for (size_t i = 0; i < order.size(); ++i)
    for (int o = 0; o < m.num_obs; ++o) {
      int t = m.next(order[i], o);
      if (id[t] < 0) {
        id[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  const int n = static_cast<int>(order.size());
  std::vector<int> cls(n);
  for (int i = 0; i < n; ++i) cls[i] = m.output[order[i]];
  int count = 0;
  for (;;) {
    std::map<std::vector<int>, int> sig;
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) {
      std::vector<int> key{cls[i]};
      for (int o = 0; o < m.num_obs; ++o) key.push_back(cls[id[m.next(order[i], o)]]);
      next[i] = sig.emplace(std::move(key), static_cast<int>(sig.size())).first->second;
    }
    int c = static_cast<int>(sig.size());
    cls = std::move(next);
    if (c == count) break;
    count = c;
  }
  // Number classes in order of first appearance so the initial state is 0.
  std::vector<int> renum(count, -1);
  int k = 0;
  for (int i = 0; i < n; ++i)
    if (renum[cls[i]] < 0) renum[cls[i]] = k++;
  StrategyMachine out;
  out.num_states = count;
  out.initial = 0;
  out.num_obs = m.num_obs;
  out.num_actions = m.num_actions;
  out.update.assign(static_cast<size_t>(count) * m.num_obs, 0);
  out.output.assign(count, 0);
  for (int i = 0; i < n; ++i) {
    int c = renum[cls[i]];
    out.output[c] = m.output[order[i]];
    for (int o = 0; o < m.num_obs; ++o)
      out.update[static_cast<size_t>(c) * m.num_obs + o] =
          renum[cls[id[m.next(order[i], o)]]];
  }
  return out;
}

std::string machine_to_text(const StrategyMachine& m) {
  std::ostringstream out;
  out << "machine\nobs: " << m.num_obs << "\nactions: " << m.num_actions
      << "\nstates: " << m.num_states << "\ninit: " << m.initial << "\n";
  for (int s = 0; s < m.num_states; ++s)
    for (int o = 0; o < m.num_obs; ++o) out << s << " " << o << " -> " << m.next(s, o) << "\n";
  for (int s = 0; s < m.num_states; ++s) out << s << " -> " << m.output[s] << "\n";
  return out.str();
}

StrategyMachine parse_machine_text(std::string_view textv) {
  text::LineReader r(textv);
  if (!r.next() || r.line() != "machine") r.fail("expected header 'machine'");
  StrategyMachine m;
  m.num_states = 0;
  std::string rest;
  std::vector<bool> have_update, have_output;
  bool have_init = false;
  try {
    while (r.next()) {
      if (r.field("obs", &rest)) {
        m.num_obs = text::parse_int(rest);
      } else if (r.field("actions", &rest)) {
        m.num_actions = text::parse_int(rest);
      } else if (r.field("states", &rest)) {
        if (m.num_obs < 1 || m.num_actions < 1)
          r.fail("'obs:' and 'actions:' must precede 'states:'");
        m.num_states = text::parse_int(rest);
        if (m.num_states < 1) r.fail("need at least one state");
        m.update.assign(static_cast<size_t>(m.num_states) * m.num_obs, 0);
        m.output.assign(m.num_states, 0);
        have_update.assign(m.update.size(), false);
        have_output.assign(m.num_states, false);
      } else if (r.field("init", &rest)) {
        m.initial = text::parse_int(rest);
        have_init = true;
      } else {
        if (m.num_states < 1) r.fail("'states:' must come first");
        auto arrow = r.line().find("->");
        if (arrow == std::string::npos) r.fail("unknown line '" + r.line() + "'");
        std::istringstream lhs(r.line().substr(0, arrow));
        std::vector<int> nums;
        std::string tok;
        while (lhs >> tok) nums.push_back(text::parse_int(tok));
        int target = text::parse_int(r.line().substr(arrow + 2));
        if (nums.empty() || nums.size() > 2 || nums[0] < 0 || nums[0] >= m.num_states)
          r.fail("expected 'state obs -> state' or 'state -> action'");
        if (nums.size() == 2) {
          if (nums[1] < 0 || nums[1] >= m.num_obs) r.fail("observation out of range");
          if (target < 0 || target >= m.num_states) r.fail("state out of range");
          size_t idx = static_cast<size_t>(nums[0]) * m.num_obs + nums[1];
          if (have_update[idx]) r.fail("duplicate update");
          have_update[idx] = true;
          m.update[idx] = target;
        } else {
          if (target < 0 || target >= m.num_actions) r.fail("action out of range");
          if (have_output[nums[0]]) r.fail("duplicate output");
          have_output[nums[0]] = true;
          m.output[nums[0]] = target;
        }
      }
    }
  } catch (const Error& e) {
    std::string msg = e.what();
    if (msg.rfind("line ", 0) == 0) throw;
    r.fail(msg);
  }
  if (m.num_states < 1 || !have_init) throw Error("machine text lacks 'states:' or 'init:'");
  for (bool b : have_update)
    if (!b) throw Error("machine text: missing update line");
  for (bool b : have_output)
    if (!b) throw Error("machine text: missing output line");
  m.check();
  return m;
}

}  // namespace dynsynth
