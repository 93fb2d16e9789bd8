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

#include "dynsynth/safra.h"

#include <map>
#include <unordered_map>

#include "safra_core.h"

namespace dynsynth {

Drwa determinize_safra(const Nba& n) {
  n.check();
  const int L = n.num_letters();
  // Letters with identical transition columns behave identically.
  std::vector<int> letter_class(L);
  std::vector<int> class_rep;
  {
    std::map<std::vector<std::vector<int>>, int> cols;
    for (int l = 0; l < L; ++l) {
      std::vector<std::vector<int>> col(n.num_states);
      for (int q = 0; q < n.num_states; ++q) col[q] = n.succ[q][l];
      auto it = cols.emplace(std::move(col), static_cast<int>(cols.size())).first;
      letter_class[l] = it->second;
      if (it->second == static_cast<int>(class_rep.size())) class_rep.push_back(l);
    }
  }
  const int C = static_cast<int>(class_rep.size());
  detail::SafraStepper det(n.num_states, n.accepting);
  std::unordered_map<std::vector<int>, int, detail::VecHash> index;
  std::vector<std::vector<int>> keys;  // tree code followed by priority
  std::vector<int> priority;
  auto state_of = [&](std::vector<int> code, int prio) {
    code.push_back(prio);
    auto it = index.find(code);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(keys.size());
    if (id >= kSafraStateLimit) throw Error("determinization exceeds the state limit");
    index.emplace(code, id);
    keys.push_back(std::move(code));
    priority.push_back(prio);
    return id;
  };
  Drwa out;
  out.inst = n.inst;
  out.initial = state_of(det.initial_code(n.initial), det.neutral());
  std::vector<int> class_delta;
  for (size_t s = 0; s < keys.size(); ++s) {
    std::vector<int> code(keys[s].begin(), keys[s].end() - 1);
    for (int c = 0; c < C; ++c) {
      const int letter = class_rep[c];
      detail::StepResult r = det.step(code, [&](int q, std::vector<int>& out) {
        const auto& s = n.succ[q][letter];
        out.insert(out.end(), s.begin(), s.end());
      });
      class_delta.push_back(state_of(std::move(r.code), r.priority));
    }
  }
  out.num_states = static_cast<int>(keys.size());
  out.delta.resize(static_cast<size_t>(out.num_states) * L);
  for (int s = 0; s < out.num_states; ++s)
    for (int l = 0; l < L; ++l)
      out.delta[static_cast<size_t>(s) * L + l] =
          class_delta[static_cast<size_t>(s) * C + letter_class[l]];
  out.pairs = priorities_to_pairs(priority);
  return out;
}

}  // namespace dynsynth
