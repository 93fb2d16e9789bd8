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

#ifndef DYNSYNTH_STRATEGY_H_
#define DYNSYNTH_STRATEGY_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dynsynth {

// Moore-style finite-memory strategy over observations 0..num_obs-1 and
// actions 0..num_actions-1. The action after observations o_0..o_r is
// output[update*(initial, o_0..o_r)].
struct StrategyMachine {
  int num_states = 1;
  int initial = 0;
  int num_obs = 0;
  int num_actions = 0;
  std::vector<int> update;  // update[m * num_obs + o]
  std::vector<int> output;  // output[m]

  int next(int m, int o) const {
    return update[static_cast<size_t>(m) * num_obs + o];
  }
  // Action after feeding the whole sequence.
  int act(std::span<const int> obs) const;
  void check() const;
};

// Same object read as a generator of an action-labeled tree whose
// directions are observations: node o_0..o_r carries the output of the
// state reached on it.
using RegularTree = StrategyMachine;

StrategyMachine constant_machine(int num_obs, int num_actions, int action);
// Keeps states reachable from the initial one and merges states with equal
// behavior.
StrategyMachine minimize_machine(const StrategyMachine& m);

// "machine", then "obs:", "actions:", "states:", "init:" fields followed by
// "state obs -> state" and "state -> action" lines.
std::string machine_to_text(const StrategyMachine& m);
StrategyMachine parse_machine_text(std::string_view text);

}  // namespace dynsynth

#endif  // DYNSYNTH_STRATEGY_H_
