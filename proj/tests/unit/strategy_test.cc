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

#include "doctest.h"
#include "dynsynth/strategy.h"
#include "support/game_oracles.h"

namespace dynsynth {
namespace {

using testing::Rng;

TEST_CASE("constant machines") {
  auto m = constant_machine(3, 2, 1);
  m.check();
  CHECK(m.num_states == 1);
  CHECK(m.act(std::vector<int>{0, 2, 1}) == 1);
  CHECK(m.act(std::vector<int>{}) == 1);
}

TEST_CASE("act feeds every observation before answering") {
  StrategyMachine m;
  m.num_states = 2;
  m.num_obs = 2;
  m.num_actions = 2;
  m.update = {0, 1, 1, 0};  // observation 1 toggles
  m.output = {0, 1};
  CHECK(m.act(std::vector<int>{1}) == 1);
  CHECK(m.act(std::vector<int>{1, 1}) == 0);
  CHECK(m.act(std::vector<int>{0, 1, 0}) == 1);
}

TEST_CASE("minimization preserves behavior") {
  Rng rng(601);
  for (int k = 0; k < 200; ++k) {
    auto m = testing::random_machine(rng, testing::uniform(rng, 1, 5), testing::uniform(rng, 1, 3),
                                     testing::uniform(rng, 1, 3));
    auto small = minimize_machine(m);
    small.check();
    CHECK(small.num_states <= m.num_states);
    for (int t = 0; t < 30; ++t) {
      std::vector<int> obs;
      for (int r = 0; r < testing::uniform(rng, 0, 8); ++r)
        obs.push_back(testing::uniform(rng, 0, m.num_obs - 1));
      CHECK(small.act(obs) == m.act(obs));
    }
    CHECK(minimize_machine(small).num_states == small.num_states);
  }
}

TEST_CASE("text round-trip and errors") {
  Rng rng(603);
  for (int k = 0; k < 50; ++k) {
    auto m = testing::random_machine(rng, testing::uniform(rng, 1, 4), 3, 2);
    const std::string text = machine_to_text(m);
    CHECK(machine_to_text(parse_machine_text(text)) == text);
  }
  CHECK_THROWS_AS(parse_machine_text("machine\nobs: 1\n"), Error);
  CHECK_THROWS_AS(parse_machine_text("automaton\n"), Error);
  StrategyMachine bad = constant_machine(2, 2, 0);
  bad.output[0] = 5;
  CHECK_THROWS_AS(bad.check(), Error);
}

}  // namespace
}  // namespace dynsynth
