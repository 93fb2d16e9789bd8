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
#include "dynsynth/reduction.h"
#include "dynsynth/solver.h"
#include "dynsynth/synth.h"
#include "support/game_oracles.h"

namespace dynsynth {
namespace {

using testing::Rng;

Game21 small_game(Rng& rng) { return testing::random_game(rng, 3, 2, 2, 2, 2); }

Game21 pipeline_game(const ProblemInstance& inst, const std::string& formula_file) {
  SynthOptions opt;
  opt.engine = Engine::kBounded;
  opt.bounded_candidates = 1;
  return synthesize(inst, parse_ltl(inst, testing::read_data_file(formula_file)), opt).game;
}

// Player machine answering `special` outputs to the dummy signal and
// `usual` otherwise; observations come from the game's numbering.
StrategyMachine dummy_aware(const Game21& g, int p, const ProblemInstance& target, int usual,
                            int special) {
  const int num_obs = p == 1 ? g.num_obs1 : g.num_obs2;
  StrategyMachine m;
  m.num_states = 2;
  m.num_obs = num_obs;
  m.num_actions = p == 1 ? g.num_a1 : g.num_a2;
  m.output = {usual, special};
  m.update.assign(2 * num_obs, 0);
  const int dummy = static_cast<int>(target.x1.size()) - 1;
  const int e = target.signal_index({dummy, Link::kBoth, dummy});
  for (int v = 0; v < g.num_nodes; ++v) {
    const int o = g.observe(p, v, e);
    m.update[o] = m.update[num_obs + o] = 1;
  }
  return m;
}

TEST_CASE("one-node game") {
  Game21 g = parse_game_text(testing::read_data_file("trivial_game.txt"));
  auto r = solve_21(g);
  REQUIRE(r.realizable);
  CHECK(r.profile->g1.num_states == 1);
  CHECK(r.profile->g2.num_states == 1);
  Game21 lose = g;
  lose.win = {NodePair{NodeSet{false}, NodeSet{true}}};
  CHECK_FALSE(solve_21(lose).realizable);
  CHECK_FALSE(best_response_player1(lose, constant_machine(1, 1, 0)).wins);
}

TEST_CASE("parity expansion keeps player 2's observations") {
  Rng rng(801);
  for (int k = 0; k < 100; ++k) {
    Game21 g = testing::random_game(rng, 4, 3, 2, 2, 3);
    auto pg = to_parity_game(g);
    CHECK(pg.game.obs1_is_identity());
    CHECK(pg.game.num_obs2 == g.num_obs2);
    for (int x = 0; x < pg.game.num_nodes; ++x)
      for (int e = 0; e < g.num_env; ++e) {
        CHECK(pg.game.observe(2, x, e) == g.observe(2, pg.node_of[x], e));
        for (int a1 = 0; a1 < g.num_a1; ++a1)
          for (int a2 = 0; a2 < g.num_a2; ++a2)
            CHECK(pg.node_of[pg.game.move(x, e, a1, a2)] == g.move(pg.node_of[x], e, a1, a2));
      }
  }
}

TEST_CASE("best response agrees with positional enumeration") {
  Rng rng(803);
  int wins = 0;
  for (int k = 0; k < 200; ++k) {
    Game21 g = small_game(rng);
    auto g2 = testing::random_machine(rng, testing::uniform(rng, 1, 2), g.num_obs2, g.num_a2);
    auto br = best_response_player1(g, g2);
    CHECK(br.wins == testing::oracle_best_response_wins(g, g2));
    if (br.wins) {
      ++wins;
      REQUIRE(br.g1.has_value());
      CHECK(testing::oracle_profile_wins(g, *br.g1, g2));
    }
  }
  CHECK(wins > 20);
  CHECK(wins < 180);
}

TEST_CASE("tree automaton accepts exactly the strategies player 1 can complete") {
  Rng rng(807);
  for (int k = 0; k < 100; ++k) {
    Game21 g = testing::random_game(rng, 3, 2, 2, 2, 3);
    Apt a = build_apt(to_parity_game(g));
    for (int s = 0; s < 3; ++s) {
      auto g2 = testing::random_machine(rng, testing::uniform(rng, 1, 3), g.num_obs2, g.num_a2);
      CHECK(apt_accepts_regular_tree(a, g2) == best_response_player1(g, g2).wins);
    }
  }
}

TEST_CASE("losing plays are genuine") {
  Rng rng(809);
  for (int k = 0; k < 200; ++k) {
    Game21 g = small_game(rng);
    auto g1 = testing::random_machine(rng, testing::uniform(rng, 1, 2), g.num_obs1, g.num_a1);
    auto g2 = testing::random_machine(rng, testing::uniform(rng, 1, 2), g.num_obs2, g.num_a2);
    auto bad = find_losing_play(g, g1, g2);
    CHECK(bad.has_value() == !testing::oracle_profile_wins(g, g1, g2));
  }
}

TEST_CASE("complete and bounded engines agree") {
  Rng rng(811);
  int games = 0, positive = 0, negative = 0;
  for (int k = 0; k < 120; ++k) {
    Game21 g = small_game(rng);
    auto complete = solve_21(g);
    auto b2 = bounded_search(g, 2);
    REQUIRE(b2.exhausted);
    if (b2.profile) {
      CHECK(complete.realizable);
      CHECK(testing::oracle_profile_wins(g, b2.profile->g1, b2.profile->g2));
    }
    if (complete.realizable) {
      ++positive;
      CHECK(testing::oracle_profile_wins(g, complete.profile->g1, complete.profile->g2));
    } else {
      ++negative;
      auto b3 = bounded_search(g, 3);
      CHECK(b3.exhausted);
      CHECK_FALSE(b3.profile.has_value());
    }
    ++games;
  }
  CHECK(games >= 100);
  CHECK(positive >= 10);
  CHECK(negative >= 10);
}

TEST_CASE("bounded search with memory one") {
  Rng rng(813);
  for (int k = 0; k < 100; ++k) {
    Game21 g = small_game(rng);
    auto b = bounded_search(g, 1);
    bool any = false;
    for (int a = 0; a < g.num_a2; ++a)
      any = any || testing::oracle_best_response_wins(g, constant_machine(g.num_obs2, g.num_a2, a));
    CHECK(b.profile.has_value() == any);
  }
  CHECK_THROWS_AS(bounded_search(small_game(rng), 0), Error);
}

TEST_CASE("always answering 1 wins the game of the output-agreement formula") {
  auto inst = testing::binary_instance({Link::kLeft, Link::kBoth});
  Game21 g = pipeline_game(inst, "phi1.ltl");
  auto br = best_response_player1(g, constant_machine(g.num_obs2, g.num_a2, 1));
  CHECK(br.wins);
  CHECK(profile_wins(g, constant_machine(g.num_obs1, g.num_a1, 1),
                     constant_machine(g.num_obs2, g.num_a2, 1)));
  CHECK(solve_21(g).realizable);
  CHECK(bounded_search(g, 1).profile.has_value());
}

TEST_CASE("games of the example formulas over <- and ->") {
  auto inst = parse_instance_json(testing::read_data_file("binary_lr.json"));
  const auto target = reduced_instance(inst);
  const int one = target.y_index(1, "1"), hash = target.y_index(1, "#");

  Game21 g1 = pipeline_game(inst, "phi1.ltl");
  auto p1 = dummy_aware(g1, 1, target, one, hash);
  auto p2 = dummy_aware(g1, 2, target, one, hash);
  CHECK(best_response_player1(g1, p2).wins);
  CHECK(profile_wins(g1, p1, p2));
  // Outputs 1 on dummy rounds leave the translated language.
  CHECK_FALSE(best_response_player1(g1, constant_machine(g1.num_obs2, g1.num_a2, one)).wins);
  auto r1 = solve_21(g1);
  CHECK(r1.realizable);
  // Constant answers cannot mark the dummy rounds.
  auto b1 = bounded_search(g1, 1);
  CHECK(b1.exhausted);
  CHECK_FALSE(b1.profile.has_value());

  Game21 g12 = pipeline_game(inst, "phi1_phi2.ltl");
  auto r12 = solve_21(g12);
  CHECK_FALSE(r12.realizable);
  CHECK_FALSE(r12.losing_states.empty());
  auto m1 = bounded_search(g12, 1);
  CHECK(m1.exhausted);
  CHECK_FALSE(m1.profile.has_value());
  auto m2 = bounded_search(g12, 2, 20'000);
  CHECK_FALSE(m2.profile.has_value());
}

}  // namespace
}  // namespace dynsynth
