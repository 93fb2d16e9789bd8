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
#include "dynsynth/block.h"
#include "support/oracles.h"

namespace dynsynth {
namespace {

using testing::Rng;

const ProblemInstance kSync = testing::binary_instance({Link::kLeft, Link::kBoth});

TEST_CASE("one-state automaton") {
  Drwa a = drwa_accept_all(kSync);
  auto b = build_block_automaton(a);
  REQUIRE(b.automaton.num_states == 2);
  CHECK(format_block_state(b, b.automaton.initial) == "(0,{})");
  for (int l = 0; l < kSync.num_letters(); ++l) {
    int t = b.automaton.next(b.automaton.initial, l);
    CHECK(format_block_state(b, t) == "(0,{0})");
    CHECK(b.automaton.next(t, l) == t);
  }
}

TEST_CASE("block states are sound and reset on <->") {
  Rng rng(301);
  for (int t = 0; t < 200; ++t) {
    Drwa a = testing::random_drwa(kSync, rng, testing::uniform(rng, 1, 5), 2);
    auto b = build_block_automaton(a);
    for (int x = 0; x < b.automaton.num_states; ++x) {
      const auto& r = b.visited[x];
      if (x != b.automaton.initial)
        CHECK(std::binary_search(r.begin(), r.end(), b.base_state[x]));
      for (int l = 0; l < kSync.num_letters(); ++l) {
        int y = b.automaton.next(x, l);
        CHECK(b.base_state[y] == a.next(b.base_state[x], l));
        if (kSync.letter_at(l).signal.link == Link::kBoth) CHECK(b.visited[y].size() == 1);
      }
    }
  }
}

TEST_CASE("sampling at synchronization points preserves acceptance") {
  Rng rng(307);
  int checked = 0;
  for (int t = 0; t < 1200; ++t) {
    Drwa a = testing::random_drwa(kSync, rng, testing::uniform(rng, 1, 5),
                                  testing::uniform(rng, 1, 2));
    auto b = build_block_automaton(a);
    auto e = testing::random_sync_lasso(kSync, rng, 4, 5);
    bool full = drwa_accepts_lasso(a, e);
    REQUIRE(testing::oracle_drwa_accepts(a, e) == full);
    REQUIRE(sync_sampled_accepts(b, e) == full);
    REQUIRE(drwa_accepts_lasso(b.automaton, e) == full);
    ++checked;
  }
  CHECK(checked >= 1000);
}

TEST_CASE("all-<-> lassos") {
  Rng rng(311);
  for (int t = 0; t < 100; ++t) {
    Drwa a = testing::random_drwa(kSync, rng, testing::uniform(rng, 1, 5), 2);
    auto b = build_block_automaton(a);
    auto e = testing::random_lasso(kSync, rng, 3, 3);
    for (auto& x : e.prefix) x.signal.link = Link::kBoth;
    for (auto& x : e.loop) x.signal.link = Link::kBoth;
    CHECK(sync_sampled_accepts(b, e) == drwa_accepts_lasso(a, e));
  }
}

TEST_CASE("sampling needs a <-> letter in the loop") {
  auto b = build_block_automaton(drwa_accept_all(kSync));
  Lasso<ExecutionStep> e{{}, {parse_step(kSync, "0 <- 0 / 0 0")}};
  CHECK_THROWS_AS(sync_sampled_accepts(b, e), Error);
  CHECK_THROWS_AS(build_block_automaton(drwa_accept_all(testing::binary_instance({Link::kRight}))),
                  Error);
}

TEST_CASE("sync-start adjustment") {
  Drwa rej = adjust_sync_start(drwa_reject_all(kSync));
  Rng rng(313);
  for (int t = 0; t < 200; ++t) {
    auto e = testing::random_lasso(kSync, rng, 3, 3);
    const auto& first = e.prefix.empty() ? e.loop.front() : e.prefix.front();
    CHECK(drwa_accepts_lasso(rej, e) == (first.signal.link == Link::kLeft));
  }
  for (int t = 0; t < 200; ++t) {
    Drwa a = testing::random_drwa(kSync, rng, testing::uniform(rng, 1, 5), 2);
    Drwa adj = adjust_sync_start(a);
    auto e = testing::random_lasso(kSync, rng, 3, 3);
    e.prefix.insert(e.prefix.begin(), testing::random_step(kSync, rng));
    e.prefix.front().signal.link = Link::kBoth;
    Lasso<ExecutionStep> tail = e;
    tail.prefix.erase(tail.prefix.begin());
    CHECK(drwa_accepts_lasso(adj, e) == drwa_accepts_lasso(a, tail));
  }
  CHECK_THROWS_AS(adjust_sync_start(drwa_accept_all(testing::binary_instance({Link::kRight}))),
                  Error);
}

}  // namespace
}  // namespace dynsynth
