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
#include "dynsynth/drwa.h"
#include "dynsynth/ltl.h"
#include "dynsynth/nba.h"
#include "dynsynth/safra.h"
#include "support/oracles.h"

namespace dynsynth {
namespace {

using testing::Rng;

const ProblemInstance kLr = testing::binary_instance({Link::kLeft, Link::kRight});

TEST_CASE("DRWA acceptance agrees with the unrolling oracle") {
  Rng rng(41);
  for (int t = 0; t < 400; ++t) {
    Drwa a = testing::random_drwa(kLr, rng, testing::uniform(rng, 1, 6),
                                  testing::uniform(rng, 0, 3));
    auto e = testing::random_lasso(kLr, rng, 3, 4);
    REQUIRE(drwa_accepts_lasso(a, e) == testing::oracle_drwa_accepts(a, e));
  }
}

TEST_CASE("NBA lasso acceptance agrees with the loop-relation oracle") {
  Rng rng(43);
  for (int t = 0; t < 400; ++t) {
    Nba a = testing::random_nba(kLr, rng, testing::uniform(rng, 1, 5));
    auto e = testing::random_lasso(kLr, rng, 3, 3);
    REQUIRE(nba_accepts_lasso(a, e) == testing::oracle_nba_accepts(a, e));
  }
}

TEST_CASE("LTL translation matches formula evaluation") {
  Rng rng(47);
  for (int t = 0; t < 150; ++t) {
    auto f = testing::random_formula(kLr, rng, testing::uniform(rng, 1, 6));
    CAPTURE(to_string(kLr, f));
    Nba a = ltl_to_nba(kLr, f);
    REQUIRE_NOTHROW(a.check());
    for (int k = 0; k < 25; ++k) {
      auto e = testing::random_lasso(kLr, rng, 2, 3);
      REQUIRE(nba_accepts_lasso(a, e) == eval_ltl(f, e));
      REQUIRE(testing::oracle_nba_accepts(a, e) == eval_ltl(f, e));
    }
  }
}

TEST_CASE("NBA reduction preserves the language") {
  Rng rng(53);
  for (int t = 0; t < 200; ++t) {
    Nba a = testing::random_nba(kLr, rng, testing::uniform(rng, 1, 5));
    Nba r = reduce_nba(a);
    CHECK(r.num_states <= std::max(a.num_states, 1));
    for (int k = 0; k < 20; ++k) {
      auto e = testing::random_lasso(kLr, rng, 2, 3);
      REQUIRE(nba_accepts_lasso(r, e) == testing::oracle_nba_accepts(a, e));
    }
  }
}

TEST_CASE("determinization agrees with the NBA on random automata") {
  Rng rng(59);
  for (int t = 0; t < 200; ++t) {
    Nba a = testing::random_nba(kLr, rng, testing::uniform(rng, 1, 4));
    Drwa d = determinize_safra(a);
    REQUIRE_NOTHROW(d.check());
    for (int k = 0; k < 25; ++k) {
      auto e = testing::random_lasso(kLr, rng, 3, 3);
      REQUIRE(drwa_accepts_lasso(d, e) == testing::oracle_nba_accepts(a, e));
    }
  }
}

TEST_CASE("formula, NBA and DRWA agree") {
  Rng rng(61);
  std::vector<std::string> texts = {"F G in1=1", "G F in1=1 & G F in2=0",
                                    "F G (in1=1 | link=<-)", "G (in1=1 -> F out2=1)",
                                    "(G F in1=1 -> G F out1=1) & F G !out2=0"};
  for (int t = 0; t < 40; ++t)
    texts.push_back(to_string(kLr, testing::random_formula(kLr, rng, testing::uniform(rng, 1, 5))));
  for (const auto& text : texts) {
    CAPTURE(text);
    auto f = parse_ltl(kLr, text);
    Nba n = ltl_to_nba(kLr, f);
    Drwa d = determinize_safra(n);
    Drwa m = normalize_drwa(d);
    CHECK(m.num_states <= d.num_states + 2);
    for (int k = 0; k < 40; ++k) {
      auto e = testing::random_lasso(kLr, rng, 3, 4);
      bool expected = eval_ltl(f, e);
      REQUIRE(nba_accepts_lasso(n, e) == expected);
      REQUIRE(drwa_accepts_lasso(d, e) == expected);
      REQUIRE(testing::oracle_drwa_accepts(m, e) == expected);
    }
  }
}

TEST_CASE("normalization preserves language and produces priorities") {
  Rng rng(67);
  for (int t = 0; t < 300; ++t) {
    Drwa a = testing::random_drwa(kLr, rng, testing::uniform(rng, 1, 6),
                                  testing::uniform(rng, 0, 3));
    ParityAutomaton p = drwa_to_parity(a);
    const Drwa& m = p.automaton;
    REQUIRE_NOTHROW(m.check());
    REQUIRE(static_cast<int>(p.priority.size()) == m.num_states);
    REQUIRE(drwa_priorities(m).has_value());
    Drwa again = normalize_drwa(m);
    CHECK(again.num_states == m.num_states);
    for (int k = 0; k < 25; ++k) {
      auto e = testing::random_lasso(kLr, rng, 3, 4);
      bool expected = testing::oracle_drwa_accepts(a, e);
      REQUIRE(testing::oracle_drwa_accepts(m, e) == expected);
      // The parity view of the same run.
      NodeSet inf = drwa_inf_set(m, e);
      int lo = 1 << 30;
      for (int s = 0; s < m.num_states; ++s)
        if (inf[s]) lo = std::min(lo, p.priority[s]);
      REQUIRE(parity_even_wins(lo) == expected);
    }
  }
}

TEST_CASE("trivial languages normalize to one state") {
  CHECK(normalize_drwa(drwa_accept_all(kLr)).num_states == 1);
  CHECK(normalize_drwa(drwa_reject_all(kLr)).num_states == 1);
  auto f = parse_ltl(kLr, "G F in1=1 | F G !in1=1");
  CHECK(normalize_drwa(determinize_safra(ltl_to_nba(kLr, f))).num_states == 1);
}

TEST_CASE("union") {
  Rng rng(71);
  for (int t = 0; t < 200; ++t) {
    Drwa a = testing::random_drwa(kLr, rng, testing::uniform(rng, 1, 4), 2);
    Drwa b = testing::random_drwa(kLr, rng, testing::uniform(rng, 1, 4), 2);
    Drwa u = drwa_union(a, b);
    for (int k = 0; k < 20; ++k) {
      auto e = testing::random_lasso(kLr, rng, 3, 3);
      REQUIRE(testing::oracle_drwa_accepts(u, e) ==
              (testing::oracle_drwa_accepts(a, e) || testing::oracle_drwa_accepts(b, e)));
    }
  }
}

TEST_CASE("text formats round-trip") {
  Rng rng(73);
  for (int t = 0; t < 50; ++t) {
    Drwa a = testing::random_drwa(kLr, rng, testing::uniform(rng, 1, 4), 2);
    std::string text = drwa_to_text(a);
    Drwa b = parse_drwa_text(text);
    CHECK(drwa_to_text(b) == text);
    Nba n = testing::random_nba(kLr, rng, testing::uniform(rng, 1, 4));
    std::string ntext = nba_to_text(n);
    CHECK(nba_to_text(parse_nba_text(ntext)) == ntext);
  }
  CHECK_THROWS_AS(parse_drwa_text("drwa\nstates: 1\n"), Error);
  std::string partial = drwa_to_text(drwa_accept_all(kLr));
  partial.erase(partial.find("trans:"), partial.find('\n', partial.find("trans:")) -
                                            partial.find("trans:") + 1);
  CHECK_THROWS_AS(parse_drwa_text(partial), Error);
}

TEST_CASE("the reference formulas translate to small automata") {
  for (const char* name : {"phi1.ltl", "phi1_phi2.ltl", "psi.ltl"}) {
    CAPTURE(name);
    auto f = parse_ltl(kLr, testing::read_data_file(name));
    Drwa d = normalize_drwa(determinize_safra(ltl_to_nba(kLr, f)));
    CHECK(d.num_states <= 64);
    Rng rng(79);
    for (int k = 0; k < 200; ++k) {
      auto e = testing::random_lasso(kLr, rng, 3, 4);
      REQUIRE(drwa_accepts_lasso(d, e) == eval_ltl(f, e));
    }
  }
}

}  // namespace
}  // namespace dynsynth
