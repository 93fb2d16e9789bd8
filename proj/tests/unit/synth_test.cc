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
#include "dynsynth/synth.h"
#include "support/oracles.h"

namespace dynsynth {
namespace {

using testing::Rng;

Ltl load(const ProblemInstance& inst, const std::string& file) {
  return parse_ltl(inst, testing::read_data_file(file));
}

// Runs the algorithm on random lassos and checks the formula directly.
void spot_check(const SynthesizedAlgorithm& alg, const Ltl& f, Rng& rng, int count) {
  for (int k = 0; k < count; ++k) {
    auto in = testing::random_lasso(alg.machine.inst, rng, 4, 4);
    Lasso<Signal> w;
    for (const auto& s : in.prefix) w.prefix.push_back(s.signal);
    for (const auto& s : in.loop) w.loop.push_back(s.signal);
    CHECK(testing::oracle_eval(f, run_machine(alg.machine, w)));
  }
}

std::vector<std::vector<Link>> nonempty_subsets(const std::vector<Link>& links) {
  std::vector<std::vector<Link>> out;
  for (unsigned mask = 1; mask < (1u << links.size()); ++mask) {
    std::vector<Link> s;
    for (size_t i = 0; i < links.size(); ++i)
      if (mask & (1u << i)) s.push_back(links[i]);
    out.push_back(s);
  }
  return out;
}

TEST_CASE("output agreement is realizable on every decidable model") {
  Rng rng(1101);
  const auto models = nonempty_subsets({Link::kLeft, Link::kRight, Link::kBoth});
  CHECK(models.size() == 7);
  for (const auto& links : models) {
    auto inst = testing::binary_instance(links);
    Ltl f = load(inst, "phi1.ltl");
    auto r = synthesize(inst, f);
    REQUIRE(r.verdict == Verdict::kRealizable);
    REQUIRE(r.algorithm.has_value());
    CHECK_FALSE(verify_profile(r.algorithm->machine, spec_automaton(inst, f)).has_value());
    spot_check(*r.algorithm, f, rng, 50);
  }
}

TEST_CASE("models with the empty link are rejected") {
  const auto models = nonempty_subsets({Link::kEmpty, Link::kLeft, Link::kRight, Link::kBoth});
  int rejected = 0;
  for (const auto& links : models) {
    auto inst = testing::binary_instance(links);
    if (!inst.has_link(Link::kEmpty)) continue;
    ++rejected;
    CHECK_THROWS_WITH_AS(synthesize(inst, parse_ltl(inst, "G (out1=1 <-> out2=1)")),
                         doctest::Contains("empty link"), Error);
    CHECK_THROWS_AS(require_decidable(inst), Error);
  }
  CHECK(rejected == 8);
}

TEST_CASE("information flow decides copying formulas") {
  Rng rng(1103);
  auto left = testing::binary_instance({Link::kLeft});
  Ltl copy1 = parse_ltl(left, "G (out1=1 <-> in2=1)");
  auto r = synthesize(left, copy1);
  REQUIRE(r.verdict == Verdict::kRealizable);
  spot_check(*r.algorithm, copy1, rng, 100);
  CHECK(synthesize(left, parse_ltl(left, "G (out2=1 <-> in1=1)")).verdict ==
        Verdict::kUnrealizable);

  auto both = testing::binary_instance({Link::kBoth});
  Ltl swap = parse_ltl(both, "G ((out2=1 <-> in1=1) & (out1=1 <-> in2=1))");
  auto s = synthesize(both, swap);
  REQUIRE(s.verdict == Verdict::kRealizable);
  spot_check(*s.algorithm, swap, rng, 100);
}

TEST_CASE("example formulas over <- and ->") {
  Rng rng(1107);
  auto inst = parse_instance_json(testing::read_data_file("binary_lr.json"));
  Ltl psi = load(inst, "psi.ltl");
  auto r = synthesize(inst, psi);
  REQUIRE(r.verdict == Verdict::kRealizable);
  spot_check(*r.algorithm, psi, rng, 100);
  CHECK(synthesize(inst, load(inst, "phi1_phi2.ltl")).verdict == Verdict::kUnrealizable);
}

TEST_CASE("automaton input") {
  auto inst = testing::binary_instance({Link::kLeft, Link::kRight});
  Ltl f = load(inst, "phi1.ltl");
  auto r = synthesize(spec_automaton(inst, f));
  REQUIRE(r.verdict == Verdict::kRealizable);
  Rng rng(1109);
  spot_check(*r.algorithm, f, rng, 50);
  CHECK_THROWS_AS(
      synthesize(drwa_accept_all(testing::binary_instance({Link::kEmpty, Link::kLeft}))), Error);
}

TEST_CASE("engines") {
  auto inst = testing::binary_instance({Link::kLeft, Link::kBoth});
  Ltl f = load(inst, "phi1.ltl");
  for (Engine e : {Engine::kBounded, Engine::kBoth}) {
    SynthOptions opt;
    opt.engine = e;
    auto r = synthesize(inst, f, opt);
    CHECK(r.verdict == Verdict::kRealizable);
    CHECK(r.bounded.has_value());
    CHECK(r.complete.has_value() == (e == Engine::kBoth));
  }
  SynthOptions bounded;
  bounded.engine = Engine::kBounded;
  auto u = synthesize(inst, parse_ltl(inst, "G (out2=1 <-> in1=1) & G (out2=0 <-> in1=1)"),
                      bounded);
  CHECK(u.verdict == Verdict::kUnknown);
  CHECK_FALSE(u.algorithm.has_value());
  CHECK(format_report(u).find("UNKNOWN") != std::string::npos);
}

TEST_CASE("report lists the stages") {
  auto inst = testing::binary_instance({Link::kLeft, Link::kRight});
  auto r = synthesize(inst, load(inst, "phi1.ltl"));
  const std::string text = format_report(r);
  CHECK(text.rfind("verdict: REALIZABLE\n", 0) == 0);
  for (const char* stage : {"specification automaton", "reduced automaton", "game nodes",
                            "nondeterministic tree automaton states", "algorithm machine states"})
    CHECK(text.find(stage) != std::string::npos);
  CHECK(text.find("verification: ok") != std::string::npos);
}

}  // namespace
}  // namespace dynsynth
