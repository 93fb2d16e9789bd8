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

#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

#include "dynsynth/block.h"
#include "dynsynth/nba.h"
#include "dynsynth/parity.h"
#include "dynsynth/reduction.h"
#include "dynsynth/safra.h"
#include "dynsynth/synth.h"

namespace dynsynth {
namespace {

std::string data_file(const std::string& name) {
  std::ifstream in(std::string(DYNSYNTH_DATA_DIR) + "/" + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

const ProblemInstance& lr_instance() {
  static const ProblemInstance inst = parse_instance_json(data_file("binary_lr.json"));
  return inst;
}

const char* const kFormulaFiles[] = {"phi1.ltl", "phi1_phi2.ltl", "psi.ltl"};

void BM_LtlToDrwa(benchmark::State& state) {
  const auto& inst = lr_instance();
  Ltl f = parse_ltl(inst, data_file(kFormulaFiles[state.range(0)]));
  long long states = 0;
  for (auto _ : state) {
    Drwa d = spec_automaton(inst, f);
    states = d.num_states;
    benchmark::DoNotOptimize(d);
  }
  state.counters["drwa_states"] = static_cast<double>(states);
  state.SetLabel(kFormulaFiles[state.range(0)]);
}
BENCHMARK(BM_LtlToDrwa)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Synthesize(benchmark::State& state) {
  const auto& inst = lr_instance();
  Ltl f = parse_ltl(inst, data_file(kFormulaFiles[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(inst, f));
  state.SetLabel(kFormulaFiles[state.range(0)]);
}
BENCHMARK(BM_Synthesize)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_Translate(benchmark::State& state) {
  auto inst = make_instance({"0", "1"}, {"0", "1"}, {"0", "1"}, {"0", "1"},
                            {Link::kLeft, Link::kRight, Link::kBoth});
  RoleTransducer t(inst);
  Word w = random_schedule(inst, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(translate(t, w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Translate)->RangeMultiplier(10)->Range(100, 100000);

void BM_BlockAutomaton(benchmark::State& state) {
  auto inst = with_links(lr_instance(), {Link::kLeft, Link::kBoth});
  Drwa d = spec_automaton(inst, parse_ltl(inst, data_file("phi1_phi2.ltl")));
  state.counters["base_states"] = static_cast<double>(d.num_states);
  for (auto _ : state) benchmark::DoNotOptimize(build_block_automaton(d));
}
BENCHMARK(BM_BlockAutomaton)->Unit(benchmark::kMillisecond);

void BM_SolveParity(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const int n = static_cast<int>(state.range(0));
  ParityArena a;
  for (int v = 0; v < n; ++v)
    a.add_node(static_cast<int>(rng() % 6), static_cast<int>(rng() % 2));
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < 3; ++k) a.succ[v].push_back(static_cast<int>(rng() % n));
  for (auto _ : state) benchmark::DoNotOptimize(solve_parity(a));
}
BENCHMARK(BM_SolveParity)->RangeMultiplier(4)->Range(64, 16384);

}  // namespace
}  // namespace dynsynth

BENCHMARK_MAIN();
