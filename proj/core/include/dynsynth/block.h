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

#ifndef DYNSYNTH_BLOCK_H_
#define DYNSYNTH_BLOCK_H_

#include <string>
#include <vector>

#include "dynsynth/drwa.h"

namespace dynsynth {

// Accepts every word whose first letter has link <-, and every word a.w
// whose first letter a has link <-> and with w in L(a). Fresh initial state
// 0 is placed after the states of `a`, followed by an accepting sink.
// Requires the instance links to lie within {<->, <-}.
Drwa adjust_sync_start(const Drwa& a);

// Automaton over pairs (s, R): s follows the base automaton and R collects
// the base states visited since the last <-> letter (reset to {s'} on a
// <-> letter). Each base pair (F, F') becomes ({(s,R) : R meets F},
// {(s,R) : R meets F'}).
struct BlockAutomaton {
  Drwa automaton;
  std::vector<int> base_state;          // s per state
  std::vector<std::vector<int>> visited;  // R per state, sorted
};
BlockAutomaton build_block_automaton(const Drwa& base);

// "(s,{r1,r2})"
std::string format_block_state(const BlockAutomaton& b, int state);

// Evaluates the pairs of `b` on the states reached right before each <->
// letter (the run sampled at synchronization points). The lasso loop must
// contain a <-> letter.
bool sync_sampled_accepts(const BlockAutomaton& b,
                          const Lasso<ExecutionStep>& e);

}  // namespace dynsynth

#endif  // DYNSYNTH_BLOCK_H_
