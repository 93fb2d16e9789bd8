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

#ifndef DYNSYNTH_TESTS_SUPPORT_ORACLES_H_
#define DYNSYNTH_TESTS_SUPPORT_ORACLES_H_

// Random generators and independent reference implementations used as test
// oracles. Nothing here shares code paths with the library beyond the data
// types.

#include <random>
#include <string>
#include <vector>

#include "dynsynth/drwa.h"
#include "dynsynth/ltl.h"
#include "dynsynth/model.h"
#include "dynsynth/nba.h"

namespace dynsynth::testing {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);  // inclusive bounds
bool coin(Rng& rng, double p = 0.5);

ProblemInstance binary_instance(std::vector<Link> links);
std::string read_data_file(const std::string& name);

Signal random_signal(const ProblemInstance& inst, Rng& rng);
Word random_word(const ProblemInstance& inst, Rng& rng, int length);
ExecutionStep random_step(const ProblemInstance& inst, Rng& rng);
Lasso<ExecutionStep> random_lasso(const ProblemInstance& inst, Rng& rng,
                                  int max_prefix, int max_loop);
// Same with a <-> letter forced somewhere in the loop.
Lasso<ExecutionStep> random_sync_lasso(const ProblemInstance& inst, Rng& rng,
                                       int max_prefix, int max_loop);

// Random formula with exactly `ops` operators (atoms are free).
Ltl random_formula(const ProblemInstance& inst, Rng& rng, int ops);

// Satisfaction at absolute index i, by walking forward along the unrolled
// word; unbounded operators look ahead one full lasso period past the stem.
bool oracle_eval(const Ltl& f, const Lasso<ExecutionStep>& e, long long i = 0);

// View by direct visibility: the other process's input at round j is known
// at round i iff some round k in [j, i] has a link revealing it.
View oracle_view(int p, const Word& w);

// Lasso acceptance through the relation "one loop traversal" between NBA
// states, iterated |Q|+1 times after the prefix.
bool oracle_nba_accepts(const Nba& a, const Lasso<ExecutionStep>& e);

// Rabin acceptance by running the automaton |Q|+1 loop copies past the
// prefix and collecting the states seen during |Q| further copies.
bool oracle_drwa_accepts(const Drwa& a, const Lasso<ExecutionStep>& e);

// Random complete DRWA with `states` states and `pairs` random pairs.
Drwa random_drwa(const ProblemInstance& inst, Rng& rng, int states, int pairs);

// Random NBA with up to `states` states.
Nba random_nba(const ProblemInstance& inst, Rng& rng, int states);

}  // namespace dynsynth::testing

#endif  // DYNSYNTH_TESTS_SUPPORT_ORACLES_H_
