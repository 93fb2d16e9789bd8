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

#ifndef DYNSYNTH_EXTRACT_H_
#define DYNSYNTH_EXTRACT_H_

#include "dynsynth/game.h"
#include "dynsynth/model.h"
#include "dynsynth/solver.h"
#include "dynsynth/verify.h"

namespace dynsynth {

// Instance with links {<-, <->} on which the game for `inst` is played:
// the role-reduced alphabets when `inst` uses ->, the original alphabets
// otherwise. Rejects the empty link.
ProblemInstance sync_instance(const ProblemInstance& inst);

// Signal fed to a game built by adjust_sync_start before the first real
// round: the first input symbols of both processes over <->.
Signal sync_start_signal();

// Distributed algorithm over `inst` obtained from a winning profile of a
// game built by build_sync_game(adjust_sync_start(A)) with A over
// sync_instance(inst). Process p replays its view: it runs the whole game
// on the fully known prefix (both strategies, the node and the role
// transducer), then feeds the strategy of player 2 with its own inputs for
// the remaining rounds, which it answers in the role of the observing
// player. Outputs are mapped back through the role swap; dummy rounds
// produce no output. The machine form tracks (transducer state, node,
// memory of both strategies). Throws Error when the strategies answer a
// dummy round with something other than the dummy outputs or emit symbols
// of the wrong process.
SynthesizedAlgorithm extract_algorithm(const ProblemInstance& inst, const Game21& g,
                                       const Profile& profile);

}  // namespace dynsynth

#endif  // DYNSYNTH_EXTRACT_H_
