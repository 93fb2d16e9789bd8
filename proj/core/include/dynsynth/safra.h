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

#ifndef DYNSYNTH_SAFRA_H_
#define DYNSYNTH_SAFRA_H_

#include "dynsynth/drwa.h"
#include "dynsynth/nba.h"

namespace dynsynth {

// Safra-tree determinization with compact node names; each state pairs a
// tree with the priority of the step that produced it, and the returned
// pairs are chain shaped. L(result) = L(n). The result is not minimized.
Drwa determinize_safra(const Nba& n);

// Upper bound on explored states; exceeding it throws Error.
inline constexpr int kSafraStateLimit = 2'000'000;

}  // namespace dynsynth

#endif  // DYNSYNTH_SAFRA_H_
