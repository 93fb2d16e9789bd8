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

#include "support/reduction_oracles.h"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dynsynth::testing {

namespace {

int find_name(const std::vector<std::string>& names, const std::string& n) {
  auto it = std::find(names.begin(), names.end(), n);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

// Decoder state: role (1 or 2) and whether a dummy is waiting for its
// partner letter.
struct Decoder {
  const ProblemInstance& src;
  const ProblemInstance& tgt;
  bool check_outputs;
  int role = 1;
  bool pending = false;

  // Decodes one target letter; returns false when it cannot occur here.
  bool feed(const ExecutionStep& s, std::vector<ExecutionStep>& out) {
    const std::string a = tgt.x1[s.signal.x1], b = tgt.x2[s.signal.x2];
    const std::string u = tgt.y1[s.out.y1], v = tgt.y2[s.out.y2];
    const bool dummy = a == "#" && b == "#";
    if (dummy) {
      if (pending || s.signal.link != Link::kBoth) return false;
      if (check_outputs && (u != "#" || v != "#")) return false;
      pending = true;
      return true;
    }
    if (a == "#" || b == "#") return false;
    // Names (first, link, second) / (y of first, y of second) in the source.
    std::string x1, x2, y1, y2;
    Link link;
    if (pending) {
      if (s.signal.link != Link::kLeft) return false;
      if (role == 1) {
        x1 = b, x2 = a, y1 = v, y2 = u, link = Link::kRight;
      } else {
        x1 = a, x2 = b, y1 = u, y2 = v, link = Link::kLeft;
      }
      role = 3 - role;
      pending = false;
    } else if (role == 1) {
      x1 = a, x2 = b, y1 = u, y2 = v, link = s.signal.link;
    } else {
      x1 = b, x2 = a, y1 = v, y2 = u;
      link = s.signal.link == Link::kBoth ? Link::kBoth : Link::kRight;
    }
    if (!src.has_link(link)) return false;
    ExecutionStep r;
    r.signal = Signal{find_name(src.x1, x1), link, find_name(src.x2, x2)};
    if (r.signal.x1 < 0 || r.signal.x2 < 0) return false;
    if (check_outputs) {
      r.out = OutputPair{find_name(src.y1, y1), find_name(src.y2, y2)};
      if (r.out.y1 < 0 || r.out.y2 < 0) return false;
    }
    out.push_back(r);
    return true;
  }
};

}  // namespace

std::optional<Word> oracle_untranslate(const ProblemInstance& source,
                                       const ProblemInstance& target, const Word& w) {
  Decoder d{source, target, false};
  std::vector<ExecutionStep> out;
  for (const auto& s : w)
    if (!d.feed(ExecutionStep{s, {}}, out)) return std::nullopt;
  if (d.pending) return std::nullopt;
  Word result;
  for (const auto& s : out) result.push_back(s.signal);
  return result;
}

std::optional<Lasso<ExecutionStep>> oracle_untranslate(const ProblemInstance& source,
                                                       const ProblemInstance& target,
                                                       const Lasso<ExecutionStep>& e,
                                                       bool check_outputs) {
  Decoder d{source, target, check_outputs};
  std::vector<ExecutionStep> out;
  for (const auto& s : e.prefix)
    if (!d.feed(s, out)) return std::nullopt;
  // Decoded length at each loop boundary, keyed by decoder state.
  std::map<std::pair<int, bool>, size_t> seen;
  while (true) {
    auto key = std::make_pair(d.role, d.pending);
    if (auto it = seen.find(key); it != seen.end()) {
      Lasso<ExecutionStep> r;
      r.prefix.assign(out.begin(), out.begin() + static_cast<long>(it->second));
      r.loop.assign(out.begin() + static_cast<long>(it->second), out.end());
      if (r.loop.empty()) return std::nullopt;
      return r;
    }
    seen.emplace(key, out.size());
    for (const auto& s : e.loop)
      if (!d.feed(s, out)) return std::nullopt;
  }
}

// Randomizes the inputs of the other process that process q does not see.
Word vary_hidden(const Word& w, int q, Rng& rng) {
  Word out = w;
  View v = view(q, w);
  for (size_t i = 0; i < w.size(); ++i) {
    if (q == 1 && v[i].x2 == kBottom) out[i].x2 = uniform(rng, 0, 1);
    if (q == 2 && v[i].x1 == kBottom) out[i].x1 = uniform(rng, 0, 1);
  }
  return out;
}

}  // namespace dynsynth::testing
