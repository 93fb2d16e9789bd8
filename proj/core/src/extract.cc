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

#include "dynsynth/extract.h"

#include <map>
#include <memory>
#include <optional>
#include <tuple>

#include "dynsynth/reduction.h"

namespace dynsynth {

ProblemInstance sync_instance(const ProblemInstance& inst) {
  inst.validate();
  if (inst.has_link(Link::kEmpty))
    throw Error("undecidable network model: the empty link is not supported");
  if (inst.has_link(Link::kRight)) return reduced_instance(inst);
  return with_links(inst, {Link::kLeft, Link::kBoth});
}

Signal sync_start_signal() { return Signal{0, Link::kBoth, 0}; }

namespace {

// Joint state of the role transducer, the game and both strategies. The
// node and player 1's memory are -1 once they are no longer known to the
// process doing the computation.
struct Joint {
  int role = 1;
  int node = 0;
  int m1 = 0;
  int m2 = 0;
  auto operator<=>(const Joint&) const = default;
};

class Lifter {
 public:
  Lifter(const ProblemInstance& inst, const Game21& g, const Profile& profile)
      : inst_(inst), target_(sync_instance(inst)), g_(g), pr_(profile) {
    if (inst.has_link(Link::kRight)) tr_.emplace(inst);
    g.check();
    if (g.num_env != target_.num_signals() || g.num_a1 != static_cast<int>(target_.y1.size()) ||
        g.num_a2 != static_cast<int>(target_.y2.size()))
      throw Error("game does not match the instance");
    if (profile.g1.num_obs != g.num_obs1 || profile.g2.num_obs != g.num_obs2 ||
        profile.g1.num_actions != g.num_a1 || profile.g2.num_actions != g.num_a2)
      throw Error("profile does not match the game");
    start_ = Joint{1, g.initial, profile.g1.initial, profile.g2.initial};
    feed(start_, target_.signal_index(sync_start_signal()));
  }

  const Joint& start() const { return start_; }

  // One original round with full knowledge of the signal.
  OutputPair step(Joint& j, const Signal& s) const {
    if (!tr_) {
      auto [a1, a2] = feed(j, target_.signal_index(s));
      return {a1, a2};
    }
    std::vector<Signal> letters;
    const bool swapped = RoleTransducer::swaps(j.role, s.link);
    j.role = tr_->step(j.role, s, letters);
    if (letters.size() == 2) feed_dummy(j);
    auto [a1, a2] = feed(j, target_.signal_index(letters.back()));
    return {back(1, swapped ? a2 : a1), back(2, swapped ? a1 : a2)};
  }

  // One round that process p does not learn the other input of; p knows
  // its own input x and answers as the observing player.
  int step_blind(int p, Joint& j, int x) const {
    const Link link = p == 1 ? Link::kRight : Link::kLeft;
    int obs = x;
    if (tr_) {
      if (RoleTransducer::inserts_dummy(j.role, link)) feed_dummy(j);
      j.role = RoleTransducer::next_state(j.role, link);
      obs = tr_->x_to_target(p, x);
    } else if (p == 1) {
      throw Error("process 1 learns every round without the -> link");
    }
    j.m2 = pr_.g2.next(j.m2, obs);
    j.node = j.m1 = -1;
    const int a2 = pr_.g2.output[j.m2];
    return tr_ ? back(p, a2) : a2;
  }

 private:
  std::pair<int, int> feed(Joint& j, int e) const {
    if (j.node < 0) throw Error("internal error: game node unknown to the process");
    j.m1 = pr_.g1.next(j.m1, g_.observe(1, j.node, e));
    j.m2 = pr_.g2.next(j.m2, g_.observe(2, j.node, e));
    const int a1 = pr_.g1.output[j.m1], a2 = pr_.g2.output[j.m2];
    j.node = g_.move(j.node, e, a1, a2);
    return {a1, a2};
  }

  void feed_dummy(Joint& j) const {
    auto [a1, a2] = feed(j, target_.signal_index(tr_->dummy_signal()));
    if (a1 != tr_->dummy_y() || a2 != tr_->dummy_y())
      throw Error("strategies answer a dummy round with real outputs");
  }

  int back(int p, int y) const {
    const int out = tr_->y_from_target(p, y);
    if (out < 0) throw Error("strategies emit an output symbol of the wrong process");
    return out;
  }

  ProblemInstance inst_, target_;
  Game21 g_;
  Profile pr_;
  std::optional<RoleTransducer> tr_;
  Joint start_;
};

int view_output(const Lifter& lift, int p, const View& v) {
  if (v.empty()) throw Error("empty view");
  size_t known = 0;
  while (known < v.size() && v[known].x1 != kBottom && v[known].x2 != kBottom) ++known;
  Joint j = lift.start();
  OutputPair last;
  for (size_t i = 0; i < known; ++i) last = lift.step(j, Signal{v[i].x1, v[i].link, v[i].x2});
  if (known == v.size()) return p == 1 ? last.y1 : last.y2;
  int y = 0;
  for (size_t i = known; i < v.size(); ++i) {
    const int own = p == 1 ? v[i].x1 : v[i].x2;
    const int other = p == 1 ? v[i].x2 : v[i].x1;
    if (own == kBottom || other != kBottom || link_reveals_to(v[i].link, p))
      throw Error("malformed view");
    y = lift.step_blind(p, j, own);
  }
  return y;
}

}  // namespace

SynthesizedAlgorithm extract_algorithm(const ProblemInstance& inst, const Game21& g,
                                       const Profile& profile) {
  auto lift = std::make_shared<const Lifter>(inst, g, profile);
  SynthesizedAlgorithm alg;
  AlgorithmMachine& m = alg.machine;
  m.inst = inst;
  std::map<Joint, int> index{{lift->start(), 0}};
  std::vector<Joint> states{lift->start()};
  for (size_t i = 0; i < states.size(); ++i)
    for (int x = 0; x < inst.num_signals(); ++x) {
      Joint j = states[i];
      OutputPair out = lift->step(j, inst.signal_at(x));
      auto [it, fresh] = index.emplace(j, static_cast<int>(states.size()));
      if (fresh) states.push_back(j);
      m.next.push_back(it->second);
      m.output.push_back(inst.output_index(out));
    }
  m.num_states = static_cast<int>(states.size());
  m.check();
  alg.views.f1 = [lift](const View& v) { return view_output(*lift, 1, v); };
  alg.views.f2 = [lift](const View& v) { return view_output(*lift, 2, v); };
  return alg;
}

}  // namespace dynsynth
