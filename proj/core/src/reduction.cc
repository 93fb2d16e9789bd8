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

#include "dynsynth/reduction.h"

#include <algorithm>

namespace dynsynth {
namespace {

std::vector<std::string> merged(const std::vector<std::string>& a,
                                const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& s : b)
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  for (const auto& s : out)
    if (s == kDummyToken) throw Error("symbol '#' is reserved for the link reduction");
  out.emplace_back(kDummyToken);
  return out;
}

std::vector<int> positions_in(const std::vector<std::string>& from,
                              const std::vector<std::string>& in) {
  std::vector<int> out;
  for (const auto& s : from) {
    auto it = std::find(in.begin(), in.end(), s);
    out.push_back(it == in.end() ? -1 : static_cast<int>(it - in.begin()));
  }
  return out;
}

void require_reducible(const ProblemInstance& inst) {
  if (inst.has_link(Link::kEmpty))
    throw Error("the link reduction does not apply to the empty link");
}

}  // namespace

ProblemInstance reduced_instance(const ProblemInstance& inst) {
  require_reducible(inst);
  auto x = merged(inst.x1, inst.x2);
  auto y = merged(inst.y1, inst.y2);
  return make_instance(x, x, y, y, {Link::kLeft, Link::kBoth});
}

RoleTransducer::RoleTransducer(const ProblemInstance& inst)
    : source_(inst), target_(reduced_instance(inst)) {
  for (int p = 1; p <= 2; ++p) {
    x_map_[p - 1] = positions_in(inst.inputs(p), target_.x1);
    y_map_[p - 1] = positions_in(inst.outputs(p), target_.y1);
    x_back_[p - 1] = positions_in(target_.x1, inst.inputs(p));
    y_back_[p - 1] = positions_in(target_.y1, inst.outputs(p));
  }
}

int RoleTransducer::next_state(int state, Link link) {
  if (state == 1) return link == Link::kRight ? 2 : 1;
  return link == Link::kLeft ? 1 : 2;
}

bool RoleTransducer::inserts_dummy(int state, Link link) {
  return next_state(state, link) != state;
}

bool RoleTransducer::swaps(int state, Link link) {
  return state == 2 ? link != Link::kLeft : link == Link::kRight;
}

int RoleTransducer::step(int state, const Signal& s,
                         std::vector<Signal>& out) const {
  if (s.link == Link::kEmpty) throw Error("the link reduction does not apply to the empty link");
  if (inserts_dummy(state, s.link)) out.push_back(dummy_signal());
  int a = x_to_target(1, s.x1), b = x_to_target(2, s.x2);
  bool swapped = swaps(state, s.link);
  Link link = s.link == Link::kBoth ? Link::kBoth : Link::kLeft;
  out.push_back(swapped ? Signal{b, link, a} : Signal{a, link, b});
  return next_state(state, s.link);
}

int RoleTransducer::step(int state, const ExecutionStep& s,
                         std::vector<ExecutionStep>& out) const {
  std::vector<Signal> sig;
  int next = step(state, s.signal, sig);
  bool swapped = swaps(state, s.signal.link);
  int c = y_to_target(1, s.out.y1), d = y_to_target(2, s.out.y2);
  if (sig.size() == 2) out.push_back({sig[0], {dummy_y(), dummy_y()}});
  out.push_back({sig.back(), swapped ? OutputPair{d, c} : OutputPair{c, d}});
  return next;
}

namespace {

template <typename T>
std::vector<T> run_transducer(const RoleTransducer& t, std::span<const T> w,
                              int& state) {
  std::vector<T> out;
  for (const auto& x : w) state = t.step(state, x, out);
  return out;
}

template <typename T>
Lasso<T> translate_lasso(const RoleTransducer& t, const Lasso<T>& w) {
  w.check();
  int state = 1;
  Lasso<T> out;
  out.prefix = run_transducer<T>(t, w.prefix, state);
  // The loop acts on the two transducer states as a function; its orbit
  // from `state` repeats after at most two rounds.
  std::vector<int> starts{state};
  std::vector<std::vector<T>> chunks;
  for (;;) {
    chunks.push_back(run_transducer<T>(t, w.loop, state));
    auto it = std::find(starts.begin(), starts.end(), state);
    if (it != starts.end()) {
      size_t first = static_cast<size_t>(it - starts.begin());
      for (size_t i = 0; i < chunks.size(); ++i) {
        auto& dst = i < first ? out.prefix : out.loop;
        dst.insert(dst.end(), chunks[i].begin(), chunks[i].end());
      }
      return out;
    }
    starts.push_back(state);
  }
}

}  // namespace

Word translate(const RoleTransducer& t, std::span<const Signal> w) {
  int state = 1;
  return run_transducer(t, w, state);
}

Execution translate(const RoleTransducer& t, std::span<const ExecutionStep> e) {
  int state = 1;
  return run_transducer(t, e, state);
}

Lasso<Signal> translate(const RoleTransducer& t, const Lasso<Signal>& w) {
  return translate_lasso(t, w);
}

Lasso<ExecutionStep> translate(const RoleTransducer& t,
                               const Lasso<ExecutionStep>& e) {
  return translate_lasso(t, e);
}

int sim(int p, std::span<const Signal> w) {
  if (p != 1 && p != 2) throw Error("process id must be 1 or 2");
  int state = 1;
  for (const auto& s : w) {
    if (s.link == Link::kEmpty) throw Error("the link reduction does not apply to the empty link");
    state = RoleTransducer::next_state(state, s.link);
  }
  return p == 1 ? state : 3 - state;
}

namespace {

// Control part shared by the image automata: transducer state (1 or 2) and
// whether the previous letter was the dummy.
struct Control {
  int t = 1;
  bool after_dummy = false;
  int index() const { return (t - 1) * 2 + (after_dummy ? 1 : 0); }
};

// Decodes one reduced signal in control state c. Returns false when no
// translation produces it; otherwise sets `dummy`, or the source signal and
// whether it is swapped.
bool decode_signal(const RoleTransducer& tr, Control c, const Signal& s,
                   bool& dummy, Signal& source, bool& swapped) {
  dummy = s == tr.dummy_signal();
  if (dummy) return !c.after_dummy;
  // Letters after a dummy are <- letters; unswapped when returning to
  // state 1, swapped when entering state 2.
  if (c.after_dummy && s.link != Link::kLeft) return false;
  swapped = c.after_dummy ? c.t == 1 : c.t == 2;
  Link link = s.link;
  if (swapped && s.link == Link::kLeft) link = Link::kRight;
  int a = tr.x_from_target(1, swapped ? s.x2 : s.x1);
  int b = tr.x_from_target(2, swapped ? s.x1 : s.x2);
  if (a < 0 || b < 0 || !tr.source().has_link(link)) return false;
  source = {a, link, b};
  return true;
}

Control advance(Control c, bool dummy) {
  if (dummy) return {c.t, true};
  if (c.after_dummy) return {3 - c.t, false};
  return c;
}

}  // namespace

Drwa transform_automaton(const Drwa& a) {
  a.check();
  RoleTransducer tr(a.inst);
  Drwa out;
  out.inst = tr.target();
  const int n = a.num_states, sink = 4 * n, letters = out.num_letters();
  out.num_states = 4 * n + 1;
  out.initial = a.initial * 4;
  out.delta.assign(static_cast<size_t>(out.num_states) * letters, sink);
  for (int q = 0; q < n; ++q) {
    for (int ci = 0; ci < 4; ++ci) {
      Control c{ci / 2 + 1, ci % 2 == 1};
      for (int l = 0; l < letters; ++l) {
        ExecutionStep step = out.inst.letter_at(l);
        bool dummy = false, swapped = false;
        Signal src;
        if (!decode_signal(tr, c, step.signal, dummy, src, swapped)) continue;
        int to = -1;
        if (dummy) {
          if (step.out == OutputPair{tr.dummy_y(), tr.dummy_y()}) to = q;
        } else {
          int y1 = tr.y_from_target(1, swapped ? step.out.y2 : step.out.y1);
          int y2 = tr.y_from_target(2, swapped ? step.out.y1 : step.out.y2);
          if (y1 >= 0 && y2 >= 0) to = a.run(q, {src, {y1, y2}});
        }
        if (to >= 0)
          out.delta[static_cast<size_t>(q * 4 + ci) * letters + l] =
              to * 4 + advance(c, dummy).index();
      }
    }
  }
  for (const auto& p : a.pairs) {
    NodePair lifted{NodeSet(out.num_states, false), NodeSet(out.num_states, false)};
    for (int q = 0; q < n; ++q)
      for (int ci = 0; ci < 4; ++ci) {
        lifted.f[q * 4 + ci] = p.f[q];
        lifted.fp[q * 4 + ci] = p.fp[q];
      }
    out.pairs.push_back(std::move(lifted));
  }
  return drwa_trim(out);
}

Drwa image_complement_automaton(const ProblemInstance& inst) {
  RoleTransducer tr(inst);
  Drwa out;
  out.inst = tr.target();
  const int sink = 4, letters = out.num_letters();
  out.num_states = 5;
  out.initial = 0;
  out.delta.assign(static_cast<size_t>(out.num_states) * letters, sink);
  for (int ci = 0; ci < 4; ++ci) {
    Control c{ci / 2 + 1, ci % 2 == 1};
    for (int l = 0; l < letters; ++l) {
      bool dummy = false, swapped = false;
      Signal src;
      if (decode_signal(tr, c, out.inst.letter_at(l).signal, dummy, src, swapped))
        out.delta[static_cast<size_t>(ci) * letters + l] = advance(c, dummy).index();
    }
  }
  NodePair accept{NodeSet(5, false), NodeSet(5, false)};
  accept.f[sink] = true;
  out.pairs.push_back(std::move(accept));
  return drwa_trim(out);
}

Drwa build_reduced_spec(const Drwa& a) {
  return normalize_drwa(drwa_union(transform_automaton(a),
                                   image_complement_automaton(a.inst)));
}

}  // namespace dynsynth
