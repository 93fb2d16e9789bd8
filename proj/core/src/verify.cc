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

#include "dynsynth/verify.h"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "dynsynth/text_format.h"

namespace dynsynth {

int AlgorithmMachine::step(int m, const Signal& s, OutputPair* out) const {
  const size_t ix = static_cast<size_t>(m) * inst.num_signals() + inst.signal_index(s);
  if (out) *out = inst.output_at(output[ix]);
  return next[ix];
}

void AlgorithmMachine::check() const {
  inst.validate();
  if (num_states < 1) throw Error("algorithm machine needs at least one state");
  if (initial < 0 || initial >= num_states) throw Error("algorithm machine initial state out of range");
  const size_t size = static_cast<size_t>(num_states) * inst.num_signals();
  if (next.size() != size || output.size() != size)
    throw Error("algorithm machine tables have the wrong size");
  for (int t : next)
    if (t < 0 || t >= num_states) throw Error("algorithm machine target out of range");
  for (int o : output)
    if (o < 0 || o >= inst.num_outputs()) throw Error("algorithm machine output out of range");
}

std::string algorithm_to_text(const AlgorithmMachine& m) {
  m.check();
  std::ostringstream out;
  out << "algorithm\nstates: " << m.num_states << "\ninit: " << m.initial << "\n";
  const int S = m.inst.num_signals();
  for (int s = 0; s < m.num_states; ++s)
    for (int x = 0; x < S; ++x) {
      const size_t ix = static_cast<size_t>(s) * S + x;
      out << s << " " << format_signal(m.inst, m.inst.signal_at(x)) << " -> " << m.next[ix]
          << " / " << format_output(m.inst, m.inst.output_at(m.output[ix])) << "\n";
    }
  return out.str();
}

AlgorithmMachine parse_algorithm_text(const ProblemInstance& inst, std::string_view textv) {
  inst.validate();
  text::LineReader r(textv);
  if (!r.next() || r.line() != "algorithm") r.fail("expected header 'algorithm'");
  AlgorithmMachine m;
  m.inst = inst;
  m.num_states = 0;
  const int S = inst.num_signals();
  std::vector<bool> seen;
  bool have_init = false;
  std::string rest;
  try {
    while (r.next()) {
      if (r.field("states", &rest)) {
        m.num_states = text::parse_int(rest);
        if (m.num_states < 1) r.fail("need at least one state");
        m.next.assign(static_cast<size_t>(m.num_states) * S, 0);
        m.output.assign(m.next.size(), 0);
        seen.assign(m.next.size(), false);
      } else if (r.field("init", &rest)) {
        m.initial = text::parse_int(rest);
        have_init = true;
      } else {
        if (m.num_states < 1) r.fail("'states:' must come first");
        const std::string& line = r.line();
        // The signal may contain "->" itself; the transition arrow is the last one.
        const auto arrow = line.rfind("->");
        auto slash = line.find('/', arrow);
        if (arrow == std::string::npos || slash == std::string::npos)
          r.fail("expected 'm x1 LINK x2 -> m' / y1 y2'");
        std::string lhs = text::trim(line.substr(0, arrow));
        auto space = lhs.find_first_of(" \t");
        if (space == std::string::npos) r.fail("missing signal");
        const int s = text::parse_int(lhs.substr(0, space));
        const Signal sig = parse_signal(inst, lhs.substr(space + 1));
        const int t = text::parse_int(line.substr(arrow + 2, slash - arrow - 2));
        const OutputPair out = parse_output(inst, line.substr(slash + 1));
        if (s < 0 || s >= m.num_states || t < 0 || t >= m.num_states) r.fail("state out of range");
        const size_t ix = static_cast<size_t>(s) * S + inst.signal_index(sig);
        if (seen[ix]) r.fail("duplicate transition");
        seen[ix] = true;
        m.next[ix] = t;
        m.output[ix] = inst.output_index(out);
      }
    }
  } catch (const Error& e) {
    std::string msg = e.what();
    if (msg.rfind("line ", 0) == 0) throw;
    r.fail(msg);
  }
  if (m.num_states < 1 || !have_init) throw Error("algorithm text lacks 'states:' or 'init:'");
  for (bool b : seen)
    if (!b) throw Error("algorithm text: missing transition");
  m.check();
  return m;
}

Execution run_machine(const AlgorithmMachine& m, std::span<const Signal> w) {
  Execution e;
  int s = m.initial;
  for (const Signal& sig : w) {
    if (!m.inst.contains(sig)) throw Error("signal outside the algorithm's instance");
    OutputPair out;
    s = m.step(s, sig, &out);
    e.push_back({sig, out});
  }
  return e;
}

Lasso<ExecutionStep> run_machine(const AlgorithmMachine& m, const Lasso<Signal>& w) {
  w.check();
  Lasso<ExecutionStep> out;
  out.prefix = run_machine(m, w.prefix);
  int s = m.initial;
  for (const Signal& sig : w.prefix) s = m.step(s, sig, nullptr);
  std::map<int, int> seen;  // machine state at a loop start -> repetition
  std::vector<ExecutionStep> unrolled;
  for (int k = 0;; ++k) {
    auto [it, fresh] = seen.emplace(s, k);
    if (!fresh) {
      const size_t cut = static_cast<size_t>(it->second) * w.loop.size();
      out.prefix.insert(out.prefix.end(), unrolled.begin(), unrolled.begin() + cut);
      out.loop.assign(unrolled.begin() + cut, unrolled.end());
      return out;
    }
    for (const Signal& sig : w.loop) {
      OutputPair o;
      s = m.step(s, sig, &o);
      unrolled.push_back({sig, o});
    }
  }
}

std::optional<Lasso<Signal>> verify_profile(const AlgorithmMachine& m, const Drwa& spec) {
  m.check();
  spec.check();
  const ProblemInstance& a = m.inst;
  const ProblemInstance& b = spec.inst;
  if (a.x1 != b.x1 || a.x2 != b.x2 || a.y1 != b.y1 || a.y2 != b.y2)
    throw Error("specification and algorithm use different alphabets");
  for (Link l : a.links)
    if (!b.has_link(l)) throw Error("specification does not cover the algorithm's links");
  const int S = a.num_signals();
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> keys;
  auto node = [&](int q, int s) {
    auto [it, fresh] = index.emplace(std::make_pair(q, s), static_cast<int>(keys.size()));
    if (fresh) keys.push_back({q, s});
    return it->second;
  };
  node(spec.initial, m.initial);
  Digraph graph;
  std::map<std::pair<int, int>, int> edge_signal;
  for (size_t i = 0; i < keys.size(); ++i) {
    auto [q, s] = keys[i];
    std::vector<int> succ;
    for (int x = 0; x < S; ++x) {
      const Signal sig = a.signal_at(x);
      OutputPair out;
      const int s2 = m.step(s, sig, &out);
      const int w = node(spec.run(q, {sig, out}), s2);
      if (edge_signal.emplace(std::make_pair(static_cast<int>(i), w), x).second)
        succ.push_back(w);
    }
    graph.push_back(std::move(succ));
  }
  // A rejected run visits, for every pair, fp infinitely often whenever it
  // visits f infinitely often.
  std::vector<NodePair> streett;
  for (const auto& p : spec.pairs) {
    NodePair sp{NodeSet(keys.size(), false), NodeSet(keys.size(), false)};
    for (size_t i = 0; i < keys.size(); ++i) {
      const int q = keys[i].first;
      sp.f[i] = !p.f.empty() && p.f[q];
      sp.fp[i] = !p.fp.empty() && p.fp[q];
    }
    streett.push_back(std::move(sp));
  }
  auto lasso = find_streett_lasso(graph, 0, streett);
  if (!lasso) return std::nullopt;
  Lasso<Signal> w;
  for (int i = 0; i < lasso->positions(); ++i) {
    const int from = i < lasso->stem() ? lasso->prefix[i] : lasso->loop[i - lasso->stem()];
    const int j = lasso->next(i);
    const int to = j < lasso->stem() ? lasso->prefix[j] : lasso->loop[j - lasso->stem()];
    const Signal sig = a.signal_at(edge_signal.at({from, to}));
    (i < lasso->stem() ? w.prefix : w.loop).push_back(sig);
  }
  return w;
}

Word random_schedule(const ProblemInstance& inst, int rounds, std::uint64_t seed) {
  inst.validate();
  if (rounds < 0) throw Error("round count must be nonnegative");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, inst.num_signals() - 1);
  Word w;
  for (int r = 0; r < rounds; ++r) w.push_back(inst.signal_at(pick(rng)));
  return w;
}

std::string format_trace(const ProblemInstance& inst, std::span<const ExecutionStep> e) {
  std::ostringstream out;
  out << "round\ty1\tsignal\ty2\n";
  for (size_t r = 0; r < e.size(); ++r)
    out << r << "\t" << inst.y1[e[r].out.y1] << "\t" << format_signal(inst, e[r].signal) << "\t"
        << inst.y2[e[r].out.y2] << "\n";
  return out.str();
}

namespace {

int symbol(const std::vector<std::string>& alphabet, const char* name) {
  auto it = std::find(alphabet.begin(), alphabet.end(), name);
  if (it == alphabet.end())
    throw Error(std::string("reference algorithm needs a symbol named '") + name + "'");
  return static_cast<int>(it - alphabet.begin());
}

// Builds the machine by exploring `step` from `init` over all signals.
template <typename State, typename Step>
AlgorithmMachine explore(const ProblemInstance& inst, State init, Step step) {
  AlgorithmMachine m;
  m.inst = inst;
  std::map<State, int> index{{init, 0}};
  std::vector<State> states{init};
  for (size_t i = 0; i < states.size(); ++i)
    for (int x = 0; x < inst.num_signals(); ++x) {
      State st = states[i];
      OutputPair out = step(st, inst.signal_at(x));
      auto [it, fresh] = index.emplace(st, static_cast<int>(states.size()));
      if (fresh) states.push_back(st);
      m.next.push_back(it->second);
      m.output.push_back(inst.output_index(out));
    }
  m.num_states = static_cast<int>(states.size());
  m.check();
  return m;
}

}  // namespace

SynthesizedAlgorithm reference_psi_algorithm(const ProblemInstance& inst) {
  inst.validate();
  if (inst.links != std::vector<Link>{Link::kLeft, Link::kRight})
    throw Error("reference algorithm needs the links {<-, ->}");
  const int one1 = symbol(inst.x1, "1"), one2 = symbol(inst.x2, "1");
  const int zero_y1 = symbol(inst.y1, "0"), zero_y2 = symbol(inst.y2, "0");
  const int one_y1 = symbol(inst.y1, "1"), one_y2 = symbol(inst.y2, "1");
  auto both_one = [=](int x1, int x2) { return x1 == one1 && x2 == one2; };
  auto answer = [=](bool mark) {
    return mark ? OutputPair{one_y1, one_y2} : OutputPair{zero_y1, zero_y2};
  };
  struct State {
    int link = -1;      // link of the current block, -1 before round 0
    bool seen = false;  // the current block has a round with both inputs 1
    auto operator<=>(const State&) const = default;
  };
  SynthesizedAlgorithm alg;
  alg.machine = explore(inst, State{}, [=](State& st, const Signal& s) {
    const int l = static_cast<int>(s.link);
    const bool fresh_block = st.link >= 0 && st.link != l;
    OutputPair out = answer(fresh_block && st.seen);
    if (st.link != l) st.seen = false;
    st.link = l;
    st.seen = st.seen || both_one(s.x1, s.x2);
    return out;
  });
  auto from_view = [=](const View& v) {
    if (v.empty()) throw Error("empty view");
    const size_t r = v.size() - 1;
    if (r == 0 || v[r].link == v[r - 1].link) return answer(false);
    bool mark = false;
    for (size_t i = r; i-- > 0 && v[i].link == v[r - 1].link;)
      mark = mark || both_one(v[i].x1, v[i].x2);
    return answer(mark);
  };
  alg.views.f1 = [=](const View& v) { return from_view(v).y1; };
  alg.views.f2 = [=](const View& v) { return from_view(v).y2; };
  return alg;
}

SynthesizedAlgorithm constant_algorithm(const ProblemInstance& inst, OutputPair out) {
  inst.validate();
  if (out.y1 < 0 || out.y1 >= static_cast<int>(inst.y1.size()) || out.y2 < 0 ||
      out.y2 >= static_cast<int>(inst.y2.size()))
    throw Error("constant output out of range");
  SynthesizedAlgorithm alg;
  alg.machine = explore(inst, 0, [=](int&, const Signal&) { return out; });
  alg.views.f1 = [=](const View&) { return out.y1; };
  alg.views.f2 = [=](const View&) { return out.y2; };
  return alg;
}

}  // namespace dynsynth
