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

#ifndef DYNSYNTH_MODEL_H_
#define DYNSYNTH_MODEL_H_

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dynsynth {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Communication graph of one round. The enumerator order is the canonical
// serialization order.
enum class Link : std::uint8_t { kEmpty = 0, kLeft = 1, kRight = 2, kBoth = 3 };

inline constexpr Link kAllLinks[] = {Link::kEmpty, Link::kLeft, Link::kRight,
                                     Link::kBoth};

// "-", "<-", "->", "<->".
std::string_view link_token(Link link);
// "empty", "left", "right", "both".
std::string_view link_json_name(Link link);
Link parse_link_token(std::string_view token);
Link parse_link_json_name(std::string_view name);

// True iff process `p` learns the other process's inputs in a round with
// this link.
bool link_reveals_to(Link link, int p);

inline constexpr std::string_view kBottomToken = "_";
inline constexpr std::string_view kDummyToken = "#";
inline constexpr int kBottom = -1;

struct Signal {
  int x1 = 0;
  Link link = Link::kBoth;
  int x2 = 0;
  friend bool operator==(const Signal&, const Signal&) = default;
  friend auto operator<=>(const Signal&, const Signal&) = default;
};

struct OutputPair {
  int y1 = 0;
  int y2 = 0;
  friend bool operator==(const OutputPair&, const OutputPair&) = default;
  friend auto operator<=>(const OutputPair&, const OutputPair&) = default;
};

struct ExecutionStep {
  Signal signal;
  OutputPair out;
  friend bool operator==(const ExecutionStep&, const ExecutionStep&) = default;
  friend auto operator<=>(const ExecutionStep&, const ExecutionStep&) = default;
};

// One letter of a view; x1 or x2 may be kBottom.
struct ViewLetter {
  int x1 = 0;
  Link link = Link::kBoth;
  int x2 = 0;
  friend bool operator==(const ViewLetter&, const ViewLetter&) = default;
  friend auto operator<=>(const ViewLetter&, const ViewLetter&) = default;
};

using View = std::vector<ViewLetter>;
using Word = std::vector<Signal>;
using Execution = std::vector<ExecutionStep>;

// Input/output alphabets of both processes together with the network model.
// Symbols are indexed by their position in the vectors; `links` is kept
// sorted and duplicate free.
struct ProblemInstance {
  std::vector<std::string> x1, x2, y1, y2;
  std::vector<Link> links;

  // Throws Error when an invariant is violated.
  void validate() const;

  bool has_link(Link link) const;
  // Position of `link` inside `links`; -1 if absent.
  int link_position(Link link) const;

  int num_signals() const {
    return static_cast<int>(x1.size() * links.size() * x2.size());
  }
  int num_outputs() const { return static_cast<int>(y1.size() * y2.size()); }
  int num_letters() const { return num_signals() * num_outputs(); }

  int signal_index(const Signal& s) const;
  Signal signal_at(int index) const;
  int output_index(const OutputPair& o) const {
    return o.y1 * static_cast<int>(y2.size()) + o.y2;
  }
  OutputPair output_at(int index) const;
  int letter_index(const ExecutionStep& step) const {
    return signal_index(step.signal) * num_outputs() + output_index(step.out);
  }
  ExecutionStep letter_at(int index) const;

  bool contains(const Signal& s) const;

  // Symbol lookups by name; throw Error on unknown names.
  int x_index(int p, std::string_view name) const;
  int y_index(int p, std::string_view name) const;
  const std::vector<std::string>& inputs(int p) const;
  const std::vector<std::string>& outputs(int p) const;

  friend bool operator==(const ProblemInstance&,
                         const ProblemInstance&) = default;
};

ProblemInstance make_instance(std::vector<std::string> x1,
                              std::vector<std::string> x2,
                              std::vector<std::string> y1,
                              std::vector<std::string> y2,
                              std::vector<Link> links);

// The same alphabets over a different network model.
ProblemInstance with_links(const ProblemInstance& inst,
                           std::vector<Link> links);

ProblemInstance parse_instance_json(std::string_view text);
std::string instance_to_json(const ProblemInstance& inst);

std::string format_signal(const ProblemInstance& inst, const Signal& s);
Signal parse_signal(const ProblemInstance& inst, std::string_view text);
std::string format_view_letter(const ProblemInstance& inst,
                               const ViewLetter& v);
std::string format_output(const ProblemInstance& inst, const OutputPair& o);
OutputPair parse_output(const ProblemInstance& inst, std::string_view text);
// "x1 LINK x2 / y1 y2".
std::string format_step(const ProblemInstance& inst, const ExecutionStep& s);
ExecutionStep parse_step(const ProblemInstance& inst, std::string_view text);

// One signal per line; blank lines are skipped. Errors carry line numbers.
Word parse_word(const ProblemInstance& inst, std::string_view text);
std::string format_word(const ProblemInstance& inst, std::span<const Signal> w);

// Ultimately periodic word prefix . loop^omega.
template <typename T>
struct Lasso {
  std::vector<T> prefix;
  std::vector<T> loop;

  int period() const { return static_cast<int>(loop.size()); }
  int stem() const { return static_cast<int>(prefix.size()); }
  // Number of distinct suffixes.
  int positions() const { return stem() + period(); }
  // Position reached from `i` by one step.
  int next(int i) const { return i + 1 < positions() ? i + 1 : stem(); }
  // Letter at absolute index i of the infinite word.
  const T& at(long long i) const {
    if (i < stem()) return prefix[static_cast<size_t>(i)];
    return loop[static_cast<size_t>((i - stem()) % period())];
  }
  void check() const {
    if (loop.empty()) throw Error("lasso loop must be nonempty");
  }
  friend bool operator==(const Lasso&, const Lasso&) = default;
};

// The view of process p on a history.
View view(int p, std::span<const Signal> w);

// Maximal link-constant segments, in order.
std::vector<Word> blocks(std::span<const Signal> w);

// A distributed algorithm given as one function from views to outputs per
// process.
struct DistributedAlgorithm {
  std::function<int(const View&)> f1;
  std::function<int(const View&)> f2;
};

// Round r outputs f_p(view_p(w[0..r])).
Execution outcome(const DistributedAlgorithm& f, std::span<const Signal> w);

}  // namespace dynsynth

#endif  // DYNSYNTH_MODEL_H_
