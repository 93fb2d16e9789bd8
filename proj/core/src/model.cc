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

#include "dynsynth/model.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace dynsynth {

namespace {

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

int find_symbol(const std::vector<std::string>& alphabet,
                std::string_view name) {
  auto it = std::find(alphabet.begin(), alphabet.end(), name);
  return it == alphabet.end() ? -1 : static_cast<int>(it - alphabet.begin());
}

void check_alphabet(const std::vector<std::string>& a, const char* what) {
  if (a.size() < 2)
    throw Error(std::string("alphabet ") + what + " needs at least 2 symbols");
  std::set<std::string> seen;
  for (const auto& s : a) {
    if (s.empty()) throw Error(std::string("empty symbol in ") + what);
    if (s == kBottomToken)
      throw Error(std::string("symbol '_' is reserved (in ") + what + ")");
    for (char c : s) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '(' || c == ')' ||
          c == '[' || c == ']' || c == '/' || c == '=' || c == '<' ||
          c == '>' || c == '&' || c == '|' || c == '!' || c == ',' ||
          c == '{' || c == '}')
        throw Error("symbol '" + s + "' contains a reserved character");
    }
    if (!seen.insert(s).second)
      throw Error("duplicate symbol '" + s + "' in " + what);
  }
}

}  // namespace

std::string_view link_token(Link link) {
  switch (link) {
    case Link::kEmpty: return "-";
    case Link::kLeft: return "<-";
    case Link::kRight: return "->";
    case Link::kBoth: return "<->";
  }
  return "?";
}

std::string_view link_json_name(Link link) {
  switch (link) {
    case Link::kEmpty: return "empty";
    case Link::kLeft: return "left";
    case Link::kRight: return "right";
    case Link::kBoth: return "both";
  }
  return "?";
}

Link parse_link_token(std::string_view token) {
  for (Link l : kAllLinks)
    if (link_token(l) == token) return l;
  throw Error("unknown link token '" + std::string(token) + "'");
}

Link parse_link_json_name(std::string_view name) {
  for (Link l : kAllLinks)
    if (link_json_name(l) == name) return l;
  throw Error("unknown link name '" + std::string(name) + "'");
}

bool link_reveals_to(Link link, int p) {
  switch (link) {
    case Link::kBoth: return true;
    case Link::kLeft: return p == 1;
    case Link::kRight: return p == 2;
    case Link::kEmpty: return false;
  }
  return false;
}

void ProblemInstance::validate() const {
  check_alphabet(x1, "x1");
  check_alphabet(x2, "x2");
  check_alphabet(y1, "y1");
  check_alphabet(y2, "y2");
  if (links.empty()) throw Error("network model must be nonempty");
  if (!std::is_sorted(links.begin(), links.end()) ||
      std::adjacent_find(links.begin(), links.end()) != links.end())
    throw Error("network model links must be sorted and distinct");
}

bool ProblemInstance::has_link(Link link) const {
  return link_position(link) >= 0;
}

int ProblemInstance::link_position(Link link) const {
  auto it = std::find(links.begin(), links.end(), link);
  return it == links.end() ? -1 : static_cast<int>(it - links.begin());
}

int ProblemInstance::signal_index(const Signal& s) const {
  int lp = link_position(s.link);
  if (lp < 0 || s.x1 < 0 || s.x2 < 0 || s.x1 >= static_cast<int>(x1.size()) ||
      s.x2 >= static_cast<int>(x2.size()))
    throw Error("signal outside the instance alphabet");
  return (s.x1 * static_cast<int>(links.size()) + lp) *
             static_cast<int>(x2.size()) +
         s.x2;
}

Signal ProblemInstance::signal_at(int index) const {
  int n2 = static_cast<int>(x2.size());
  int nl = static_cast<int>(links.size());
  Signal s;
  s.x2 = index % n2;
  index /= n2;
  s.link = links[static_cast<size_t>(index % nl)];
  s.x1 = index / nl;
  return s;
}

OutputPair ProblemInstance::output_at(int index) const {
  int n2 = static_cast<int>(y2.size());
  return OutputPair{index / n2, index % n2};
}

ExecutionStep ProblemInstance::letter_at(int index) const {
  return ExecutionStep{signal_at(index / num_outputs()),
                       output_at(index % num_outputs())};
}

bool ProblemInstance::contains(const Signal& s) const {
  return has_link(s.link) && s.x1 >= 0 && s.x2 >= 0 &&
         s.x1 < static_cast<int>(x1.size()) &&
         s.x2 < static_cast<int>(x2.size());
}

const std::vector<std::string>& ProblemInstance::inputs(int p) const {
  if (p == 1) return x1;
  if (p == 2) return x2;
  throw Error("unknown process id " + std::to_string(p));
}

const std::vector<std::string>& ProblemInstance::outputs(int p) const {
  if (p == 1) return y1;
  if (p == 2) return y2;
  throw Error("unknown process id " + std::to_string(p));
}

int ProblemInstance::x_index(int p, std::string_view name) const {
  int i = find_symbol(inputs(p), name);
  if (i < 0)
    throw Error("unknown input symbol '" + std::string(name) + "' for process " +
                std::to_string(p));
  return i;
}

int ProblemInstance::y_index(int p, std::string_view name) const {
  int i = find_symbol(outputs(p), name);
  if (i < 0)
    throw Error("unknown output symbol '" + std::string(name) +
                "' for process " + std::to_string(p));
  return i;
}

ProblemInstance make_instance(std::vector<std::string> x1,
                              std::vector<std::string> x2,
                              std::vector<std::string> y1,
                              std::vector<std::string> y2,
                              std::vector<Link> links) {
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  ProblemInstance inst{std::move(x1), std::move(x2), std::move(y1),
                       std::move(y2), std::move(links)};
  inst.validate();
  return inst;
}

ProblemInstance with_links(const ProblemInstance& inst,
                           std::vector<Link> links) {
  return make_instance(inst.x1, inst.x2, inst.y1, inst.y2, std::move(links));
}

ProblemInstance parse_instance_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("instance JSON: ") + e.what());
  }
  auto strings = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_array())
      throw Error(std::string("instance JSON: missing array '") + key + "'");
    std::vector<std::string> out;
    for (const auto& v : j[key]) {
      if (v.is_string()) out.push_back(v.get<std::string>());
      else if (v.is_number_integer()) out.push_back(std::to_string(v.get<long>()));
      else throw Error(std::string("instance JSON: bad symbol in '") + key + "'");
    }
    return out;
  };
  std::vector<Link> links;
  for (const auto& name : strings("links"))
    links.push_back(parse_link_json_name(name));
  return make_instance(strings("x1"), strings("x2"), strings("y1"),
                       strings("y2"), std::move(links));
}

std::string instance_to_json(const ProblemInstance& inst) {
  nlohmann::ordered_json j;
  j["x1"] = inst.x1;
  j["x2"] = inst.x2;
  j["y1"] = inst.y1;
  j["y2"] = inst.y2;
  std::vector<std::string> names;
  for (Link l : inst.links) names.emplace_back(link_json_name(l));
  j["links"] = names;
  return j.dump(2) + "\n";
}

std::string format_signal(const ProblemInstance& inst, const Signal& s) {
  std::string out = inst.x1.at(static_cast<size_t>(s.x1));
  out += ' ';
  out += link_token(s.link);
  out += ' ';
  out += inst.x2.at(static_cast<size_t>(s.x2));
  return out;
}

Signal parse_signal(const ProblemInstance& inst, std::string_view text) {
  auto parts = split_ws(text);
  if (parts.size() != 3)
    throw Error("signal must have the form 'x1 LINK x2': '" +
                std::string(text) + "'");
  Signal s{inst.x_index(1, parts[0]), parse_link_token(parts[1]),
           inst.x_index(2, parts[2])};
  if (!inst.has_link(s.link))
    throw Error("link '" + parts[1] + "' is not in the network model");
  return s;
}

std::string format_view_letter(const ProblemInstance& inst,
                               const ViewLetter& v) {
  std::string out = v.x1 == kBottom ? std::string(kBottomToken)
                                    : inst.x1.at(static_cast<size_t>(v.x1));
  out += ' ';
  out += link_token(v.link);
  out += ' ';
  out += v.x2 == kBottom ? std::string(kBottomToken)
                         : inst.x2.at(static_cast<size_t>(v.x2));
  return out;
}

std::string format_output(const ProblemInstance& inst, const OutputPair& o) {
  return inst.y1.at(static_cast<size_t>(o.y1)) + " " +
         inst.y2.at(static_cast<size_t>(o.y2));
}

OutputPair parse_output(const ProblemInstance& inst, std::string_view text) {
  auto parts = split_ws(text);
  if (parts.size() != 2)
    throw Error("output must have the form 'y1 y2': '" + std::string(text) +
                "'");
  return OutputPair{inst.y_index(1, parts[0]), inst.y_index(2, parts[1])};
}

std::string format_step(const ProblemInstance& inst, const ExecutionStep& s) {
  return format_signal(inst, s.signal) + " / " + format_output(inst, s.out);
}

ExecutionStep parse_step(const ProblemInstance& inst, std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    throw Error("execution letter needs 'signal / outputs': '" +
                std::string(text) + "'");
  return ExecutionStep{parse_signal(inst, text.substr(0, slash)),
                       parse_output(inst, text.substr(slash + 1))};
}

Word parse_word(const ProblemInstance& inst, std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (split_ws(line).empty()) continue;
    try {
      w.push_back(parse_signal(inst, line));
    } catch (const Error& e) {
      throw Error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return w;
}

std::string format_word(const ProblemInstance& inst,
                        std::span<const Signal> w) {
  std::string out;
  for (const auto& s : w) out += format_signal(inst, s) + "\n";
  return out;
}

View view(int p, std::span<const Signal> w) {
  if (p != 1 && p != 2) throw Error("unknown process id " + std::to_string(p));
  View v;
  v.reserve(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    const Signal& s = w[i];
    if (link_reveals_to(s.link, p)) {
      // The whole history becomes visible.
      v.clear();
      for (size_t j = 0; j <= i; ++j)
        v.push_back(ViewLetter{w[j].x1, w[j].link, w[j].x2});
    } else if (p == 1) {
      v.push_back(ViewLetter{s.x1, s.link, kBottom});
    } else {
      v.push_back(ViewLetter{kBottom, s.link, s.x2});
    }
  }
  return v;
}

std::vector<Word> blocks(std::span<const Signal> w) {
  std::vector<Word> out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i == 0 || w[i].link != w[i - 1].link) out.emplace_back();
    out.back().push_back(w[i]);
  }
  return out;
}

Execution outcome(const DistributedAlgorithm& f, std::span<const Signal> w) {
  Execution e;
  e.reserve(w.size());
  for (size_t r = 0; r < w.size(); ++r) {
    auto prefix = w.subspan(0, r + 1);
    int y1 = f.f1(view(1, prefix));
    int y2 = f.f2(view(2, prefix));
    e.push_back(ExecutionStep{w[r], OutputPair{y1, y2}});
  }
  return e;
}

}  // namespace dynsynth
