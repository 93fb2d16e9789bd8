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

#include "dynsynth/text_format.h"

#include <charconv>
#include <sstream>

namespace dynsynth::text {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int parse_int(std::string_view s) {
  std::string t = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size())
    throw Error("expected an integer, got '" + t + "'");
  return v;
}

namespace {

std::string join_braced(const std::vector<std::string>& items) {
  std::string out = "{";
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += items[i];
  }
  return out + "}";
}

std::vector<std::string> split_braced(std::string_view text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw Error("expected '{...}', got '" + t + "'");
  std::vector<std::string> out;
  std::string inner = t.substr(1, t.size() - 2);
  if (trim(inner).empty()) return out;
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

}  // namespace

std::string format_alphabet(const ProblemInstance& inst) {
  std::vector<std::string> links;
  for (Link l : inst.links) links.emplace_back(link_token(l));
  return "x1=" + join_braced(inst.x1) + " x2=" + join_braced(inst.x2) +
         " y1=" + join_braced(inst.y1) + " y2=" + join_braced(inst.y2) +
         " links=" + join_braced(links);
}

ProblemInstance parse_alphabet(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string part;
  std::vector<std::string> x1, x2, y1, y2;
  std::vector<Link> links;
  bool seen[5] = {};
  while (in >> part) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw Error("bad alphabet entry '" + part + "'");
    std::string key = part.substr(0, eq);
    auto items = split_braced(part.substr(eq + 1));
    if (key == "x1") x1 = items, seen[0] = true;
    else if (key == "x2") x2 = items, seen[1] = true;
    else if (key == "y1") y1 = items, seen[2] = true;
    else if (key == "y2") y2 = items, seen[3] = true;
    else if (key == "links") {
      for (auto& t : items) links.push_back(parse_link_token(t));
      seen[4] = true;
    } else {
      throw Error("unknown alphabet key '" + key + "'");
    }
  }
  for (bool b : seen)
    if (!b) throw Error("alphabet line must define x1, x2, y1, y2 and links");
  return make_instance(x1, x2, y1, y2, links);
}

std::string format_set(const std::vector<bool>& members) {
  std::vector<int> items;
  for (size_t i = 0; i < members.size(); ++i)
    if (members[i]) items.push_back(static_cast<int>(i));
  return format_list(items);
}

std::string format_list(const std::vector<int>& items) {
  std::vector<std::string> s;
  for (int i : items) s.push_back(std::to_string(i));
  return join_braced(s);
}

std::vector<int> parse_list(std::string_view text) {
  std::vector<int> out;
  for (auto& item : split_braced(text)) out.push_back(parse_int(item));
  return out;
}

namespace {
std::string unbracket(std::string_view text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw Error("expected '[...]', got '" + t + "'");
  return t.substr(1, t.size() - 2);
}
}  // namespace

std::string format_letter(const ProblemInstance& inst, int letter) {
  return "[" + format_step(inst, inst.letter_at(letter)) + "]";
}

int parse_letter(const ProblemInstance& inst, std::string_view text) {
  return inst.letter_index(parse_step(inst, unbracket(text)));
}

std::string format_bracket_signal(const ProblemInstance& inst, int signal) {
  return "[" + format_signal(inst, inst.signal_at(signal)) + "]";
}

int parse_bracket_signal(const ProblemInstance& inst, std::string_view text) {
  return inst.signal_index(parse_signal(inst, unbracket(text)));
}

LineReader::LineReader(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string l;
  while (std::getline(in, l)) lines_.push_back(l);
}

bool LineReader::next() {
  while (pos_ < lines_.size()) {
    line_ = trim(lines_[pos_++]);
    number_ = static_cast<int>(pos_);
    if (line_.empty() || line_.rfind("//", 0) == 0) continue;
    return true;
  }
  line_.clear();
  return false;
}

bool LineReader::field(std::string_view key, std::string* rest) const {
  if (line_.size() < key.size() + 1 || line_.compare(0, key.size(), key) != 0 ||
      line_[key.size()] != ':')
    return false;
  *rest = trim(std::string_view(line_).substr(key.size() + 1));
  return true;
}

void LineReader::fail(const std::string& msg) const {
  throw Error("line " + std::to_string(number_) + ": " + msg);
}

}  // namespace dynsynth::text
