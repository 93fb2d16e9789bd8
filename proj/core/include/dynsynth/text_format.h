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

#ifndef DYNSYNTH_TEXT_FORMAT_H_
#define DYNSYNTH_TEXT_FORMAT_H_

#include <string>
#include <string_view>
#include <vector>

#include "dynsynth/model.h"

namespace dynsynth::text {

// "x1={a,b} x2={...} y1={...} y2={...} links={<-,->}"
std::string format_alphabet(const ProblemInstance& inst);
ProblemInstance parse_alphabet(std::string_view text);

// "{1,4,7}" from a membership vector / list.
std::string format_set(const std::vector<bool>& members);
std::string format_list(const std::vector<int>& items);
std::vector<int> parse_list(std::string_view text);

// "[x1 LINK x2 / y1 y2]" and "[x1 LINK x2]".
std::string format_letter(const ProblemInstance& inst, int letter);
int parse_letter(const ProblemInstance& inst, std::string_view text);
std::string format_bracket_signal(const ProblemInstance& inst, int signal);
int parse_bracket_signal(const ProblemInstance& inst, std::string_view text);

// Line-oriented reader: skips blank lines and lines starting with "//".
class LineReader {
 public:
  explicit LineReader(std::string_view text);
  bool next();  // advances; false at end
  const std::string& line() const { return line_; }
  int number() const { return number_; }
  // Content after "key:" when the current line starts with it.
  bool field(std::string_view key, std::string* rest) const;
  [[noreturn]] void fail(const std::string& msg) const;

 private:
  std::vector<std::string> lines_;
  size_t pos_ = 0;
  std::string line_;
  int number_ = 0;
};

std::string trim(std::string_view s);
int parse_int(std::string_view s);

}  // namespace dynsynth::text

#endif  // DYNSYNTH_TEXT_FORMAT_H_
