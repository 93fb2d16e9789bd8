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

#ifndef DYNSYNTH_LTL_H_
#define DYNSYNTH_LTL_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dynsynth/model.h"

namespace dynsynth {

enum class LtlOp {
  kTrue,
  kFalse,
  kInput,   // in_p = value
  kOutput,  // out_p = value
  kLink,    // link = value
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kNext,
  kFinally,
  kGlobally,
  kUntil,
};

struct LtlNode;
using Ltl = std::shared_ptr<const LtlNode>;

// Immutable formula node. Atoms use `process` and `value` (a symbol index,
// or a Link cast to int for kLink); operators use `lhs`/`rhs`.
struct LtlNode {
  LtlOp op = LtlOp::kTrue;
  int process = 0;
  int value = 0;
  Ltl lhs;
  Ltl rhs;
};

namespace ltl {
Ltl truth();
Ltl falsity();
Ltl input(int p, int value);
Ltl output(int p, int value);
Ltl link(Link l);
Ltl negate(Ltl a);
Ltl conj(Ltl a, Ltl b);
Ltl disj(Ltl a, Ltl b);
Ltl implies(Ltl a, Ltl b);
Ltl iff(Ltl a, Ltl b);
Ltl next(Ltl a);
Ltl eventually(Ltl a);
Ltl always(Ltl a);
Ltl until(Ltl a, Ltl b);
}  // namespace ltl

// Concrete syntax:
//   atoms     in1=a  in2=a  out1=b  out2=b  link=<->  link=<-  link=->
//             link=-  true  false
//   unary     ! X F G        (bind tightest)
//   binary    U  &  |  ->  <->   (in decreasing precedence; -> is right
//             associative, the others left associative)
// Throws Error with a character position on syntax errors or on symbols
// that the instance does not declare.
Ltl parse_ltl(const ProblemInstance& inst, std::string_view text);

// Canonical rendering: every binary operator is parenthesized, unary
// operators are prefix. parse_ltl(to_string(f)) is structurally equal to f.
std::string to_string(const ProblemInstance& inst, const Ltl& f);

bool structurally_equal(const Ltl& a, const Ltl& b);

// Number of operators (atoms excluded).
int operator_count(const Ltl& f);

// Truth of an atom or of a Boolean combination of atoms on one letter.
bool holds_now(const Ltl& f, const ExecutionStep& letter);

// Whether prefix.loop^omega satisfies f.
bool eval_ltl(const Ltl& f, const Lasso<ExecutionStep>& e);

// Truth value of f at every lasso position 0 .. e.positions()-1.
std::vector<bool> eval_ltl_positions(const Ltl& f,
                                     const Lasso<ExecutionStep>& e);

// (G OR_{n in n1} link=n) -> f. Throws Error unless n1 is a subset of n2.
Ltl relativize(const Ltl& f, const std::vector<Link>& n1,
               const std::vector<Link>& n2);

// Throws Error if f mentions a link outside `links` or a symbol outside the
// instance alphabets.
void check_formula(const ProblemInstance& inst, const Ltl& f);

}  // namespace dynsynth

#endif  // DYNSYNTH_LTL_H_
