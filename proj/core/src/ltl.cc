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

#include "dynsynth/ltl.h"

#include <algorithm>
#include <cctype>

namespace dynsynth {

namespace ltl {
namespace {
Ltl make(LtlOp op, Ltl a = nullptr, Ltl b = nullptr) {
  auto n = std::make_shared<LtlNode>();
  n->op = op;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}
Ltl atom(LtlOp op, int p, int value) {
  auto n = std::make_shared<LtlNode>();
  n->op = op;
  n->process = p;
  n->value = value;
  return n;
}
}  // namespace

Ltl truth() { return make(LtlOp::kTrue); }
Ltl falsity() { return make(LtlOp::kFalse); }
Ltl input(int p, int value) { return atom(LtlOp::kInput, p, value); }
Ltl output(int p, int value) { return atom(LtlOp::kOutput, p, value); }
Ltl link(Link l) { return atom(LtlOp::kLink, 0, static_cast<int>(l)); }
Ltl negate(Ltl a) { return make(LtlOp::kNot, std::move(a)); }
Ltl conj(Ltl a, Ltl b) { return make(LtlOp::kAnd, std::move(a), std::move(b)); }
Ltl disj(Ltl a, Ltl b) { return make(LtlOp::kOr, std::move(a), std::move(b)); }
Ltl implies(Ltl a, Ltl b) {
  return make(LtlOp::kImplies, std::move(a), std::move(b));
}
Ltl iff(Ltl a, Ltl b) { return make(LtlOp::kIff, std::move(a), std::move(b)); }
Ltl next(Ltl a) { return make(LtlOp::kNext, std::move(a)); }
Ltl eventually(Ltl a) { return make(LtlOp::kFinally, std::move(a)); }
Ltl always(Ltl a) { return make(LtlOp::kGlobally, std::move(a)); }
Ltl until(Ltl a, Ltl b) {
  return make(LtlOp::kUntil, std::move(a), std::move(b));
}
}  // namespace ltl

namespace {

class Parser {
 public:
  Parser(const ProblemInstance& inst, std::string_view text)
      : inst_(inst), text_(text) {}

  Ltl parse() {
    Ltl f = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("LTL syntax error at position " + std::to_string(pos_) + ": " +
                msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return text_.substr(pos_, tok.size()) == tok;
  }

  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#';
  }

  // A unary keyword must not be the prefix of a longer word.
  bool accept_keyword(char k) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == k &&
        (pos_ + 1 >= text_.size() || !word_char(text_[pos_ + 1]))) {
      ++pos_;
      return true;
    }
    return false;
  }

  Ltl parse_iff() {
    Ltl f = parse_implies();
    while (accept("<->")) f = ltl::iff(f, parse_implies());
    return f;
  }

  Ltl parse_implies() {
    Ltl f = parse_or();
    if (!peek("<->") && accept("->")) return ltl::implies(f, parse_implies());
    return f;
  }

  Ltl parse_or() {
    Ltl f = parse_and();
    while (accept("|")) f = ltl::disj(f, parse_and());
    return f;
  }

  Ltl parse_and() {
    Ltl f = parse_until();
    while (accept("&")) f = ltl::conj(f, parse_until());
    return f;
  }

  Ltl parse_until() {
    Ltl f = parse_unary();
    while (accept_keyword('U')) f = ltl::until(f, parse_unary());
    return f;
  }

  Ltl parse_unary() {
    if (accept("!")) return ltl::negate(parse_unary());
    if (accept_keyword('X')) return ltl::next(parse_unary());
    if (accept_keyword('F')) return ltl::eventually(parse_unary());
    if (accept_keyword('G')) return ltl::always(parse_unary());
    if (accept("(")) {
      Ltl f = parse_iff();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    return parse_atom();
  }

  std::string read_word() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && word_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string read_symbol() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' ||
          c == ')' || c == '!' || c == '&' || c == '|' || c == '<' ||
          (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>'))
        break;
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Ltl parse_atom() {
    size_t start = pos_;
    std::string w = read_word();
    if (w == "true") return ltl::truth();
    if (w == "false") return ltl::falsity();
    if (w.empty()) fail("expected a formula");
    if (!accept("=")) {
      pos_ = start;
      fail("unknown atom '" + w + "'");
    }
    if (w == "link") {
      skip_ws();
      for (std::string_view tok : {"<->", "<-", "->", "-"}) {
        if (accept(tok)) return make_link(parse_link_token(tok));
      }
      std::string name = read_word();
      try {
        return make_link(parse_link_json_name(name));
      } catch (const Error&) {
        fail("unknown link '" + name + "'");
      }
    }
    int p = 0;
    bool is_input = false;
    if (w == "in1" || w == "in2") {
      is_input = true;
      p = w[2] - '0';
    } else if (w == "out1" || w == "out2") {
      p = w[3] - '0';
    } else {
      pos_ = start;
      fail("unknown atom '" + w + "'");
    }
    size_t sym_pos = pos_;
    std::string sym = read_symbol();
    if (sym.empty()) fail("expected a symbol after '='");
    try {
      return is_input ? ltl::input(p, inst_.x_index(p, sym))
                      : ltl::output(p, inst_.y_index(p, sym));
    } catch (const Error& e) {
      pos_ = sym_pos;
      fail(e.what());
    }
  }

  Ltl make_link(Link l) {
    if (!inst_.has_link(l))
      fail("link '" + std::string(link_token(l)) +
           "' is not in the network model");
    return ltl::link(l);
  }

  const ProblemInstance& inst_;
  std::string_view text_;
  size_t pos_ = 0;
};

std::string_view binary_token(LtlOp op) {
  switch (op) {
    case LtlOp::kAnd: return "&";
    case LtlOp::kOr: return "|";
    case LtlOp::kImplies: return "->";
    case LtlOp::kIff: return "<->";
    case LtlOp::kUntil: return "U";
    default: return "?";
  }
}

void render(const ProblemInstance& inst, const Ltl& f, std::string& out) {
  switch (f->op) {
    case LtlOp::kTrue: out += "true"; return;
    case LtlOp::kFalse: out += "false"; return;
    case LtlOp::kInput:
      out += "in" + std::to_string(f->process) + "=" +
             inst.inputs(f->process).at(static_cast<size_t>(f->value));
      return;
    case LtlOp::kOutput:
      out += "out" + std::to_string(f->process) + "=" +
             inst.outputs(f->process).at(static_cast<size_t>(f->value));
      return;
    case LtlOp::kLink:
      out += "link=";
      out += link_token(static_cast<Link>(f->value));
      return;
    case LtlOp::kNot: out += "!"; render(inst, f->lhs, out); return;
    case LtlOp::kNext: out += "X "; render(inst, f->lhs, out); return;
    case LtlOp::kFinally: out += "F "; render(inst, f->lhs, out); return;
    case LtlOp::kGlobally: out += "G "; render(inst, f->lhs, out); return;
    default:
      out += "(";
      render(inst, f->lhs, out);
      out += " ";
      out += binary_token(f->op);
      out += " ";
      render(inst, f->rhs, out);
      out += ")";
      return;
  }
}

}  // namespace

Ltl parse_ltl(const ProblemInstance& inst, std::string_view text) {
  return Parser(inst, text).parse();
}

std::string to_string(const ProblemInstance& inst, const Ltl& f) {
  std::string out;
  render(inst, f, out);
  return out;
}

bool structurally_equal(const Ltl& a, const Ltl& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->op != b->op || a->process != b->process || a->value != b->value)
    return false;
  return structurally_equal(a->lhs, b->lhs) &&
         structurally_equal(a->rhs, b->rhs);
}

int operator_count(const Ltl& f) {
  if (!f) return 0;
  switch (f->op) {
    case LtlOp::kTrue:
    case LtlOp::kFalse:
    case LtlOp::kInput:
    case LtlOp::kOutput:
    case LtlOp::kLink:
      return 0;
    default:
      return 1 + operator_count(f->lhs) + operator_count(f->rhs);
  }
}

bool holds_now(const Ltl& f, const ExecutionStep& a) {
  switch (f->op) {
    case LtlOp::kTrue: return true;
    case LtlOp::kFalse: return false;
    case LtlOp::kInput:
      return (f->process == 1 ? a.signal.x1 : a.signal.x2) == f->value;
    case LtlOp::kOutput:
      return (f->process == 1 ? a.out.y1 : a.out.y2) == f->value;
    case LtlOp::kLink: return static_cast<int>(a.signal.link) == f->value;
    case LtlOp::kNot: return !holds_now(f->lhs, a);
    case LtlOp::kAnd: return holds_now(f->lhs, a) && holds_now(f->rhs, a);
    case LtlOp::kOr: return holds_now(f->lhs, a) || holds_now(f->rhs, a);
    case LtlOp::kImplies: return !holds_now(f->lhs, a) || holds_now(f->rhs, a);
    case LtlOp::kIff: return holds_now(f->lhs, a) == holds_now(f->rhs, a);
    default: throw Error("holds_now: temporal operator on a single letter");
  }
}

std::vector<bool> eval_ltl_positions(const Ltl& f,
                                     const Lasso<ExecutionStep>& e) {
  e.check();
  const int n = e.positions();
  std::vector<bool> out(static_cast<size_t>(n));
  auto letter = [&](int i) -> const ExecutionStep& { return e.at(i); };
  switch (f->op) {
    case LtlOp::kTrue:
    case LtlOp::kFalse:
    case LtlOp::kInput:
    case LtlOp::kOutput:
    case LtlOp::kLink:
      for (int i = 0; i < n; ++i) out[i] = holds_now(f, letter(i));
      return out;
    case LtlOp::kNot: {
      auto a = eval_ltl_positions(f->lhs, e);
      for (int i = 0; i < n; ++i) out[i] = !a[i];
      return out;
    }
    case LtlOp::kAnd:
    case LtlOp::kOr:
    case LtlOp::kImplies:
    case LtlOp::kIff: {
      auto a = eval_ltl_positions(f->lhs, e);
      auto b = eval_ltl_positions(f->rhs, e);
      for (int i = 0; i < n; ++i) {
        switch (f->op) {
          case LtlOp::kAnd: out[i] = a[i] && b[i]; break;
          case LtlOp::kOr: out[i] = a[i] || b[i]; break;
          case LtlOp::kImplies: out[i] = !a[i] || b[i]; break;
          default: out[i] = a[i] == b[i]; break;
        }
      }
      return out;
    }
    case LtlOp::kNext: {
      auto a = eval_ltl_positions(f->lhs, e);
      for (int i = 0; i < n; ++i) out[i] = a[e.next(i)];
      return out;
    }
    case LtlOp::kFinally:
    case LtlOp::kGlobally:
    case LtlOp::kUntil: {
      std::vector<bool> lhs(static_cast<size_t>(n), true);
      std::vector<bool> rhs;
      if (f->op == LtlOp::kUntil) {
        lhs = eval_ltl_positions(f->lhs, e);
        rhs = eval_ltl_positions(f->rhs, e);
      } else {
        rhs = eval_ltl_positions(f->lhs, e);
        if (f->op == LtlOp::kGlobally) rhs.flip();
      }
      // Least fixpoint of  u = rhs | (lhs & X u).
      out = rhs;
      for (bool changed = true; changed;) {
        changed = false;
        for (int i = n - 1; i >= 0; --i) {
          if (!out[i] && lhs[i] && out[e.next(i)]) {
            out[i] = true;
            changed = true;
          }
        }
      }
      if (f->op == LtlOp::kGlobally) out.flip();
      return out;
    }
  }
  return out;
}

bool eval_ltl(const Ltl& f, const Lasso<ExecutionStep>& e) {
  return eval_ltl_positions(f, e)[0];
}

Ltl relativize(const Ltl& f, const std::vector<Link>& n1,
               const std::vector<Link>& n2) {
  if (n1.empty()) throw Error("relativize: empty source network model");
  Ltl any;
  for (Link l : n1) {
    if (std::find(n2.begin(), n2.end(), l) == n2.end())
      throw Error("relativize: link '" + std::string(link_token(l)) +
                  "' is not in the target network model");
    any = any ? ltl::disj(any, ltl::link(l)) : ltl::link(l);
  }
  return ltl::implies(ltl::always(any), f);
}

void check_formula(const ProblemInstance& inst, const Ltl& f) {
  if (!f) return;
  switch (f->op) {
    case LtlOp::kInput:
      if (f->value < 0 ||
          f->value >= static_cast<int>(inst.inputs(f->process).size()))
        throw Error("formula mentions an undeclared input symbol");
      return;
    case LtlOp::kOutput:
      if (f->value < 0 ||
          f->value >= static_cast<int>(inst.outputs(f->process).size()))
        throw Error("formula mentions an undeclared output symbol");
      return;
    case LtlOp::kLink:
      if (!inst.has_link(static_cast<Link>(f->value)))
        throw Error("formula mentions link '" +
                    std::string(link_token(static_cast<Link>(f->value))) +
                    "' outside the network model");
      return;
    default:
      check_formula(inst, f->lhs);
      check_formula(inst, f->rhs);
  }
}

}  // namespace dynsynth
