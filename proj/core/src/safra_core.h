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

#ifndef DYNSYNTH_SRC_SAFRA_CORE_H_
#define DYNSYNTH_SRC_SAFRA_CORE_H_

#include <algorithm>
#include <climits>
#include <iterator>
#include <vector>

namespace dynsynth::detail {

using Label = std::vector<int>;  // sorted NBA states

struct TreeNode {
  int name = 0;
  Label label;
  std::vector<int> children;  // indices, oldest first
};

struct Tree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root when non-empty
};

inline Label intersect(const Label& a, const Label& b) {
  Label out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline Label subtract(const Label& a, const Label& b) {
  Label out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

// Preorder encoding used as the state key: name, |label|, label...,
// #children, then the children recursively.
inline void encode(const Tree& t, int v, std::vector<int>& out) {
  const TreeNode& n = t.nodes[v];
  out.push_back(n.name);
  out.push_back(static_cast<int>(n.label.size()));
  out.insert(out.end(), n.label.begin(), n.label.end());
  out.push_back(static_cast<int>(n.children.size()));
  for (int c : n.children) encode(t, c, out);
}

inline int decode(const std::vector<int>& code, size_t& pos, Tree& t) {
  int idx = static_cast<int>(t.nodes.size());
  t.nodes.emplace_back();
  t.nodes[idx].name = code[pos++];
  int ls = code[pos++];
  t.nodes[idx].label.assign(code.begin() + pos, code.begin() + pos + ls);
  pos += ls;
  int nc = code[pos++];
  for (int i = 0; i < nc; ++i) {
    int c = decode(code, pos, t);
    t.nodes[idx].children.push_back(c);
  }
  return idx;
}

struct StepResult {
  std::vector<int> code;  // empty for the empty tree
  int priority;
};

// One determinization step over an implicit nondeterministic Buchi
// automaton with states 0..num_states-1. `succ(q, out)` appends the
// successors of q under the current letter.
class SafraStepper {
 public:
  SafraStepper(int num_states, const std::vector<bool>& accepting) {
    n_ = num_states;
    neutral_ = 2 * n_ + 1;
    for (int q = 0; q < n_; ++q)
      if (accepting[q]) acc_.push_back(q);
  }

  template <typename Succ>
  StepResult step(const std::vector<int>& code, Succ&& succ) const {
    if (code.empty()) return {{}, neutral_};
    Tree t;
    size_t pos = 0;
    decode(code, pos, t);
    const int old_count = static_cast<int>(t.nodes.size());
    int max_name = 0;
    for (const auto& n : t.nodes) max_name = std::max(max_name, n.name);
    // Spawn children for accepting states.
    int fresh = max_name;
    for (int v = 0; v < old_count; ++v) {
      Label inter = intersect(t.nodes[v].label, acc_);
      if (inter.empty()) continue;
      TreeNode child;
      child.name = ++fresh;
      child.label = std::move(inter);
      t.nodes.push_back(std::move(child));
      t.nodes[v].children.push_back(static_cast<int>(t.nodes.size()) - 1);
    }
    // Successors.
    for (auto& n : t.nodes) {
      Label next;
      for (int q : n.label) succ(q, next);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      n.label = std::move(next);
    }
    // Horizontal merge: a state stays only in the oldest branch.
    hmerge(t, 0, t.nodes[0].label);
    // Remove empty nodes, then collapse nodes covered by their children.
    int removed_min = INT_MAX, marked_min = INT_MAX;
    std::vector<bool> alive(t.nodes.size(), true);
    prune_empty(t, 0, alive, max_name, removed_min);
    if (!alive[0]) return {{}, removed_min == INT_MAX ? neutral_ : 2 * removed_min - 1};
    vmerge(t, 0, alive, max_name, removed_min, marked_min);
    int prio;
    if (marked_min < removed_min) prio = 2 * marked_min;
    else if (removed_min != INT_MAX) prio = 2 * removed_min - 1;
    else prio = neutral_;
    // Compact names.
    std::vector<int> names;
    for (size_t v = 0; v < t.nodes.size(); ++v)
      if (alive[v]) names.push_back(t.nodes[v].name);
    std::sort(names.begin(), names.end());
    for (size_t v = 0; v < t.nodes.size(); ++v)
      if (alive[v])
        t.nodes[v].name = static_cast<int>(
            std::lower_bound(names.begin(), names.end(), t.nodes[v].name) -
            names.begin()) + 1;
    StepResult res;
    res.priority = prio;
    encode(t, 0, res.code);
    return res;
  }

  std::vector<int> initial_code(std::vector<int> states) const {
    if (states.empty()) return {};
    Tree t;
    TreeNode root;
    root.name = 1;
    root.label = std::move(states);
    std::sort(root.label.begin(), root.label.end());
    t.nodes.push_back(root);
    std::vector<int> code;
    encode(t, 0, code);
    return code;
  }

  int neutral() const { return neutral_; }

  // States held by the root of an encoded tree.
  static std::vector<int> root_label(const std::vector<int>& code) {
    if (code.empty()) return {};
    return std::vector<int>(code.begin() + 2, code.begin() + 2 + code[1]);
  }

 private:
  static void hmerge(Tree& t, int v, const Label& allowed) {
    t.nodes[v].label = intersect(t.nodes[v].label, allowed);
    Label avail = t.nodes[v].label;
    for (int c : t.nodes[v].children) {
      hmerge(t, c, avail);
      avail = subtract(avail, t.nodes[c].label);
    }
  }

  static void kill_subtree(Tree& t, int v, std::vector<bool>& alive, int max_name,
                    int& removed_min) {
    alive[v] = false;
    if (t.nodes[v].name <= max_name)
      removed_min = std::min(removed_min, t.nodes[v].name);
    for (int c : t.nodes[v].children) kill_subtree(t, c, alive, max_name, removed_min);
  }

  static void prune_empty(Tree& t, int v, std::vector<bool>& alive, int max_name,
                   int& removed_min) {
    if (t.nodes[v].label.empty()) {
      kill_subtree(t, v, alive, max_name, removed_min);
      return;
    }
    std::vector<int> kept;
    for (int c : t.nodes[v].children) {
      prune_empty(t, c, alive, max_name, removed_min);
      if (alive[c]) kept.push_back(c);
    }
    t.nodes[v].children = std::move(kept);
  }

  static void vmerge(Tree& t, int v, std::vector<bool>& alive, int max_name,
              int& removed_min, int& marked_min) {
    auto& node = t.nodes[v];
    if (!node.children.empty()) {
      size_t covered = 0;
      for (int c : node.children) covered += t.nodes[c].label.size();
      if (covered == node.label.size()) {
        for (int c : node.children) kill_subtree(t, c, alive, max_name, removed_min);
        node.children.clear();
        marked_min = std::min(marked_min, node.name);
        return;
      }
    }
    for (int c : node.children) vmerge(t, c, alive, max_name, removed_min, marked_min);
  }

  int n_;
  int neutral_;
  Label acc_;
};

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = v.size();
    for (int x : v)
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace dynsynth::detail

#endif  // DYNSYNTH_SRC_SAFRA_CORE_H_
