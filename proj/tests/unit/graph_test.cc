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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "dynsynth/graph.h"
#include "support/oracles.h"

namespace dynsynth {
namespace {

using testing::Rng;

Digraph random_graph(Rng& rng, int n, double density) {
  Digraph g(n);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (testing::coin(rng, density)) g[v].push_back(w);
  return g;
}

std::vector<NodePair> random_pairs(Rng& rng, int n, int k) {
  std::vector<NodePair> pairs;
  for (int i = 0; i < k; ++i) {
    NodePair p{NodeSet(n, false), NodeSet(n, false)};
    for (int v = 0; v < n; ++v) {
      p.f[v] = testing::coin(rng, 0.3);
      p.fp[v] = testing::coin(rng, 0.3);
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

std::vector<std::vector<bool>> closure(const Digraph& g) {
  const int n = static_cast<int>(g.size());
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v)
    for (int w : g[v]) r[v][w] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

// Whether the node set `mask` is the node set of some closed walk.
bool is_cycle_set(const Digraph& g, unsigned mask) {
  const int n = static_cast<int>(g.size());
  Digraph sub(n);
  int first = -1;
  for (int v = 0; v < n; ++v) {
    if (!(mask >> v & 1)) continue;
    if (first < 0) first = v;
    for (int w : g[v])
      if (mask >> w & 1) sub[v].push_back(w);
  }
  if (first < 0) return false;
  auto r = closure(sub);
  for (int v = 0; v < n; ++v)
    if ((mask >> v & 1) && (!r[first][v] || !r[v][first])) return false;
  return true;
}

bool streett_ok(const std::vector<NodePair>& pairs, unsigned mask) {
  for (const auto& p : pairs) {
    bool f = false, fp = false;
    for (size_t v = 0; v < p.f.size(); ++v) {
      if (!(mask >> v & 1)) continue;
      f = f || p.f[v];
      fp = fp || p.fp[v];
    }
    if (f && !fp) return false;
  }
  return true;
}

bool rabin_ok(const std::vector<NodePair>& pairs, unsigned mask) {
  for (const auto& p : pairs) {
    bool f = false, fp = false;
    for (size_t v = 0; v < p.f.size(); ++v) {
      if (!(mask >> v & 1)) continue;
      f = f || p.f[v];
      fp = fp || p.fp[v];
    }
    if (f && !fp) return true;
  }
  return false;
}

// Nodes from which a cycle set with the property is reachable.
template <typename Pred>
NodeSet brute_nodes(const Digraph& g, Pred ok) {
  const int n = static_cast<int>(g.size());
  auto r = closure(g);
  NodeSet out(n, false);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!is_cycle_set(g, mask) || !ok(mask)) continue;
    int some = __builtin_ctz(mask);
    for (int v = 0; v < n; ++v)
      if (v == some || r[v][some]) out[v] = true;
  }
  return out;
}

TEST_CASE("strongly connected components match mutual reachability") {
  Rng rng(101);
  for (int t = 0; t < 300; ++t) {
    int n = testing::uniform(rng, 1, 9);
    Digraph g = random_graph(rng, n, 0.25);
    auto scc = strongly_connected_components(g);
    auto r = closure(g);
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        CHECK((scc.comp[v] == scc.comp[w]) == (v == w || (r[v][w] && r[w][v])));
    // Reverse topological numbering: edges never go to a larger component.
    for (int v = 0; v < n; ++v)
      for (int w : g[v]) CHECK(scc.comp[w] <= scc.comp[v]);
  }
}

TEST_CASE("shortest path and covering cycle") {
  Digraph g{{1}, {2}, {0, 3}, {3}};
  NodeSet to(4, false);
  to[3] = true;
  CHECK(shortest_path(g, 0, to) == std::vector<int>{0, 1, 2, 3});
  NodeSet comp{true, true, true, false};
  auto c = covering_cycle(g, comp, 1);
  CHECK(c == std::vector<int>{1, 2, 0});
  NodeSet self{false, false, false, true};
  CHECK(covering_cycle(g, self, 3) == std::vector<int>{3});
}

TEST_CASE("Streett lasso search agrees with subset enumeration") {
  Rng rng(103);
  for (int t = 0; t < 400; ++t) {
    int n = testing::uniform(rng, 1, 8);
    Digraph g = random_graph(rng, n, 0.3);
    auto pairs = random_pairs(rng, n, testing::uniform(rng, 0, 3));
    auto expected = brute_nodes(g, [&](unsigned m) { return streett_ok(pairs, m); });
    auto region = streett_nonempty_nodes(g, pairs);
    REQUIRE(region == expected);
    auto lasso = find_streett_lasso(g, 0, pairs);
    REQUIRE(lasso.has_value() == static_cast<bool>(expected[0]));
    if (!lasso) continue;
    std::vector<int> path = lasso->prefix;
    path.insert(path.end(), lasso->loop.begin(), lasso->loop.end());
    path.push_back(lasso->loop.front());
    REQUIRE(path.front() == 0);
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      const auto& s = g[path[i]];
      REQUIRE(std::find(s.begin(), s.end(), path[i + 1]) != s.end());
    }
    unsigned mask = 0;
    for (int v : lasso->loop) mask |= 1u << v;
    REQUIRE(streett_ok(pairs, mask));
  }
}

TEST_CASE("Rabin regions agree with subset enumeration") {
  Rng rng(107);
  for (int t = 0; t < 400; ++t) {
    int n = testing::uniform(rng, 1, 8);
    Digraph g = random_graph(rng, n, 0.3);
    for (auto& s : g)
      if (s.empty()) s.push_back(testing::uniform(rng, 0, n - 1));
    auto pairs = random_pairs(rng, n, testing::uniform(rng, 0, 3));
    auto some = brute_nodes(g, [&](unsigned m) { return rabin_ok(pairs, m); });
    auto spoil = brute_nodes(g, [&](unsigned m) { return !rabin_ok(pairs, m); });
    REQUIRE(rabin_nonempty_nodes(g, pairs) == some);
    NodeSet universal = spoil;
    universal.flip();
    REQUIRE(rabin_universal_nodes(g, pairs) == universal);
  }
}

}  // namespace
}  // namespace dynsynth
