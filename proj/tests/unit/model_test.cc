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

#include "doctest.h"
#include "dynsynth/model.h"
#include "support/oracles.h"

namespace dynsynth {
namespace {

using testing::Rng;

ProblemInstance four_symbol_instance() {
  return make_instance({"a0", "a1", "a2", "a3"}, {"b0", "b1", "b2", "b3"},
                       {"0", "1"}, {"0", "1"},
                       {Link::kEmpty, Link::kLeft, Link::kRight, Link::kBoth});
}

TEST_CASE("link tokens round-trip") {
  for (Link l : kAllLinks) {
    CHECK(parse_link_token(link_token(l)) == l);
    CHECK(parse_link_json_name(link_json_name(l)) == l);
  }
  CHECK_THROWS_AS(parse_link_token("<>"), Error);
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(make_instance({"0"}, {"0", "1"}, {"0", "1"}, {"0", "1"},
                                {Link::kLeft}),
                  Error);
  CHECK_THROWS_AS(make_instance({"0", "1"}, {"0", "1"}, {"0", "1"}, {"0", "1"}, {}),
                  Error);
  CHECK_THROWS_AS(make_instance({"0", "_"}, {"0", "1"}, {"0", "1"}, {"0", "1"},
                                {Link::kLeft}),
                  Error);
  auto inst = make_instance({"0", "1"}, {"0", "1"}, {"0", "1"}, {"0", "1"},
                            {Link::kRight, Link::kLeft, Link::kRight});
  CHECK(inst.links == std::vector<Link>{Link::kLeft, Link::kRight});
}

TEST_CASE("instance JSON round-trip") {
  const char* json =
      R"({"x1":["0","1"],"x2":["a","b","c"],"y1":[0,1],"y2":["0","1"],"links":["left","right"]})";
  auto inst = parse_instance_json(json);
  CHECK(inst.x2.size() == 3);
  CHECK(inst.y1 == std::vector<std::string>{"0", "1"});
  CHECK(parse_instance_json(instance_to_json(inst)) == inst);
  CHECK_THROWS_AS(parse_instance_json("{"), Error);
  CHECK_THROWS_AS(parse_instance_json(R"({"x1":["0","1"]})"), Error);
}

TEST_CASE("letter indexing is a bijection") {
  auto inst = make_instance({"0", "1", "2"}, {"0", "1"}, {"0", "1"},
                            {"0", "1", "2"}, {Link::kLeft, Link::kBoth});
  for (int i = 0; i < inst.num_letters(); ++i)
    CHECK(inst.letter_index(inst.letter_at(i)) == i);
  for (int i = 0; i < inst.num_signals(); ++i)
    CHECK(inst.signal_index(inst.signal_at(i)) == i);
}

TEST_CASE("signal and step text formats") {
  auto inst = testing::binary_instance({Link::kLeft, Link::kRight});
  Signal s = parse_signal(inst, "1 <- 0");
  CHECK(s == Signal{1, Link::kLeft, 0});
  CHECK(format_signal(inst, s) == "1 <- 0");
  CHECK_THROWS_AS(parse_signal(inst, "1 <-> 0"), Error);  // link not in N
  CHECK_THROWS_AS(parse_signal(inst, "2 <- 0"), Error);
  auto step = parse_step(inst, "0 -> 1 / 1 0");
  CHECK(format_step(inst, step) == "0 -> 1 / 1 0");
  try {
    parse_word(inst, "0 <- 0\n\n1 -> 1\nbad\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("view of a history with <- then -> rounds") {
  auto inst = four_symbol_instance();
  Word w{{0, Link::kLeft, 0}, {1, Link::kLeft, 1}, {2, Link::kRight, 2},
         {3, Link::kRight, 3}};
  View expected{{0, Link::kLeft, 0}, {1, Link::kLeft, 1},
                {2, Link::kRight, kBottom}, {3, Link::kRight, kBottom}};
  CHECK(view(1, w) == expected);
  std::string rendered;
  for (const auto& l : view(1, w)) rendered += format_view_letter(inst, l) + ";";
  CHECK(rendered == "a0 <- b0;a1 <- b1;a2 -> _;a3 -> _;");
}

TEST_CASE("views of histories with <-> and - rounds") {
  Word silent{{0, Link::kEmpty, 0}, {1, Link::kEmpty, 1}, {2, Link::kEmpty, 2},
              {3, Link::kEmpty, 3}};
  for (const auto& l : view(1, silent)) CHECK(l.x2 == kBottom);
  Word mixed{{0, Link::kLeft, 0}, {1, Link::kBoth, 1}, {2, Link::kRight, 2},
             {3, Link::kLeft, 3}};
  View v = view(1, mixed);
  for (size_t i = 0; i < v.size(); ++i) CHECK(v[i] == ViewLetter{mixed[i].x1, mixed[i].link, mixed[i].x2});
}

TEST_CASE("view edge cases") {
  CHECK(view(1, Word{}).empty());
  CHECK(view(2, Word{}).empty());
  CHECK_THROWS_AS(view(3, Word{}), Error);
}

TEST_CASE("view agrees with the visibility oracle") {
  auto inst = four_symbol_instance();
  Rng rng(7);
  for (int t = 0; t < 1000; ++t) {
    Word w = testing::random_word(inst, rng, testing::uniform(rng, 0, 8));
    for (int p : {1, 2}) {
      View v = view(p, w);
      REQUIRE(v == testing::oracle_view(p, w));
      REQUIRE(v.size() == w.size());
      for (size_t i = 0; i < w.size(); ++i) REQUIRE(v[i].link == w[i].link);
    }
  }
}

TEST_CASE("view after a both-ways round is the full history") {
  auto inst = four_symbol_instance();
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    Word w = testing::random_word(inst, rng, testing::uniform(rng, 0, 6));
    w.push_back(Signal{1, Link::kBoth, 2});
    for (int p : {1, 2}) {
      View v = view(p, w);
      for (size_t i = 0; i < w.size(); ++i)
        CHECK(v[i] == ViewLetter{w[i].x1, w[i].link, w[i].x2});
    }
  }
}

TEST_CASE("equal views imply equal link sequences") {
  auto inst = make_instance({"0", "1"}, {"0", "1"}, {"0", "1"}, {"0", "1"},
                            {Link::kEmpty, Link::kLeft, Link::kRight, Link::kBoth});
  Rng rng(3);
  for (int t = 0; t < 2000; ++t) {
    int n = testing::uniform(rng, 1, 4);
    Word a = testing::random_word(inst, rng, n);
    Word b = testing::random_word(inst, rng, n);
    for (int p : {1, 2}) {
      if (view(p, a) != view(p, b)) continue;
      for (int i = 0; i < n; ++i) CHECK(a[i].link == b[i].link);
    }
  }
}

TEST_CASE("blocks of the block-start input") {
  auto inst = testing::binary_instance({Link::kLeft, Link::kRight});
  Word w = parse_word(inst, testing::read_data_file("block_start_input.txt"));
  REQUIRE(w.size() == 10);
  auto b = blocks(w);
  std::vector<size_t> lengths;
  for (const auto& blk : b) lengths.push_back(blk.size());
  CHECK(lengths == std::vector<size_t>{1, 3, 2, 1, 2, 1});
  CHECK(blocks(Word{w[0]}).size() == 1);
  CHECK(blocks(Word{}).empty());
}

TEST_CASE("blocks reconstruct the word and split at link changes") {
  auto inst = testing::binary_instance({Link::kLeft, Link::kRight, Link::kBoth});
  Rng rng(5);
  for (int t = 0; t < 1000; ++t) {
    Word w = testing::random_word(inst, rng, 20);
    auto b = blocks(w);
    Word joined;
    std::vector<size_t> starts;
    for (const auto& blk : b) {
      starts.push_back(joined.size());
      for (const auto& s : blk) CHECK(s.link == blk.front().link);
      joined.insert(joined.end(), blk.begin(), blk.end());
    }
    CHECK(joined == w);
    std::vector<size_t> scan{0};
    for (size_t i = 1; i < w.size(); ++i)
      if (w[i].link != w[i - 1].link) scan.push_back(i);
    CHECK(starts == scan);
  }
}

TEST_CASE("outcome of a constant algorithm") {
  auto inst = testing::binary_instance({Link::kLeft, Link::kRight});
  DistributedAlgorithm f{[](const View&) { return 1; },
                         [](const View&) { return 1; }};
  Rng rng(1);
  Word w = testing::random_word(inst, rng, 12);
  auto e = outcome(f, w);
  REQUIRE(e.size() == w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    CHECK(e[i].signal == w[i]);
    CHECK(e[i].out == OutputPair{1, 1});
  }
}

TEST_CASE("outcome feeds the view of each prefix") {
  auto inst = testing::binary_instance({Link::kLeft, Link::kRight, Link::kBoth});
  // Each process outputs the parity of the number of visible 1-inputs.
  auto parity_of = [](const View& v) {
    int c = 0;
    for (const auto& l : v) c += (l.x1 == 1) + (l.x2 == 1);
    return c % 2;
  };
  DistributedAlgorithm f{parity_of, parity_of};
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    Word w = testing::random_word(inst, rng, 12);
    auto e = outcome(f, w);
    for (size_t r = 0; r < w.size(); ++r) {
      Word prefix(w.begin(), w.begin() + static_cast<long>(r) + 1);
      CHECK(e[r].out.y1 == parity_of(testing::oracle_view(1, prefix)));
      CHECK(e[r].out.y2 == parity_of(testing::oracle_view(2, prefix)));
    }
  }
}

TEST_CASE("lasso indexing") {
  Lasso<int> l{{1, 2}, {3, 4, 5}};
  CHECK(l.positions() == 5);
  CHECK(l.at(0) == 1);
  CHECK(l.at(2) == 3);
  CHECK(l.at(7) == 5);
  CHECK(l.next(4) == 2);
  Lasso<int> bad{{1}, {}};
  CHECK_THROWS_AS(bad.check(), Error);
}

}  // namespace
}  // namespace dynsynth
