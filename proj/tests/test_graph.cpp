// Copyright 2026 The wlperm Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "wlperm/error.hpp"
#include "wlperm/graph.hpp"

using namespace wlperm;

TEST_CASE("graph6 decodes K4 and the empty graph") {
  const Graph k4 = parse_graph6("C~");
  CHECK(k4 == complete_graph(4));
  CHECK(k4.edge_count() == 6);
  const Graph empty = parse_graph6("?");
  CHECK(empty.n() == 0);
  CHECK(to_graph6(empty) == "?");
}

TEST_CASE("graph6 errors carry a kind") {
  auto kind_of = [](const char* s) {
    try {
      parse_graph6(s);
    } catch (const ParseError& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  CHECK(kind_of("C") == static_cast<int>(ParseErrorKind::kTruncated));
  CHECK(kind_of("Cr~") == static_cast<int>(ParseErrorKind::kTrailingData));
  CHECK(kind_of("C\x01") == static_cast<int>(ParseErrorKind::kBadCharacter));
  CHECK(kind_of("") == static_cast<int>(ParseErrorKind::kMalformedHeader));
  CHECK_THROWS_AS(parse_graph6("D~~", 4), std::exception);
}

TEST_CASE("graph6 round trip on every graph up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      CHECK(parse_graph6(to_graph6(g)) == g);
      CHECK(graph_from_json(to_json(g)) == g);
    }
  }
}

TEST_CASE("graph6 with a hand-built bit string") {
  // P4 0-1-2-3: upper triangle bits (0,1)(0,2)(1,2)(0,3)(1,3)(2,3) = 101001.
  const Graph p4 = path_graph(4);
  CHECK(to_graph6(p4) == std::string{"C"} + static_cast<char>(0b101001 + 63));
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(3)) == empty_graph(3));
  const Graph cp4 = complement(path_graph(4));
  CHECK(cp4.adjacent(0, 2));
  CHECK(cp4.adjacent(0, 3));
  CHECK(cp4.adjacent(1, 3));
  CHECK(cp4.edge_count() == 3);
  CHECK(oracle::isomorphic(cp4, path_graph(4)));
  CHECK(oracle::isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
}

TEST_CASE("induced subgraphs") {
  const Graph c5 = cycle_graph(5);
  const std::vector<int> four{0, 1, 2, 3};
  CHECK(oracle::isomorphic(induced(c5, four), path_graph(4)));
  CHECK(induced(c5, std::vector<int>{}).n() == 0);
  CHECK(induced(c5, c5.vertices()) == c5);
}

TEST_CASE("connectivity") {
  const Graph c5 = cycle_graph(5);
  CHECK(is_connected(c5));
  CHECK(is_coconnected(c5));
  CHECK_FALSE(is_connected(disjoint_union(complete_graph(3), complete_graph(1))));
  CHECK_FALSE(is_coconnected(complete_graph(4)));
  CHECK(components(empty_graph(3)).size() == 3);
}

TEST_CASE("enumeration matches labeled brute force and Burnside") {
  CHECK(enumerate_graphs(0).size() == 1);
  for (int n = 1; n <= 5; ++n) {
    CHECK(enumerate_graphs(n).size() == oracle::labeled_class_count(n));
  }
  CHECK(enumerate_graphs(6).size() == oracle::burnside_count(6));
  CHECK(oracle::burnside_count(6) == 156);
  CHECK_THROWS_AS(enumerate_graphs(8), CapExceeded);
}

TEST_CASE("enumerated graphs are pairwise non-isomorphic") {
  const auto gs = enumerate_graphs(5);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      CHECK_FALSE(oracle::isomorphic(gs[i], gs[j]));
    }
  }
}

TEST_CASE("isomorphism oracle") {
  const Graph p4 = path_graph(4);
  const auto f = are_isomorphic(p4, complement(p4));
  REQUIRE(f.has_value());
  CHECK(is_isomorphism(p4, complement(p4), *f));
  CHECK_FALSE(are_isomorphic(cycle_graph(5), path_graph(5)).has_value());
  CHECK(is_isomorphism(p4, p4, VertexBijection::identity(4)));
  CHECK_THROWS_AS(are_isomorphic(empty_graph(9), empty_graph(9)), CapExceeded);
  for (const Graph& g : enumerate_graphs(5)) {
    const Graph h = relabel(g, VertexBijection({4, 2, 0, 3, 1}));
    CHECK(are_isomorphic(g, h).has_value());
  }
}

TEST_CASE("canonical form is relabeling invariant") {
  for (const Graph& g : enumerate_graphs(6)) {
    const Graph h = relabel(g, VertexBijection({5, 3, 1, 0, 2, 4}));
    CHECK(canonical_form(g) == canonical_form(h));
  }
}

TEST_CASE("bijections") {
  const VertexBijection f({2, 0, 1});
  CHECK(f.then(f.inverse()) == VertexBijection::identity(3));
  CHECK_THROWS_AS(VertexBijection({0, 0}), InvalidArgument);
}
