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
#include "wlperm/comparability.hpp"
#include "wlperm/error.hpp"
#include "wlperm/graph.hpp"

using namespace wlperm;

namespace {

Graph gem() { return add_universal_vertex(path_graph(4)); }
Graph prism() { return complement(cycle_graph(6)); }

ArcSet arcs_of(int n, std::initializer_list<Arc> list) {
  ArcSet a(n);
  for (Arc x : list) a.insert(x);
  return a;
}

}  // namespace

TEST_CASE("gamma relation") {
  const Graph p4 = path_graph(4);
  CHECK(gamma_related(p4, {0, 1}, {2, 1}));
  const Graph k3 = complete_graph(3);
  CHECK_FALSE(gamma_related(k3, {0, 1}, {0, 2}));
  for (auto [u, v] : gem().edges()) CHECK(gamma_related(gem(), {u, v}, {u, v}));
}

TEST_CASE("implication classes") {
  const Graph p4 = path_graph(4);
  CHECK(implication_class(p4, {0, 1}) == arcs_of(4, {{0, 1}, {2, 1}, {2, 3}}));
  CHECK(implication_class(complete_graph(3), {0, 1}) == arcs_of(3, {{0, 1}}));
  const ArcSet c = implication_class(cycle_graph(5), {0, 1});
  CHECK(c.intersects(c.reversed()));
}

TEST_CASE("implication partition") {
  const ImplicationPartition p4 = implication_partition(path_graph(4));
  REQUIRE(p4.classes.size() == 2);
  CHECK(p4.classes[0].size() == 3);
  CHECK(p4.classes[1] == p4.classes[0].reversed());
  CHECK(p4.reversal_pairs() == 1);
  CHECK(implication_partition(complete_graph(3)).classes.size() == 6);
  CHECK(implication_partition(empty_graph(4)).classes.empty());
}

TEST_CASE("comparability against brute-force orientation search") {
  CHECK_FALSE(is_comparability(cycle_graph(5)));
  CHECK_FALSE(is_comparability(prism()));
  CHECK(is_comparability(cycle_graph(6)));
  CHECK(oracle::orientation_count(prism()) == 0);
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      CHECK(is_comparability(g) == oracle::comparability(g));
      CHECK(is_permutation_graph(g) == oracle::permutation_graph(g));
    }
  }
}

TEST_CASE("transitive orientation witnesses") {
  const auto p4 = transitive_orientation(path_graph(4));
  REQUIRE(p4.has_value());
  const ArcSet forward = arcs_of(4, {{0, 1}, {2, 1}, {2, 3}});
  CHECK((p4->arcs() == forward || p4->arcs() == forward.reversed()));
  const auto k3 = transitive_orientation(complete_graph(3));
  REQUIRE(k3.has_value());
  CHECK(k3->is_transitive());
  CHECK(is_transitive_tournament(k3->arcs(), VertexSet::range(3)));
  CHECK_FALSE(transitive_orientation(cycle_graph(5)).has_value());
  CHECK(transitive_orientation(cycle_graph(6))->is_transitive());
}

TEST_CASE("orientation counts agree with brute force") {
  CHECK(count_transitive_orientations(path_graph(4)) == 2);
  CHECK(count_transitive_orientations(complete_graph(3)) == 6);
  CHECK(count_transitive_orientations(cycle_graph(5)) == 0);
  CHECK(count_transitive_orientations(prism()) == 0);
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      CHECK(count_transitive_orientations(g) == oracle::orientation_count(g));
    }
  }
  CHECK_THROWS_AS(count_transitive_orientations(complete_graph(7)), CapExceeded);
}

TEST_CASE("upo and unique orientability") {
  CHECK(is_upo(path_graph(4)));
  CHECK(is_uniquely_orientable(path_graph(4)));
  CHECK_FALSE(is_upo(complete_graph(3)));
  CHECK_FALSE(is_uniquely_orientable(gem()));
  CHECK(oracle::orientation_count(gem()) > 2);
  CHECK_FALSE(is_coconnected(gem()));
}

TEST_CASE("recognition") {
  const RecognitionReport p4 = recognize(path_graph(4));
  CHECK(p4.is_permutation);
  CHECK(p4.witness_orientation.has_value());
  CHECK(p4.witness_co_orientation.has_value());
  CHECK_FALSE(recognize(cycle_graph(5)).is_permutation);
  CHECK_FALSE(recognize(cycle_graph(6)).is_permutation);
  CHECK(recognize(cycle_graph(6)).is_comparability);
  int accepted = 0;
  for (const Graph& g : enumerate_graphs(5)) accepted += recognize(g).is_permutation ? 1 : 0;
  CHECK(accepted == 33);
  for (const Graph& g : enumerate_graphs(4)) CHECK(is_permutation_graph(g));
}

TEST_CASE("union of orientations is a transitive tournament") {
  const Graph p4 = path_graph(4);
  const auto a = transitive_orientation(p4);
  const auto b = transitive_orientation(complement(p4));
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  const ArcSet t = union_tournament(p4, a->arcs(), b->arcs());
  CHECK(is_transitive_tournament(t, p4.vertices()));
  const auto e = transitive_orientation(complement(empty_graph(4)));
  CHECK(is_transitive_tournament(union_tournament(empty_graph(4), ArcSet(4), e->arcs()),
                                 VertexSet::range(4)));
  const auto k = transitive_orientation(complete_graph(4));
  CHECK(is_transitive_tournament(union_tournament(complete_graph(4), k->arcs(), ArcSet(4)),
                                 VertexSet::range(4)));
}
