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
#include "wlperm/modular.hpp"

using namespace wlperm;

namespace {

Graph gem() { return add_universal_vertex(path_graph(4)); }

VertexSet set_of(std::initializer_list<int> vs) {
  VertexSet s;
  for (int v : vs) s.insert(v);
  return s;
}

// Independent twin test: same open (or closed) neighbourhood.
bool oracle_twins(const Graph& g, int u, int v, bool closed) {
  for (int w = 0; w < g.n(); ++w) {
    if (w == u || w == v) continue;
    if (g.adjacent(u, w) != g.adjacent(v, w)) return false;
  }
  return u == v || g.adjacent(u, v) == closed;
}

}  // namespace

TEST_CASE("twin equivalences") {
  const Graph k33 = complete_bipartite(3, 3);
  const VertexEquivalence z = zero_twin_equivalence(k33);
  CHECK(z.class_count() == 2);
  CHECK(z.related(0, 2));
  CHECK_FALSE(z.related(0, 3));
  CHECK(one_twin_equivalence(complete_graph(4)).class_count() == 1);
  CHECK(zero_twin_equivalence(gem()).is_discrete());
  CHECK(one_twin_equivalence(gem()).is_discrete());
  CHECK_FALSE(is_reducible(gem()));
  CHECK(is_reducible(cycle_graph(4)));
}

TEST_CASE("twin classes agree with a pairwise oracle") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const VertexEquivalence z = zero_twin_equivalence(g);
      const VertexEquivalence o = one_twin_equivalence(g);
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          CHECK(z.related(u, v) == oracle_twins(g, u, v, false));
          CHECK(o.related(u, v) == oracle_twins(g, u, v, true));
        }
      }
    }
  }
}

TEST_CASE("composition test") {
  const Graph c4 = cycle_graph(4);
  const VertexSet ground = VertexSet::range(4);
  CHECK(is_composition_wrt(c4, VertexEquivalence::from_classes(ground, {set_of({0, 2}), set_of({1, 3})})));
  CHECK_FALSE(is_composition_wrt(path_graph(4), VertexEquivalence::from_classes(
                                                    ground, {set_of({0, 1}), set_of({2, 3})})));
  CHECK(is_composition_wrt(gem(), VertexEquivalence::discrete(VertexSet::range(5))));
}

TEST_CASE("quotients") {
  const Graph k2 = complete_graph(2);
  CHECK(quotient_graph(cycle_graph(4), zero_twin_equivalence(cycle_graph(4))) == k2);
  const Graph k33 = complete_bipartite(3, 3);
  CHECK(quotient_graph(k33, zero_twin_equivalence(k33)) == k2);
  CHECK(quotient_graph(gem(), VertexEquivalence::discrete(VertexSet::range(5))) == gem());
}

TEST_CASE("omega of an arc") {
  const OmegaOfArc g = omega_of(gem(), {0, 1});
  CHECK(g.vertices == set_of({0, 1, 2, 3}));
  CHECK(oracle::isomorphic(g.subgraph, path_graph(4)));
  CHECK(omega_of(path_graph(4), {0, 1}).vertices == VertexSet::range(4));
  CHECK(omega_of(complete_graph(2), {0, 1}).vertices == VertexSet::range(2));
}

TEST_CASE("sim equivalence") {
  const VertexEquivalence s = sim_equivalence(gem());
  REQUIRE(s.class_count() == 2);
  CHECK(s.related(0, 3));
  CHECK_FALSE(s.related(0, 4));
  CHECK(quotient_graph(gem(), s) == complete_graph(2));
  CHECK(is_uniquely_orientable(induced(gem(), set_of({0, 1, 2, 3}))));
  CHECK_THROWS_AS(sim_equivalence(path_graph(4)), InvalidArgument);
  CHECK_THROWS_AS(sim_equivalence(cycle_graph(4)), InvalidArgument);
}

TEST_CASE("arcs between modules stay in one class") {
  const BetweenModulesReport r = check_between_modules(gem());
  CHECK(r.ok());
  CHECK(r.arcs_checked > 0);
}

TEST_CASE("canonical decomposition examples") {
  CHECK(canonical_decomposition(path_graph(4)).kind == TreeKind::kUniquelyOrientableLeaf);

  const ModularTree c4 = canonical_decomposition(cycle_graph(4));
  CHECK(c4.kind == TreeKind::kComposition);
  CHECK(c4.rule == CompositionRule::kZeroTwin);
  CHECK(c4.quotient == complete_graph(2));
  REQUIRE(c4.children.size() == 2);
  for (const ModularTree& child : c4.children) {
    CHECK(child.graph == empty_graph(2));
    CHECK(child.is_leaf());
  }

  const ModularTree g = canonical_decomposition(gem());
  CHECK(g.rule == CompositionRule::kSim);
  CHECK(g.quotient == complete_graph(2));
  REQUIRE(g.children.size() == 2);
  CHECK(g.children[0].kind == TreeKind::kUniquelyOrientableLeaf);
  CHECK(oracle::isomorphic(g.children[0].graph, path_graph(4)));
  CHECK(g.children[1].kind == TreeKind::kSingletonLeaf);

  const ModularTree k3 = canonical_decomposition(complete_graph(3));
  CHECK(k3.rule == CompositionRule::kOneTwin);
  CHECK(k3.children.size() == 3);

  CHECK_THROWS_AS(canonical_decomposition(cycle_graph(5)), InvalidArgument);
}

TEST_CASE("decomposition invariants over all permutation graphs") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      if (!is_permutation_graph(g)) continue;
      const ModularTree t = canonical_decomposition(g);
      CHECK(check_tree_invariants(t).empty());
      CHECK(recompose(t) == g);
    }
  }
}
