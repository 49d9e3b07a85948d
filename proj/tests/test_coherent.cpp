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
#include "wlperm/coherent.hpp"
#include "wlperm/error.hpp"
#include "wlperm/graph.hpp"
#include "wlperm/modular.hpp"

using namespace wlperm;

namespace {

CoherentConfiguration discrete_cc(int n) {
  std::vector<std::uint32_t> colors(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = static_cast<std::uint32_t>(i);
  return CoherentConfiguration(n, colors);
}

std::uint32_t edge_color(const CoherentConfiguration& cc, const Graph& g) {
  auto [u, v] = g.edges().front();
  return cc.color(u, v);
}

std::uint32_t non_edge_color(const CoherentConfiguration& cc, const Graph& g) {
  for (int u = 0; u < g.n(); ++u) {
    for (int v = 0; v < g.n(); ++v) {
      if (u != v && !g.adjacent(u, v)) return cc.color(u, v);
    }
  }
  return 0;
}

}  // namespace

TEST_CASE("closure ranks match automorphism orbit counts") {
  for (int n = 2; n <= 5; ++n) CHECK(wl_closure(complete_graph(n)).rank() == 2);
  const Graph p3 = path_graph(3);
  CHECK(wl_closure(p3).rank() == 5);
  CHECK(oracle::pair_orbit_count(p3) == 5);
  CHECK(wl_closure(cycle_graph(5)).rank() == 3);
  CHECK(oracle::pair_orbit_count(cycle_graph(5)) == 3);
}

TEST_CASE("closure partition agrees with a naive refinement") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const CoherentConfiguration cc = wl_closure(g);
      const oracle::Matrix m = oracle::naive_closure(g);
      CHECK(oracle::same_pairs_partition(
          n, [&](int a, int b) { return cc.color(a, b); }, [&](int a, int b) { return m[a][b]; }));
      CHECK(verify_coherence(cc).ok);
    }
  }
}

TEST_CASE("coherence axioms") {
  // K3 with one edge singled out breaks the structure-constant axiom.
  std::vector<std::uint32_t> colors{0, 1, 2, 1, 0, 2, 2, 2, 0};
  const CoherenceReport r = verify_coherence(CoherentConfiguration(3, colors));
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.violation.empty());
  CHECK(verify_coherence(discrete_cc(4)).ok);
  CHECK(discrete_cc(4).rank() == 16);
}

TEST_CASE("structure constants of the pentagon") {
  const Graph c5 = cycle_graph(5);
  const CoherentConfiguration cc = wl_closure(c5);
  const std::uint32_t e = edge_color(cc, c5);
  const std::uint32_t ne = non_edge_color(cc, c5);
  CHECK(structure_constant(cc, e, e, ne) == 1);
  CHECK(structure_constant(cc, e, e, e) == 0);
  const std::uint32_t d = cc.color(0, 0);
  CHECK(structure_constant(cc, d, d, d) == 1);
  // Common neighbours of the non-adjacent pair (0, 2), counted directly.
  int common = 0;
  for (int x = 0; x < 5; ++x) common += (c5.adjacent(0, x) && c5.adjacent(x, 2)) ? 1 : 0;
  CHECK(common == 1);
}

TEST_CASE("fibers") {
  const std::vector<PointSet> p3 = fibers(wl_closure(path_graph(3)));
  CHECK(p3 == std::vector<PointSet>{{0, 2}, {1}});
  CHECK(fibers(wl_closure(cycle_graph(5))).size() == 1);
  CHECK(fibers(discrete_cc(3)).size() == 3);
}

TEST_CASE("parabolics") {
  const CoherentConfiguration c4 = wl_closure(cycle_graph(4));
  CHECK(is_partial_parabolic(c4, make_partial_parabolic({{0, 2}, {1, 3}})));
  const CoherentConfiguration p3 = wl_closure(path_graph(3));
  CHECK(is_partial_parabolic(p3, make_partial_parabolic({{0}, {1}, {2}})));
  const CoherentConfiguration k3 = wl_closure(complete_graph(3));
  CHECK_FALSE(is_partial_parabolic(k3, make_partial_parabolic({{0, 1}, {2}})));
  for (const PartialParabolic& e : parabolics(c4)) CHECK(is_partial_parabolic(c4, e));
}

TEST_CASE("indecomposable components") {
  const CoherentConfiguration p3 = wl_closure(path_graph(3));
  const IndecomposableSplit s = indecomposable_components(p3, make_partial_parabolic({{0}, {1}, {2}}));
  REQUIRE(s.components.size() == 2);
  CHECK(s.components[0].classes == std::vector<PointSet>{{0}, {2}});
  CHECK(s.components[1].classes == std::vector<PointSet>{{1}});
  CHECK(indecomposable_components(p3, make_partial_parabolic({{0, 1, 2}})).components.size() == 1);

  const CoherentConfiguration sum = direct_sum(wl_closure(complete_graph(2)), wl_closure(complete_graph(3)));
  const PartialParabolic id = make_partial_parabolic({{0}, {1}, {2}, {3}, {4}});
  CHECK(indecomposable_components(sum, id).components.size() == 2);
}

TEST_CASE("restriction and quotient") {
  const CoherentConfiguration r = restriction(wl_closure(path_graph(3)), {0, 2});
  CHECK(r.points() == 2);
  CHECK(r.rank() == 2);
  const Graph c4 = cycle_graph(4);
  const CoherentConfiguration q =
      quotient(wl_closure(c4), make_partial_parabolic({{0, 2}, {1, 3}}));
  CHECK(q.points() == 2);
  CHECK(q.rank() == 2);
  CHECK(same_partition(q, wl_closure(complete_graph(2))));
  const CoherentConfiguration p4 = wl_closure(path_graph(4));
  CHECK(same_partition(quotient(p4, make_partial_parabolic({{0}, {1}, {2}, {3}})), p4));
  CHECK_THROWS_AS(restriction(p4, {0, 1}), InvalidArgument);
}

TEST_CASE("direct sum and tensor") {
  const CoherentConfiguration k1 = wl_closure(complete_graph(1));
  const CoherentConfiguration two = direct_sum(k1, k1);
  CHECK(two.points() == 2);
  CHECK(two.rank() == 4);
  CHECK(is_discrete(two));
  const CoherentConfiguration k2 = wl_closure(complete_graph(2));
  const CoherentConfiguration t = tensor(k2, k2);
  CHECK(t.points() == 4);
  CHECK(t.rank() == 4);
  CHECK(verify_coherence(t).ok);
  const CoherentConfiguration p4 = wl_closure(path_graph(4));
  CHECK(same_partition(direct_sum(p4, CoherentConfiguration(0, {})), p4));
}

TEST_CASE("individualization") {
  CHECK(is_discrete(individualize(wl_closure(path_graph(3)), {0})));
  const CoherentConfiguration c5 = individualize(wl_closure(cycle_graph(5)), {0});
  CHECK_FALSE(is_discrete(c5));
  CHECK(c5.color(1, 1) == c5.color(4, 4));
  CHECK(same_partition(individualize(discrete_cc(3), {1}), discrete_cc(3)));
  CHECK(is_discrete(discrete_cc(3)));
  CHECK_FALSE(is_discrete(wl_closure(cycle_graph(5))));
}

TEST_CASE("spanning transitive tournament closes to discrete") {
  const int n = 6;
  Relation tour(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) tour.insert(a, b);
  }
  CHECK(is_discrete(wl_closure(n, {tour})));
}

TEST_CASE("fingerprints are relabeling invariant and separating") {
  const Graph p4 = path_graph(4);
  const Fingerprint a = canonical_fingerprint(wl_closure(p4));
  const Fingerprint b = canonical_fingerprint(wl_closure(relabel(p4, VertexBijection({2, 0, 3, 1}))));
  CHECK(a == b);
  CHECK_FALSE(a == canonical_fingerprint(wl_closure(cycle_graph(4))));
  CHECK(refines(wl_closure(p4), wl_closure(complete_graph(4))));
  for (const Graph& g : enumerate_graphs(5)) {
    CHECK(same_partition(wl_closure(g), wl_closure(complement(g))));
  }
}
