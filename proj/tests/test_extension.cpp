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
#include "wlperm/extension.hpp"
#include "wlperm/graph.hpp"

using namespace wlperm;

namespace {

bool is_union_of_fibers(const CoherentConfiguration& cc, const PointSet& s) {
  for (const PointSet& f : fibers(cc)) {
    int inside = 0;
    for (int p : f) inside += std::binary_search(s.begin(), s.end(), p) ? 1 : 0;
    if (inside != 0 && inside != static_cast<int>(f.size())) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("2-extension basics") {
  const Extension2 k2 = extend2(wl_closure(complete_graph(2)));
  CHECK(k2.ext.points() == 4);
  CHECK(verify_coherence(k2.ext).ok);
  CHECK(is_union_of_fibers(k2.ext, k2.diag()));
  CHECK(k2.diag() == PointSet{0, 3});

  const Extension2 k1 = extend2(wl_closure(complete_graph(1)));
  CHECK(k1.ext.points() == 1);
  CHECK(is_discrete(k1.ext));

  const Extension2 p4 = extend2(wl_closure(path_graph(4)));
  CHECK(p4.ext.points() == 16);
  CHECK(p4.point(2, 3) == 11);
  CHECK(p4.coords(11) == std::pair<int, int>{2, 3});
  CHECK_THROWS_AS(extend2(wl_closure(path_graph(5)), 4), CapExceeded);
}

TEST_CASE("cylinder relations") {
  const int n = 2;
  const Relation id = Relation::identity(n);
  const Relation c = cyl(id, 1, 1);
  REQUIRE(c.points() == 4);
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) CHECK(c.contains(p, q) == (p / n == q / n));
  }
  const Relation all = cyl(Relation::full(n), 1, 2);
  CHECK(all.size() == 16);
}

TEST_CASE("2-closure") {
  const CoherentConfiguration c5 = wl_closure(cycle_graph(5));
  const CoherentConfiguration m5 = m_closure(extend2(c5));
  CHECK(m5.rank() == 3);
  CHECK(same_partition(m5, c5));
  const CoherentConfiguration p4 = wl_closure(path_graph(4));
  CHECK(refines(m_closure(extend2(p4)), p4));
  const CoherentConfiguration k1 = wl_closure(complete_graph(1));
  CHECK(same_partition(m_closure(extend2(k1)), k1));
}

TEST_CASE("individualized extension of the path on four vertices") {
  const Graph p4 = path_graph(4);
  const Extension2 x = extend2(wl_closure(p4));
  const Graph cp4 = complement(p4);
  for (auto [a, b] : p4.edges()) {
    for (auto [c, d] : cp4.edges()) {
      CHECK(is_discrete(individualized_extension(x, x.point(a, b), x.point(c, d))));
      CHECK(is_discrete(individualized_extension(x, x.point(b, a), x.point(d, c))));
    }
  }
  const Extension2 c5 = extend2(wl_closure(cycle_graph(5)));
  const CoherentConfiguration y = individualized_extension(c5, c5.point(0, 1), c5.point(0, 2));
  CHECK(refines(y, c5.ext));
}

TEST_CASE("k-WL fingerprints") {
  const Graph c4 = cycle_graph(4);
  const Graph k4 = complete_graph(4);
  CHECK(k_wl_fingerprint(c4, 1) == k_wl_fingerprint(relabel(c4, VertexBijection({1, 2, 3, 0})), 1));
  CHECK_FALSE(k_wl_fingerprint(c4, 2) == k_wl_fingerprint(k4, 2));
  // Two disjoint triangles versus the hexagon: both 2-regular.
  const Graph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
  const Graph c6 = cycle_graph(6);
  CHECK(k_wl_fingerprint(two_triangles, 1) == k_wl_fingerprint(c6, 1));
  CHECK_FALSE(k_wl_fingerprint(two_triangles, 2) == k_wl_fingerprint(c6, 2));
  CHECK(k_wl_colors(c4, 3).size() == 64);
}

TEST_CASE("two-iso check") {
  const Graph p4 = path_graph(4);
  const TwoIsoResult r = two_iso_check(p4, complement(p4));
  CHECK(r.verdict == TwoIsoVerdict::kEquivalent);
  REQUIRE(r.witness.has_value());
  CHECK(is_isomorphism(p4, complement(p4), *r.witness));
  CHECK(oracle::isomorphic(p4, complement(p4)));
  CHECK(two_iso_check(cycle_graph(5), path_graph(5)).verdict == TwoIsoVerdict::kDistinct);
  const TwoIsoResult same = two_iso_check(p4, p4);
  CHECK(same.verdict == TwoIsoVerdict::kEquivalent);
  CHECK(same.witness.has_value());
}
