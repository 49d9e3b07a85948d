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
#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "wlperm/error.hpp"
#include "wlperm/graph.hpp"
#include "wlperm/verify.hpp"

using namespace wlperm;

namespace {

Graph gem() { return add_universal_vertex(path_graph(4)); }

bool clean(const Outcome& o) { return !o.skipped && !o.guard_anomaly && o.problems.empty(); }

}  // namespace

TEST_CASE("Burnside counts agree with the test-side count") {
  for (int n = 0; n <= 7; ++n) CHECK(burnside_graph_count(n) == oracle::burnside_count(n));
  CHECK(burnside_graph_count(7) == 1044);
}

TEST_CASE("seeded helpers are deterministic") {
  const auto p = seeded_permutation(7, 99);
  CHECK(p == seeded_permutation(7, 99));
  auto sorted = p;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK(graph_seed(1, gem()) == graph_seed(1, gem()));
  CHECK(graph_seed(1, gem()) != graph_seed(2, gem()));
}

TEST_CASE("parallel map keeps order and captures exceptions") {
  const auto outs = parallel_map(20, 3, [](std::size_t i) {
    if (i == 7) throw std::runtime_error("boom");
    Outcome o;
    o.counters["i"] = static_cast<std::int64_t>(i);
    return o;
  });
  REQUIRE(outs.size() == 20);
  CHECK(outs[3].counters.at("i") == 3);
  CHECK(outs[19].counters.at("i") == 19);
  CHECK_FALSE(outs[7].problems.empty());
}

TEST_CASE("per-graph checks on small named graphs") {
  const Graph p4 = path_graph(4);
  const Graph c4 = cycle_graph(4);
  const Graph k3 = complete_graph(3);

  CHECK(clean(check_recognition(gem())));
  CHECK(clean(check_implication_lemma(p4)));
  CHECK(check_implication_lemma(cycle_graph(5)).skipped);
  CHECK(clean(check_tournament_lemma(p4)));
  CHECK(clean(check_uniquely_connected(p4, kDefaultOracleCap)));

  const Outcome gem_gamma = check_gammarel_parabolics(gem(), 16);
  CHECK(clean(gem_gamma));
  CHECK(gem_gamma.counters.at("e2_instances") == 1);
  const Outcome p4_gamma = check_gammarel_parabolics(p4, 16);
  CHECK(clean(p4_gamma));
  CHECK(p4_gamma.counters.count("e2_instances") == 0);

  const Outcome p4_all = check_uniquely_discrete(p4, 1, -1, 16);
  CHECK(clean(p4_all));
  CHECK(p4_all.counters.at("pairs") == 36);
  CHECK(check_uniquely_discrete(complete_graph(2), 1, -1, 16).skipped);

  for (const Graph& g : {c4, gem(), k3}) {
    CHECK(clean(check_decomposition_visibility(g, 16)));
    CHECK(clean(check_composition_transport(g, 1, kDefaultOracleCap)));
    CHECK(clean(check_twin_parabolic(g)));
  }
  CHECK(clean(check_sim_classes(gem())));
  CHECK(clean(check_cylinders(p4, 16)));
  CHECK(clean(check_engine(gem(), 3, 10)));
  CHECK(clean(check_tournament_closure(5, 8)));
}

TEST_CASE("suites pass on the corpus up to five vertices") {
  VerifyOptions opt;
  opt.max_n = 5;
  opt.tournament_instances = 20;
  opt.engine_sample = 5;
  opt.engine_relabelings = 5;
  for (const std::string& name : suite_names()) {
    const LemmaReport r = run_suite(name, opt);
    INFO(name);
    CHECK(r.passed());
    CHECK(r.instances > 0);
  }
}

TEST_CASE("identification records collisions at k = 1 without failing") {
  VerifyOptions opt;
  opt.max_n = 6;
  opt.k = 1;
  const LemmaReport r = run_suite("identification", opt);
  CHECK(r.observational);
  CHECK(r.passed());
  CHECK(r.counters.at("collisions") > 0);
  CHECK(r.counters.at("resolved_at_k3") == r.counters.at("collisions"));
}

TEST_CASE("suite argument errors") {
  VerifyOptions opt;
  CHECK_THROWS_AS(run_suite("no-such-suite", opt), InvalidArgument);
  opt.max_n = 8;
  CHECK_THROWS_AS(run_suite("recognition", opt), CapExceeded);
}

TEST_CASE("report serialisation") {
  VerifyOptions opt;
  opt.max_n = 4;
  const LemmaReport r = run_suite("recognition", opt);
  const nlohmann::json j = to_json(r);
  CHECK(j["id"] == "recognition");
  CHECK(j["passed"] == true);
  CHECK(to_text(r).find("recognition") != std::string::npos);
}
