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

// Executable checkers for the structural statements, run over exhaustive
// small-graph corpora against brute-force oracles.

#ifndef WLPERM_VERIFY_HPP_
#define WLPERM_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "wlperm/graph.hpp"

namespace wlperm {

struct Violation {
  std::string graph6;
  std::string detail;
  bool operator==(const Violation&) const = default;
};

struct LemmaReport {
  std::string id;
  std::string statement;
  std::string corpus;
  std::int64_t instances = 0;
  std::int64_t skipped = 0;
  std::int64_t guard_anomalies = 0;
  std::vector<Violation> violations;  // sorted by graph6
  std::map<std::string, std::int64_t> counters;
  std::vector<std::string> notes;
  // Observational reports never fail.
  bool observational = false;
  double wall_seconds = 0;

  bool passed() const { return observational || (violations.empty() && guard_anomalies == 0); }
};

struct VerifyOptions {
  int max_n = 6;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  int jobs = 1;
  int sample_pairs = 25;        // per graph, above the exhaustive order
  int exhaustive_up_to = 6;     // orders checked on all arc pairs
  int tournament_instances = 200;
  int tournament_max_points = 8;
  int engine_sample = 50;
  int engine_relabelings = 100;
  int k = 2;
  int extension_cap = 16;
  int oracle_cap = kDefaultOracleCap;
  int enumeration_cap = kDefaultEnumerationCap;
};

// Result of one per-graph check.
struct Outcome {
  bool skipped = false;
  bool guard_anomaly = false;
  std::vector<std::string> problems;
  std::map<std::string, std::int64_t> counters;
};

// Per-graph checkers (exposed for unit tests; suites map them over corpora).
Outcome check_recognition(const Graph& g);
Outcome check_implication_lemma(const Graph& g);
Outcome check_tournament_lemma(const Graph& g);
Outcome check_uniquely_connected(const Graph& g, int oracle_cap);
Outcome check_sim_classes(const Graph& g);
Outcome check_twin_parabolic(const Graph& g);
Outcome check_composition_transport(const Graph& g, std::uint64_t seed, int oracle_cap);
Outcome check_gammarel_parabolics(const Graph& g, int ext_cap);
// `max_pairs` < 0 means all pairs.
Outcome check_uniquely_discrete(const Graph& g, std::uint64_t seed, int max_pairs, int ext_cap);
Outcome check_decomposition_visibility(const Graph& g, int ext_cap);
Outcome check_cylinders(const Graph& g, int ext_cap);
Outcome check_engine(const Graph& g, std::uint64_t seed, int relabelings);

// Closure of a spanning transitive tournament plus random extra relations
// on at most `max_points` points.
Outcome check_tournament_closure(std::uint64_t seed, int max_points);

// Graph count on n vertices by Burnside's lemma over S_n.
std::uint64_t burnside_graph_count(int n);

// Exhaustive corpora, cached: all graphs with 1 <= order <= max_n.
const std::vector<Graph>& graphs_of_order(int n, int cap = kDefaultEnumerationCap);
std::vector<Graph> graphs_up_to(int max_n, int cap = kDefaultEnumerationCap);

// Seed for per-graph sampling; independent of corpus order.
std::uint64_t graph_seed(std::uint64_t seed, const Graph& g);
// Random permutation of 0..n-1 (portable Fisher-Yates over mt19937_64).
std::vector<int> seeded_permutation(int n, std::uint64_t seed);

// Ordered suite names, excluding "all".
const std::vector<std::string>& suite_names();
// Throws InvalidArgument for an unknown suite.
LemmaReport run_suite(const std::string& name, const VerifyOptions& options);

// Applies fn to every index in [0, count) on `jobs` workers; results are
// returned in index order.
std::vector<Outcome> parallel_map(std::size_t count, int jobs,
                                  const std::function<Outcome(std::size_t)>& fn);

nlohmann::json to_json(const LemmaReport& r);
std::string to_text(const LemmaReport& r);

}  // namespace wlperm

#endif  // WLPERM_VERIFY_HPP_
