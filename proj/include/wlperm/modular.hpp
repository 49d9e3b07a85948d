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

// Twin equivalences, composition graphs, the ~ relation on irreducible
// permutation graphs and the canonical recursive modular decomposition.

#ifndef WLPERM_MODULAR_HPP_
#define WLPERM_MODULAR_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "wlperm/comparability.hpp"
#include "wlperm/graph.hpp"

namespace wlperm {

// Equivalence relation on `ground`; classes sorted by least vertex.
struct VertexEquivalence {
  VertexSet ground;
  std::vector<VertexSet> classes;

  static VertexEquivalence discrete(VertexSet ground);
  // Normalises class order; throws InvalidArgument if `classes` do not
  // partition `ground`.
  static VertexEquivalence from_classes(VertexSet ground, std::vector<VertexSet> classes);

  bool is_discrete() const;
  int class_count() const { return static_cast<int>(classes.size()); }
  int class_of(int v) const;
  bool related(int u, int v) const;
  // The relation as ordered pairs (including the diagonal).
  ArcSet as_relation(int n) const;

  bool operator==(const VertexEquivalence&) const = default;
};

VertexEquivalence zero_twin_equivalence(const Graph& g);
VertexEquivalence one_twin_equivalence(const Graph& g);
bool is_reducible(const Graph& g);

// e * (E - e) = E - e = (E - e) * e, cross-checked against the
// "every pair of classes is empty or complete bipartite" formulation.
bool is_composition_wrt(const Graph& g, const VertexEquivalence& e);
// Vertex i of the result is e.classes[i].
Graph quotient_graph(const Graph& g, const VertexEquivalence& e);
// X0[X_1, ..., X_k]: module i carries graph parts[i] on the vertices of
// modules[i] (in increasing order).
Graph compose_graph(const Graph& quotient, const std::vector<VertexSet>& modules,
                    const std::vector<Graph>& parts, int n);

struct OmegaOfArc {
  VertexSet vertices;  // Omega(e)
  Graph subgraph;      // X(e), induced in X or X-bar
  bool in_complement = false;
};

// Omega(e) and X(e) for an arc of E or E-bar.
OmegaOfArc omega_of(const Graph& g, Arc e);

// The ~ relation.  Requires an irreducible permutation graph that is not
// uniquely orientable.
VertexEquivalence sim_equivalence(const Graph& g);

struct BetweenModulesReport {
  int arcs_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Implication-class containment between distinct ~ classes.
BetweenModulesReport check_between_modules(const Graph& g);

enum class TreeKind { kSingletonLeaf, kUniquelyOrientableLeaf, kComposition };
enum class CompositionRule { kZeroTwin, kOneTwin, kSim };

const char* to_string(TreeKind kind);
const char* to_string(CompositionRule rule);

struct ModularTree {
  TreeKind kind = TreeKind::kSingletonLeaf;
  CompositionRule rule = CompositionRule::kZeroTwin;
  Graph graph;                // this node's graph, local labels
  std::vector<int> vertices;  // local vertex i is vertices[i] of the root
  Graph quotient;
  // Equivalence that defines the composition (the twin equivalence or ~).
  VertexEquivalence equivalence;
  // Module partition used for the children; equals `equivalence` except when
  // a twin class spans the whole node (complete / edgeless graphs), where the
  // node splits into singletons.
  std::vector<VertexSet> modules;
  std::vector<ModularTree> children;

  bool is_leaf() const { return kind != TreeKind::kComposition; }
  int depth() const;
  int node_count() const;
};

// Requires a permutation graph.
ModularTree canonical_decomposition(const Graph& g);
// Substitutes children into quotients, bottom-up.
Graph recompose(const ModularTree& t);
// Returns an empty string when every tree invariant holds.
std::string check_tree_invariants(const ModularTree& t);

nlohmann::json to_json(const VertexEquivalence& e);
nlohmann::json to_json(const ModularTree& t);

}  // namespace wlperm

#endif  // WLPERM_MODULAR_HPP_
