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

// Gamma-relation, implication classes and transitive orientations; the
// comparability / permutation / unique-orientability predicates built on
// top of them.

#ifndef WLPERM_COMPARABILITY_HPP_
#define WLPERM_COMPARABILITY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"
#include "wlperm/graph.hpp"

namespace wlperm {

struct ImplicationPartition {
  // Classes are ordered by their least arc.
  std::vector<ArcSet> classes;
  // reversal[i] is the index of classes[i]* (== i when the class is
  // self-reversed, which only happens for non-comparability graphs).
  std::vector<int> reversal;

  int reversal_pairs() const;
  // Index of the class containing `a`, or -1.
  int class_of(Arc a) const;
};

// An orientation A of a graph: A & A* empty, A | A* = E.
class Orientation {
 public:
  Orientation() = default;
  // Throws InvalidArgument unless `arcs` orients `g`.
  Orientation(const Graph& g, ArcSet arcs);

  const ArcSet& arcs() const { return arcs_; }
  bool is_transitive() const;

  bool operator==(const Orientation&) const = default;

 private:
  ArcSet arcs_;
};

struct RecognitionReport {
  bool is_comparability = false;
  bool is_co_comparability = false;
  bool is_permutation = false;
  bool is_upo = false;
  bool is_uniquely_orientable = false;
  std::optional<Orientation> witness_orientation;
  std::optional<Orientation> witness_co_orientation;
  std::optional<int> violating_class;
  // A | A-bar, present for permutation graphs.
  std::optional<ArcSet> tournament;
};

// True iff e1, e2 are Gamma-related arcs of g.  Both must be edges.
bool gamma_related(const Graph& g, Arc e1, Arc e2);

// I_X(e).  For an arc of the complement, call with complement(g).
ArcSet implication_class(const Graph& g, Arc e);
// Implication class of `e` in the graph whose (symmetric) arc set is `edges`.
ArcSet implication_class_in(const ArcSet& edges, Arc e);

ImplicationPartition implication_partition(const Graph& g);

// Iterative class-by-class assembly; the result is checked to be transitive.
std::optional<Orientation> transitive_orientation(const Graph& g);
bool is_comparability(const Graph& g);

inline constexpr int kDefaultOrientationEdgeCap = 20;

// Exhaustive count of transitive orientations (search over edge directions
// with local pruning; independent of implication classes).
std::uint64_t count_transitive_orientations(const Graph& g,
                                            int max_edges = kDefaultOrientationEdgeCap);
// Every transitive orientation, each as an arc set.  Same cap as above.
std::vector<ArcSet> all_transitive_orientations(const Graph& g,
                                                int max_edges = kDefaultOrientationEdgeCap);

// At most two transitive orientations.
bool is_upo(const Graph& g);
// The per-arc-pair identity I(e) | I(e)* | I(f) | I(f)* = Omega^2 \ 1 over all
// e in E, f in E-bar.  Vacuously true when E or E-bar is empty.
bool satisfies_unique_orientation_identity(const Graph& g);
// Permutation graph whose graph and complement are both UPO.  Returns false
// for non-permutation input.
bool is_uniquely_orientable(const Graph& g);
bool is_permutation_graph(const Graph& g);
RecognitionReport recognize(const Graph& g);

// A | B for transitive orientations A of X and B of X-bar; the result is
// checked to be a transitive tournament.
ArcSet union_tournament(const Graph& x, const ArcSet& a, const ArcSet& b);
bool is_transitive_tournament(const ArcSet& r, VertexSet on);

nlohmann::json to_json(const Orientation& o);
nlohmann::json to_json(const ImplicationPartition& p);
nlohmann::json to_json(const RecognitionReport& r);

}  // namespace wlperm

#endif  // WLPERM_COMPARABILITY_HPP_
