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

// Coherent configurations on points 0..N-1, the coherent closure (2-dim
// Weisfeiler-Leman stabilisation) and the surrounding algebra.

#ifndef WLPERM_COHERENT_HPP_
#define WLPERM_COHERENT_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "wlperm/graph.hpp"

namespace wlperm {

using PointSet = std::vector<int>;  // sorted, duplicate-free

// Dense binary relation on 0..N-1 (N may exceed 64).
class Relation {
 public:
  Relation() = default;
  explicit Relation(int n) : n_(n), bits_(static_cast<std::size_t>(n) * n, 0) {}
  static Relation from_arcs(const ArcSet& arcs);
  static Relation identity(int n);
  static Relation full(int n);
  // 1_S on the given points.
  static Relation identity_on(int n, const PointSet& points);

  int points() const { return n_; }
  bool contains(int a, int b) const { return bits_[index(a, b)] != 0; }
  void insert(int a, int b) { bits_[index(a, b)] = 1; }
  int size() const;

  bool operator==(const Relation&) const = default;

 private:
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }
  int n_ = 0;
  std::vector<std::uint8_t> bits_;
};

// 128-bit digest of the refinement history.
using Digest = std::array<std::uint64_t, 2>;

class CoherentConfiguration {
 public:
  CoherentConfiguration() = default;
  // Takes a colour matrix with ids 0..rank-1 (every id used).  No coherence
  // check; see verify_coherence.
  CoherentConfiguration(int points, std::vector<std::uint32_t> colors, Digest history = {});

  int points() const { return n_; }
  int rank() const { return rank_; }
  std::uint32_t color(int a, int b) const {
    return colors_[static_cast<std::size_t>(a) * n_ + b];
  }
  const std::vector<std::uint32_t>& colors() const { return colors_; }
  const Digest& history() const { return history_; }

  bool is_diagonal_color(std::uint32_t c) const;
  // Every pair of colour c, row-major order.
  std::vector<std::pair<int, int>> pairs_of(std::uint32_t c) const;

  bool operator==(const CoherentConfiguration&) const = default;

 private:
  int n_ = 0;
  int rank_ = 0;
  std::vector<std::uint32_t> colors_;
  Digest history_{};
};

// Stable refinement starting from the colouring by (label(a,b),
// label(b,a), a == b).  Colour ids are assigned canonically: each round
// sorts the signatures (old colour, multiset of (c(a,g), c(g,b))).
CoherentConfiguration refine_from_labels(int n, const std::vector<std::uint64_t>& labels);

// WL(seeds): the coarsest coherent configuration in which every seed is a
// union of colours.  At most 63 seeds.
CoherentConfiguration wl_closure(int n, const std::vector<Relation>& seeds);
// WL(X) = WL({E}).
CoherentConfiguration wl_closure(const Graph& g);

// One entry of the sparse structure-constant tensor: c_{rs}^t = count.
struct TensorEntry {
  std::uint32_t r = 0;
  std::uint32_t s = 0;
  int count = 0;
  bool operator==(const TensorEntry&) const = default;
};

struct CoherenceReport {
  bool ok = false;
  std::string violation;  // first violation, empty when ok
  // tensor[t]: non-zero c_{rs}^t sorted by (r, s); filled when ok.
  std::vector<std::vector<TensorEntry>> tensor;
};

CoherenceReport verify_coherence(const CoherentConfiguration& cc);
int structure_constant(const CoherentConfiguration& cc, std::uint32_t r, std::uint32_t s,
                       std::uint32_t t);
// reversal[c] = c*.  Throws InvalidArgument when a colour has no reverse.
std::vector<std::uint32_t> reversal_map(const CoherentConfiguration& cc);

// Fibers ordered by least point.
std::vector<PointSet> fibers(const CoherentConfiguration& cc);
bool is_homogeneity_set(const CoherentConfiguration& cc, const PointSet& delta);
bool is_union_of_colors(const CoherentConfiguration& cc, const Relation& r);
bool is_discrete(const CoherentConfiguration& cc);

// An equivalence on a subset of the points; classes sorted by least point.
struct PartialParabolic {
  std::vector<PointSet> classes;

  PointSet support() const;
  // Throws InvalidArgument unless the classes are non-empty, disjoint and
  // within range.
  void validate(int n) const;
  Relation as_relation(int n) const;
  bool operator==(const PartialParabolic&) const = default;
};

PartialParabolic make_partial_parabolic(std::vector<PointSet> classes);
bool is_partial_parabolic(const CoherentConfiguration& cc, const PartialParabolic& e);

inline constexpr int kDefaultParabolicBudget = 256;
// Full parabolics generated by single colours and their joins, at most
// `budget` of them, ordered by class count descending then classes.
std::vector<PartialParabolic> parabolics(const CoherentConfiguration& cc,
                                         int budget = kDefaultParabolicBudget);

struct IndecomposableSplit {
  std::vector<PartialParabolic> components;
  // Pi(e): the induced partition of Omega/e, as lists of class indices.
  std::vector<std::vector<int>> pi;
};

IndecomposableSplit indecomposable_components(const CoherentConfiguration& cc,
                                              const PartialParabolic& e);

// Point i of the result is delta[i]; colours keep their relative order.
CoherentConfiguration restriction(const CoherentConfiguration& cc, const PointSet& delta);
// Restriction to a class of a partial parabolic (not necessarily a
// homogeneity set).
CoherentConfiguration restriction_to_class(const CoherentConfiguration& cc,
                                           const PartialParabolic& e, int class_index);
// Points are the classes of e.
CoherentConfiguration quotient(const CoherentConfiguration& cc, const PartialParabolic& e);
CoherentConfiguration direct_sum(const CoherentConfiguration& a, const CoherentConfiguration& b);
// Point (x, y) is encoded as x * b.points() + y.
CoherentConfiguration tensor(const CoherentConfiguration& a, const CoherentConfiguration& b);
// Closure of cc's colours plus the singleton seeds 1_{p} (one per point, in
// order).
CoherentConfiguration individualize(const CoherentConfiguration& cc, const std::vector<int>& points);
// Point p of cc becomes f[p].
CoherentConfiguration relabel(const CoherentConfiguration& cc, const std::vector<int>& f);

// Partition comparisons on colour classes (ids ignored).
bool same_partition(const CoherentConfiguration& a, const CoherentConfiguration& b);
// True iff every colour class of `finer` lies in one colour class of
// `coarser`.
bool refines(const CoherentConfiguration& finer, const CoherentConfiguration& coarser);

struct Fingerprint {
  int points = 0;
  int rank = 0;
  std::vector<bool> diagonal;
  std::vector<std::uint32_t> reversal;
  std::vector<int> sizes;
  std::vector<std::vector<TensorEntry>> tensor;
  Digest history{};

  bool operator==(const Fingerprint&) const = default;
};

// Requires a coherent input whose colour ids are canonical (as produced by
// the closure routines); throws InvalidArgument on incoherent input.
Fingerprint canonical_fingerprint(const CoherentConfiguration& cc);

nlohmann::json to_json(const CoherentConfiguration& cc);
nlohmann::json to_json(const Fingerprint& f);
nlohmann::json to_json(const PartialParabolic& e);
std::string digest_hex(const Digest& d);

}  // namespace wlperm

#endif  // WLPERM_COHERENT_HPP_
