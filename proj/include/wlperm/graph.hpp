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

// Finite simple undirected graphs on dense vertex ids 0..n-1 (n <= 64),
// ordered-pair relations over the same ground set, graph6 / JSON
// interchange, exhaustive small-graph enumeration and a brute-force
// isomorphism oracle.

#ifndef WLPERM_GRAPH_HPP_
#define WLPERM_GRAPH_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace wlperm {

inline constexpr int kMaxVertices = 64;

// A subset of 0..63 stored as a bitmask.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet of(std::span<const int> vertices);

  std::uint64_t bits() const { return bits_; }
  bool contains(int v) const { return (bits_ >> v) & 1U; }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  int min() const { return std::countr_zero(bits_); }

  void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }
  std::vector<int> to_vector() const;

  bool operator==(const VertexSet&) const = default;
  auto operator<=>(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

struct Arc {
  int tail = 0;
  int head = 0;

  Arc reversed() const { return {head, tail}; }
  bool operator==(const Arc&) const = default;
  auto operator<=>(const Arc&) const = default;
};

// A set of ordered pairs over 0..n-1 (row-wise bitmasks).  Loops are
// representable so that relations such as 1_Delta and e * (E - e) can be
// formed; orientation-type callers keep their sets irreflexive.
class ArcSet {
 public:
  ArcSet() = default;
  explicit ArcSet(int n);

  int ground_size() const { return static_cast<int>(rows_.size()); }
  bool contains(int u, int v) const { return rows_[u].contains(v); }
  bool contains(Arc a) const { return contains(a.tail, a.head); }
  void insert(int u, int v) { rows_[u].insert(v); }
  void insert(Arc a) { insert(a.tail, a.head); }
  void erase(int u, int v) { rows_[u].erase(v); }
  void erase(Arc a) { erase(a.tail, a.head); }
  VertexSet row(int u) const { return rows_[u]; }

  int size() const;
  bool empty() const;
  bool is_irreflexive() const;
  std::vector<Arc> arcs() const;  // lexicographic order
  std::optional<Arc> first() const;

  ArcSet reversed() const;
  ArcSet compose(const ArcSet& other) const;  // this . other
  ArcSet operator|(const ArcSet& o) const;
  ArcSet operator&(const ArcSet& o) const;
  ArcSet operator-(const ArcSet& o) const;
  bool is_subset_of(const ArcSet& o) const;
  bool intersects(const ArcSet& o) const;
  // Vertices incident to at least one arc.
  VertexSet incident_vertices() const;

  bool operator==(const ArcSet&) const = default;

  static ArcSet identity(VertexSet on, int n);
  static ArcSet product(VertexSet a, VertexSet b, int n);

 private:
  std::vector<VertexSet> rows_;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  // Builds a graph from a symmetric irreflexive relation.
  static Graph from_arcs(const ArcSet& arcs);

  int n() const { return n_; }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  VertexSet vertices() const { return VertexSet::range(n_); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
  ArcSet arcs() const;                             // E as ordered pairs

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// Bijection 0..n-1 -> 0..n-1 (the witness type of isomorphism checks).
class VertexBijection {
 public:
  VertexBijection() = default;
  explicit VertexBijection(std::vector<int> image);
  static VertexBijection identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[v]; }
  const std::vector<int>& image() const { return image_; }
  VertexBijection inverse() const;
  VertexBijection then(const VertexBijection& next) const;

  bool operator==(const VertexBijection&) const = default;

 private:
  std::vector<int> image_;
};

// E^f: vertex v of g becomes f(v).
Graph relabel(const Graph& g, const VertexBijection& f);
// True iff f maps E(g) onto E(h).
bool is_isomorphism(const Graph& g, const Graph& h, const VertexBijection& f);

Graph complement(const Graph& g);
// Vertex i of the result is subset[i].
Graph induced(const Graph& g, std::span<const int> subset);
Graph induced(const Graph& g, VertexSet subset);
bool is_connected(const Graph& g);
bool is_coconnected(const Graph& g);
// Vertex sets of the connected components, ordered by least vertex.
std::vector<VertexSet> components(const Graph& g);

// graph6 interchange.  `max_vertices` bounds the accepted order.
Graph parse_graph6(std::string_view text, int max_vertices = kMaxVertices);
std::string to_graph6(const Graph& g);
// Parses every non-empty line (an optional ">>graph6<<" header is skipped).
std::vector<Graph> parse_graph6_lines(std::string_view text,
                                      int max_vertices = kMaxVertices);

// JSON schema {"n": int, "edges": [[u, v], ...]} with u < v.
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ArcSet& arcs);  // list of [u, v]

// Standard small graphs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int a, int b);
Graph disjoint_union(const Graph& a, const Graph& b);
// Adds a vertex adjacent to every existing vertex.
Graph add_universal_vertex(const Graph& g);

// Canonical relabeling: isomorphic graphs produce identical results.
// Exhaustive within the cells of an isomorphism-invariant ordered vertex
// partition; intended for n <= 10.
Graph canonical_form(const Graph& g);

inline constexpr int kDefaultEnumerationCap = 7;
inline constexpr int kDefaultOracleCap = 8;

// One representative (in canonical form) per isomorphism class of graphs on
// n vertices, ordered by (edge count, graph6).
std::vector<Graph> enumerate_graphs(int n, int cap = kDefaultEnumerationCap);

// Exhaustive search for f with E(g)^f = E(h).
std::optional<VertexBijection> are_isomorphic(const Graph& g, const Graph& h,
                                              int cap = kDefaultOracleCap);

}  // namespace wlperm

#endif  // WLPERM_GRAPH_HPP_
