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

#include "wlperm/comparability.hpp"

#include <string>

#include "wlperm/error.hpp"

namespace wlperm {

namespace {

void require_edge(const Graph& g, Arc a, const char* what) {
  if (a.tail < 0 || a.head < 0 || a.tail >= g.n() || a.head >= g.n() ||
      !g.adjacent(a.tail, a.head)) {
    throw InvalidArgument(std::string(what) + ": (" + std::to_string(a.tail) + "," +
                          std::to_string(a.head) + ") is not an edge");
  }
}

}  // namespace

int ImplicationPartition::reversal_pairs() const {
  int pairs = 0;
  for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
    if (reversal[i] >= i) ++pairs;
  }
  return pairs;
}

int ImplicationPartition::class_of(Arc a) const {
  for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
    if (classes[i].contains(a)) return i;
  }
  return -1;
}

Orientation::Orientation(const Graph& g, ArcSet arcs) : arcs_(std::move(arcs)) {
  const ArcSet e = g.arcs();
  if (arcs_.ground_size() != g.n() || arcs_.intersects(arcs_.reversed()) ||
      !((arcs_ | arcs_.reversed()) == e)) {
    throw InvalidArgument("Orientation: arc set does not orient the graph");
  }
}

bool Orientation::is_transitive() const { return arcs_.compose(arcs_).is_subset_of(arcs_); }

bool gamma_related(const Graph& g, Arc e1, Arc e2) {
  require_edge(g, e1, "gamma_related");
  require_edge(g, e2, "gamma_related");
  return (e1.tail == e2.tail && !g.adjacent(e1.head, e2.head)) ||
         (e1.head == e2.head && !g.adjacent(e1.tail, e2.tail));
}

ArcSet implication_class_in(const ArcSet& edges, Arc e) {
  ArcSet cls(edges.ground_size());
  std::vector<Arc> stack{e};
  cls.insert(e);
  while (!stack.empty()) {
    const Arc cur = stack.back();
    stack.pop_back();
    // (a, b) ~ (a, b') when b, b' are not adjacent.
    for (int b2 : edges.row(cur.tail) - edges.row(cur.head)) {
      if (b2 == cur.head || cls.contains(cur.tail, b2)) continue;
      cls.insert(cur.tail, b2);
      stack.push_back({cur.tail, b2});
    }
    // (a, b) ~ (a', b) when a, a' are not adjacent.
    for (int a2 : edges.row(cur.head) - edges.row(cur.tail)) {
      if (a2 == cur.tail || cls.contains(a2, cur.head)) continue;
      cls.insert(a2, cur.head);
      stack.push_back({a2, cur.head});
    }
  }
  return cls;
}

ArcSet implication_class(const Graph& g, Arc e) {
  require_edge(g, e, "implication_class");
  return implication_class_in(g.arcs(), e);
}

ImplicationPartition implication_partition(const Graph& g) {
  ImplicationPartition p;
  const ArcSet edges = g.arcs();
  ArcSet assigned(g.n());
  for (Arc a : edges.arcs()) {
    if (assigned.contains(a)) continue;
    ArcSet cls = implication_class_in(edges, a);
    assigned = assigned | cls;
    p.classes.push_back(std::move(cls));
  }
  p.reversal.resize(p.classes.size());
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    p.reversal[i] = p.class_of(p.classes[i].first()->reversed());
  }
  return p;
}

std::optional<Orientation> transitive_orientation(const Graph& g) {
  ArcSet remaining = g.arcs();
  ArcSet chosen(g.n());
  while (auto least = remaining.first()) {
    const ArcSet cls = implication_class_in(remaining, *least);
    const ArcSet rev = cls.reversed();
    if (cls.intersects(rev)) return std::nullopt;
    chosen = chosen | cls;
    remaining = remaining - cls - rev;
  }
  if (!chosen.compose(chosen).is_subset_of(chosen)) return std::nullopt;
  return Orientation(g, std::move(chosen));
}

bool is_comparability(const Graph& g) { return transitive_orientation(g).has_value(); }

namespace {

// Depth-first search over edge directions.  A partial orientation is
// rejected as soon as it contains a directed 2-path p->q->r with p, r
// non-adjacent or a directed triangle.
class OrientationSearch {
 public:
  OrientationSearch(const Graph& g, bool collect) : g_(g), collect_(collect), dir_(g.n()) {
    edges_ = g.edges();
  }

  void run(std::size_t k) {
    if (k == edges_.size()) {
      ++count_;
      if (collect_) found_.push_back(dir_);
      return;
    }
    const auto [u, v] = edges_[k];
    for (const Arc a : {Arc{u, v}, Arc{v, u}}) {
      dir_.insert(a);
      if (locally_consistent(a)) run(k + 1);
      dir_.erase(a);
    }
  }

  std::uint64_t count() const { return count_; }
  std::vector<ArcSet>& found() { return found_; }

 private:
  bool locally_consistent(Arc a) const {
    const int p = a.tail;
    const int q = a.head;
    for (int r = 0; r < g_.n(); ++r) {
      if (r == p || r == q) continue;
      if (dir_.contains(q, r) && !g_.adjacent(p, r)) return false;
      if (dir_.contains(r, p) && !g_.adjacent(r, q)) return false;
      if (dir_.contains(q, r) && dir_.contains(r, p)) return false;
    }
    return true;
  }

  const Graph& g_;
  bool collect_;
  ArcSet dir_;
  std::vector<std::pair<int, int>> edges_;
  std::uint64_t count_ = 0;
  std::vector<ArcSet> found_;
};

void check_edge_cap(const Graph& g, int max_edges) {
  if (g.edge_count() > max_edges) {
    throw CapExceeded("orientation enumeration: " + std::to_string(g.edge_count()) +
                      " edges exceed cap " + std::to_string(max_edges));
  }
}

}  // namespace

std::uint64_t count_transitive_orientations(const Graph& g, int max_edges) {
  check_edge_cap(g, max_edges);
  OrientationSearch s(g, false);
  s.run(0);
  return s.count();
}

std::vector<ArcSet> all_transitive_orientations(const Graph& g, int max_edges) {
  check_edge_cap(g, max_edges);
  OrientationSearch s(g, true);
  s.run(0);
  return std::move(s.found());
}

bool is_upo(const Graph& g) {
  if (!is_comparability(g)) return true;  // no transitive orientation at all
  return implication_partition(g).reversal_pairs() <= 1;
}

bool satisfies_unique_orientation_identity(const Graph& g) {
  const Graph co = complement(g);
  const ImplicationPartition px = implication_partition(g);
  const ImplicationPartition pc = implication_partition(co);
  const ArcSet full = ArcSet::product(g.vertices(), g.vertices(), g.n()) -
                      ArcSet::identity(g.vertices(), g.n());
  for (const ArcSet& c : px.classes) {
    const ArcSet cc = c | c.reversed();
    for (const ArcSet& d : pc.classes) {
      if (!((cc | d | d.reversed()) == full)) return false;
    }
  }
  return true;
}

bool is_permutation_graph(const Graph& g) {
  return is_comparability(g) && is_comparability(complement(g));
}

bool is_uniquely_orientable(const Graph& g) {
  if (!is_permutation_graph(g)) return false;
  const Graph co = complement(g);
  if (g.edge_count() == 0 || co.edge_count() == 0) return is_upo(g) && is_upo(co);
  return satisfies_unique_orientation_identity(g);
}

bool is_transitive_tournament(const ArcSet& r, VertexSet on) {
  const int n = r.ground_size();
  for (int u = 0; u < n; ++u) {
    if (!on.contains(u)) {
      if (!r.row(u).empty()) return false;
      continue;
    }
    if (r.contains(u, u) || !r.row(u).is_subset_of(on)) return false;
    for (int v : on) {
      if (v != u && r.contains(u, v) == r.contains(v, u)) return false;
    }
  }
  return r.compose(r).is_subset_of(r);
}

ArcSet union_tournament(const Graph& x, const ArcSet& a, const ArcSet& b) {
  const Orientation oa(x, a);
  const Orientation ob(complement(x), b);
  if (!oa.is_transitive() || !ob.is_transitive()) {
    throw InvalidArgument("union_tournament: inputs must be transitive orientations");
  }
  ArcSet t = a | b;
  if (!is_transitive_tournament(t, x.vertices())) {
    throw InternalCheckFailed("union_tournament: A | B is not a transitive tournament");
  }
  return t;
}

RecognitionReport recognize(const Graph& g) {
  RecognitionReport r;
  const Graph co = complement(g);
  r.witness_orientation = transitive_orientation(g);
  r.witness_co_orientation = transitive_orientation(co);
  r.is_comparability = r.witness_orientation.has_value();
  r.is_co_comparability = r.witness_co_orientation.has_value();
  r.is_permutation = r.is_comparability && r.is_co_comparability;
  if (!r.is_comparability) {
    const ImplicationPartition p = implication_partition(g);
    for (int i = 0; i < static_cast<int>(p.classes.size()); ++i) {
      if (p.reversal[i] == i) {
        r.violating_class = i;
        break;
      }
    }
  }
  r.is_upo = r.is_comparability ? implication_partition(g).reversal_pairs() <= 1 : true;
  r.is_uniquely_orientable = is_uniquely_orientable(g);
  if (r.is_permutation) {
    r.tournament = union_tournament(g, r.witness_orientation->arcs(),
                                    r.witness_co_orientation->arcs());
  }
  return r;
}

nlohmann::json to_json(const Orientation& o) { return to_json(o.arcs()); }

nlohmann::json to_json(const ImplicationPartition& p) {
  nlohmann::json classes = nlohmann::json::array();
  for (const ArcSet& c : p.classes) classes.push_back(to_json(c));
  return {{"classes", std::move(classes)}, {"reversal_pairing", p.reversal}};
}

nlohmann::json to_json(const RecognitionReport& r) {
  nlohmann::json j = {
      {"is_comparability", r.is_comparability},
      {"is_co_comparability", r.is_co_comparability},
      {"is_permutation", r.is_permutation},
      {"is_upo", r.is_upo},
      {"is_uniquely_orientable", r.is_uniquely_orientable},
      {"witness_orientation", nullptr},
      {"witness_co_orientation", nullptr},
      {"violating_class", nullptr},
  };
  if (r.witness_orientation) j["witness_orientation"] = to_json(*r.witness_orientation);
  if (r.witness_co_orientation) j["witness_co_orientation"] = to_json(*r.witness_co_orientation);
  if (r.violating_class) j["violating_class"] = *r.violating_class;
  return j;
}

}  // namespace wlperm
