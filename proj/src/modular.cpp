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

#include "wlperm/modular.hpp"

#include <algorithm>
#include <map>

#include "wlperm/error.hpp"

namespace wlperm {

// --- VertexEquivalence --------------------------------------------------

VertexEquivalence VertexEquivalence::discrete(VertexSet ground) {
  VertexEquivalence e;
  e.ground = ground;
  for (int v : ground) e.classes.push_back(VertexSet::single(v));
  return e;
}

VertexEquivalence VertexEquivalence::from_classes(VertexSet ground,
                                                  std::vector<VertexSet> classes) {
  VertexSet seen;
  for (VertexSet c : classes) {
    if (c.empty() || c.intersects(seen) || !c.is_subset_of(ground)) {
      throw InvalidArgument("VertexEquivalence: classes do not partition the ground set");
    }
    seen |= c;
  }
  if (!(seen == ground)) {
    throw InvalidArgument("VertexEquivalence: classes do not cover the ground set");
  }
  std::sort(classes.begin(), classes.end(),
            [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
  return VertexEquivalence{ground, std::move(classes)};
}

bool VertexEquivalence::is_discrete() const {
  return std::all_of(classes.begin(), classes.end(), [](VertexSet c) { return c.size() == 1; });
}

int VertexEquivalence::class_of(int v) const {
  for (int i = 0; i < class_count(); ++i) {
    if (classes[i].contains(v)) return i;
  }
  return -1;
}

bool VertexEquivalence::related(int u, int v) const {
  const int cu = class_of(u);
  return cu >= 0 && cu == class_of(v);
}

ArcSet VertexEquivalence::as_relation(int n) const {
  ArcSet r(n);
  for (VertexSet c : classes) r = r | ArcSet::product(c, c, n);
  return r;
}

// --- twins and compositions ---------------------------------------------

namespace {

VertexEquivalence group_by_key(const Graph& g, bool closed) {
  std::map<std::uint64_t, VertexSet> groups;
  for (int v = 0; v < g.n(); ++v) {
    VertexSet key = g.neighbors(v);
    if (closed) key.insert(v);
    groups[key.bits()].insert(v);
  }
  std::vector<VertexSet> classes;
  for (auto& [key, cls] : groups) classes.push_back(cls);
  return VertexEquivalence::from_classes(g.vertices(), std::move(classes));
}

}  // namespace

// Vertices with equal open neighbourhoods are never adjacent, so grouping
// by N(v) yields exactly the 0-twin classes; N[v] likewise for 1-twins.
VertexEquivalence zero_twin_equivalence(const Graph& g) { return group_by_key(g, false); }

VertexEquivalence one_twin_equivalence(const Graph& g) { return group_by_key(g, true); }

bool is_reducible(const Graph& g) {
  return !zero_twin_equivalence(g).is_discrete() || !one_twin_equivalence(g).is_discrete();
}

bool is_composition_wrt(const Graph& g, const VertexEquivalence& e) {
  if (!(e.ground == g.vertices())) {
    throw InvalidArgument("is_composition_wrt: equivalence does not cover the vertex set");
  }
  const int n = g.n();
  const ArcSet rel = e.as_relation(n);
  const ArcSet outside = g.arcs() - rel;
  const bool algebraic = rel.compose(outside) == outside && outside.compose(rel) == outside;

  bool blockwise = true;
  for (int i = 0; i < e.class_count() && blockwise; ++i) {
    for (int j = i + 1; j < e.class_count() && blockwise; ++j) {
      int cross = 0;
      for (int u : e.classes[i]) cross += (g.neighbors(u) & e.classes[j]).size();
      blockwise = cross == 0 || cross == e.classes[i].size() * e.classes[j].size();
    }
  }
  if (algebraic != blockwise) {
    throw InternalCheckFailed("is_composition_wrt: relation-algebra and blockwise tests disagree");
  }
  return algebraic;
}

Graph quotient_graph(const Graph& g, const VertexEquivalence& e) {
  if (!is_composition_wrt(g, e)) {
    throw InvalidArgument("quotient_graph: graph is not a composition w.r.t. the equivalence");
  }
  Graph q(e.class_count());
  for (int i = 0; i < e.class_count(); ++i) {
    for (int j = i + 1; j < e.class_count(); ++j) {
      if (g.neighbors(e.classes[i].min()).intersects(e.classes[j])) q.add_edge(i, j);
    }
  }
  return q;
}

Graph compose_graph(const Graph& quotient, const std::vector<VertexSet>& modules,
                    const std::vector<Graph>& parts, int n) {
  if (static_cast<int>(modules.size()) != quotient.n() || parts.size() != modules.size()) {
    throw InvalidArgument("compose_graph: quotient, modules and parts disagree in size");
  }
  Graph g(n);
  std::vector<std::vector<int>> members;
  for (std::size_t i = 0; i < modules.size(); ++i) {
    members.push_back(modules[i].to_vector());
    if (parts[i].n() != modules[i].size()) {
      throw InvalidArgument("compose_graph: part order differs from module size");
    }
    for (auto [a, b] : parts[i].edges()) g.add_edge(members[i][a], members[i][b]);
  }
  for (auto [i, j] : quotient.edges()) {
    for (int u : members[i]) {
      for (int v : members[j]) g.add_edge(u, v);
    }
  }
  return g;
}

OmegaOfArc omega_of(const Graph& g, Arc e) {
  if (e.tail < 0 || e.head < 0 || e.tail >= g.n() || e.head >= g.n()) {
    throw InvalidArgument("omega_of: arc out of range");
  }
  if (e.tail == e.head) throw InvalidArgument("omega_of: loops have no implication class");
  OmegaOfArc out;
  out.in_complement = !g.adjacent(e.tail, e.head);
  const Graph host = out.in_complement ? complement(g) : g;
  out.vertices = implication_class(host, e).incident_vertices();
  out.subgraph = induced(host, out.vertices);
  return out;
}

VertexEquivalence sim_equivalence(const Graph& g) {
  if (!is_permutation_graph(g)) throw InvalidArgument("sim_equivalence: not a permutation graph");
  if (is_reducible(g)) throw InvalidArgument("sim_equivalence: graph is reducible");
  if (is_uniquely_orientable(g)) {
    throw InvalidArgument("sim_equivalence: graph is uniquely orientable");
  }
  std::vector<VertexSet> blocks;
  for (const ArcSet& cls : implication_partition(g).classes) {
    const VertexSet omega = cls.incident_vertices();
    if (!is_uniquely_orientable(induced(g, omega))) continue;
    bool placed = false;
    for (VertexSet b : blocks) {
      if (b == omega) {
        placed = true;
      } else if (b.intersects(omega)) {
        throw InternalCheckFailed("sim_equivalence: Omega(e) sets overlap without coinciding");
      }
    }
    if (!placed) blocks.push_back(omega);
  }
  VertexSet covered;
  for (VertexSet b : blocks) covered |= b;
  for (int v : g.vertices() - covered) blocks.push_back(VertexSet::single(v));
  VertexEquivalence e = VertexEquivalence::from_classes(g.vertices(), std::move(blocks));
  if (e.class_count() < 2 || e.is_discrete()) {
    throw InternalCheckFailed("sim_equivalence: relation is trivial");
  }
  if (!is_composition_wrt(g, e)) {
    throw InternalCheckFailed("sim_equivalence: classes are not modules");
  }
  return e;
}

BetweenModulesReport check_between_modules(const Graph& g) {
  const VertexEquivalence e = sim_equivalence(g);
  const Graph co = complement(g);
  const int n = g.n();
  BetweenModulesReport report;
  for (int i = 0; i < e.class_count(); ++i) {
    for (int j = 0; j < e.class_count(); ++j) {
      if (i == j) continue;
      const VertexSet d = e.classes[i];
      const VertexSet d2 = e.classes[j];
      const ArcSet dd = ArcSet::product(d, d, n);
      const ArcSet d2d2 = ArcSet::product(d2, d2, n);
      const ArcSet cross = ArcSet::product(d, d2, n);
      const ArcSet back = ArcSet::product(d2, d, n);
      for (Arc a : cross.arcs()) {
        ++report.arcs_checked;
        const ArcSet cls = implication_class(g.adjacent(a.tail, a.head) ? g : co, a);
        auto fail = [&](const char* what) {
          report.violations.push_back("arc (" + std::to_string(a.tail) + "," +
                                      std::to_string(a.head) + "): " + what);
        };
        if (cls.intersects(dd)) fail("I(e) meets Delta x Delta");
        if (cls.intersects(d2d2)) fail("I(e) meets Delta' x Delta'");
        if (!cross.is_subset_of(cls)) fail("Delta x Delta' not inside I(e)");
        if (!back.is_subset_of(cls.reversed())) fail("Delta' x Delta not inside I(e)*");
      }
    }
  }
  return report;
}

// --- canonical decomposition -------------------------------------------

const char* to_string(TreeKind kind) {
  switch (kind) {
    case TreeKind::kSingletonLeaf:
      return "singleton_leaf";
    case TreeKind::kUniquelyOrientableLeaf:
      return "uniquely_orientable_leaf";
    case TreeKind::kComposition:
      return "composition";
  }
  return "?";
}

const char* to_string(CompositionRule rule) {
  switch (rule) {
    case CompositionRule::kZeroTwin:
      return "zero_twin";
    case CompositionRule::kOneTwin:
      return "one_twin";
    case CompositionRule::kSim:
      return "sim";
  }
  return "?";
}

int ModularTree::depth() const {
  int d = 0;
  for (const ModularTree& c : children) d = std::max(d, c.depth());
  return d + 1;
}

int ModularTree::node_count() const {
  int total = 1;
  for (const ModularTree& c : children) total += c.node_count();
  return total;
}

namespace {

ModularTree decompose(const Graph& g, std::vector<int> vertices) {
  ModularTree t;
  t.graph = g;
  t.vertices = std::move(vertices);
  if (g.n() <= 1) {
    t.kind = TreeKind::kSingletonLeaf;
    return t;
  }
  if (is_uniquely_orientable(g)) {
    t.kind = TreeKind::kUniquelyOrientableLeaf;
    return t;
  }
  t.kind = TreeKind::kComposition;
  if (VertexEquivalence z = zero_twin_equivalence(g); !z.is_discrete()) {
    t.rule = CompositionRule::kZeroTwin;
    t.equivalence = std::move(z);
  } else if (VertexEquivalence o = one_twin_equivalence(g); !o.is_discrete()) {
    t.rule = CompositionRule::kOneTwin;
    t.equivalence = std::move(o);
  } else {
    t.rule = CompositionRule::kSim;
    t.equivalence = sim_equivalence(g);
  }
  t.modules = t.equivalence.class_count() == 1
                  ? VertexEquivalence::discrete(g.vertices()).classes
                  : t.equivalence.classes;
  t.quotient =
      quotient_graph(g, VertexEquivalence::from_classes(g.vertices(), t.modules));
  for (VertexSet m : t.modules) {
    std::vector<int> sub;
    for (int v : m) sub.push_back(t.vertices[v]);
    t.children.push_back(decompose(induced(g, m), std::move(sub)));
  }
  return t;
}

void check_node(const ModularTree& t, std::string& err) {
  if (!err.empty()) return;
  const Graph& g = t.graph;
  if (static_cast<int>(t.vertices.size()) != g.n()) {
    err = "vertex map size differs from node order";
    return;
  }
  switch (t.kind) {
    case TreeKind::kSingletonLeaf:
      if (g.n() > 1) err = "singleton leaf with more than one vertex";
      return;
    case TreeKind::kUniquelyOrientableLeaf:
      if (g.n() < 2 || !is_uniquely_orientable(g)) err = "leaf is not uniquely orientable";
      return;
    case TreeKind::kComposition:
      break;
  }
  VertexEquivalence expected;
  switch (t.rule) {
    case CompositionRule::kZeroTwin:
      expected = zero_twin_equivalence(g);
      break;
    case CompositionRule::kOneTwin:
      expected = one_twin_equivalence(g);
      break;
    case CompositionRule::kSim:
      expected = sim_equivalence(g);
      break;
  }
  if (!(expected == t.equivalence)) {
    err = "stored equivalence differs from the rule's equivalence";
    return;
  }
  const VertexEquivalence mods = VertexEquivalence::from_classes(g.vertices(), t.modules);
  if (!is_composition_wrt(g, mods)) {
    err = "modules violate the composition identity";
    return;
  }
  const bool spanning_twin_class = t.equivalence.class_count() == 1;
  bool big_module = false;
  for (VertexSet m : t.modules) big_module = big_module || m.size() >= 2;
  if (!spanning_twin_class && (t.modules.size() < 2 || !big_module)) {
    err = "composition node is trivial";
    return;
  }
  if (spanning_twin_class && !mods.is_discrete()) {
    err = "spanning twin class must split into singletons";
    return;
  }
  if (t.children.size() != t.modules.size()) {
    err = "child count differs from module count";
    return;
  }
  for (std::size_t i = 0; i < t.modules.size(); ++i) {
    const ModularTree& c = t.children[i];
    if (c.graph.n() >= g.n()) {
      err = "module does not shrink";
      return;
    }
    if (!(c.graph == induced(g, t.modules[i]))) {
      err = "child graph is not the induced module subgraph";
      return;
    }
    std::size_t k = 0;
    for (int v : t.modules[i]) {
      if (c.vertices[k++] != t.vertices[v]) {
        err = "child vertex map inconsistent";
        return;
      }
    }
    check_node(c, err);
  }
  if (err.empty() && !(recompose(t) == g)) err = "recomposition differs from node graph";
}

}  // namespace

ModularTree canonical_decomposition(const Graph& g) {
  if (!is_permutation_graph(g)) {
    throw InvalidArgument("canonical_decomposition: not a permutation graph");
  }
  std::vector<int> ids(g.n());
  for (int v = 0; v < g.n(); ++v) ids[v] = v;
  return decompose(g, std::move(ids));
}

Graph recompose(const ModularTree& t) {
  if (t.is_leaf()) return t.graph;
  std::vector<Graph> parts;
  for (const ModularTree& c : t.children) parts.push_back(recompose(c));
  return compose_graph(t.quotient, t.modules, parts, t.graph.n());
}

std::string check_tree_invariants(const ModularTree& t) {
  std::string err;
  check_node(t, err);
  return err;
}

nlohmann::json to_json(const VertexEquivalence& e) {
  nlohmann::json classes = nlohmann::json::array();
  for (VertexSet c : e.classes) classes.push_back(c.to_vector());
  return classes;
}

nlohmann::json to_json(const ModularTree& t) {
  nlohmann::json j = {{"kind", to_string(t.kind)}, {"vertices", t.vertices}};
  if (t.kind != TreeKind::kComposition) return j;
  j["rule"] = to_string(t.rule);
  nlohmann::json modules = nlohmann::json::array();
  for (VertexSet m : t.modules) {
    std::vector<int> root;
    for (int v : m) root.push_back(t.vertices[v]);
    modules.push_back(root);
  }
  j["modules"] = std::move(modules);
  j["quotient"] = to_json(t.quotient);
  nlohmann::json children = nlohmann::json::array();
  for (const ModularTree& c : t.children) children.push_back(to_json(c));
  j["children"] = std::move(children);
  return j;
}

}  // namespace wlperm
