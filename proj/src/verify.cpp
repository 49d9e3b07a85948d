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

#include "wlperm/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "wlperm/coherent.hpp"
#include "wlperm/comparability.hpp"
#include "wlperm/error.hpp"
#include "wlperm/extension.hpp"
#include "wlperm/modular.hpp"

namespace wlperm {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t m) { return engine_() % m; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int max_edges(const Graph& g) { return g.n() * (g.n() - 1) / 2; }

std::string arc_str(Arc a) {
  return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

PartialParabolic to_parabolic(const std::vector<VertexSet>& classes) {
  std::vector<PointSet> out;
  for (VertexSet c : classes) out.push_back(c.to_vector());
  return make_partial_parabolic(std::move(out));
}

// Every transitive orientation of g and of its complement.
struct OrientationOracle {
  std::vector<ArcSet> of_graph;
  std::vector<ArcSet> of_complement;
};

OrientationOracle orientations(const Graph& g) {
  return {all_transitive_orientations(g, max_edges(g)),
          all_transitive_orientations(complement(g), max_edges(g))};
}

bool oracle_uniquely_orientable(const Graph& g) {
  const std::uint64_t a = count_transitive_orientations(g, max_edges(g));
  const std::uint64_t b = count_transitive_orientations(complement(g), max_edges(g));
  return a > 0 && b > 0 && a <= 2 && b <= 2;
}

// Some pair of distinct vertices with N(a) - b = N(b) - a.
bool oracle_reducible(const Graph& g) {
  for (int a = 0; a < g.n(); ++a) {
    for (int b = a + 1; b < g.n(); ++b) {
      VertexSet na = g.neighbors(a);
      VertexSet nb = g.neighbors(b);
      na.erase(b);
      nb.erase(a);
      if (na == nb) return true;
    }
  }
  return false;
}

}  // namespace

// --- helpers ---------------------------------------------------------------

std::uint64_t graph_seed(std::uint64_t seed, const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_graph6(g)) h = (h ^ c) * 0x100000001b3ULL;
  return mix64(seed ^ h);
}

std::vector<int> seeded_permutation(int n, std::uint64_t seed) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rng rng(seed);
  for (int i = n - 1; i > 0; --i) {
    std::swap(p[i], p[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  }
  return p;
}

std::uint64_t burnside_graph_count(int n) {
  if (n < 0 || n > 9) throw InvalidArgument("burnside_graph_count: need 0 <= n <= 9");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t sum = 0;
  std::uint64_t group = 0;
  do {
    ++group;
    // Orbits of the permutation on unordered pairs.
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    int orbits = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (seen[a * n + b]) continue;
        ++orbits;
        int x = a;
        int y = b;
        while (!seen[std::min(x, y) * n + std::max(x, y)]) {
          seen[std::min(x, y) * n + std::max(x, y)] = 1;
          x = perm[x];
          y = perm[y];
        }
      }
    }
    sum += std::uint64_t{1} << orbits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / group;
}

const std::vector<Graph>& graphs_of_order(int n, int cap) {
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_graphs(n, cap)).first;
  return it->second;
}

std::vector<Graph> graphs_up_to(int max_n, int cap) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    const auto& level = graphs_of_order(n, cap);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Outcome> parallel_map(std::size_t count, int jobs,
                                  const std::function<Outcome(std::size_t)>& fn) {
  std::vector<Outcome> out(count);
  auto guarded = [&](std::size_t i) {
    try {
      out[i] = fn(i);
    } catch (const std::exception& e) {
      out[i] = Outcome{};
      out[i].problems.push_back(std::string("exception: ") + e.what());
    }
  };
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) guarded(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) guarded(i);
    });
  }
  for (std::thread& t : workers) t.join();
  return out;
}

// --- per-graph checks --------------------------------------------------------

Outcome check_recognition(const Graph& g) {
  Outcome o;
  const Graph co = complement(g);
  const std::uint64_t cg = count_transitive_orientations(g, max_edges(g));
  const std::uint64_t cc = count_transitive_orientations(co, max_edges(g));
  const bool comp = is_comparability(g);
  const bool perm = is_permutation_graph(g);
  if (comp != (cg > 0)) {
    o.problems.push_back("is_comparability disagrees with " + std::to_string(cg) +
                         " brute-force orientations");
  }
  if (perm != (cg > 0 && cc > 0)) o.problems.push_back("is_permutation_graph disagrees with oracle");
  if (comp && is_upo(g) != (cg <= 2)) o.problems.push_back("is_upo disagrees with oracle");
  if (is_uniquely_orientable(g) != (cg > 0 && cc > 0 && cg <= 2 && cc <= 2)) {
    o.problems.push_back("is_uniquely_orientable disagrees with oracle");
  }
  if (auto t = transitive_orientation(g); t && !t->is_transitive()) {
    o.problems.push_back("witness orientation is not transitive");
  }
  o.counters["comparability"] = comp;
  o.counters["permutation"] = perm;
  o.counters["uniquely_orientable"] = is_uniquely_orientable(g);
  return o;
}

Outcome check_implication_lemma(const Graph& g) {
  Outcome o;
  if (!is_comparability(g)) {
    o.skipped = true;
    return o;
  }
  const std::vector<ArcSet> all = all_transitive_orientations(g, max_edges(g));
  if (all.empty()) o.guard_anomaly = true;
  const ImplicationPartition p = implication_partition(g);
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    if (p.classes[i].intersects(p.classes[i].reversed())) {
      o.problems.push_back("class " + std::to_string(i) + " meets its reversal");
    }
  }
  for (std::size_t t = 0; t < all.size(); ++t) {
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
      const ArcSet& c = p.classes[i];
      const ArcSet rev = c.reversed();
      const bool forward = c.is_subset_of(all[t]) && !rev.intersects(all[t]);
      const bool backward = rev.is_subset_of(all[t]) && !c.intersects(all[t]);
      if (forward == backward) {
        o.problems.push_back("orientation " + std::to_string(t) + " splits class " +
                             std::to_string(i));
      }
    }
  }
  o.counters["orientations"] = static_cast<std::int64_t>(all.size());
  return o;
}

namespace {

// Independent transitive-tournament test on 0..n-1.
std::string tournament_defect(const ArcSet& r, int n) {
  for (int u = 0; u < n; ++u) {
    if (r.contains(u, u)) return "loop at " + std::to_string(u);
    for (int v = u + 1; v < n; ++v) {
      if (r.contains(u, v) == r.contains(v, u)) {
        return "pair {" + std::to_string(u) + "," + std::to_string(v) +
               "} not oriented exactly once";
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (!r.contains(u, v)) continue;
      for (int w = 0; w < n; ++w) {
        if (r.contains(v, w) && !r.contains(u, w)) {
          return "not transitive at " + std::to_string(u) + "->" + std::to_string(v) + "->" +
                 std::to_string(w);
        }
      }
    }
  }
  return {};
}

}  // namespace

Outcome check_tournament_lemma(const Graph& g) {
  Outcome o;
  if (!is_permutation_graph(g)) {
    o.skipped = true;
    return o;
  }
  const OrientationOracle all = orientations(g);
  if (all.of_graph.empty() || all.of_complement.empty()) o.guard_anomaly = true;
  std::int64_t pairs = 0;
  for (const ArcSet& a : all.of_graph) {
    for (const ArcSet& b : all.of_complement) {
      ++pairs;
      if (std::string d = tournament_defect(a | b, g.n()); !d.empty()) {
        o.problems.push_back("A | B: " + d);
        return o;
      }
    }
  }
  o.counters["pairs"] = pairs;
  return o;
}

Outcome check_uniquely_connected(const Graph& g, int oracle_cap) {
  Outcome o;
  if (!is_uniquely_orientable(g)) {
    o.skipped = true;
    return o;
  }
  if (!oracle_uniquely_orientable(g)) o.guard_anomaly = true;
  if (!(is_connected(g) && is_coconnected(g))) {
    bool small = false;
    for (const Graph& h : {path_graph(2), path_graph(3), complement(path_graph(2)),
                           complement(path_graph(3))}) {
      small = small || (h.n() == g.n() && are_isomorphic(g, h, oracle_cap).has_value());
    }
    if (!small) o.problems.push_back("disconnected or co-disconnected and not P2, P3 or complements");
  }
  if (!is_reducible(g)) {
    ++o.counters["irreducible"];
    const Graph co = complement(g);
    for (const ArcSet& arcs : {g.arcs(), co.arcs()}) {
      for (Arc a : arcs.arcs()) {
        if (!(omega_of(g, a).vertices == g.vertices())) {
          o.problems.push_back("Omega" + arc_str(a) + " is not the whole vertex set");
        }
      }
    }
  }
  return o;
}

Outcome check_sim_classes(const Graph& g) {
  Outcome o;
  if (!is_permutation_graph(g)) {
    o.skipped = true;
    return o;
  }
  const ModularTree t = canonical_decomposition(g);
  if (std::string err = check_tree_invariants(t); !err.empty()) o.problems.push_back("tree: " + err);
  o.counters["tree_nodes"] = t.node_count();
  if (!is_reducible(g) && !is_uniquely_orientable(g)) {
    ++o.counters["sim_instances"];
    const BetweenModulesReport r = check_between_modules(g);
    o.counters["arcs_between_modules"] = r.arcs_checked;
    for (const std::string& v : r.violations) o.problems.push_back("between modules: " + v);
  }
  return o;
}

Outcome check_twin_parabolic(const Graph& g) {
  Outcome o;
  const CoherentConfiguration cc = wl_closure(g);
  if (!is_partial_parabolic(cc, to_parabolic(zero_twin_equivalence(g).classes))) {
    o.problems.push_back("0-equivalence is not a parabolic");
  }
  if (!is_partial_parabolic(cc, to_parabolic(one_twin_equivalence(g).classes))) {
    o.problems.push_back("1-equivalence is not a parabolic");
  }
  return o;
}

namespace {

struct ModuleView {
  std::vector<VertexSet> modules;
  Graph quotient;
};

// The top-level module partition (the whole vertex set for leaves).
ModuleView top_modules(const ModularTree& t, const Graph& g) {
  if (t.is_leaf()) return {{g.vertices()}, Graph(1)};
  return {t.modules, t.quotient};
}

// Isomorphism g -> h assembled from a type-respecting quotient isomorphism
// and module isomorphisms.
class ModuleAssembly {
 public:
  ModuleAssembly(const Graph& g, const ModuleView& a, const Graph& h, const ModuleView& b,
                 int oracle_cap)
      : g_(g), h_(h), a_(a), b_(b), cap_(oracle_cap) {
    const int k = static_cast<int>(a.modules.size());
    for (VertexSet m : a.modules) {
      parts_a_.push_back(induced(g, m));
      types_a_.push_back(canonical_fingerprint(wl_closure(parts_a_.back())));
    }
    for (VertexSet m : b.modules) {
      parts_b_.push_back(induced(h, m));
      types_b_.push_back(canonical_fingerprint(wl_closure(parts_b_.back())));
    }
    image_.assign(k, -1);
    used_.assign(k, false);
    module_iso_.assign(static_cast<std::size_t>(k) * k, std::nullopt);
    tried_.assign(static_cast<std::size_t>(k) * k, false);
  }

  std::optional<VertexBijection> run() {
    if (a_.modules.size() != b_.modules.size()) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    std::vector<int> f(g_.n(), -1);
    const int k = static_cast<int>(a_.modules.size());
    for (int i = 0; i < k; ++i) {
      const std::vector<int> src = a_.modules[i].to_vector();
      const std::vector<int> dst = b_.modules[image_[i]].to_vector();
      const VertexBijection& iso = *module_iso_[i * k + image_[i]];
      for (std::size_t x = 0; x < src.size(); ++x) f[src[x]] = dst[iso(static_cast<int>(x))];
    }
    return VertexBijection(f);
  }

 private:
  bool extend(int i) {
    const int k = static_cast<int>(a_.modules.size());
    if (i == k) return true;
    for (int j = 0; j < k; ++j) {
      if (used_[j] || !(types_a_[i] == types_b_[j])) continue;
      bool ok = true;
      for (int u = 0; u < i && ok; ++u) {
        ok = a_.quotient.adjacent(u, i) == b_.quotient.adjacent(image_[u], j);
      }
      if (!ok || !module_iso(i, j)) continue;
      image_[i] = j;
      used_[j] = true;
      if (extend(i + 1)) return true;
      used_[j] = false;
      image_[i] = -1;
    }
    return false;
  }

  bool module_iso(int i, int j) {
    const std::size_t idx = static_cast<std::size_t>(i) * a_.modules.size() + j;
    if (!tried_[idx]) {
      tried_[idx] = true;
      module_iso_[idx] = are_isomorphic(parts_a_[i], parts_b_[j], cap_);
    }
    return module_iso_[idx].has_value();
  }

  const Graph& g_;
  const Graph& h_;
  const ModuleView& a_;
  const ModuleView& b_;
  int cap_;
  std::vector<Graph> parts_a_;
  std::vector<Graph> parts_b_;
  std::vector<Fingerprint> types_a_;
  std::vector<Fingerprint> types_b_;
  std::vector<int> image_;
  std::vector<bool> used_;
  std::vector<std::optional<VertexBijection>> module_iso_;
  std::vector<bool> tried_;
};

}  // namespace

Outcome check_composition_transport(const Graph& g, std::uint64_t seed, int oracle_cap) {
  Outcome o;
  if (!is_permutation_graph(g)) {
    o.skipped = true;
    return o;
  }
  const int n = g.n();
  const ModularTree t = canonical_decomposition(g);
  const ModuleView view = top_modules(t, g);
  const PartialParabolic e = to_parabolic(view.modules);
  const Relation edges = Relation::from_arcs(g.arcs());

  std::vector<Relation> pi_seeds{edges};
  for (VertexSet m : view.modules) pi_seeds.push_back(Relation::identity_on(n, m.to_vector()));
  const CoherentConfiguration x_pi = wl_closure(n, pi_seeds);
  const CoherentConfiguration x_e = wl_closure(n, {edges, e.as_relation(n)});

  // (a) WL(X)_pi equals the direct sum of the module closures.
  CoherentConfiguration sum(0, {});
  std::vector<int> order;
  for (VertexSet m : view.modules) {
    sum = direct_sum(sum, wl_closure(induced(g, m)));
    for (int v : m) order.push_back(v);
  }
  if (!same_partition(x_pi, relabel(sum, order))) {
    o.problems.push_back("(a) WL(X)_pi differs from the direct sum of module closures");
  }
  // (b) WL(X)_pi refines WL(X)_e.
  if (!refines(x_pi, x_e)) o.problems.push_back("(b) WL(X)_pi does not refine WL(X)_e");
  // (c) restriction of WL(X)_e to each module is the module closure.
  for (std::size_t i = 0; i < view.modules.size(); ++i) {
    const CoherentConfiguration r = restriction_to_class(x_e, e, static_cast<int>(i));
    if (!same_partition(r, wl_closure(induced(g, view.modules[i])))) {
      o.problems.push_back("(c) restriction to module " + std::to_string(i) +
                           " differs from its closure");
    }
  }
  // (d) a relabelled copy: fingerprints agree and a module-wise assembled
  // isomorphism maps E onto E'.
  const VertexBijection sigma(seeded_permutation(n, graph_seed(seed, g)));
  const Graph h = relabel(g, sigma);
  if (!(canonical_fingerprint(wl_closure(g)) == canonical_fingerprint(wl_closure(h)))) {
    o.problems.push_back("(d) closure fingerprints of a relabelled copy differ");
  }
  const ModularTree th = canonical_decomposition(h);
  const ModuleView view_h = top_modules(th, h);
  if (t.kind != th.kind || (!t.is_leaf() && t.rule != th.rule) ||
      view.modules.size() != view_h.modules.size()) {
    o.problems.push_back("(d) relabelled copy decomposes differently");
    return o;
  }
  if (!(canonical_fingerprint(wl_closure(view.quotient)) ==
        canonical_fingerprint(wl_closure(view_h.quotient)))) {
    o.problems.push_back("(d) quotient fingerprints differ");
  }
  const std::optional<VertexBijection> f = ModuleAssembly(g, view, h, view_h, oracle_cap).run();
  if (!f) {
    o.problems.push_back("(d) no type-respecting module assembly found");
  } else if (!is_isomorphism(g, h, *f)) {
    o.problems.push_back("(d) assembled bijection does not map E onto E'");
  }
  o.counters["modules"] = static_cast<std::int64_t>(view.modules.size());
  return o;
}

Outcome check_gammarel_parabolics(const Graph& g, int ext_cap) {
  Outcome o;
  if (!is_permutation_graph(g) || is_reducible(g)) {
    o.skipped = true;
    return o;
  }
  if (oracle_reducible(g)) o.guard_anomaly = true;
  const Extension2 x = extend2(wl_closure(g), ext_cap);
  std::vector<PointSet> e1;
  for (const ArcSet& c : implication_partition(g).classes) {
    PointSet pts;
    for (Arc a : c.arcs()) pts.push_back(x.point(a.tail, a.head));
    e1.push_back(std::move(pts));
  }
  ++o.counters["e1_instances"];
  if (!is_partial_parabolic(x.ext, make_partial_parabolic(e1))) {
    o.problems.push_back("e1 is not a partial parabolic");
  }
  if (!is_uniquely_orientable(g)) {
    std::vector<PointSet> e2;
    for (VertexSet d : sim_equivalence(g).classes) {
      if (d.size() < 2) continue;
      PointSet pts;
      for (int a : d) {
        for (int b : d) {
          if (a != b) pts.push_back(x.point(a, b));
        }
      }
      e2.push_back(std::move(pts));
    }
    ++o.counters["e2_instances"];
    if (!is_partial_parabolic(x.ext, make_partial_parabolic(e2))) {
      o.problems.push_back("e2 is not a partial parabolic");
    }
  }
  return o;
}

Outcome check_uniquely_discrete(const Graph& g, std::uint64_t seed, int max_pairs, int ext_cap) {
  Outcome o;
  const Graph co = complement(g);
  if (!is_uniquely_orientable(g) || g.edge_count() == 0 || co.edge_count() == 0) {
    o.skipped = true;
    return o;
  }
  if (!oracle_uniquely_orientable(g)) o.guard_anomaly = true;
  const std::vector<Arc> es = g.arcs().arcs();
  const std::vector<Arc> fs = co.arcs().arcs();
  const std::size_t total = es.size() * fs.size();
  std::vector<std::size_t> chosen(total);
  std::iota(chosen.begin(), chosen.end(), std::size_t{0});
  if (max_pairs >= 0 && total > static_cast<std::size_t>(max_pairs)) {
    Rng rng(graph_seed(seed, g));
    for (std::size_t i = 0; i < static_cast<std::size_t>(max_pairs); ++i) {
      std::swap(chosen[i], chosen[i + rng.below(total - i)]);
    }
    chosen.resize(max_pairs);
    std::sort(chosen.begin(), chosen.end());
  }
  const Extension2 x = extend2(wl_closure(g), ext_cap);
  for (std::size_t idx : chosen) {
    const Arc e = es[idx / fs.size()];
    const Arc f = fs[idx % fs.size()];
    const CoherentConfiguration d =
        individualized_extension(x, x.point(e.tail, e.head), x.point(f.tail, f.head));
    if (!is_discrete(d)) {
      o.problems.push_back("not discrete for e=" + arc_str(e) + " f=" + arc_str(f));
    }
  }
  o.counters["pairs"] = static_cast<std::int64_t>(chosen.size());
  o.counters["pairs_available"] = static_cast<std::int64_t>(total);
  return o;
}

Outcome check_decomposition_visibility(const Graph& g, int ext_cap) {
  Outcome o;
  if (!is_permutation_graph(g) || is_uniquely_orientable(g)) {
    o.skipped = true;
    return o;
  }
  const ModularTree t = canonical_decomposition(g);
  if (t.is_leaf()) {
    o.guard_anomaly = true;
    return o;
  }
  if (!is_composition_wrt(g, t.equivalence)) {
    o.problems.push_back("graph is not a composition w.r.t. the canonical equivalence");
  }
  if (t.equivalence.class_count() == 1) ++o.counters["spanning_twin_class"];
  const Extension2 x = extend2(wl_closure(g), ext_cap);
  std::vector<PointSet> classes;
  for (VertexSet d : t.equivalence.classes) {
    PointSet pts;
    for (int a : d) pts.push_back(x.point(a, a));
    classes.push_back(std::move(pts));
  }
  if (!is_partial_parabolic(x.ext, make_partial_parabolic(classes))) {
    o.problems.push_back(std::string("e^diag is not a partial parabolic (rule ") +
                         to_string(t.rule) + ")");
  }
  ++o.counters[std::string("rule_") + to_string(t.rule)];
  return o;
}

Outcome check_cylinders(const Graph& g, int ext_cap) {
  Outcome o;
  if (!is_permutation_graph(g)) {
    o.skipped = true;
    return o;
  }
  const CoherentConfiguration base = wl_closure(g);
  const Extension2 x = extend2(base, ext_cap);
  const int n = g.n();
  std::int64_t checked = 0;
  for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(base.rank()); ++s) {
    Relation rel(n);
    for (auto [a, b] : base.pairs_of(s)) rel.insert(a, b);
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) {
        ++checked;
        if (!is_union_of_colors(x.ext, cyl(x, rel, i, j))) {
          o.problems.push_back("cyl of colour " + std::to_string(s) + " (" + std::to_string(i) +
                               "," + std::to_string(j) + ") is not a union of colours");
        }
      }
    }
  }
  const CoherentConfiguration mc = m_closure(x);
  if (!refines(mc, base)) o.problems.push_back("2-closure does not refine the base");
  if (!same_partition(m_closure(extend2(mc, ext_cap)), mc)) {
    o.problems.push_back("2-closure is not idempotent");
  }
  o.counters["cylinders"] = checked;
  return o;
}

Outcome check_engine(const Graph& g, std::uint64_t seed, int relabelings) {
  Outcome o;
  const int n = g.n();
  const CoherentConfiguration cc = wl_closure(g);
  const CoherenceReport rep = verify_coherence(cc);
  if (!rep.ok) {
    o.problems.push_back("closure incoherent: " + rep.violation);
    return o;
  }
  std::vector<std::uint64_t> labels(cc.colors().begin(), cc.colors().end());
  if (!same_partition(refine_from_labels(n, labels), cc)) {
    o.problems.push_back("closure is not idempotent");
  }
  if (!same_partition(wl_closure(complement(g)), cc)) {
    o.problems.push_back("WL(X) differs from WL(complement)");
  }
  if (n > 0 && !refines(individualize(cc, {0}), cc)) {
    o.problems.push_back("individualization coarsened the closure");
  }
  const Fingerprint f = canonical_fingerprint(cc);
  const std::uint64_t base_seed = graph_seed(seed, g);
  for (int r = 0; r < relabelings; ++r) {
    const VertexBijection sigma(seeded_permutation(n, base_seed + r + 1));
    if (!(canonical_fingerprint(wl_closure(relabel(g, sigma))) == f)) {
      o.problems.push_back("fingerprint changed under relabelling " + std::to_string(r));
      break;
    }
  }
  o.counters["relabelings"] = relabelings;
  return o;
}

Outcome check_tournament_closure(std::uint64_t seed, int max_points) {
  Outcome o;
  Rng rng(mix64(seed));
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_points)));
  const std::vector<int> order = seeded_permutation(n, mix64(seed + 1));
  Relation t(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) t.insert(order[i], order[j]);
  }
  std::vector<Relation> seeds{t};
  const int extras = static_cast<int>(rng.below(3));
  for (int k = 0; k < extras; ++k) {
    Relation r(n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (rng.below(3) == 0) r.insert(a, b);
      }
    }
    seeds.push_back(std::move(r));
  }
  const CoherentConfiguration cc = wl_closure(n, seeds);
  if (!verify_coherence(cc).ok) o.problems.push_back("closure incoherent");
  if (!is_union_of_colors(cc, t)) o.problems.push_back("tournament is not a union of colours");
  if (!is_discrete(cc)) {
    o.problems.push_back("not discrete on " + std::to_string(n) + " points (rank " +
                         std::to_string(cc.rank()) + ")");
  }
  o.counters["points_" + std::to_string(n)] = 1;
  return o;
}

// --- suites ----------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

std::string corpus_label(const std::string& filter, int max_n) {
  return filter + " graphs with 1 <= n <= " + std::to_string(max_n);
}

void absorb(LemmaReport& r, const std::string& key, const Outcome& o) {
  if (o.skipped) {
    ++r.skipped;
  } else {
    ++r.instances;
  }
  if (o.guard_anomaly) ++r.guard_anomalies;
  for (const std::string& p : o.problems) r.violations.push_back({key, p});
  for (const auto& [name, v] : o.counters) r.counters[name] += v;
}

void finish(LemmaReport& r, Clock::time_point start) {
  std::stable_sort(r.violations.begin(), r.violations.end(),
                   [](const Violation& a, const Violation& b) { return a.graph6 < b.graph6; });
  r.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
}

LemmaReport over_corpus(const std::string& id, const std::string& statement,
                        const std::string& filter, const std::vector<Graph>& corpus,
                        const VerifyOptions& opt,
                        const std::function<Outcome(const Graph&)>& fn) {
  const auto start = Clock::now();
  LemmaReport r;
  r.id = id;
  r.statement = statement;
  r.corpus = corpus_label(filter, opt.max_n);
  const std::vector<Outcome> outs =
      parallel_map(corpus.size(), opt.jobs, [&](std::size_t i) { return fn(corpus[i]); });
  for (std::size_t i = 0; i < corpus.size(); ++i) absorb(r, to_graph6(corpus[i]), outs[i]);
  finish(r, start);
  return r;
}

std::vector<Graph> permutation_corpus(const VerifyOptions& opt) {
  std::vector<Graph> out;
  for (const Graph& g : graphs_up_to(opt.max_n, opt.enumeration_cap)) {
    if (is_permutation_graph(g)) out.push_back(g);
  }
  return out;
}

LemmaReport suite_enumeration(const VerifyOptions& opt) {
  const auto start = Clock::now();
  LemmaReport r;
  r.id = "enumeration";
  r.statement = "one representative per isomorphism class; counts match Burnside's lemma";
  r.corpus = corpus_label("all", opt.max_n);
  for (int n = 1; n <= opt.max_n; ++n) {
    const std::vector<Graph>& reps = graphs_of_order(n, opt.enumeration_cap);
    const std::string key = "n=" + std::to_string(n);
    r.counters["count_n" + std::to_string(n)] = static_cast<std::int64_t>(reps.size());
    if (reps.size() != burnside_graph_count(n)) {
      r.violations.push_back({key, "found " + std::to_string(reps.size()) + ", Burnside gives " +
                                       std::to_string(burnside_graph_count(n))});
    }
    // Pairwise non-isomorphic (oracle), bucketed by an invariant.
    std::map<std::pair<int, std::vector<int>>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      ++r.instances;
      if (!(canonical_form(reps[i]) == reps[i])) {
        r.violations.push_back({to_graph6(reps[i]), "representative is not canonical"});
      }
      std::vector<int> degrees;
      for (int v = 0; v < n; ++v) degrees.push_back(reps[i].degree(v));
      std::sort(degrees.begin(), degrees.end());
      buckets[{reps[i].edge_count(), degrees}].push_back(i);
    }
    for (const auto& [inv, members] : buckets) {
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          if (are_isomorphic(reps[members[a]], reps[members[b]], opt.oracle_cap)) {
            r.violations.push_back({to_graph6(reps[members[a]]),
                                    "isomorphic to " + to_graph6(reps[members[b]])});
          }
        }
      }
    }
  }
  finish(r, start);
  return r;
}

LemmaReport suite_tournament_discrete(const VerifyOptions& opt) {
  const auto start = Clock::now();
  LemmaReport r;
  r.id = "tournament-discrete";
  r.statement = "a closure containing a spanning transitive tournament is discrete";
  r.corpus = std::to_string(opt.tournament_instances) + " seeded configurations on <= " +
             std::to_string(opt.tournament_max_points) + " points";
  const std::vector<Outcome> outs =
      parallel_map(opt.tournament_instances, opt.jobs, [&](std::size_t i) {
        return check_tournament_closure(mix64(opt.seed) + i, opt.tournament_max_points);
      });
  for (std::size_t i = 0; i < outs.size(); ++i) {
    char key[32];
    std::snprintf(key, sizeof key, "instance-%05zu", i);
    absorb(r, key, outs[i]);
  }
  finish(r, start);
  return r;
}

LemmaReport suite_identification(const VerifyOptions& opt) {
  const auto start = Clock::now();
  LemmaReport r;
  r.id = "identification";
  r.statement = "k-dim WL separates non-isomorphic permutation graphs (k=" +
                std::to_string(opt.k) + ")";
  r.corpus = corpus_label("permutation", opt.max_n);
  r.observational = opt.k == 1;
  const std::vector<Graph> corpus = permutation_corpus(opt);
  std::vector<KwlFingerprint> fps(corpus.size());
  const std::vector<Outcome> outs = parallel_map(corpus.size(), opt.jobs, [&](std::size_t i) {
    Outcome o;
    fps[i] = k_wl_fingerprint(corpus[i], opt.k);
    const VertexBijection sigma(
        seeded_permutation(corpus[i].n(), graph_seed(opt.seed, corpus[i])));
    if (!(k_wl_fingerprint(relabel(corpus[i], sigma), opt.k) == fps[i])) {
      o.problems.push_back("fingerprint of an isomorphic copy differs");
    }
    return o;
  });
  for (std::size_t i = 0; i < corpus.size(); ++i) absorb(r, to_graph6(corpus[i]), outs[i]);
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < corpus.size(); ++i) groups[to_json(fps[i]).dump()].push_back(i);
  std::int64_t collisions = 0;
  std::int64_t resolved = 0;
  for (const auto& [key, members] : groups) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const Graph& x = corpus[members[a]];
        const Graph& y = corpus[members[b]];
        if (are_isomorphic(x, y, opt.oracle_cap)) continue;
        ++collisions;
        const std::string detail = "collision with " + to_graph6(y);
        if (opt.k < 3 && !(k_wl_fingerprint(x, 3) == k_wl_fingerprint(y, 3))) {
          ++resolved;
          r.notes.push_back(to_graph6(x) + " / " + to_graph6(y) + ": separated at k=3");
        }
        r.violations.push_back({to_graph6(x), detail});
      }
    }
  }
  r.counters["collisions"] = collisions;
  r.counters["resolved_at_k3"] = resolved;
  r.counters["fingerprint_classes"] = static_cast<std::int64_t>(groups.size());
  if (r.observational) {
    r.notes.push_back("k=1 collisions are recorded, not failures");
  }
  finish(r, start);
  return r;
}

LemmaReport suite_kwl_monotonicity(const VerifyOptions& opt) {
  const auto start = Clock::now();
  LemmaReport r;
  r.id = "kwl-monotonicity";
  r.statement = "pairs separated by k-dim WL stay separated for k+1 (k = 1, 2)";
  r.corpus = corpus_label("all", opt.max_n);
  for (int n = 1; n <= opt.max_n; ++n) {
    const std::vector<Graph>& level = graphs_of_order(n, opt.enumeration_cap);
    std::vector<std::array<std::string, 3>> keys(level.size());
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (int k = 1; k <= 3; ++k) keys[i][k - 1] = to_json(k_wl_fingerprint(level[i], k)).dump();
      ++r.instances;
    }
    // Finer dimension must determine the coarser one.
    for (int k = 1; k < 3; ++k) {
      std::map<std::string, std::string> coarser_of;
      for (std::size_t i = 0; i < level.size(); ++i) {
        auto [it, fresh] = coarser_of.emplace(keys[i][k], keys[i][k - 1]);
        if (!fresh && it->second != keys[i][k - 1]) {
          r.violations.push_back({to_graph6(level[i]), "k=" + std::to_string(k) +
                                                           " separates a pair k=" +
                                                           std::to_string(k + 1) + " merges"});
        }
      }
    }
  }
  finish(r, start);
  return r;
}

LemmaReport suite_engine(const VerifyOptions& opt) {
  const std::vector<Graph> corpus = graphs_up_to(opt.max_n, opt.enumeration_cap);
  std::vector<std::size_t> idx(corpus.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  Rng rng(mix64(opt.seed ^ 0x5eedULL));
  for (std::size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[rng.below(i)]);
  std::vector<bool> sampled(corpus.size(), false);
  for (std::size_t i = 0; i < std::min<std::size_t>(opt.engine_sample, idx.size()); ++i) {
    sampled[idx[i]] = true;
  }
  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto start = Clock::now();
  LemmaReport r;
  r.id = "engine";
  r.statement =
      "closure coherence and idempotence, WL(X) = WL(complement), fingerprint label invariance";
  r.corpus = corpus_label("all", opt.max_n) + "; relabelling sample of " +
             std::to_string(std::min<std::size_t>(opt.engine_sample, corpus.size()));
  const std::vector<Outcome> outs = parallel_map(corpus.size(), opt.jobs, [&](std::size_t i) {
    return check_engine(corpus[i], opt.seed, sampled[i] ? opt.engine_relabelings : 0);
  });
  for (std::size_t i = 0; i < corpus.size(); ++i) absorb(r, to_graph6(corpus[i]), outs[i]);
  r.counters["sampled_graphs"] = std::count(sampled.begin(), sampled.end(), true);
  finish(r, start);
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "enumeration",         "recognition",          "implication",
      "tournament",          "uniquely-connected",   "sim-classes",
      "tournament-discrete", "twin-parabolic",       "composition-transport",
      "gammarel-parabolics", "uniquely-discrete",    "decomposition-visibility",
      "identification",      "kwl-monotonicity",     "cylinders",
      "engine"};
  return names;
}

LemmaReport run_suite(const std::string& name, const VerifyOptions& opt) {
  if (opt.max_n < 1 || opt.max_n > opt.enumeration_cap) {
    throw CapExceeded("verify: -n must lie in 1.." + std::to_string(opt.enumeration_cap));
  }
  const std::vector<Graph> all = graphs_up_to(opt.max_n, opt.enumeration_cap);
  if (name == "enumeration") return suite_enumeration(opt);
  if (name == "recognition") {
    return over_corpus(name, "comparability / permutation / unique orientability vs orientation oracle",
                       "all", all, opt, [](const Graph& g) { return check_recognition(g); });
  }
  if (name == "implication") {
    return over_corpus(name,
                       "implication classes avoid their reversal; every transitive orientation "
                       "takes one class of each reversal pair",
                       "all", all, opt, [](const Graph& g) { return check_implication_lemma(g); });
  }
  if (name == "tournament") {
    return over_corpus(name, "A | B is a transitive tournament for all transitive orientation pairs",
                       "all", all, opt, [](const Graph& g) { return check_tournament_lemma(g); });
  }
  if (name == "uniquely-connected") {
    return over_corpus(name,
                       "uniquely orientable graphs are connected and coconnected or small paths; "
                       "irreducible ones have Omega(e) = Omega",
                       "all", all, opt,
                       [&](const Graph& g) { return check_uniquely_connected(g, opt.oracle_cap); });
  }
  if (name == "sim-classes") {
    return over_corpus(name,
                       "canonical decomposition invariants; ~ classes and implication classes "
                       "between modules",
                       "all", all, opt, [](const Graph& g) { return check_sim_classes(g); });
  }
  if (name == "tournament-discrete") return suite_tournament_discrete(opt);
  if (name == "twin-parabolic") {
    return over_corpus(name, "0- and 1-equivalences are parabolics of WL(X)", "all", all, opt,
                       [](const Graph& g) { return check_twin_parabolic(g); });
  }
  if (name == "composition-transport") {
    return over_corpus(name,
                       "WL(X)_pi is the direct sum of module closures, refines WL(X)_e, "
                       "restrictions match, module-wise isomorphism assembly",
                       "all", all, opt, [&](const Graph& g) {
                         return check_composition_transport(g, opt.seed, opt.oracle_cap);
                       });
  }
  if (name == "gammarel-parabolics") {
    return over_corpus(name, "e1 and e2 are partial parabolics of the 2-extension", "all", all,
                       opt, [&](const Graph& g) {
                         return check_gammarel_parabolics(g, opt.extension_cap);
                       });
  }
  if (name == "uniquely-discrete") {
    LemmaReport r = over_corpus(
        name, "the 2-extension individualized at e in E and f in E-bar is discrete", "all", all,
        opt, [&](const Graph& g) {
          const bool every = opt.exhaustive || g.n() <= opt.exhaustive_up_to;
          return check_uniquely_discrete(g, opt.seed, every ? -1 : opt.sample_pairs,
                                         opt.extension_cap);
        });
    r.notes.push_back("all arc pairs for n <= " + std::to_string(opt.exhaustive_up_to) +
                      (opt.exhaustive ? " and above (exhaustive)" : "; " +
                                            std::to_string(opt.sample_pairs) +
                                            " seeded pairs per graph above"));
    r.notes.push_back(
        "trusted, not re-verified: a discrete 2-point extension bounds the separability number "
        "of the 2-extension by 3, which transfers to 6 for the base; WL dimension <= 3 * s");
    return r;
  }
  if (name == "decomposition-visibility") {
    return over_corpus(name, "e^diag is a partial parabolic of the 2-extension", "all", all, opt,
                       [&](const Graph& g) {
                         return check_decomposition_visibility(g, opt.extension_cap);
                       });
  }
  if (name == "identification") return suite_identification(opt);
  if (name == "kwl-monotonicity") return suite_kwl_monotonicity(opt);
  if (name == "cylinders") {
    return over_corpus(name,
                       "cylinder relations are unions of extension colours; 2-closure refines "
                       "and is idempotent",
                       "all", all, opt,
                       [&](const Graph& g) { return check_cylinders(g, opt.extension_cap); });
  }
  if (name == "engine") return suite_engine(opt);
  throw InvalidArgument("unknown suite: " + name);
}

nlohmann::json to_json(const LemmaReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const Violation& v : r.violations) {
    violations.push_back({{"graph6", v.graph6}, {"detail", v.detail}});
  }
  return {{"id", r.id},
          {"statement", r.statement},
          {"corpus", r.corpus},
          {"instances", r.instances},
          {"skipped", r.skipped},
          {"guard_anomalies", r.guard_anomalies},
          {"violations", std::move(violations)},
          {"counters", r.counters},
          {"notes", r.notes},
          {"observational", r.observational},
          {"passed", r.passed()},
          {"wall_seconds", r.wall_seconds}};
}

std::string to_text(const LemmaReport& r) {
  std::ostringstream out;
  out << "[" << (r.passed() ? "PASS" : "FAIL") << "] " << r.id << (r.observational ? " (observational)" : "")
      << "\n  " << r.statement << "\n  corpus: " << r.corpus << "\n  instances: " << r.instances
      << ", skipped: " << r.skipped << ", guard anomalies: " << r.guard_anomalies
      << ", violations: " << r.violations.size() << "\n";
  for (const auto& [k, v] : r.counters) out << "  " << k << " = " << v << "\n";
  for (const std::string& note : r.notes) out << "  note: " << note << "\n";
  const std::size_t shown = std::min<std::size_t>(r.violations.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) {
    out << "  ! " << r.violations[i].graph6 << ": " << r.violations[i].detail << "\n";
  }
  if (shown < r.violations.size()) out << "  ... " << r.violations.size() - shown << " more\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "  wall time: %.3f s\n", r.wall_seconds);
  out << buf;
  return out.str();
}

}  // namespace wlperm
