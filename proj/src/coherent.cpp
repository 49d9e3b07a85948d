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

#include "wlperm/coherent.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <span>

#include "wlperm/error.hpp"

namespace wlperm {

namespace {

// Two independent 64-bit streams (FNV-1a over words, and a splitmix-style
// accumulator) forming a 128-bit digest.
class Hasher {
 public:
  void add(std::uint64_t w) {
    a_ = (a_ ^ w) * 0x100000001b3ULL;
    std::uint64_t z = (b_ += w + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    b_ = z ^ (z >> 31);
  }
  void add(std::span<const std::uint64_t> ws) {
    add(ws.size());
    for (std::uint64_t w : ws) add(w);
  }
  Digest digest() const { return {a_, b_}; }

 private:
  std::uint64_t a_ = 0xcbf29ce484222325ULL;
  std::uint64_t b_ = 0x6a09e667f3bcc909ULL;
};

std::size_t sq(int n) { return static_cast<std::size_t>(n) * n; }

void require_point(int n, int p, const char* what) {
  if (p < 0 || p >= n) {
    throw InvalidArgument(std::string(what) + ": point " + std::to_string(p) +
                          " out of range");
  }
}

// Signatures for one refinement round, stored flat.
struct SignatureTable {
  std::vector<std::uint64_t> data;
  std::vector<std::size_t> offset;  // size N^2 + 1

  std::span<const std::uint64_t> at(std::size_t i) const {
    return {data.data() + offset[i], offset[i + 1] - offset[i]};
  }
};

// Sorts pair indices by signature and assigns dense ids in that order.
// Returns the number of ids; feeds each distinct signature and its
// multiplicity into the hasher.
template <typename Less, typename Equal, typename Emit>
int assign_sorted_ids(std::size_t count, std::vector<std::uint32_t>& ids, Less less,
                      Equal equal, Emit emit) {
  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), less);
  ids.assign(count, 0);
  int next = -1;
  std::size_t run_start = 0;
  for (std::size_t k = 0; k < count; ++k) {
    if (k == 0 || !equal(order[k - 1], order[k])) {
      if (k > 0) emit(order[run_start], k - run_start);
      ++next;
      run_start = k;
    }
    ids[order[k]] = static_cast<std::uint32_t>(next);
  }
  if (count > 0) emit(order[run_start], count - run_start);
  return next + 1;
}

}  // namespace

// --- Relation ------------------------------------------------------------

Relation Relation::from_arcs(const ArcSet& arcs) {
  Relation r(arcs.ground_size());
  for (Arc a : arcs.arcs()) r.insert(a.tail, a.head);
  return r;
}

Relation Relation::identity(int n) {
  Relation r(n);
  for (int a = 0; a < n; ++a) r.insert(a, a);
  return r;
}

Relation Relation::full(int n) {
  Relation r(n);
  std::fill(r.bits_.begin(), r.bits_.end(), 1);
  return r;
}

Relation Relation::identity_on(int n, const PointSet& points) {
  Relation r(n);
  for (int p : points) {
    require_point(n, p, "Relation::identity_on");
    r.insert(p, p);
  }
  return r;
}

int Relation::size() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1));
}

// --- CoherentConfiguration ----------------------------------------------

CoherentConfiguration::CoherentConfiguration(int points, std::vector<std::uint32_t> colors,
                                             Digest history)
    : n_(points), colors_(std::move(colors)), history_(history) {
  if (points < 0 || colors_.size() != sq(points)) {
    throw InvalidArgument("CoherentConfiguration: colour matrix has wrong size");
  }
  std::uint32_t top = 0;
  for (std::uint32_t c : colors_) top = std::max(top, c + 1);
  std::vector<char> used(top, 0);
  for (std::uint32_t c : colors_) used[c] = 1;
  if (std::find(used.begin(), used.end(), 0) != used.end()) {
    throw InvalidArgument("CoherentConfiguration: colour ids are not dense");
  }
  rank_ = static_cast<int>(top);
}

bool CoherentConfiguration::is_diagonal_color(std::uint32_t c) const {
  for (int a = 0; a < n_; ++a) {
    if (color(a, a) == c) return true;
  }
  return false;
}

std::vector<std::pair<int, int>> CoherentConfiguration::pairs_of(std::uint32_t c) const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (color(a, b) == c) out.emplace_back(a, b);
    }
  }
  return out;
}

// --- closure -------------------------------------------------------------

CoherentConfiguration refine_from_labels(int n, const std::vector<std::uint64_t>& labels) {
  if (n < 0 || labels.size() != sq(n)) {
    throw InvalidArgument("refine_from_labels: label matrix has wrong size");
  }
  const std::size_t total = sq(n);
  Hasher hasher;
  std::vector<std::uint32_t> color;

  using Triple = std::array<std::uint64_t, 3>;
  std::vector<Triple> init(total);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      init[a * n + b] = {labels[a * n + b], labels[b * n + a], a == b ? 1ULL : 0ULL};
    }
  }
  int rank = assign_sorted_ids(
      total, color, [&](std::uint32_t x, std::uint32_t y) { return init[x] < init[y]; },
      [&](std::uint32_t x, std::uint32_t y) { return init[x] == init[y]; },
      [&](std::uint32_t rep, std::size_t count) {
        hasher.add(std::span<const std::uint64_t>(init[rep]));
        hasher.add(count);
      });

  SignatureTable sig;
  std::vector<std::uint32_t> transposed(total);
  std::vector<std::uint64_t> keys(n);
  std::vector<std::uint32_t> next;
  while (static_cast<std::size_t>(rank) < total) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) transposed[b * n + a] = color[a * n + b];
    }
    const std::uint64_t r = static_cast<std::uint64_t>(rank);
    sig.data.clear();
    sig.offset.assign(1, 0);
    for (int a = 0; a < n; ++a) {
      const std::uint32_t* row = &color[static_cast<std::size_t>(a) * n];
      for (int b = 0; b < n; ++b) {
        const std::uint32_t* col = &transposed[static_cast<std::size_t>(b) * n];
        for (int g = 0; g < n; ++g) keys[g] = row[g] * r + col[g];
        std::sort(keys.begin(), keys.end());
        sig.data.push_back(row[b]);
        for (int i = 0; i < n;) {
          int j = i;
          while (j < n && keys[j] == keys[i]) ++j;
          sig.data.push_back(keys[i] * static_cast<std::uint64_t>(n + 1) + (j - i));
          i = j;
        }
        sig.offset.push_back(sig.data.size());
      }
    }
    hasher.add(0xfeedULL);  // round separator
    const int new_rank = assign_sorted_ids(
        total, next,
        [&](std::uint32_t x, std::uint32_t y) {
          const auto sx = sig.at(x);
          const auto sy = sig.at(y);
          return std::lexicographical_compare(sx.begin(), sx.end(), sy.begin(), sy.end());
        },
        [&](std::uint32_t x, std::uint32_t y) {
          const auto sx = sig.at(x);
          const auto sy = sig.at(y);
          return std::equal(sx.begin(), sx.end(), sy.begin(), sy.end());
        },
        [&](std::uint32_t rep, std::size_t count) {
          hasher.add(sig.at(rep));
          hasher.add(count);
        });
    // Old colour leads each signature, so equal rank means no class split
    // and the ids coincide with the previous round.
    if (new_rank == rank) break;
    color.swap(next);
    rank = new_rank;
  }
  return CoherentConfiguration(n, std::move(color), hasher.digest());
}

CoherentConfiguration wl_closure(int n, const std::vector<Relation>& seeds) {
  if (seeds.size() > 63) throw InvalidArgument("wl_closure: at most 63 seeds");
  std::vector<std::uint64_t> labels(sq(n), 0);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (seeds[i].points() != n) {
      throw InvalidArgument("wl_closure: seed " + std::to_string(i) + " is not on " +
                            std::to_string(n) + " points");
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (seeds[i].contains(a, b)) labels[a * n + b] |= std::uint64_t{1} << i;
      }
    }
  }
  return refine_from_labels(n, labels);
}

CoherentConfiguration wl_closure(const Graph& g) {
  return wl_closure(g.n(), {Relation::from_arcs(g.arcs())});
}

// --- axioms ----------------------------------------------------------------

CoherenceReport verify_coherence(const CoherentConfiguration& cc) {
  CoherenceReport rep;
  const int n = cc.points();
  const int rank = cc.rank();
  auto fail = [&](std::string what) {
    rep.ok = false;
    rep.violation = std::move(what);
    rep.tensor.clear();
    return rep;
  };
  auto pair_str = [](int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };

  std::vector<int> diag(rank, -1);
  std::vector<std::int64_t> rev(rank, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const std::uint32_t c = cc.color(a, b);
      const int d = a == b ? 1 : 0;
      if (diag[c] == -1) diag[c] = d;
      if (diag[c] != d) {
        return fail("C1: colour " + std::to_string(c) + " mixes diagonal and off-diagonal pairs");
      }
      const std::uint32_t back = cc.color(b, a);
      if (rev[c] == -1) rev[c] = back;
      if (rev[c] != back) {
        return fail("C2: reversal of colour " + std::to_string(c) + " is not a single colour at " +
                    pair_str(a, b));
      }
    }
  }

  // C3: the multiset of (c(a,g), c(g,b)) depends only on c(a,b).
  std::vector<std::vector<std::uint64_t>> reference(rank);
  std::vector<char> seen(rank, 0);
  std::vector<std::uint64_t> keys(n);
  std::vector<std::uint64_t> packed;
  const std::uint64_t r = static_cast<std::uint64_t>(rank);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int g = 0; g < n; ++g) keys[g] = cc.color(a, g) * r + cc.color(g, b);
      std::sort(keys.begin(), keys.end());
      packed.clear();
      for (int i = 0; i < n;) {
        int j = i;
        while (j < n && keys[j] == keys[i]) ++j;
        packed.push_back(keys[i]);
        packed.push_back(static_cast<std::uint64_t>(j - i));
        i = j;
      }
      const std::uint32_t t = cc.color(a, b);
      if (!seen[t]) {
        seen[t] = 1;
        reference[t] = packed;
      } else if (reference[t] != packed) {
        return fail("C3: intersection numbers of colour " + std::to_string(t) + " differ at " +
                    pair_str(a, b));
      }
    }
  }
  rep.ok = true;
  rep.tensor.resize(rank);
  for (int t = 0; t < rank; ++t) {
    for (std::size_t i = 0; i < reference[t].size(); i += 2) {
      rep.tensor[t].push_back({static_cast<std::uint32_t>(reference[t][i] / r),
                               static_cast<std::uint32_t>(reference[t][i] % r),
                               static_cast<int>(reference[t][i + 1])});
    }
  }
  return rep;
}

int structure_constant(const CoherentConfiguration& cc, std::uint32_t r, std::uint32_t s,
                       std::uint32_t t) {
  const auto rank = static_cast<std::uint32_t>(cc.rank());
  if (r >= rank || s >= rank || t >= rank) {
    throw InvalidArgument("structure_constant: colour id out of range");
  }
  const int n = cc.points();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (cc.color(a, b) != t) continue;
      int count = 0;
      for (int g = 0; g < n; ++g) count += cc.color(a, g) == r && cc.color(g, b) == s;
      return count;
    }
  }
  throw InternalCheckFailed("structure_constant: colour has no pairs");
}

std::vector<std::uint32_t> reversal_map(const CoherentConfiguration& cc) {
  const int n = cc.points();
  std::vector<std::int64_t> rev(cc.rank(), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const std::uint32_t c = cc.color(a, b);
      if (rev[c] == -1) rev[c] = cc.color(b, a);
      if (rev[c] != cc.color(b, a)) throw InvalidArgument("reversal_map: colour has no reverse");
    }
  }
  return {rev.begin(), rev.end()};
}

std::vector<PointSet> fibers(const CoherentConfiguration& cc) {
  std::map<std::uint32_t, PointSet> by_color;
  for (int a = 0; a < cc.points(); ++a) by_color[cc.color(a, a)].push_back(a);
  std::vector<PointSet> out;
  for (auto& [c, pts] : by_color) out.push_back(std::move(pts));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_homogeneity_set(const CoherentConfiguration& cc, const PointSet& delta) {
  const int n = cc.points();
  std::vector<char> in(n, 0);
  for (int p : delta) {
    require_point(n, p, "is_homogeneity_set");
    in[p] = 1;
  }
  std::map<std::uint32_t, char> state;
  for (int a = 0; a < n; ++a) {
    auto [it, fresh] = state.emplace(cc.color(a, a), in[a]);
    if (!fresh && it->second != in[a]) return false;
  }
  return true;
}

bool is_union_of_colors(const CoherentConfiguration& cc, const Relation& r) {
  const int n = cc.points();
  if (r.points() != n) throw InvalidArgument("is_union_of_colors: relation size mismatch");
  std::vector<int> state(cc.rank(), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int in = r.contains(a, b) ? 1 : 0;
      int& s = state[cc.color(a, b)];
      if (s == -1) s = in;
      if (s != in) return false;
    }
  }
  return true;
}

bool is_discrete(const CoherentConfiguration& cc) {
  return static_cast<std::size_t>(cc.rank()) == sq(cc.points());
}

// --- parabolics ------------------------------------------------------------

PointSet PartialParabolic::support() const {
  PointSet s;
  for (const PointSet& c : classes) s.insert(s.end(), c.begin(), c.end());
  std::sort(s.begin(), s.end());
  return s;
}

void PartialParabolic::validate(int n) const {
  std::vector<char> seen(n, 0);
  for (const PointSet& c : classes) {
    if (c.empty()) throw InvalidArgument("partial parabolic: empty class");
    for (int p : c) {
      require_point(n, p, "partial parabolic");
      if (seen[p]) throw InvalidArgument("partial parabolic: classes overlap");
      seen[p] = 1;
    }
  }
}

Relation PartialParabolic::as_relation(int n) const {
  Relation r(n);
  for (const PointSet& c : classes) {
    for (int a : c) {
      for (int b : c) r.insert(a, b);
    }
  }
  return r;
}

PartialParabolic make_partial_parabolic(std::vector<PointSet> classes) {
  for (PointSet& c : classes) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  std::sort(classes.begin(), classes.end());
  return PartialParabolic{std::move(classes)};
}

bool is_partial_parabolic(const CoherentConfiguration& cc, const PartialParabolic& e) {
  e.validate(cc.points());
  return is_union_of_colors(cc, e.as_relation(cc.points()));
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

// Equivalence on all points, stored as "least point of my class".
using Labels = std::vector<int>;

Labels normalise(UnionFind& uf, int n) {
  Labels l(n);
  for (int p = 0; p < n; ++p) l[p] = uf.find(p);
  return l;
}

PartialParabolic from_labels(const Labels& l) {
  std::map<int, PointSet> classes;
  for (int p = 0; p < static_cast<int>(l.size()); ++p) classes[l[p]].push_back(p);
  std::vector<PointSet> out;
  for (auto& [k, c] : classes) out.push_back(std::move(c));
  return make_partial_parabolic(std::move(out));
}

}  // namespace

std::vector<PartialParabolic> parabolics(const CoherentConfiguration& cc, int budget) {
  const int n = cc.points();
  std::set<Labels> found;
  std::vector<Labels> list;
  auto add = [&](Labels l) {
    if (static_cast<int>(list.size()) >= budget) return;
    if (found.insert(l).second) list.push_back(std::move(l));
  };
  {
    UnionFind uf(n);
    add(normalise(uf, n));
  }
  for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(cc.rank()); ++c) {
    UnionFind uf(n);
    for (auto [a, b] : cc.pairs_of(c)) uf.unite(a, b);
    Labels l = normalise(uf, n);
    if (!is_partial_parabolic(cc, from_labels(l))) {
      throw InternalCheckFailed("parabolics: closure of a colour is not a union of colours");
    }
    add(std::move(l));
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      UnionFind uf(n);
      for (int p = 0; p < n; ++p) {
        uf.unite(p, list[i][p]);
        uf.unite(p, list[j][p]);
      }
      add(normalise(uf, n));
    }
  }
  std::vector<PartialParabolic> out;
  for (const Labels& l : list) out.push_back(from_labels(l));
  std::sort(out.begin(), out.end(), [](const PartialParabolic& x, const PartialParabolic& y) {
    if (x.classes.size() != y.classes.size()) return x.classes.size() > y.classes.size();
    return x.classes < y.classes;
  });
  return out;
}

IndecomposableSplit indecomposable_components(const CoherentConfiguration& cc,
                                              const PartialParabolic& e) {
  if (!is_partial_parabolic(cc, e)) {
    throw InvalidArgument("indecomposable_components: not a partial parabolic");
  }
  const int k = static_cast<int>(e.classes.size());
  UnionFind uf(k);
  std::vector<int> first(cc.rank(), -1);
  for (int i = 0; i < k; ++i) {
    for (int a : e.classes[i]) {
      for (int b : e.classes[i]) {
        int& f = first[cc.color(a, b)];
        if (f == -1) {
          f = i;
        } else {
          uf.unite(f, i);
        }
      }
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < k; ++i) groups[uf.find(i)].push_back(i);
  IndecomposableSplit out;
  for (auto& [root, members] : groups) {
    std::vector<PointSet> cls;
    for (int i : members) cls.push_back(e.classes[i]);
    PartialParabolic comp = make_partial_parabolic(std::move(cls));
    if (!is_partial_parabolic(cc, comp)) {
      throw InternalCheckFailed("indecomposable_components: component is not a partial parabolic");
    }
    out.components.push_back(std::move(comp));
    out.pi.push_back(members);
  }
  return out;
}

// --- derived configurations ----------------------------------------------

namespace {

CoherentConfiguration restrict_points(const CoherentConfiguration& cc, const PointSet& delta) {
  const int m = static_cast<int>(delta.size());
  std::vector<std::uint32_t> raw(sq(m));
  for (int i = 0; i < m; ++i) {
    require_point(cc.points(), delta[i], "restriction");
    for (int j = 0; j < m; ++j) raw[i * m + j] = cc.color(delta[i], delta[j]);
  }
  std::vector<std::uint32_t> used(raw.begin(), raw.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (std::uint32_t& c : raw) {
    c = static_cast<std::uint32_t>(std::lower_bound(used.begin(), used.end(), c) - used.begin());
  }
  return CoherentConfiguration(m, std::move(raw));
}

CoherentConfiguration checked(CoherentConfiguration cc, const char* what) {
  const CoherenceReport r = verify_coherence(cc);
  if (!r.ok) throw InternalCheckFailed(std::string(what) + ": result incoherent: " + r.violation);
  return cc;
}

}  // namespace

CoherentConfiguration restriction(const CoherentConfiguration& cc, const PointSet& delta) {
  if (!std::is_sorted(delta.begin(), delta.end()) ||
      std::adjacent_find(delta.begin(), delta.end()) != delta.end()) {
    throw InvalidArgument("restriction: point set must be sorted and duplicate-free");
  }
  if (!is_homogeneity_set(cc, delta)) {
    throw InvalidArgument("restriction: not a homogeneity set");
  }
  return checked(restrict_points(cc, delta), "restriction");
}

CoherentConfiguration restriction_to_class(const CoherentConfiguration& cc,
                                           const PartialParabolic& e, int class_index) {
  if (!is_partial_parabolic(cc, e)) {
    throw InvalidArgument("restriction_to_class: not a partial parabolic");
  }
  if (class_index < 0 || class_index >= static_cast<int>(e.classes.size())) {
    throw InvalidArgument("restriction_to_class: class index out of range");
  }
  return checked(restrict_points(cc, e.classes[class_index]), "restriction_to_class");
}

CoherentConfiguration quotient(const CoherentConfiguration& cc, const PartialParabolic& e) {
  if (!is_partial_parabolic(cc, e)) throw InvalidArgument("quotient: not a partial parabolic");
  const int k = static_cast<int>(e.classes.size());
  const int rank = cc.rank();
  std::vector<std::vector<std::uint32_t>> present(sq(k));
  UnionFind uf(rank);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      std::vector<std::uint32_t>& cs = present[i * k + j];
      for (int a : e.classes[i]) {
        for (int b : e.classes[j]) cs.push_back(cc.color(a, b));
      }
      std::sort(cs.begin(), cs.end());
      cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
      for (std::uint32_t c : cs) uf.unite(static_cast<int>(c), static_cast<int>(cs.front()));
    }
  }
  // s_{Omega/e} must coincide for all colours merged into one block colour.
  std::map<int, std::set<int>> blocks_of_root;
  std::vector<std::set<int>> blocks_of_color(rank);
  for (int b = 0; b < k * k; ++b) {
    if (present[b].empty()) continue;
    blocks_of_root[uf.find(static_cast<int>(present[b].front()))].insert(b);
    for (std::uint32_t c : present[b]) blocks_of_color[c].insert(b);
  }
  for (int c = 0; c < rank; ++c) {
    if (!blocks_of_color[c].empty() && blocks_of_color[c] != blocks_of_root[uf.find(c)]) {
      throw InternalCheckFailed("quotient: factor relations overlap without coinciding");
    }
  }
  std::map<int, std::uint32_t> id;
  for (auto& [root, blocks] : blocks_of_root) id.emplace(root, static_cast<std::uint32_t>(id.size()));
  std::vector<std::uint32_t> colors(sq(k));
  for (int b = 0; b < k * k; ++b) colors[b] = id.at(uf.find(static_cast<int>(present[b].front())));
  return checked(CoherentConfiguration(k, std::move(colors)), "quotient");
}

CoherentConfiguration direct_sum(const CoherentConfiguration& a, const CoherentConfiguration& b) {
  const int na = a.points();
  const int nb = b.points();
  const int n = na + nb;
  const auto fa = fibers(a);
  const auto fb = fibers(b);
  std::vector<int> fiber_a(na);
  std::vector<int> fiber_b(nb);
  for (std::size_t i = 0; i < fa.size(); ++i) {
    for (int p : fa[i]) fiber_a[p] = static_cast<int>(i);
  }
  for (std::size_t j = 0; j < fb.size(); ++j) {
    for (int p : fb[j]) fiber_b[p] = static_cast<int>(j);
  }
  const std::uint32_t ra = a.rank();
  const std::uint32_t base = ra + b.rank();
  const auto na_f = static_cast<std::uint32_t>(fa.size());
  const auto nb_f = static_cast<std::uint32_t>(fb.size());
  std::vector<std::uint32_t> colors(sq(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      std::uint32_t c;
      if (x < na && y < na) {
        c = a.color(x, y);
      } else if (x >= na && y >= na) {
        c = ra + b.color(x - na, y - na);
      } else if (x < na) {
        c = base + fiber_a[x] * nb_f + fiber_b[y - na];
      } else {
        c = base + na_f * nb_f + fiber_b[x - na] * na_f + fiber_a[y];
      }
      colors[x * n + y] = c;
    }
  }
  return checked(CoherentConfiguration(n, std::move(colors)), "direct_sum");
}

CoherentConfiguration tensor(const CoherentConfiguration& a, const CoherentConfiguration& b) {
  const int na = a.points();
  const int nb = b.points();
  const int n = na * nb;
  const std::uint32_t rb = b.rank();
  std::vector<std::uint32_t> colors(sq(n));
  for (int x1 = 0; x1 < na; ++x1) {
    for (int x2 = 0; x2 < nb; ++x2) {
      for (int y1 = 0; y1 < na; ++y1) {
        for (int y2 = 0; y2 < nb; ++y2) {
          colors[static_cast<std::size_t>(x1 * nb + x2) * n + (y1 * nb + y2)] =
              a.color(x1, y1) * rb + b.color(x2, y2);
        }
      }
    }
  }
  return checked(CoherentConfiguration(n, std::move(colors)), "tensor");
}

CoherentConfiguration individualize(const CoherentConfiguration& cc,
                                    const std::vector<int>& points) {
  const int n = cc.points();
  const std::uint64_t k = points.size();
  std::vector<std::uint64_t> labels(sq(n));
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = cc.colors()[i] * (k + 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    require_point(n, points[i], "individualize");
    labels[static_cast<std::size_t>(points[i]) * n + points[i]] =
        cc.color(points[i], points[i]) * (k + 1) + i + 1;
  }
  return refine_from_labels(n, labels);
}

CoherentConfiguration relabel(const CoherentConfiguration& cc, const std::vector<int>& f) {
  const int n = cc.points();
  if (static_cast<int>(f.size()) != n) throw InvalidArgument("relabel: wrong permutation size");
  std::vector<char> hit(n, 0);
  for (int p : f) {
    require_point(n, p, "relabel");
    if (hit[p]) throw InvalidArgument("relabel: not a permutation");
    hit[p] = 1;
  }
  std::vector<std::uint32_t> colors(sq(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) colors[f[a] * n + f[b]] = cc.color(a, b);
  }
  return CoherentConfiguration(n, std::move(colors), cc.history());
}

bool refines(const CoherentConfiguration& finer, const CoherentConfiguration& coarser) {
  if (finer.points() != coarser.points()) return false;
  std::vector<std::int64_t> map(finer.rank(), -1);
  for (std::size_t i = 0; i < finer.colors().size(); ++i) {
    std::int64_t& m = map[finer.colors()[i]];
    if (m == -1) m = coarser.colors()[i];
    if (m != coarser.colors()[i]) return false;
  }
  return true;
}

bool same_partition(const CoherentConfiguration& a, const CoherentConfiguration& b) {
  return a.rank() == b.rank() && refines(a, b) && refines(b, a);
}

// --- fingerprints ----------------------------------------------------------

Fingerprint canonical_fingerprint(const CoherentConfiguration& cc) {
  CoherenceReport rep = verify_coherence(cc);
  if (!rep.ok) throw InvalidArgument("canonical_fingerprint: incoherent input: " + rep.violation);
  Fingerprint f;
  f.points = cc.points();
  f.rank = cc.rank();
  f.diagonal.assign(f.rank, false);
  f.sizes.assign(f.rank, 0);
  for (int a = 0; a < cc.points(); ++a) {
    f.diagonal[cc.color(a, a)] = true;
    for (int b = 0; b < cc.points(); ++b) ++f.sizes[cc.color(a, b)];
  }
  f.reversal = reversal_map(cc);
  f.tensor = std::move(rep.tensor);
  f.history = cc.history();
  return f;
}

std::string digest_hex(const Digest& d) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(d[0]),
                static_cast<unsigned long long>(d[1]));
  return buf;
}

nlohmann::json to_json(const CoherentConfiguration& cc) {
  return {{"n", cc.points()}, {"rank", cc.rank()}, {"colors", cc.colors()}};
}

nlohmann::json to_json(const Fingerprint& f) {
  nlohmann::json tensor = nlohmann::json::array();
  for (const auto& row : f.tensor) {
    nlohmann::json entries = nlohmann::json::array();
    for (const TensorEntry& e : row) entries.push_back({e.r, e.s, e.count});
    tensor.push_back(std::move(entries));
  }
  return {{"points", f.points},   {"rank", f.rank},     {"diagonal", f.diagonal},
          {"reversal", f.reversal}, {"sizes", f.sizes}, {"tensor", std::move(tensor)},
          {"history", digest_hex(f.history)}};
}

nlohmann::json to_json(const PartialParabolic& e) { return e.classes; }

}  // namespace wlperm
