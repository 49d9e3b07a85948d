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

// Brute-force reference implementations used only by tests. They share no
// code with the library beyond the Graph container.

#ifndef WLPERM_TESTS_ORACLES_HPP_
#define WLPERM_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "wlperm/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

inline Matrix adjacency(const wlperm::Graph& g) {
  Matrix m(g.n(), std::vector<int>(g.n(), 0));
  for (int u = 0; u < g.n(); ++u) {
    for (int v = 0; v < g.n(); ++v) m[u][v] = g.adjacent(u, v) ? 1 : 0;
  }
  return m;
}

inline Matrix complement(const Matrix& m) {
  Matrix c = m;
  for (std::size_t u = 0; u < m.size(); ++u) {
    for (std::size_t v = 0; v < m.size(); ++v) c[u][v] = (u != v && !m[u][v]) ? 1 : 0;
  }
  return c;
}

// Number of transitive orientations: try all 2^m choices of direction.
inline std::uint64_t orientation_count(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (m[u][v]) edges.emplace_back(u, v);
    }
  }
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Matrix d(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if ((mask >> i) & 1U) {
        d[v][u] = 1;
      } else {
        d[u][v] = 1;
      }
    }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        if (!d[a][b]) continue;
        for (int c = 0; c < n; ++c) {
          if (d[b][c] && !d[a][c]) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

inline std::uint64_t orientation_count(const wlperm::Graph& g) {
  return orientation_count(adjacency(g));
}

inline bool comparability(const wlperm::Graph& g) { return orientation_count(g) > 0; }

inline bool permutation_graph(const wlperm::Graph& g) {
  const Matrix m = adjacency(g);
  return orientation_count(m) > 0 && orientation_count(complement(m)) > 0;
}

// Isomorphism by trying every permutation.
inline bool isomorphic(const wlperm::Graph& g, const wlperm::Graph& h) {
  if (g.n() != h.n()) return false;
  std::vector<int> p(g.n());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < g.n() && ok; ++u) {
      for (int v = u + 1; v < g.n(); ++v) {
        if (g.adjacent(u, v) != h.adjacent(p[u], p[v])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline std::vector<std::vector<int>> automorphisms(const wlperm::Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(g.n());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < g.n() && ok; ++u) {
      for (int v = u + 1; v < g.n(); ++v) {
        if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Orbits of Aut(g) on ordered pairs of vertices.
inline int pair_orbit_count(const wlperm::Graph& g) {
  const auto auts = automorphisms(g);
  std::set<std::pair<int, int>> seen;
  int orbits = 0;
  for (int a = 0; a < g.n(); ++a) {
    for (int b = 0; b < g.n(); ++b) {
      if (seen.count({a, b})) continue;
      ++orbits;
      for (const auto& p : auts) seen.insert({p[a], p[b]});
    }
  }
  return orbits;
}

// Unlabeled graph count: average over S_n of 2^(cycles on 2-subsets).
inline std::uint64_t burnside_count(int n) {
  if (n <= 1) return 1;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t sum = 0;
  std::uint64_t perms = 0;
  do {
    std::set<std::pair<int, int>> seen;
    int cycles = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (seen.count({a, b})) continue;
        ++cycles;
        int x = a;
        int y = b;
        while (!seen.count({std::min(x, y), std::max(x, y)})) {
          seen.insert({std::min(x, y), std::max(x, y)});
          x = p[x];
          y = p[y];
        }
      }
    }
    sum += std::uint64_t{1} << cycles;
    ++perms;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum / perms;
}

// Labeled brute force: canonical code is the minimum upper-triangle bit
// string over all relabelings.
inline std::uint64_t min_code(const std::vector<std::pair<int, int>>& pairs, std::uint32_t mask,
                              int n) {
  std::vector<int> index(n * n, -1);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    index[pairs[i].first * n + pairs[i].second] = static_cast<int>(i);
    index[pairs[i].second * n + pairs[i].first] = static_cast<int>(i);
  }
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const int j = index[p[pairs[i].first] * n + p[pairs[i].second]];
      if ((mask >> j) & 1U) code |= std::uint64_t{1} << i;
    }
    best = std::min(best, code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline std::uint64_t labeled_class_count(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::set<std::uint64_t> codes;
  const std::uint32_t total = std::uint32_t{1} << pairs.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) codes.insert(min_code(pairs, mask, n));
  return codes.size();
}

// Plain 2-dimensional refinement on colour matrices with std::map ids.
// Returns the stable partition of ordered pairs as a colour matrix.
inline Matrix naive_closure(const wlperm::Graph& g) {
  const int n = g.n();
  Matrix c(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) c[a][b] = a == b ? 0 : (g.adjacent(a, b) ? 1 : 2);
  }
  int classes = -1;
  while (true) {
    std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> ids;
    Matrix next(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        std::vector<std::pair<int, int>> bag;
        for (int x = 0; x < n; ++x) bag.emplace_back(c[a][x], c[x][b]);
        std::sort(bag.begin(), bag.end());
        auto key = std::make_pair(c[a][b], bag);
        auto it = ids.emplace(key, static_cast<int>(ids.size())).first;
        next[a][b] = it->second;
      }
    }
    c = next;
    if (static_cast<int>(ids.size()) == classes) break;
    classes = static_cast<int>(ids.size());
  }
  return c;
}

// True when two colourings of the same ground set induce the same partition.
template <typename F, typename G>
bool same_pairs_partition(int points, F lhs, G rhs) {
  std::map<long long, long long> fw;
  std::map<long long, long long> bw;
  for (int a = 0; a < points; ++a) {
    for (int b = 0; b < points; ++b) {
      const long long x = lhs(a, b);
      const long long y = rhs(a, b);
      auto [i, fresh] = fw.emplace(x, y);
      if (!fresh && i->second != y) return false;
      auto [j, fresh2] = bw.emplace(y, x);
      if (!fresh2 && j->second != x) return false;
    }
  }
  return true;
}

}  // namespace oracle

#endif  // WLPERM_TESTS_ORACLES_HPP_
