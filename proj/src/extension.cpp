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

#include "wlperm/extension.hpp"

#include <algorithm>
#include <numeric>

#include "wlperm/error.hpp"

namespace wlperm {

PointSet Extension2::diag() const {
  PointSet d;
  for (int a = 0; a < n; ++a) d.push_back(point(a, a));
  return d;
}

Extension2 extend2(const CoherentConfiguration& base, int cap) {
  const int n = base.points();
  if (n > cap) {
    throw CapExceeded("extend2: base has " + std::to_string(n) + " points, cap is " +
                      std::to_string(cap));
  }
  const int big = n * n;
  const std::uint64_t r = base.rank();
  std::vector<std::uint64_t> labels(static_cast<std::size_t>(big) * big);
  std::vector<std::uint64_t> square(labels.size());
  for (int x1 = 0; x1 < n; ++x1) {
    for (int x2 = 0; x2 < n; ++x2) {
      const int x = x1 * n + x2;
      for (int y1 = 0; y1 < n; ++y1) {
        for (int y2 = 0; y2 < n; ++y2) {
          const int y = y1 * n + y2;
          const std::uint64_t sq = base.color(x1, y1) * r + base.color(x2, y2);
          const bool on_diag = x == y && x1 == x2;
          square[static_cast<std::size_t>(x) * big + y] = sq;
          labels[static_cast<std::size_t>(x) * big + y] = sq * 2 + (on_diag ? 1 : 0);
        }
      }
    }
  }
  Extension2 out{base, refine_from_labels(big, labels), n};

  std::vector<std::int64_t> image(out.ext.rank(), -1);
  for (std::size_t i = 0; i < square.size(); ++i) {
    std::int64_t& m = image[out.ext.colors()[i]];
    if (m == -1) m = static_cast<std::int64_t>(square[i]);
    if (m != static_cast<std::int64_t>(square[i])) {
      throw InternalCheckFailed("extend2: extension does not refine the tensor square");
    }
  }
  if (!is_homogeneity_set(out.ext, out.diag())) {
    throw InternalCheckFailed("extend2: diag is not a homogeneity set");
  }
  return out;
}

Relation cyl(const Relation& s, int i, int j) {
  if (i < 1 || i > 2 || j < 1 || j > 2) throw InvalidArgument("cyl: indices must be 1 or 2");
  const int n = s.points();
  const int big = n * n;
  Relation out(big);
  for (int x = 0; x < big; ++x) {
    const int xi = i == 1 ? x / n : x % n;
    for (int y = 0; y < big; ++y) {
      const int yj = j == 1 ? y / n : y % n;
      if (s.contains(xi, yj)) out.insert(x, y);
    }
  }
  return out;
}

Relation cyl(const Extension2& x, const Relation& s, int i, int j) {
  if (s.points() != x.n || !is_union_of_colors(x.base, s)) {
    throw InvalidArgument("cyl: relation is not a union of base colours");
  }
  return cyl(s, i, j);
}

CoherentConfiguration m_closure(const Extension2& x) { return restriction(x.ext, x.diag()); }

CoherentConfiguration individualized_extension(const Extension2& x, int p1, int p2) {
  return individualize(x.ext, {p1, p2});
}

// --- k-dim WL ---------------------------------------------------------------

namespace {

// Dense ids by sorting (old colour, packed multiset); returns the new rank.
int renumber(std::vector<std::vector<std::uint64_t>>& sig, std::vector<std::uint32_t>& color,
             Digest* history, std::uint64_t& h1, std::uint64_t& h2) {
  const std::size_t total = sig.size();
  std::vector<std::uint32_t> order(total);
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
  int next = -1;
  auto mix = [&](std::uint64_t w) {
    h1 = (h1 ^ w) * 0x100000001b3ULL;
    h2 = (h2 + w + 0x9e3779b97f4a7c15ULL) * 0xbf58476d1ce4e5b9ULL;
    h2 ^= h2 >> 29;
  };
  std::size_t run = 0;
  auto flush = [&](std::size_t end) {
    mix(sig[order[run]].size());
    for (std::uint64_t w : sig[order[run]]) mix(w);
    mix(end - run);
  };
  for (std::size_t k = 0; k < total; ++k) {
    if (k == 0 || sig[order[k - 1]] != sig[order[k]]) {
      if (k > 0) flush(k);
      run = k;
      ++next;
    }
    color[order[k]] = static_cast<std::uint32_t>(next);
  }
  if (total > 0) flush(total);
  mix(0xabcdULL);
  if (history) *history = {h1, h2};
  return next + 1;
}

void pack_multiset(std::vector<std::uint64_t>& keys, std::vector<std::uint64_t>& out, int n) {
  std::sort(keys.begin(), keys.end());
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    out.push_back(keys[i] * static_cast<std::uint64_t>(n + 1) + (j - i));
    i = j;
  }
}

}  // namespace

std::vector<std::uint32_t> k_wl_colors(const Graph& g, int k, std::int64_t tuple_cap,
                                       Digest* history) {
  if (k < 1 || k > 3) throw InvalidArgument("k_wl: k must be 1, 2 or 3");
  const int n = g.n();
  std::int64_t total64 = 1;
  for (int i = 0; i < k; ++i) total64 *= n;
  if (total64 > tuple_cap) {
    throw CapExceeded("k_wl: " + std::to_string(total64) + " tuples exceed cap " +
                      std::to_string(tuple_cap));
  }
  const auto total = static_cast<std::size_t>(total64);
  std::vector<int> pow(k + 1, 1);
  for (int i = 1; i <= k; ++i) pow[i] = pow[i - 1] * n;
  auto coord = [&](std::size_t t, int i) { return static_cast<int>(t / pow[k - 1 - i]) % n; };

  std::uint64_t h1 = 0xcbf29ce484222325ULL;
  std::uint64_t h2 = 0x243f6a8885a308d3ULL;
  std::vector<std::vector<std::uint64_t>> sig(total);
  // Atomic type: equality and adjacency pattern between coordinates.
  for (std::size_t t = 0; t < total; ++t) {
    std::uint64_t type = 0;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        const int a = coord(t, i);
        const int b = coord(t, j);
        type = type * 3 + (a == b ? 2 : (g.adjacent(a, b) ? 1 : 0));
      }
    }
    sig[t] = {type};
  }
  std::vector<std::uint32_t> color(total);
  int rank = renumber(sig, color, history, h1, h2);

  std::vector<std::uint64_t> keys;
  std::vector<std::uint32_t> next(total);
  while (static_cast<std::size_t>(rank) < total || k == 1) {
    const std::uint64_t c = rank;
    for (std::size_t t = 0; t < total; ++t) {
      keys.clear();
      if (k == 1) {
        for (int w : g.neighbors(static_cast<int>(t))) keys.push_back(color[w]);
      } else {
        for (int w = 0; w < n; ++w) {
          std::uint64_t key = 0;
          for (int i = 0; i < k; ++i) {
            const std::size_t sub = t + static_cast<std::size_t>(w - coord(t, i)) * pow[k - 1 - i];
            key = key * c + color[sub];
          }
          keys.push_back(key);
        }
      }
      sig[t].assign(1, color[t]);
      pack_multiset(keys, sig[t], n);
    }
    const int new_rank = renumber(sig, next, history, h1, h2);
    if (new_rank == rank) break;
    color.swap(next);
    rank = new_rank;
  }
  return color;
}

KwlFingerprint k_wl_fingerprint(const Graph& g, int k, std::int64_t tuple_cap) {
  KwlFingerprint f;
  f.k = k;
  f.n = g.n();
  const std::vector<std::uint32_t> colors = k_wl_colors(g, k, tuple_cap, &f.history);
  for (std::uint32_t c : colors) {
    if (c >= f.class_sizes.size()) f.class_sizes.resize(c + 1, 0);
    ++f.class_sizes[c];
  }
  return f;
}

// --- 2-isomorphism ----------------------------------------------------------

const char* to_string(TwoIsoVerdict v) {
  switch (v) {
    case TwoIsoVerdict::kDistinct:
      return "distinct";
    case TwoIsoVerdict::kEquivalent:
      return "equivalent";
    case TwoIsoVerdict::kEquivalentNoWitness:
      return "equivalent_no_witness";
  }
  return "?";
}

namespace {

// Point bijection f with c_h(f(u), f(v)) = c_g(u, v) for all u, v.
class ColorIsoSearch {
 public:
  ColorIsoSearch(const CoherentConfiguration& a, const CoherentConfiguration& b)
      : a_(a), b_(b), image_(a.points(), -1), used_(a.points(), false) {}

  std::optional<VertexBijection> run() {
    if (extend(0)) return VertexBijection(image_);
    return std::nullopt;
  }

 private:
  bool extend(int v) {
    const int n = a_.points();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used_[w] || b_.color(w, w) != a_.color(v, v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        ok = b_.color(image_[u], w) == a_.color(u, v) && b_.color(w, image_[u]) == a_.color(v, u);
      }
      if (!ok) continue;
      image_[v] = w;
      used_[w] = true;
      if (extend(v + 1)) return true;
      used_[w] = false;
      image_[v] = -1;
    }
    return false;
  }

  const CoherentConfiguration& a_;
  const CoherentConfiguration& b_;
  std::vector<int> image_;
  std::vector<bool> used_;
};

}  // namespace

TwoIsoResult two_iso_check(const Graph& g, const Graph& h, int ext_cap, int oracle_cap) {
  if (g.n() != h.n()) throw InvalidArgument("two_iso_check: orders differ");
  TwoIsoResult out;
  const CoherentConfiguration bg = wl_closure(g);
  const CoherentConfiguration bh = wl_closure(h);
  if (!(canonical_fingerprint(bg) == canonical_fingerprint(bh))) {
    out.reason = "closure fingerprints differ";
    return out;
  }
  const Extension2 xg = extend2(bg, ext_cap);
  const Extension2 xh = extend2(bh, ext_cap);
  if (!(canonical_fingerprint(xg.ext) == canonical_fingerprint(xh.ext))) {
    out.reason = "2-extension fingerprints differ";
    return out;
  }
  if (g.n() > oracle_cap) {
    throw CapExceeded("two_iso_check: witness search needs n <= " + std::to_string(oracle_cap));
  }
  std::optional<VertexBijection> f = ColorIsoSearch(bg, bh).run();
  if (!f) {
    out.verdict = TwoIsoVerdict::kEquivalentNoWitness;
    out.reason = "fingerprints agree but no colour-preserving bijection exists";
    return out;
  }
  if (!is_isomorphism(g, h, *f)) {
    throw InternalCheckFailed("two_iso_check: colour-preserving bijection is not an isomorphism");
  }
  const int n = g.n();
  for (int x = 0; x < n * n; ++x) {
    for (int y = 0; y < n * n; ++y) {
      const int fx = xh.point((*f)(x / n), (*f)(x % n));
      const int fy = xh.point((*f)(y / n), (*f)(y % n));
      if (xg.ext.color(x, y) != xh.ext.color(fx, fy)) {
        throw InternalCheckFailed("two_iso_check: witness does not induce the extension map");
      }
    }
  }
  out.verdict = TwoIsoVerdict::kEquivalent;
  out.witness = std::move(f);
  out.reason = "colour-preserving bijection found";
  return out;
}

nlohmann::json to_json(const Extension2& x) {
  nlohmann::json j = to_json(x.ext);
  j["base_n"] = x.n;
  j["encoding"] = "row-major";
  return j;
}

nlohmann::json to_json(const KwlFingerprint& f) {
  return {{"k", f.k},
          {"n", f.n},
          {"history", digest_hex(f.history)},
          {"class_sizes", f.class_sizes}};
}

nlohmann::json to_json(const TwoIsoResult& r) {
  nlohmann::json j = {{"verdict", to_string(r.verdict)}, {"reason", r.reason}, {"witness", nullptr}};
  if (r.witness) j["witness"] = r.witness->image();
  return j;
}

}  // namespace wlperm
