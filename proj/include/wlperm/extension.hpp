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

// 2-extensions on Omega^2, cylinder relations, the 2-closure, k-dim WL
// fingerprints and the 2-isomorphism check.

#ifndef WLPERM_EXTENSION_HPP_
#define WLPERM_EXTENSION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wlperm/coherent.hpp"
#include "wlperm/graph.hpp"

namespace wlperm {

inline constexpr int kDefaultExtensionCap = 16;

// Points of `ext` encode pairs of base points row-major: (a, b) -> a*n + b.
struct Extension2 {
  CoherentConfiguration base;
  CoherentConfiguration ext;
  int n = 0;

  int point(int a, int b) const { return a * n + b; }
  std::pair<int, int> coords(int p) const { return {p / n, p % n}; }
  // diag(Omega^2) in increasing order.
  PointSet diag() const;
};

// WL of the tensor-square colours plus 1_diag.  Throws CapExceeded when
// base.points() > cap.
Extension2 extend2(const CoherentConfiguration& base, int cap = kDefaultExtensionCap);

// cyl_s(i, j) = {(x, y) : (x_i, y_j) in s} on Omega^2, i, j in {1, 2}.
Relation cyl(const Relation& s, int i, int j);
// Same, additionally requiring s to be a union of base colours.
Relation cyl(const Extension2& x, const Relation& s, int i, int j);

// Restriction to diag(Omega^2), pulled back along a -> (a, a).
CoherentConfiguration m_closure(const Extension2& x);

// The extension individualized at two Omega^2 points.
CoherentConfiguration individualized_extension(const Extension2& x, int p1, int p2);

inline constexpr std::int64_t kDefaultTupleCap = 4096;

struct KwlFingerprint {
  int k = 0;
  int n = 0;
  Digest history{};
  // Size of every final colour class, indexed by canonical colour id.
  std::vector<int> class_sizes;

  bool operator==(const KwlFingerprint&) const = default;
};

// Stable k-tuple colouring (row-major tuple index).  k = 1 is colour
// refinement; k >= 2 updates a tuple by the multiset over w of
// (c(t[1<-w]), ..., c(t[k<-w])).  Throws CapExceeded when n^k > tuple_cap.
std::vector<std::uint32_t> k_wl_colors(const Graph& g, int k,
                                       std::int64_t tuple_cap = kDefaultTupleCap,
                                       Digest* history = nullptr);
KwlFingerprint k_wl_fingerprint(const Graph& g, int k,
                                std::int64_t tuple_cap = kDefaultTupleCap);

enum class TwoIsoVerdict { kDistinct, kEquivalent, kEquivalentNoWitness };
const char* to_string(TwoIsoVerdict v);

struct TwoIsoResult {
  TwoIsoVerdict verdict = TwoIsoVerdict::kDistinct;
  std::optional<VertexBijection> witness;
  std::string reason;
};

// Compares closure and 2-extension fingerprints; on a match searches for a
// point bijection preserving base colours (n <= oracle_cap).
TwoIsoResult two_iso_check(const Graph& g, const Graph& h, int ext_cap = kDefaultExtensionCap,
                           int oracle_cap = kDefaultOracleCap);

nlohmann::json to_json(const Extension2& x);
nlohmann::json to_json(const KwlFingerprint& f);
nlohmann::json to_json(const TwoIsoResult& r);

}  // namespace wlperm

#endif  // WLPERM_EXTENSION_HPP_
