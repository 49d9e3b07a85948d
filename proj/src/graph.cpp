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

#include "wlperm/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "wlperm/error.hpp"

namespace wlperm {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedHeader:
      return "malformed header";
    case ParseErrorKind::kTruncated:
      return "truncated bit-vector";
    case ParseErrorKind::kBadCharacter:
      return "out-of-range character";
    case ParseErrorKind::kTrailingData:
      return "trailing data";
    case ParseErrorKind::kNonzeroPadding:
      return "non-zero padding bits";
    case ParseErrorKind::kBadJson:
      return "bad JSON graph";
  }
  return "parse error";
}

namespace {

void check_vertex(int v, int n, const char* what) {
  if (v < 0 || v >= n) {
    throw InvalidArgument(std::string(what) + ": vertex " + std::to_string(v) +
                          " out of range for n=" + std::to_string(n));
  }
}

}  // namespace

// --- VertexSet ----------------------------------------------------------

VertexSet VertexSet::of(std::span<const int> vertices) {
  VertexSet s;
  for (int v : vertices) {
    check_vertex(v, kMaxVertices, "VertexSet::of");
    s.insert(v);
  }
  return s;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

// --- ArcSet -------------------------------------------------------------

ArcSet::ArcSet(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InvalidArgument("ArcSet: ground size " + std::to_string(n) +
                          " outside 0.." + std::to_string(kMaxVertices));
  }
  rows_.resize(n);
}

int ArcSet::size() const {
  int total = 0;
  for (VertexSet r : rows_) total += r.size();
  return total;
}

bool ArcSet::empty() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [](VertexSet r) { return r.empty(); });
}

bool ArcSet::is_irreflexive() const {
  for (int u = 0; u < ground_size(); ++u) {
    if (rows_[u].contains(u)) return false;
  }
  return true;
}

std::vector<Arc> ArcSet::arcs() const {
  std::vector<Arc> out;
  for (int u = 0; u < ground_size(); ++u) {
    for (int v : rows_[u]) out.push_back({u, v});
  }
  return out;
}

std::optional<Arc> ArcSet::first() const {
  for (int u = 0; u < ground_size(); ++u) {
    if (!rows_[u].empty()) return Arc{u, rows_[u].min()};
  }
  return std::nullopt;
}

ArcSet ArcSet::reversed() const {
  ArcSet out(ground_size());
  for (int u = 0; u < ground_size(); ++u) {
    for (int v : rows_[u]) out.insert(v, u);
  }
  return out;
}

ArcSet ArcSet::compose(const ArcSet& other) const {
  ArcSet out(ground_size());
  for (int u = 0; u < ground_size(); ++u) {
    VertexSet acc;
    for (int w : rows_[u]) acc |= other.rows_[w];
    out.rows_[u] = acc;
  }
  return out;
}

ArcSet ArcSet::operator|(const ArcSet& o) const {
  ArcSet out(*this);
  for (int u = 0; u < ground_size(); ++u) out.rows_[u] |= o.rows_[u];
  return out;
}

ArcSet ArcSet::operator&(const ArcSet& o) const {
  ArcSet out(*this);
  for (int u = 0; u < ground_size(); ++u) out.rows_[u] = rows_[u] & o.rows_[u];
  return out;
}

ArcSet ArcSet::operator-(const ArcSet& o) const {
  ArcSet out(*this);
  for (int u = 0; u < ground_size(); ++u) out.rows_[u] = rows_[u] - o.rows_[u];
  return out;
}

bool ArcSet::is_subset_of(const ArcSet& o) const {
  for (int u = 0; u < ground_size(); ++u) {
    if (!rows_[u].is_subset_of(o.rows_[u])) return false;
  }
  return true;
}

bool ArcSet::intersects(const ArcSet& o) const {
  for (int u = 0; u < ground_size(); ++u) {
    if (rows_[u].intersects(o.rows_[u])) return true;
  }
  return false;
}

VertexSet ArcSet::incident_vertices() const {
  VertexSet out;
  for (int u = 0; u < ground_size(); ++u) {
    if (!rows_[u].empty()) {
      out.insert(u);
      out |= rows_[u];
    }
  }
  return out;
}

ArcSet ArcSet::identity(VertexSet on, int n) {
  ArcSet out(n);
  for (int v : on) out.insert(v, v);
  return out;
}

ArcSet ArcSet::product(VertexSet a, VertexSet b, int n) {
  ArcSet out(n);
  for (int u : a) out.rows_[u] = b;
  return out;
}

// --- Graph --------------------------------------------------------------

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw CapExceeded("graph order " + std::to_string(n) + " outside 0.." +
                      std::to_string(kMaxVertices));
  }
  n_ = n;
  adj_.resize(n);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_arcs(const ArcSet& arcs) {
  Graph g(arcs.ground_size());
  for (Arc a : arcs.arcs()) {
    if (a.tail == a.head || !arcs.contains(a.head, a.tail)) {
      throw InvalidArgument("Graph::from_arcs: relation is not symmetric and irreflexive");
    }
    g.adj_[a.tail].insert(a.head);
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet r : adj_) twice += r.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

ArcSet Graph::arcs() const {
  ArcSet out(n_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) out.insert(u, v);
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u, n_, "add_edge");
  check_vertex(v, n_, "add_edge");
  if (u == v) throw InvalidArgument("add_edge: loops are not allowed");
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u, n_, "remove_edge");
  check_vertex(v, n_, "remove_edge");
  adj_[u].erase(v);
  adj_[v].erase(u);
}

// --- VertexBijection ----------------------------------------------------

VertexBijection::VertexBijection(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int v : image_) {
    if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v]) {
      throw InvalidArgument("VertexBijection: image is not a permutation");
    }
    seen[v] = 1;
  }
}

VertexBijection VertexBijection::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return VertexBijection(std::move(image));
}

VertexBijection VertexBijection::inverse() const {
  std::vector<int> inv(image_.size());
  for (int v = 0; v < size(); ++v) inv[image_[v]] = v;
  return VertexBijection(std::move(inv));
}

VertexBijection VertexBijection::then(const VertexBijection& next) const {
  if (next.size() != size()) throw InvalidArgument("VertexBijection::then: size mismatch");
  std::vector<int> out(image_.size());
  for (int v = 0; v < size(); ++v) out[v] = next(image_[v]);
  return VertexBijection(std::move(out));
}

Graph relabel(const Graph& g, const VertexBijection& f) {
  if (f.size() != g.n()) throw InvalidArgument("relabel: size mismatch");
  Graph h(g.n());
  for (auto [u, v] : g.edges()) h.add_edge(f(u), f(v));
  return h;
}

bool is_isomorphism(const Graph& g, const Graph& h, const VertexBijection& f) {
  if (g.n() != h.n() || f.size() != g.n()) return false;
  return relabel(g, f) == h;
}

// --- constructions ------------------------------------------------------

Graph complement(const Graph& g) {
  Graph h(g.n());
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.adjacent(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

Graph induced(const Graph& g, std::span<const int> subset) {
  Graph h(static_cast<int>(subset.size()));
  VertexSet seen;
  for (int v : subset) {
    check_vertex(v, g.n(), "induced");
    if (seen.contains(v)) throw InvalidArgument("induced: repeated vertex");
    seen.insert(v);
  }
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (g.adjacent(subset[i], subset[j])) {
        h.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return h;
}

Graph induced(const Graph& g, VertexSet subset) {
  const std::vector<int> verts = subset.to_vector();
  return induced(g, verts);
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::single(unseen.min());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next = next - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    unseen = unseen - comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_coconnected(const Graph& g) { return is_connected(complement(g)); }

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("cycle_graph: n must be at least 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph empty_graph(int n) { return Graph(n); }

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n() + b.n());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
  return g;
}

Graph add_universal_vertex(const Graph& g) {
  Graph h(g.n() + 1);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  for (int v = 0; v < g.n(); ++v) h.add_edge(v, g.n());
  return h;
}

// --- graph6 -------------------------------------------------------------

namespace {

constexpr int kG6Bias = 63;
constexpr int kG6Max = 126;

bool g6_char_ok(char c) {
  const int v = static_cast<unsigned char>(c);
  return v >= kG6Bias && v <= kG6Max;
}

std::string_view trim_line(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  return text;
}

}  // namespace

Graph parse_graph6(std::string_view text, int max_vertices) {
  text = trim_line(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError(ParseErrorKind::kMalformedHeader, "empty record");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (!g6_char_ok(text[0])) {
    throw ParseError(ParseErrorKind::kMalformedHeader,
                     "first byte is not a graph6 size character");
  }
  if (static_cast<unsigned char>(text[0]) != kG6Max) {
    n = static_cast<unsigned char>(text[0]) - kG6Bias;
    pos = 1;
  } else {
    std::size_t width = 3;
    pos = 1;
    if (text.size() > 1 && static_cast<unsigned char>(text[1]) == kG6Max) {
      width = 6;
      pos = 2;
    }
    if (text.size() < pos + width) {
      throw ParseError(ParseErrorKind::kMalformedHeader, "incomplete size field");
    }
    for (std::size_t i = 0; i < width; ++i) {
      const char c = text[pos + i];
      if (!g6_char_ok(c)) {
        throw ParseError(ParseErrorKind::kMalformedHeader, "bad size character");
      }
      n = (n << 6) | static_cast<std::uint64_t>(static_cast<unsigned char>(c) - kG6Bias);
    }
    pos += width;
  }
  if (n > static_cast<std::uint64_t>(max_vertices)) {
    throw CapExceeded("graph6 order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(max_vertices));
  }

  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * (order - (order > 0 ? 1 : 0)) / 2;
  const std::size_t need = (bits + 5) / 6;
  std::string_view body = text.substr(pos);
  for (std::size_t i = 0; i < body.size() && i < need; ++i) {
    if (!g6_char_ok(body[i])) {
      throw ParseError(ParseErrorKind::kBadCharacter,
                       "byte " + std::to_string(pos + i) + " outside 63..126");
    }
  }
  if (body.size() < need) {
    throw ParseError(ParseErrorKind::kTruncated,
                     "expected " + std::to_string(need) + " data bytes, got " +
                         std::to_string(body.size()));
  }
  if (body.size() > need) {
    if (!g6_char_ok(body[need])) {
      throw ParseError(ParseErrorKind::kBadCharacter,
                       "byte " + std::to_string(pos + need) + " outside 63..126");
    }
    throw ParseError(ParseErrorKind::kTrailingData,
                     std::to_string(body.size() - need) + " extra bytes");
  }

  Graph g(order);
  std::size_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(body[k / 6]) - kG6Bias;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (; k < need * 6; ++k) {
    const int byte = static_cast<unsigned char>(body[k / 6]) - kG6Bias;
    if ((byte >> (5 - k % 6)) & 1) {
      throw ParseError(ParseErrorKind::kNonzeroPadding, "padding bit set");
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  std::string out;
  const int n = g.n();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Bias));
  } else {
    out.push_back(static_cast<char>(kG6Max));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Bias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Bias));
    out.push_back(static_cast<char>((n & 0x3f) + kG6Bias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kG6Bias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kG6Bias));
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text, int max_vertices) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim_line(text.substr(start, end - start));
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (!line.empty()) out.push_back(parse_graph6(line, max_vertices));
    start = end + 1;
  }
  return out;
}

// --- JSON ---------------------------------------------------------------

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n()}, {"edges", std::move(edges)}};
}

nlohmann::json to_json(const ArcSet& arcs) {
  nlohmann::json out = nlohmann::json::array();
  for (Arc a : arcs.arcs()) out.push_back({a.tail, a.head});
  return out;
}

Graph graph_from_json(const nlohmann::json& j) {
  auto bad = [](const std::string& msg) { return ParseError(ParseErrorKind::kBadJson, msg); };
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw bad("expected object with \"n\" and \"edges\"");
  }
  if (!j["n"].is_number_integer()) throw bad("\"n\" must be an integer");
  const auto n = j["n"].get<std::int64_t>();
  if (n < 0) throw bad("\"n\" must be non-negative");
  if (n > kMaxVertices) throw CapExceeded("JSON graph order exceeds 64");
  if (!j["edges"].is_array()) throw bad("\"edges\" must be an array");
  Graph g(static_cast<int>(n));
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw bad("each edge must be [u, v]");
    }
    const auto u = e[0].get<std::int64_t>();
    const auto v = e[1].get<std::int64_t>();
    if (u < 0 || v >= n || u >= v) throw bad("edge [u, v] needs 0 <= u < v < n");
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v))) throw bad("duplicate edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

// --- canonical form and enumeration ------------------------------------

namespace {

// Equitable ordered partition from colour refinement seeded with degrees.
// Returns, for each vertex, a colour id whose order is label-invariant.
std::vector<int> invariant_colors(const Graph& g) {
  const int n = g.n();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (int w : g.neighbors(v)) sig[v].second.push_back(color[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<std::pair<int, std::vector<int>>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    if (static_cast<int>(distinct.size()) == classes) break;
    classes = static_cast<int>(distinct.size());
  }
  return color;
}

struct CanonSearch {
  explicit CanonSearch(const Graph& graph) : g(graph) {}

  const Graph& g;
  std::vector<int> cell_of_position;  // required colour at each position
  std::vector<int> color;
  int n = 0;
  int total_bits = 0;
  std::vector<int> order;
  std::vector<int> best_order;
  std::uint64_t best = 0;
  bool have_best = false;
  VertexSet used;

  void run(int pos, std::uint64_t code) {
    if (pos == n) {
      if (!have_best || code < best) {
        best = code;
        best_order = order;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used.contains(v) || color[v] != cell_of_position[pos]) continue;
      std::uint64_t next = code;
      for (int i = 0; i < pos; ++i) next = (next << 1) | (g.adjacent(order[i], v) ? 1U : 0U);
      if (have_best) {
        const int bits_so_far = pos * (pos + 1) / 2;
        const std::uint64_t best_prefix = best >> (total_bits - bits_so_far);
        if (next > best_prefix) continue;
      }
      order[pos] = v;
      used.insert(v);
      run(pos + 1, next);
      used.erase(v);
    }
  }
};

}  // namespace

Graph canonical_form(const Graph& g) {
  const int n = g.n();
  if (n > 11) throw CapExceeded("canonical_form: intended for n <= 11");
  CanonSearch s(g);
  s.n = n;
  s.color = invariant_colors(g);
  s.cell_of_position = s.color;
  std::sort(s.cell_of_position.begin(), s.cell_of_position.end());
  s.total_bits = n * (n - 1) / 2;
  s.order.assign(n, -1);
  s.run(0, 0);
  if (n == 0) return g;
  return induced(g, s.best_order);
}

std::vector<Graph> enumerate_graphs(int n, int cap) {
  if (n < 0) throw InvalidArgument("enumerate_graphs: negative order");
  if (n > cap) {
    throw CapExceeded("enumerate_graphs: n=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  }
  std::vector<Graph> level{Graph(0)};
  for (int m = 1; m <= n; ++m) {
    std::map<std::pair<int, std::string>, Graph> found;
    for (const Graph& base : level) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
        Graph g(m);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (int v : VertexSet(mask)) g.add_edge(v, m - 1);
        Graph c = canonical_form(g);
        std::pair<int, std::string> key{c.edge_count(), to_graph6(c)};
        found.emplace(std::move(key), std::move(c));
      }
    }
    level.clear();
    for (auto& [key, graph] : found) level.push_back(std::move(graph));
  }
  return level;
}

// --- isomorphism oracle -------------------------------------------------

namespace {

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<int> image;
  VertexSet used;

  bool extend(int u) {
    if (u == g.n()) return true;
    for (int v = 0; v < h.n(); ++v) {
      if (used.contains(v) || g.degree(u) != h.degree(v)) continue;
      bool ok = true;
      for (int w = 0; w < u && ok; ++w) {
        ok = g.adjacent(u, w) == h.adjacent(v, image[w]);
      }
      if (!ok) continue;
      image[u] = v;
      used.insert(v);
      if (extend(u + 1)) return true;
      used.erase(v);
    }
    return false;
  }
};

}  // namespace

std::optional<VertexBijection> are_isomorphic(const Graph& g, const Graph& h, int cap) {
  if (g.n() != h.n()) {
    throw InvalidArgument("are_isomorphic: size mismatch (" + std::to_string(g.n()) +
                          " vs " + std::to_string(h.n()) + ")");
  }
  if (g.n() > cap) {
    throw CapExceeded("are_isomorphic: n=" + std::to_string(g.n()) + " exceeds oracle cap " +
                      std::to_string(cap));
  }
  if (g.edge_count() != h.edge_count()) return std::nullopt;
  std::vector<int> dg(g.n()), dh(h.n());
  for (int v = 0; v < g.n(); ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;
  IsoSearch s{g, h, std::vector<int>(g.n(), -1), {}};
  if (!s.extend(0)) return std::nullopt;
  return VertexBijection(std::move(s.image));
}

}  // namespace wlperm
