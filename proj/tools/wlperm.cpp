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

// wlperm: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 input parse error, 4 resource cap exceeded.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wlperm/coherent.hpp"
#include "wlperm/comparability.hpp"
#include "wlperm/config.hpp"
#include "wlperm/error.hpp"
#include "wlperm/extension.hpp"
#include "wlperm/graph.hpp"
#include "wlperm/modular.hpp"
#include "wlperm/verify.hpp"

namespace {

using nlohmann::json;
using namespace wlperm;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitCap = 4;

struct Options {
  bool text = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> jobs;
  std::optional<int> cap_ext;
};

Graph read_graph(const std::string& arg) {
  if (arg != "-") return parse_graph6(arg);
  std::string line;
  std::getline(std::cin, line);
  return parse_graph6(line);
}

// An Omega^2 point given as "a,b" or as its row-major index.
int parse_point(const std::string& s, int n) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) {
      std::size_t used = 0;
      const int p = std::stoi(s, &used);
      if (used != s.size() || p < 0 || p >= n * n) throw InvalidArgument("");
      return p;
    }
    std::size_t ua = 0;
    std::size_t ub = 0;
    const int a = std::stoi(s.substr(0, comma), &ua);
    const int b = std::stoi(s.substr(comma + 1), &ub);
    if (ua != comma || ub != s.size() - comma - 1 || a < 0 || b < 0 || a >= n || b >= n) {
      throw InvalidArgument("");
    }
    return a * n + b;
  } catch (const std::exception&) {
    throw InvalidArgument("bad Omega^2 point '" + s + "' (use a,b or an index below n^2)");
  }
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.text) {
    std::cout << text;
  } else {
    std::cout << j.dump() << "\n";
  }
}

std::string arcs_text(const ArcSet& a) {
  std::ostringstream out;
  for (Arc x : a.arcs()) out << x.tail << "->" << x.head << " ";
  return out.str();
}

void tree_text(const ModularTree& t, int depth, std::ostringstream& out) {
  out << std::string(2 * depth, ' ') << to_string(t.kind);
  if (!t.is_leaf()) out << " (" << to_string(t.rule) << ")";
  out << " {";
  for (std::size_t i = 0; i < t.vertices.size(); ++i) out << (i ? "," : "") << t.vertices[i];
  out << "}\n";
  for (const ModularTree& c : t.children) tree_text(c, depth + 1, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weisfeiler-Leman and permutation-graph structure toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--text", opt.text, "human-readable output instead of JSON");
  app.add_option("--seed", opt.seed, "sampling seed (overrides WLPERM_SEED)");
  app.add_option("--jobs", opt.jobs, "worker threads (overrides WLPERM_JOBS)");
  app.add_option("--cap-ext", opt.cap_ext, "2-extension order cap (overrides WLPERM_CAP_EXT)");

  std::string g6a;
  std::string g6b;
  std::vector<int> individualize_vertices;
  std::vector<std::string> individualize_points;
  int k = 2;
  int order = 0;
  bool permutation_only = false;
  bool exhaustive = false;
  bool two_iso = false;
  std::string suite;

  auto* recognize_cmd = app.add_subcommand("recognize", "recognition report");
  recognize_cmd->add_option("graph6", g6a, "graph (or - for stdin)")->required();
  auto* orient_cmd = app.add_subcommand("orient", "a transitive orientation, or none");
  orient_cmd->add_option("graph6", g6a)->required();
  auto* classes_cmd = app.add_subcommand("classes", "implication classes");
  classes_cmd->add_option("graph6", g6a)->required();
  auto* decompose_cmd = app.add_subcommand("decompose", "canonical modular decomposition");
  decompose_cmd->add_option("graph6", g6a)->required();
  auto* wl_cmd = app.add_subcommand("wl", "coherent closure WL(X)");
  wl_cmd->add_option("graph6", g6a)->required();
  wl_cmd->add_option("--individualize", individualize_vertices, "vertices to individualize");
  auto* ext_cmd = app.add_subcommand("extend2", "2-extension of WL(X)");
  ext_cmd->add_option("graph6", g6a)->required();
  ext_cmd->add_option("--individualize", individualize_points, "two Omega^2 points (a,b or index)")
      ->expected(2);
  auto* kwl_cmd = app.add_subcommand("kwl", "k-dim WL fingerprint");
  kwl_cmd->add_option("graph6", g6a)->required();
  kwl_cmd->add_option("-k", k, "dimension")->check(CLI::Range(1, 3));
  auto* isotest_cmd = app.add_subcommand("isotest", "compare two graphs");
  isotest_cmd->add_option("graph6a", g6a)->required();
  isotest_cmd->add_option("graph6b", g6b)->required();
  isotest_cmd->add_option("-k", k, "dimension")->check(CLI::Range(1, 3));
  isotest_cmd->add_flag("--extension", two_iso, "also run the 2-extension check");
  auto* enumerate_cmd = app.add_subcommand("enumerate", "graph6 stream of all graphs of order n");
  enumerate_cmd->add_option("-n", order, "order")->required();
  enumerate_cmd->add_flag("--permutation-only", permutation_only, "permutation graphs only");
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify_cmd->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suites));
  verify_cmd->add_option("-n", order, "largest order in the corpus")->required();
  verify_cmd->add_flag("--exhaustive", exhaustive, "all arc pairs at every order");
  verify_cmd->add_option("-k", k, "dimension for the identification suite")->check(CLI::Range(1, 3));
  auto* config_cmd = app.add_subcommand("config", "print the effective configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Config cfg = resolve_config({opt.seed, opt.jobs, opt.cap_ext});
    for (const std::string& line : cfg.log) {
      if (line.find("overrides") != std::string::npos) std::cerr << "note: " << line << "\n";
    }

    if (recognize_cmd->parsed()) {
      const Graph g = read_graph(g6a);
      const RecognitionReport r = recognize(g);
      json j = to_json(r);
      j["graph6"] = to_graph6(g);
      std::ostringstream t;
      t << "comparability: " << r.is_comparability << "\nco-comparability: "
        << r.is_co_comparability << "\npermutation: " << r.is_permutation
        << "\nupo: " << r.is_upo << "\nuniquely orientable: " << r.is_uniquely_orientable << "\n";
      emit(opt, j, t.str());
    } else if (orient_cmd->parsed()) {
      const auto o = transitive_orientation(read_graph(g6a));
      emit(opt, json{{"orientation", o ? to_json(*o) : json("none")}},
           (o ? arcs_text(o->arcs()) : std::string("none")) + "\n");
    } else if (classes_cmd->parsed()) {
      const ImplicationPartition p = implication_partition(read_graph(g6a));
      std::ostringstream t;
      for (std::size_t i = 0; i < p.classes.size(); ++i) {
        t << i << " (reverse " << p.reversal[i] << "): " << arcs_text(p.classes[i]) << "\n";
      }
      emit(opt, to_json(p), t.str());
    } else if (decompose_cmd->parsed()) {
      const ModularTree tree = canonical_decomposition(read_graph(g6a));
      std::ostringstream t;
      tree_text(tree, 0, t);
      emit(opt, to_json(tree), t.str());
    } else if (wl_cmd->parsed()) {
      const Graph g = read_graph(g6a);
      CoherentConfiguration cc = wl_closure(g);
      if (!individualize_vertices.empty()) cc = individualize(cc, individualize_vertices);
      json j = to_json(cc);
      j["discrete"] = is_discrete(cc);
      j["fibers"] = fibers(cc);
      emit(opt, j,
           "points: " + std::to_string(cc.points()) + "\nrank: " + std::to_string(cc.rank()) +
               "\ndiscrete: " + (is_discrete(cc) ? "true" : "false") + "\n");
    } else if (ext_cmd->parsed()) {
      const Graph g = read_graph(g6a);
      const Extension2 x = extend2(wl_closure(g), cfg.extension_cap);
      json j = to_json(x);
      CoherentConfiguration shown = x.ext;
      if (!individualize_points.empty()) {
        const int p1 = parse_point(individualize_points[0], g.n());
        const int p2 = parse_point(individualize_points[1], g.n());
        shown = individualized_extension(x, p1, p2);
        j = to_json(shown);
        j["base_n"] = x.n;
        j["encoding"] = "row-major";
        j["individualized"] = {p1, p2};
      }
      j["discrete"] = is_discrete(shown);
      emit(opt, j,
           "points: " + std::to_string(shown.points()) + "\nrank: " +
               std::to_string(shown.rank()) + "\ndiscrete: " +
               (is_discrete(shown) ? "true" : "false") + "\n");
    } else if (kwl_cmd->parsed()) {
      const KwlFingerprint f = k_wl_fingerprint(read_graph(g6a), k);
      emit(opt, to_json(f),
           "k=" + std::to_string(f.k) + " classes=" + std::to_string(f.class_sizes.size()) +
               " history=" + digest_hex(f.history) + "\n");
    } else if (isotest_cmd->parsed()) {
      const Graph g = read_graph(g6a);
      const Graph h = parse_graph6(g6b);
      const bool same = k_wl_fingerprint(g, k) == k_wl_fingerprint(h, k);
      json j = {{"k", k},
                {"verdict", same ? "not_distinguished" : "distinct"},
                {"isomorphic", nullptr}};
      if (g.n() == h.n() && g.n() <= cfg.oracle_cap) {
        j["isomorphic"] = are_isomorphic(g, h, cfg.oracle_cap).has_value();
      }
      if (two_iso) {
        if (g.n() != h.n()) throw InvalidArgument("--extension needs graphs of equal order");
        j["two_iso"] = to_json(two_iso_check(g, h, cfg.extension_cap, cfg.oracle_cap));
      }
      emit(opt, j, std::string(same ? "not distinguished" : "distinct") + " at k=" +
                       std::to_string(k) + "\n");
    } else if (enumerate_cmd->parsed()) {
      for (const Graph& g : enumerate_graphs(order, cfg.enumeration_cap)) {
        if (!permutation_only || is_permutation_graph(g)) std::cout << to_graph6(g) << "\n";
      }
    } else if (verify_cmd->parsed()) {
      VerifyOptions vo;
      vo.max_n = order;
      vo.seed = cfg.seed;
      vo.jobs = cfg.jobs;
      vo.exhaustive = exhaustive;
      vo.k = k;
      vo.extension_cap = cfg.extension_cap;
      vo.oracle_cap = cfg.oracle_cap;
      vo.enumeration_cap = cfg.enumeration_cap;
      std::vector<std::string> run =
          suite == "all" ? suite_names() : std::vector<std::string>{suite};
      bool ok = true;
      json reports = json::array();
      std::string text;
      for (const std::string& name : run) {
        const LemmaReport r = run_suite(name, vo);
        ok = ok && r.passed();
        reports.push_back(to_json(r));
        text += to_text(r);
      }
      emit(opt, run.size() == 1 ? reports[0] : json{{"passed", ok}, {"reports", reports}}, text);
      return ok ? kExitOk : kExitVerifyFailed;
    } else if (config_cmd->parsed()) {
      std::ostringstream t;
      t << "seed: " << cfg.seed << "\njobs: " << cfg.jobs << "\nextension cap: "
        << cfg.extension_cap << "\noracle cap: " << cfg.oracle_cap
        << "\nenumeration cap: " << cfg.enumeration_cap << "\n";
      for (const std::string& line : cfg.log) t << "log: " << line << "\n";
      emit(opt, to_json(cfg), t.str());
    }
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}
