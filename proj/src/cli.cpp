// Copyright 2026 The catlink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "catlink/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "catlink/complex.hpp"
#include "catlink/homology.hpp"
#include "catlink/metric.hpp"
#include "catlink/raag.hpp"
#include "catlink/search.hpp"

namespace catlink {

namespace {

using nlohmann::json;

constexpr int kPass = 0;
constexpr int kError = 1;
constexpr int kNegative = 2;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

void write_json(const std::string& path, const json& j) {
  if (path.empty()) return;
  write_file(path, j.dump(2) + "\n");
}

FlagComplex2 load_complex(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_complex(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

// Metric files may carry lengths for a whole fixture family; only the lines
// matching edges of k are kept, so one equilateral file serves every
// fixture.  Missing edges still fail validation downstream.
PEMetric load_metric(const FlagComplex2& k, const std::string& path) {
  const std::string text = read_file(path);
  PEMetric parsed;
  try {
    parsed = parse_metric(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  PEMetric out;
  for (const auto& [e, l] : parsed.lengths) {
    if (k.edges.count(e)) out.lengths[e] = l;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

json verdict_json(const Verdict& v) {
  return json{{"passes", v.passes},
              {"vacuous", v.vacuous},
              {"boundary", v.boundary},
              {"slack", v.slack},
              {"witness", v.witness},
              {"witness_length", v.witness_length}};
}

std::string verdict_line(const Verdict& v) {
  if (v.vacuous) return "pass (vacuous: no circuit)";
  std::string s = v.passes ? "pass" : "FAIL";
  if (v.boundary) s += " (boundary)";
  s += " slack=" + fmt(v.slack);
  if (!v.witness.empty()) {
    s += " witness: " + join(v.witness, " ") + " (length " +
         fmt(v.witness_length) + ")";
  }
  return s;
}

std::string group_str(long long rank, const std::vector<BigInt>& torsion) {
  std::vector<std::string> parts;
  if (rank == 1) parts.push_back("Z");
  if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  for (const auto& d : torsion) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "0";
  return join(parts, " + ");
}

std::string serialize_weighted_graph(const WeightedGraph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertices) out << "node " << v << "\n";
  for (const auto& [e, w] : g.weights) {
    out << "arc " << e[0] << " " << e[1] << " " << fmt(w) << "\n";
  }
  return out.str();
}

json weighted_graph_json(const WeightedGraph& g) {
  json nodes = json::array();
  for (const auto& v : g.vertices) nodes.push_back(v);
  json arcs = json::array();
  for (const auto& [e, w] : g.weights) {
    arcs.push_back(json{{"a", e[0]}, {"b", e[1]}, {"weight", w}});
  }
  return json{{"nodes", nodes}, {"arcs", arcs}};
}

json search_json(const SearchResult& r, SearchMode mode, int restarts,
                 unsigned long long seed, double tol) {
  json traces = json::array();
  for (const auto& t : r.traces) {
    traces.push_back(json{{"restart", t.restart},
                          {"best_objective", t.best_objective},
                          {"evals", t.evals}});
  }
  json metric = json::object();
  for (const auto& [e, l] : r.best_metric.lengths) {
    metric[e[0] + " " + e[1]] = l;
  }
  return json{{"mode", mode == SearchMode::kGlobal ? "global" : "links"},
              {"restarts", restarts},
              {"seed", seed},
              {"tol", tol},
              {"feasible", r.feasible},
              {"vacuous", r.vacuous},
              {"best_objective", r.best_objective},
              {"best_girth", 2.0 * std::numbers::pi + r.best_objective},
              {"active_circuit", r.active_circuit},
              {"active_link", r.active_link},
              {"traces", traces},
              {"metric", metric}};
}

void print_search_report(const SearchResult& r, SearchMode mode,
                         int restarts, unsigned long long seed, double tol) {
  std::cout << "mode: " << (mode == SearchMode::kGlobal ? "global" : "links")
            << "\nrestarts: " << restarts << "\nseed: " << seed
            << "\ntol: " << fmt(tol) << "\n";
  if (r.vacuous) {
    std::cout << "vacuous: no target graph has a circuit\n"
              << "feasible: yes\n";
    return;
  }
  for (const auto& t : r.traces) {
    std::cout << "trace " << t.restart << ": best=" << fmt(t.best_objective)
              << " evals=" << t.evals << "\n";
  }
  // Margin histogram of per-restart bests.
  double lo = r.traces.front().best_objective;
  double hi = lo;
  for (const auto& t : r.traces) {
    lo = std::min(lo, t.best_objective);
    hi = std::max(hi, t.best_objective);
  }
  if (hi > lo) {
    constexpr int kBins = 10;
    int counts[kBins] = {};
    for (const auto& t : r.traces) {
      int b = static_cast<int>((t.best_objective - lo) / (hi - lo) * kBins);
      if (b >= kBins) b = kBins - 1;
      if (b < 0) b = 0;
      ++counts[b];
    }
    for (int b = 0; b < kBins; ++b) {
      const double w = (hi - lo) / kBins;
      std::cout << "histogram [" << fmt(lo + b * w) << ", "
                << fmt(lo + (b + 1) * w) << "): " << counts[b] << "\n";
    }
  } else {
    std::cout << "histogram [" << fmt(lo) << "]: "
              << r.traces.size() << "\n";
  }
  std::cout << "best objective: " << fmt(r.best_objective) << "\n"
            << "best girth: "
            << fmt(2.0 * std::numbers::pi + r.best_objective) << "\n";
  if (!r.active_link.empty()) {
    std::cout << "active link: " << r.active_link << "\n";
  }
  if (!r.active_circuit.empty()) {
    std::cout << "active circuit: " << join(r.active_circuit, " ") << "\n";
  }
  std::cout << "feasible: " << (r.feasible ? "yes" : "no") << "\n";
}

struct GlobalOpts {
  double tol = 1e-9;
  unsigned long long seed = 0;
  std::string json_out;
};

int cmd_check_flag(const std::string& file, const GlobalOpts& g) {
  const FlagComplex2 k = load_complex(file);
  const FlagReport rep = check_flag(k);
  std::cout << "vertices: " << k.vertices.size() << "\n"
            << "edges: " << k.edges.size() << "\n"
            << "triangles: " << k.triangles.size() << "\n"
            << "connected: " << (rep.connected ? "yes" : "no") << "\n"
            << "free edges: " << rep.free_edges.size() << "\n";
  for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
  std::cout << "flag: " << (rep.is_flag ? "yes" : "no") << "\n";
  json free_edges = json::array();
  for (const auto& e : rep.free_edges) {
    free_edges.push_back(json::array({e[0], e[1]}));
  }
  write_json(g.json_out,
             json{{"command", "check-flag"},
                  {"file", file},
                  {"vertices", k.vertices.size()},
                  {"edges", k.edges.size()},
                  {"triangles", k.triangles.size()},
                  {"connected", rep.connected},
                  {"free_edges", free_edges},
                  {"violations", rep.violations},
                  {"flag", rep.is_flag}});
  return rep.is_flag ? kPass : kNegative;
}

int cmd_homology(const std::string& file, bool assert_acyclic,
                 const GlobalOpts& g) {
  const FlagComplex2 k = load_complex(file);
  const HomologyResult h = homology(k);
  std::cout << "H0: " << group_str(h.b0, {}) << "\n"
            << "H1: " << group_str(h.b1, h.torsion_h1) << "\n"
            << "H2: " << group_str(h.b2, {}) << "\n"
            << "acyclic: " << (h.acyclic() ? "yes" : "no") << "\n";
  json torsion = json::array();
  for (const auto& d : h.torsion_h1) torsion.push_back(d.str());
  write_json(g.json_out, json{{"command", "homology"},
                              {"file", file},
                              {"betti", json::array({h.b0, h.b1, h.b2})},
                              {"torsion_h1", torsion},
                              {"acyclic", h.acyclic()}});
  if (assert_acyclic) return h.acyclic() ? 0 : 1;
  return kPass;
}

int cmd_linkcond(const std::string& cfile, const std::string& mfile,
                 const GlobalOpts& g) {
  const FlagComplex2 k = load_complex(cfile);
  const PEMetric m = load_metric(k, mfile);
  const auto verdicts = check_link_condition(k, m, g.tol);
  bool all = true;
  json jv = json::object();
  for (const auto& [v, verdict] : verdicts) {
    std::cout << "link " << v << ": " << verdict_line(verdict) << "\n";
    jv[v] = verdict_json(verdict);
    all = all && verdict.passes;
  }
  std::cout << "link condition: " << (all ? "pass" : "FAIL") << "\n";
  write_json(g.json_out, json{{"command", "linkcond"},
                              {"complex", cfile},
                              {"metric", mfile},
                              {"tol", g.tol},
                              {"links", jv},
                              {"all_pass", all}});
  return all ? kPass : kNegative;
}

int cmd_cat1(const std::string& cfile, const std::string& mfile,
             const GlobalOpts& g) {
  const FlagComplex2 k = load_complex(cfile);
  const PEMetric m = load_metric(k, mfile);
  const Verdict v = check_cat1_L(k, m, g.tol);
  std::cout << "cat1: " << verdict_line(v) << "\n";
  write_json(g.json_out, json{{"command", "cat1"},
                              {"complex", cfile},
                              {"metric", mfile},
                              {"tol", g.tol},
                              {"verdict", verdict_json(v)}});
  return v.passes ? kPass : kNegative;
}

int cmd_build_l(const std::string& cfile, const std::string& mfile,
                const std::string& out, const GlobalOpts& g) {
  const FlagComplex2 k = load_complex(cfile);
  const PEMetric m = load_metric(k, mfile);
  const WeightedGraph lg = build_L(k, m);
  write_file(out, serialize_weighted_graph(lg));
  std::cout << "wrote " << out << ": " << lg.vertices.size() << " nodes, "
            << lg.weights.size() << " arcs\n";
  json j = weighted_graph_json(lg);
  j["command"] = "build-l";
  j["complex"] = cfile;
  j["metric"] = mfile;
  j["out"] = out;
  write_json(g.json_out, j);
  return kPass;
}

int cmd_build_t(const std::string& cfile, const std::string& mfile,
                const GlobalOpts& g) {
  const FlagComplex2 k = load_complex(cfile);
  const TComplex t = build_T(k);
  std::cout << "vertices: 1\n"
            << "edges: " << t.edge_labels.size() << "\n"
            << "faces: " << t.faces.size() << "\n";
  for (const auto& e : t.edge_labels) std::cout << "edge " << e << "\n";
  json faces = json::array();
  for (const auto& f : t.faces) {
    std::cout << "face";
    json side = json::array();
    for (const auto& [label, exp] : f.boundary) {
      std::cout << " " << label << (exp < 0 ? "^-1" : "");
      side.push_back(json{{"edge", label}, {"exp", exp}});
    }
    std::cout << "\n";
    faces.push_back(side);
  }
  json j{{"command", "build-t"},
         {"complex", cfile},
         {"edges", t.edge_labels},
         {"faces", faces}};
  int code = kPass;
  if (!mfile.empty()) {
    const PEMetric m = load_metric(k, mfile);
    const bool ok = verify_T_link(k, m, g.tol);
    std::cout << "t-link isometric to l-graph: " << (ok ? "yes" : "no")
              << "\n";
    j["metric"] = mfile;
    j["t_link_matches_l"] = ok;
    code = ok ? kPass : kNegative;
  }
  write_json(g.json_out, j);
  return code;
}

int cmd_search(const std::string& cfile, const std::string& mode_name,
               int restarts, const std::string& out, const GlobalOpts& g) {
  const FlagComplex2 k = load_complex(cfile);
  SearchConfig cfg;
  cfg.mode = mode_name == "global" ? SearchMode::kGlobal : SearchMode::kLinks;
  cfg.restarts = restarts;
  cfg.seed = g.seed;
  cfg.tol = g.tol;
  const SearchResult r = search_metric(k, cfg);
  print_search_report(r, cfg.mode, restarts, g.seed, g.tol);
  if (!out.empty()) {
    write_file(out, serialize_metric(r.best_metric));
    std::cout << "metric written: " << out << "\n";
  }
  json j = search_json(r, cfg.mode, restarts, g.seed, g.tol);
  j["command"] = "search";
  j["complex"] = cfile;
  write_json(g.json_out, j);
  return r.feasible ? kPass : kNegative;
}

int cmd_presentation(const std::string& cfile, const std::string& mode,
                     int max_cycle, int max_n, bool attested,
                     const GlobalOpts& g) {
  const FlagComplex2 k = load_complex(cfile);
  const Presentation p = mode == "triangle"
                             ? presentation_triangles(k, attested)
                             : presentation_cycles(k, max_cycle, max_n);
  std::cout << "mode: " << p.mode;
  if (p.mode == "triangle-relations") {
    std::cout << " (simple connectivity attested by caller)";
  } else {
    std::cout << " (cycles up to length " << max_cycle << ", exponents up to "
              << max_n << ")";
  }
  std::cout << "\ngenerators (" << p.generators.size()
            << "): " << join(p.generators, " ") << "\n"
            << "relators (" << p.relators.size() << "):\n";
  json relators = json::array();
  for (const auto& r : p.relators) {
    const std::string s = format_kernel_word(r);
    std::cout << s << "\n";
    relators.push_back(s);
  }
  write_json(g.json_out,
             json{{"command", "presentation"},
                  {"complex", cfile},
                  {"mode", p.mode},
                  {"simply_connected_attested", p.simply_connected_attested},
                  {"generators", p.generators},
                  {"relators", relators}});
  return kPass;
}

int cmd_distortion(int nmax, const GlobalOpts& g) {
  const auto rows = distortion_table(nmax);
  char line[160];
  std::snprintf(line, sizeof line, "%4s %12s %12s %12s  %s", "N", "free",
                "written", "geodesic", "ratio");
  std::cout << line << "\n";
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%4d %12lld %12lld %12lld  %s", r.n,
                  r.free_length, r.written_length, r.geodesic_length,
                  fmt(r.ratio).c_str());
    std::cout << line << "\n";
  }
  json jrows = json::array();
  for (const auto& r : rows) {
    std::cout << "row " << r.n << " " << r.free_length << " "
              << r.written_length << " " << r.geodesic_length << " "
              << fmt(r.ratio) << "\n";
    jrows.push_back(json{{"n", r.n},
                         {"free_length", r.free_length},
                         {"written_length", r.written_length},
                         {"geodesic_length", r.geodesic_length},
                         {"ratio", r.ratio}});
  }
  write_json(g.json_out, json{{"command", "distortion"},
                              {"nmax", nmax},
                              {"rows", jrows}});
  return kPass;
}

int cmd_reproduce_k0(int restarts, const GlobalOpts& g) {
  const K0Report rep = k0_report(g.seed, restarts, g.tol);
  std::cout << "circuit edge counts: " << rep.circuit_edge_counts[0] << " "
            << rep.circuit_edge_counts[1] << " " << rep.circuit_edge_counts[2]
            << " " << rep.circuit_edge_counts[3] << "\n"
            << "circuits valid: " << (rep.circuits_valid ? "PASS" : "FAIL")
            << "\n"
            << "multiset identity: "
            << (rep.multiset_identity ? "PASS" : "FAIL") << "\n"
            << "samples: " << rep.samples.size() << "\n";
  double worst = 0;
  json jsamples = json::array();
  for (const auto& s : rep.samples) {
    std::cout << "sample " << s.index << ": c1=" << fmt(s.lengths[0])
              << " c2=" << fmt(s.lengths[1]) << " c3=" << fmt(s.lengths[2])
              << " c4=" << fmt(s.lengths[3])
              << " residual=" << fmt(s.identity_residual)
              << " min34=" << fmt(s.min_c3_c4) << "\n";
    worst = std::max(worst, std::abs(s.identity_residual));
    jsamples.push_back(json{{"index", s.index},
                            {"lengths", s.lengths},
                            {"identity_residual", s.identity_residual},
                            {"min_c3_c4", s.min_c3_c4}});
  }
  std::cout << "max |residual|: " << fmt(worst) << "\n"
            << "search feasible: "
            << (rep.global_search.feasible ? "yes" : "no") << "\n"
            << "best girth: " << fmt(rep.best_girth) << "\n"
            << "conclusion: " << rep.conclusion << "\n";
  json j = json{{"command", "reproduce-k0"},
                {"circuit_edge_counts", rep.circuit_edge_counts},
                {"circuits_valid", rep.circuits_valid},
                {"multiset_identity", rep.multiset_identity},
                {"samples", jsamples},
                {"max_residual", worst},
                {"best_girth", rep.best_girth},
                {"conclusion", rep.conclusion},
                {"search", search_json(rep.global_search, SearchMode::kGlobal,
                                       restarts, g.seed, g.tol)}};
  write_json(g.json_out, j);
  if (!rep.circuits_valid || !rep.multiset_identity) return kError;
  return rep.global_search.feasible ? kPass : kNegative;
}

int cmd_fixtures(const std::string& dir, const GlobalOpts& g) {
  namespace fs = std::filesystem;
  fs::create_directories(fs::path(dir) / "fixtures");
  fs::create_directories(fs::path(dir) / "metrics");
  std::vector<std::string> written;
  PEMetric equilateral;
  for (const auto& name : fixture_names()) {
    const FlagComplex2 k = fixture(name);
    const std::string path =
        (fs::path(dir) / "fixtures" / (name + ".cx")).string();
    write_file(path, serialize_complex(k));
    written.push_back(path);
    std::cout << "wrote " << path << "\n";
    // The two large subdivision fixtures are homology examples; the shared
    // equilateral metric covers the ones the metric examples use.
    if (name == "dunce_hat_flag" || name == "poincare_spine") continue;
    for (const auto& e : k.edges) equilateral.lengths[e] = 1.0;
  }
  const std::string mpath =
      (fs::path(dir) / "metrics" / "equilateral.len").string();
  write_file(mpath, serialize_metric(equilateral));
  written.push_back(mpath);
  std::cout << "wrote " << mpath << "\n";
  write_json(g.json_out, json{{"command", "fixtures"},
                              {"dir", dir},
                              {"written", written}});
  return kPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"curvature and group-theory toolkit for piecewise Euclidean "
               "2-complexes"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--tol", g.tol, "verdict tolerance")->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--json-out", g.json_out,
                 "write a machine-readable report to this path");

  std::string cfile, mfile, out;
  auto* c_flag = app.add_subcommand("check-flag",
                                    "test the flag (clique) property");
  c_flag->add_option("complex", cfile, "complex file")->required();
  c_flag->fallthrough();

  bool assert_acyclic = false;
  auto* c_hom = app.add_subcommand("homology",
                                   "integer simplicial homology");
  c_hom->add_option("complex", cfile, "complex file")->required();
  c_hom->add_flag("--assert-acyclic", assert_acyclic,
                  "exit 0 only when the complex is acyclic");
  c_hom->fallthrough();

  auto* c_link = app.add_subcommand("linkcond",
                                    "link condition at every vertex");
  c_link->add_option("complex", cfile, "complex file")->required();
  c_link->add_option("metric", mfile, "metric file")->required();
  c_link->fallthrough();

  auto* c_cat1 = app.add_subcommand("cat1",
                                    "girth test on the angle graph");
  c_cat1->add_option("complex", cfile, "complex file")->required();
  c_cat1->add_option("metric", mfile, "metric file")->required();
  c_cat1->fallthrough();

  auto* c_bl = app.add_subcommand("build-l",
                                  "write the weighted angle graph");
  c_bl->add_option("complex", cfile, "complex file")->required();
  c_bl->add_option("metric", mfile, "metric file")->required();
  c_bl->add_option("--out", out, "graph output file")->required();
  c_bl->fallthrough();

  std::string t_metric;
  auto* c_bt = app.add_subcommand(
      "build-t", "one-vertex presentation complex; with a metric, check its "
                 "vertex link against the angle graph");
  c_bt->add_option("complex", cfile, "complex file")->required();
  c_bt->add_option("metric", t_metric, "metric file (optional)");
  c_bt->fallthrough();

  std::string mode = "global";
  int restarts = 100;
  auto* c_search = app.add_subcommand("search",
                                      "search for a feasible metric");
  c_search->add_option("complex", cfile, "complex file")->required();
  c_search->add_option("--mode", mode, "links or global")
      ->required()
      ->check(CLI::IsMember({"links", "global"}));
  c_search->add_option("--restarts", restarts, "restart count")
      ->capture_default_str();
  c_search->add_option("--out", out, "write the best metric here");
  c_search->fallthrough();

  std::string pres_mode = "triangle";
  int max_cycle = 8;
  int max_n = 2;
  bool attested = false;
  auto* c_pres = app.add_subcommand("presentation",
                                    "kernel presentation, one relator per "
                                    "line");
  c_pres->add_option("complex", cfile, "complex file")->required();
  c_pres->add_option("--mode", pres_mode, "triangle or cycles")
      ->required()
      ->check(CLI::IsMember({"triangle", "cycles"}));
  c_pres->add_option("--max-cycle", max_cycle,
                     "cycle length bound (cycles mode)")
      ->capture_default_str();
  c_pres->add_option("--max-n", max_n, "exponent bound (cycles mode)")
      ->capture_default_str();
  c_pres->add_flag("--assert-simply-connected", attested,
                   "caller attests the complex is simply connected");
  c_pres->fallthrough();

  int nmax = 10;
  auto* c_dist = app.add_subcommand("distortion",
                                    "geodesic length table for the "
                                    "quadratic-distortion family");
  c_dist->add_option("--nmax", nmax, "largest N")->capture_default_str();
  c_dist->fallthrough();

  int k0_restarts = 100;
  auto* c_k0 = app.add_subcommand("reproduce-k0",
                                  "circuit identities plus global metric "
                                  "search on the k0 fixture");
  c_k0->add_option("--restarts", k0_restarts, "restart count")
      ->capture_default_str();
  c_k0->fallthrough();

  std::string out_dir = ".";
  auto* c_fix = app.add_subcommand("fixtures",
                                   "write the bundled fixtures to disk");
  c_fix->add_option("--out-dir", out_dir, "target directory")
      ->capture_default_str();
  c_fix->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("catlink");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (c_flag->parsed()) return cmd_check_flag(cfile, g);
    if (c_hom->parsed()) return cmd_homology(cfile, assert_acyclic, g);
    if (c_link->parsed()) return cmd_linkcond(cfile, mfile, g);
    if (c_cat1->parsed()) return cmd_cat1(cfile, mfile, g);
    if (c_bl->parsed()) return cmd_build_l(cfile, mfile, out, g);
    if (c_bt->parsed()) return cmd_build_t(cfile, t_metric, g);
    if (c_search->parsed()) return cmd_search(cfile, mode, restarts, out, g);
    if (c_pres->parsed()) {
      return cmd_presentation(cfile, pres_mode, max_cycle, max_n, attested,
                              g);
    }
    if (c_dist->parsed()) return cmd_distortion(nmax, g);
    if (c_k0->parsed()) return cmd_reproduce_k0(k0_restarts, g);
    if (c_fix->parsed()) return cmd_fixtures(out_dir, g);
    std::cerr << app.help();
    return kError;
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace catlink
