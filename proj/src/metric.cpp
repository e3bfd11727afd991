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

#include "catlink/metric.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <iterator>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace catlink {

double PEMetric::length(const Vertex& a, const Vertex& b) const {
  auto it = lengths.find(make_edge(a, b));
  if (it == lengths.end())
    throw std::invalid_argument("no length for edge " + a + " " + b);
  return it->second;
}

PEMetric parse_metric(const std::string& text) {
  PEMetric m;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ls(line);
    std::vector<std::string> tok{std::istream_iterator<std::string>(ls),
                                 std::istream_iterator<std::string>()};
    if (tok.empty()) continue;
    auto fail = [&](const std::string& msg) {
      return std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
    };
    if (tok[0] != "length") throw fail("unknown directive '" + tok[0] + "'");
    if (tok.size() != 4) throw fail("length takes two names and a value");
    double value = 0;
    const auto [end, ec] =
        std::from_chars(tok[3].data(), tok[3].data() + tok[3].size(), value);
    if (ec != std::errc() || end != tok[3].data() + tok[3].size())
      throw fail("bad length value '" + tok[3] + "'");
    if (!(value > 0) || !std::isfinite(value))
      throw fail("length must be positive and finite");
    if (tok[1] == tok[2]) throw fail("degenerate edge");
    if (!m.lengths.emplace(make_edge(tok[1], tok[2]), value).second)
      throw fail("duplicate length for " + tok[1] + " " + tok[2]);
  }
  return m;
}

std::string serialize_metric(const PEMetric& m) {
  std::ostringstream out;
  char buf[64];
  for (const auto& [e, v] : m.lengths) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << "length " << e[0] << " " << e[1] << " " << buf << "\n";
  }
  return out.str();
}

void validate_metric(const FlagComplex2& k, const PEMetric& m) {
  for (const auto& [e, v] : m.lengths) {
    if (!k.edges.count(e))
      throw std::invalid_argument("length given for non-edge " + e[0] + " " +
                                  e[1]);
    if (!(v > 0) || !std::isfinite(v))
      throw std::invalid_argument("nonpositive length on edge " + e[0] + " " +
                                  e[1]);
  }
  for (const auto& e : k.edges)
    if (!m.lengths.count(e))
      throw std::invalid_argument("edge " + e[0] + " " + e[1] +
                                  " has no length");
  for (const auto& t : k.triangles) {
    const double a = m.length(t[0], t[1]);
    const double b = m.length(t[0], t[2]);
    const double c = m.length(t[1], t[2]);
    if (relative_margin(a, b, c) <= kDegenerateTol)
      throw std::domain_error("degenerate triangle " + t[0] + " " + t[1] +
                              " " + t[2]);
  }
}

std::map<Triangle, std::array<double, 3>> corner_angles(const FlagComplex2& k,
                                                        const PEMetric& m) {
  validate_metric(k, m);
  std::map<Triangle, std::array<double, 3>> out;
  for (const auto& t : k.triangles) {
    const double l01 = m.length(t[0], t[1]);
    const double l02 = m.length(t[0], t[2]);
    const double l12 = m.length(t[1], t[2]);
    std::array<double, 3> angle{triangle_angle(l01, l02, l12),
                                triangle_angle(l01, l12, l02),
                                triangle_angle(l02, l12, l01)};
    const double sum = angle[0] + angle[1] + angle[2];
    if (std::abs(sum - std::numbers::pi) > 1e-12)
      throw std::logic_error("corner angles of " + t[0] + " " + t[1] + " " +
                             t[2] + " do not sum to pi");
    out.emplace(t, angle);
  }
  return out;
}

void WeightedGraph::add_edge(const std::string& a, const std::string& b,
                             double w) {
  if (a == b) throw std::invalid_argument("self-loop at " + a);
  if (!(w > 0) || !std::isfinite(w))
    throw std::invalid_argument("nonpositive weight on " + a + " " + b);
  vertices.insert(a);
  vertices.insert(b);
  if (!weights.emplace(make_edge(a, b), w).second)
    throw std::invalid_argument("repeated edge " + a + " " + b);
}

std::optional<Cycle> girth(const WeightedGraph& g) {
  std::vector<std::string> names(g.vertices.begin(), g.vertices.end());
  std::map<std::string, int> id;
  for (const auto& v : names) id.emplace(v, id.size());
  std::vector<std::tuple<int, int, double>> edges;
  edges.reserve(g.weights.size());
  for (const auto& [e, w] : g.weights)
    edges.emplace_back(id.at(e[0]), id.at(e[1]), w);
  const auto r = girth_indexed(static_cast<int>(names.size()), edges);
  if (!r) return std::nullopt;
  Cycle c;
  c.length = r->length;
  c.vertices.reserve(r->vertices.size());
  for (int i : r->vertices) c.vertices.push_back(names[i]);
  return c;
}

Verdict verdict_from_girth(const std::optional<Cycle>& c, double tol) {
  Verdict v;
  if (!c) {
    v.passes = true;
    v.vacuous = true;
    v.slack = std::numeric_limits<double>::infinity();
    return v;
  }
  v.witness = c->vertices;
  v.witness_length = c->length;
  v.slack = c->length - 2 * std::numbers::pi;
  v.passes = v.slack >= -tol;
  v.boundary = std::abs(v.slack) <= tol;
  return v;
}

WeightedGraph build_link(const FlagComplex2& k, const PEMetric& m,
                         const Vertex& v) {
  const auto angles = corner_angles(k, m);
  Graph bare = link_graph(k, v);
  WeightedGraph g;
  for (const auto& w : bare.vertices) g.add_vertex(w);
  for (const auto& t : k.triangles) {
    for (int i = 0; i < 3; ++i) {
      if (t[i] != v) continue;
      const Vertex& a = t[(i + 1) % 3];
      const Vertex& b = t[(i + 2) % 3];
      g.add_edge(a, b, angles.at(t)[i]);
    }
  }
  return g;
}

LInfo build_L_info(const FlagComplex2& k, const PEMetric& m) {
  const auto angles = corner_angles(k, m);
  LInfo info;
  for (const auto& oe : k.oriented_edges()) info.graph.add_vertex(oe.label());
  for (const auto& t : k.triangles) {
    for (int i = 0; i < 3; ++i) {
      const Vertex& v = t[i];
      const Vertex& a = t[(i + 1) % 3];
      const Vertex& b = t[(i + 2) % 3];
      const double angle = angles.at(t)[i];
      const std::string out_a = OrientedEdge{v, a}.label();
      const std::string out_b = OrientedEdge{v, b}.label();
      const std::string in_a = OrientedEdge{a, v}.label();
      const std::string in_b = OrientedEdge{b, v}.label();
      info.graph.add_edge(out_a, out_b, angle);
      info.graph.add_edge(in_a, in_b, angle);
      info.corner.emplace(make_edge(out_a, out_b), std::make_pair(t, v));
      info.corner.emplace(make_edge(in_a, in_b), std::make_pair(t, v));
    }
  }
  return info;
}

WeightedGraph build_L(const FlagComplex2& k, const PEMetric& m) {
  return build_L_info(k, m).graph;
}

std::map<Vertex, Verdict> check_link_condition(const FlagComplex2& k,
                                               const PEMetric& m, double tol) {
  std::map<Vertex, Verdict> out;
  for (const auto& v : k.vertices)
    out.emplace(v, verdict_from_girth(girth(build_link(k, m, v)), tol));
  return out;
}

Verdict check_cat1_L(const FlagComplex2& k, const PEMetric& m, double tol) {
  return verdict_from_girth(girth(build_L(k, m)), tol);
}

TComplex build_T(const FlagComplex2& k) {
  if (!k.vertices.empty()) {
    auto adj = k.adjacency();
    std::set<Vertex> seen{*k.vertices.begin()};
    std::vector<Vertex> stack{*k.vertices.begin()};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const auto& w : adj[v])
        if (seen.insert(w).second) stack.push_back(w);
    }
    if (seen.size() != k.vertices.size())
      throw std::invalid_argument("complex is disconnected");
  }
  TComplex t;
  for (const auto& e : k.edges)
    t.edge_labels.push_back(OrientedEdge{e[0], e[1]}.label());
  for (const auto& tr : k.triangles) {
    const std::string ab = OrientedEdge{tr[0], tr[1]}.label();
    const std::string bc = OrientedEdge{tr[1], tr[2]}.label();
    const std::string ac = OrientedEdge{tr[0], tr[2]}.label();
    TFace f1, f2;
    f1.boundary = {{{ab, 1}, {bc, 1}, {ac, -1}}};
    f2.boundary = {{{bc, 1}, {ab, 1}, {ac, -1}}};
    t.faces.push_back(std::move(f1));
    t.faces.push_back(std::move(f2));
  }
  return t;
}

namespace {

// Splits an oriented-edge label back into its two vertex names.
std::pair<Vertex, Vertex> split_label(const std::string& label) {
  const auto pos = label.find('>');
  return {label.substr(0, pos), label.substr(pos + 1)};
}

}  // namespace

bool verify_T_link(const FlagComplex2& k, const PEMetric& m, double tol) {
  const TComplex t = build_T(k);
  const auto angles = corner_angles(k, m);
  WeightedGraph h;
  for (const auto& label : t.edge_labels) {
    h.add_vertex(label + "+");
    h.add_vertex(label + "-");
  }
  auto end_of = [](const std::pair<std::string, int>& letter) {
    return letter.first + (letter.second > 0 ? "-" : "+");
  };
  auto start_of = [](const std::pair<std::string, int>& letter) {
    return letter.first + (letter.second > 0 ? "+" : "-");
  };
  for (const auto& face : t.faces) {
    for (int i = 0; i < 3; ++i) {
      const auto& cur = face.boundary[i];
      const auto& nxt = face.boundary[(i + 1) % 3];
      const auto [a1, a2] = split_label(cur.first);
      const auto [b1, b2] = split_label(nxt.first);
      std::set<Vertex> overlap;
      for (const auto& x : {a1, a2})
        for (const auto& y : {b1, b2})
          if (x == y) overlap.insert(x);
      if (overlap.size() != 1) return false;
      const Vertex shared = *overlap.begin();
      std::set<Vertex> span{a1, a2, b1, b2};
      if (span.size() != 3) return false;
      auto it = span.begin();
      const Vertex va = *it++;
      const Vertex vb = *it++;
      const Vertex vc = *it;
      const Triangle tri = make_triangle(va, vb, vc);
      auto at = angles.find(tri);
      if (at == angles.end()) return false;
      int idx = 0;
      while (tri[idx] != shared) ++idx;
      try {
        h.add_edge(end_of(cur), start_of(nxt), at->second[idx]);
      } catch (const std::invalid_argument&) {
        return false;
      }
    }
  }
  return weighted_graph_isomorphic(h, build_L(k, m), tol);
}

namespace {

struct IsoGraph {
  std::vector<std::string> names;
  std::vector<std::vector<int>> nbr;
  std::map<std::pair<int, int>, double> weight;

  explicit IsoGraph(const WeightedGraph& g) {
    names.assign(g.vertices.begin(), g.vertices.end());
    std::map<std::string, int> id;
    for (const auto& n : names) id.emplace(n, id.size());
    nbr.resize(names.size());
    for (const auto& [e, w] : g.weights) {
      const int a = id.at(e[0]), b = id.at(e[1]);
      nbr[a].push_back(b);
      nbr[b].push_back(a);
      weight[{std::min(a, b), std::max(a, b)}] = w;
    }
  }

  bool has(int a, int b) const {
    return weight.count({std::min(a, b), std::max(a, b)}) > 0;
  }
  double w(int a, int b) const {
    return weight.at({std::min(a, b), std::max(a, b)});
  }
};

// Weight-blind color refinement run over both graphs at once so colors are
// comparable across them.
std::pair<std::vector<int>, std::vector<int>> refine_colors(
    const IsoGraph& a, const IsoGraph& b) {
  std::vector<int> ca(a.names.size(), 0), cb(b.names.size(), 0);
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> relabel;
    auto signature = [&](const IsoGraph& g, const std::vector<int>& c, int v) {
      std::vector<int> n;
      for (int u : g.nbr[v]) n.push_back(c[u]);
      std::sort(n.begin(), n.end());
      return std::make_pair(c[v], n);
    };
    std::vector<std::pair<int, std::vector<int>>> sa, sb;
    for (std::size_t v = 0; v < ca.size(); ++v)
      sa.push_back(signature(a, ca, v));
    for (std::size_t v = 0; v < cb.size(); ++v)
      sb.push_back(signature(b, cb, v));
    for (const auto& s : sa) relabel.emplace(s, relabel.size());
    for (const auto& s : sb) relabel.emplace(s, relabel.size());
    std::vector<int> na(ca.size()), nb(cb.size());
    for (std::size_t v = 0; v < ca.size(); ++v) na[v] = relabel.at(sa[v]);
    for (std::size_t v = 0; v < cb.size(); ++v) nb[v] = relabel.at(sb[v]);
    if (na == ca && nb == cb) return {ca, cb};
    ca = std::move(na);
    cb = std::move(nb);
  }
}

bool extend_matching(const IsoGraph& a, const IsoGraph& b,
                     const std::vector<int>& ca, const std::vector<int>& cb,
                     const std::vector<int>& order, std::size_t pos,
                     std::vector<int>& match, std::vector<char>& used,
                     double tol) {
  if (pos == order.size()) return true;
  const int x = order[pos];
  for (std::size_t y = 0; y < b.names.size(); ++y) {
    if (used[y] || cb[y] != ca[x]) continue;
    bool ok = true;
    for (std::size_t q = 0; q < pos && ok; ++q) {
      const int x2 = order[q];
      const int y2 = match[x2];
      const bool ea = a.has(x, x2);
      const bool eb = b.has(static_cast<int>(y), y2);
      if (ea != eb)
        ok = false;
      else if (ea && std::abs(a.w(x, x2) - b.w(static_cast<int>(y), y2)) > tol)
        ok = false;
    }
    if (!ok) continue;
    match[x] = static_cast<int>(y);
    used[y] = 1;
    if (extend_matching(a, b, ca, cb, order, pos + 1, match, used, tol))
      return true;
    used[y] = 0;
  }
  return false;
}

}  // namespace

bool weighted_graph_isomorphic(const WeightedGraph& ga, const WeightedGraph& gb,
                               double tol) {
  if (ga.vertices.size() != gb.vertices.size()) return false;
  if (ga.weights.size() != gb.weights.size()) return false;
  IsoGraph a(ga), b(gb);
  auto [ca, cb] = refine_colors(a, b);
  std::map<int, int> count_a, count_b;
  for (int c : ca) ++count_a[c];
  for (int c : cb) ++count_b[c];
  if (count_a != count_b) return false;
  std::vector<int> order(a.names.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (count_a.at(ca[x]) != count_a.at(ca[y]))
      return count_a.at(ca[x]) < count_a.at(ca[y]);
    return x < y;
  });
  std::vector<int> match(a.names.size(), -1);
  std::vector<char> used(b.names.size(), 0);
  return extend_matching(a, b, ca, cb, order, 0, match, used, tol);
}

}  // namespace catlink
