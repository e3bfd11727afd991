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

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "catlink/complex.hpp"

namespace catlink {

// Triangles whose relative excess min(a+b-c)/(a+b+c) falls at or below this
// are rejected as degenerate.  Kept well under the verdict tolerance so
// angle noise cannot flip a verdict.
inline constexpr double kDegenerateTol = 1e-12;

struct PEMetric {
  std::map<Edge, double> lengths;

  double length(const Vertex& a, const Vertex& b) const;

  bool operator==(const PEMetric&) const = default;
};

// Metric file format: `length <a> <b> <positive float>` lines, '#' comments.
PEMetric parse_metric(const std::string& text);
std::string serialize_metric(const PEMetric& m);

// Throws std::invalid_argument when an edge of k has no length, a length is
// not positive and finite, or m mentions a non-edge; std::domain_error when
// some triangle is degenerate at kDegenerateTol.
void validate_metric(const FlagComplex2& k, const PEMetric& m);

// a + b - c with a few ulps of relative error even near zero.  The branch
// keeps every cancellation inside one exact subtraction.
template <typename Real>
Real stable_excess(Real a, Real b, Real c) {
  const Real hi = a < b ? b : a;
  const Real lo = a < b ? a : b;
  if (c >= hi) return lo - (c - hi);
  return lo + (hi - c);
}

template <typename Real>
Real relative_margin(Real a, Real b, Real c) {
  const Real perimeter = a + b + c;
  Real m = stable_excess(a, b, c);
  if (stable_excess(b, c, a) < m) m = stable_excess(b, c, a);
  if (stable_excess(a, c, b) < m) m = stable_excess(a, c, b);
  return m / perimeter;
}

// Angle between the sides of lengths adj1 and adj2, opposite opp.  Law of
// cosines in half-angle arctangent form; inputs are first normalized by
// their maximum, so the result is bit-identical under exact rescaling.
template <typename Real>
Real triangle_angle(Real adj1, Real adj2, Real opp) {
  using std::atan2;
  using std::sqrt;
  Real m = adj1 < adj2 ? adj2 : adj1;
  if (m < opp) m = opp;
  const Real a = adj1 / m;
  const Real b = adj2 / m;
  const Real c = opp / m;
  const Real num = stable_excess(b, c, a) * stable_excess(a, c, b);
  const Real den = (a + b + c) * stable_excess(a, b, c);
  return 2 * atan2(sqrt(num), sqrt(den));
}

// Per triangle, angle[i] sits at vertex t[i].  Postcondition: each angle in
// (0, pi), the three summing to pi within 1e-12.
std::map<Triangle, std::array<double, 3>> corner_angles(const FlagComplex2& k,
                                                        const PEMetric& m);

// Simple weighted graph; the constructors reject self-loops, repeated
// edges, and nonpositive weights.
struct WeightedGraph {
  std::set<std::string> vertices;
  std::map<Edge, double> weights;

  void add_vertex(const std::string& v) { vertices.insert(v); }
  void add_edge(const std::string& a, const std::string& b, double w);

  bool operator==(const WeightedGraph&) const = default;
};

struct Cycle {
  double length = 0;
  std::vector<std::string> vertices;  // canonical rotation, closing edge
                                      // back to front implied
};

template <typename Real>
struct IndexedCycle {
  Real length{};
  std::vector<int> vertices;
};

// Lexicographically least rotation among both traversal directions.
template <typename T>
std::vector<T> canonical_cycle(std::vector<T> c) {
  if (c.empty()) return c;
  std::vector<T> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t r = 0; r < c.size(); ++r) {
      std::vector<T> cand(c.begin() + r, c.end());
      cand.insert(cand.end(), c.begin(), c.begin() + r);
      if (best.empty() || cand < best) best = cand;
    }
    std::reverse(c.begin(), c.end());
  }
  return best;
}

// Exact minimum-weight simple cycle: for every edge, the edge is removed
// and the shortest remaining path between its endpoints closes a candidate
// cycle; the overall minimum is the girth.  Deterministic: Dijkstra breaks
// ties by vertex index and equal-length candidates by canonical cycle.
template <typename Real>
std::optional<IndexedCycle<Real>> girth_indexed(
    int n, const std::vector<std::tuple<int, int, Real>>& edges) {
  std::vector<std::vector<std::tuple<int, Real, std::size_t>>> adj(n);
  for (std::size_t id = 0; id < edges.size(); ++id) {
    const auto& [u, v, w] = edges[id];
    adj[u].emplace_back(v, w, id);
    adj[v].emplace_back(u, w, id);
  }
  const Real inf = std::numeric_limits<Real>::infinity();
  std::optional<IndexedCycle<Real>> best;
  std::vector<Real> dist(n);
  std::vector<int> parent(n);
  std::vector<char> done(n);
  for (std::size_t skip = 0; skip < edges.size(); ++skip) {
    const auto& [source, target, w] = edges[skip];
    dist.assign(n, inf);
    parent.assign(n, -1);
    done.assign(n, 0);
    using Item = std::pair<Real, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[source] = Real(0);
    pq.emplace(Real(0), source);
    while (!pq.empty()) {
      const auto [d, x] = pq.top();
      pq.pop();
      if (done[x]) continue;
      done[x] = 1;
      if (x == target) break;
      for (const auto& [y, wy, id] : adj[x]) {
        if (id == skip || done[y]) continue;
        if (d + wy < dist[y]) {
          dist[y] = d + wy;
          parent[y] = x;
          pq.emplace(dist[y], y);
        }
      }
    }
    if (dist[target] == inf) continue;
    const Real total = dist[target] + w;
    if (best && total > best->length) continue;
    std::vector<int> cyc;
    for (int x = target; x != -1; x = parent[x]) cyc.push_back(x);
    cyc = canonical_cycle(cyc);
    if (best && total == best->length && best->vertices <= cyc) continue;
    best = IndexedCycle<Real>{total, cyc};
  }
  return best;
}

std::optional<Cycle> girth(const WeightedGraph& g);

struct Verdict {
  bool passes = false;
  bool vacuous = false;   // no simple circuit exists at all
  bool boundary = false;  // |slack| <= tol
  double slack = 0;       // girth - 2*pi, +infinity when vacuous
  std::vector<std::string> witness;
  double witness_length = 0;
};

Verdict verdict_from_girth(const std::optional<Cycle>& c, double tol);

// Link of v with each edge weighted by its triangle's corner angle at v.
WeightedGraph build_link(const FlagComplex2& k, const PEMetric& m,
                         const Vertex& v);

// Angle graph: one vertex per oriented edge (labels "u>v"); within each
// triangle, two oriented edges sharing their source or sharing their target
// are joined, weighted by the corner angle at the shared vertex.  Each
// triangle induces a 6-cycle of total weight exactly 2*pi; triangles
// sharing an edge of k share the corresponding antipodal vertex pair.
WeightedGraph build_L(const FlagComplex2& k, const PEMetric& m);

// build_L plus the (triangle, corner vertex) attribution of every edge
// weight, which the metric search differentiates through.
struct LInfo {
  WeightedGraph graph;
  std::map<Edge, std::pair<Triangle, Vertex>> corner;
};
LInfo build_L_info(const FlagComplex2& k, const PEMetric& m);

std::map<Vertex, Verdict> check_link_condition(const FlagComplex2& k,
                                               const PEMetric& m, double tol);

Verdict check_cat1_L(const FlagComplex2& k, const PEMetric& m, double tol);

// Presentation 2-complex with a single vertex: one edge per unoriented edge
// of k carrying the lexicographic orientation label "u>v", and per triangle
// {a,b,c} two triangular faces with boundary words
//   (a>b) (b>c) (a>c)^-1   and   (b>c) (a>b) (a>c)^-1.
struct TFace {
  std::array<std::pair<std::string, int>, 3> boundary;  // (label, +1 or -1)
};
struct TComplex {
  std::vector<std::string> edge_labels;
  std::vector<TFace> faces;
};

TComplex build_T(const FlagComplex2& k);  // requires k connected

// Builds the weighted link of the unique vertex of T(k) from the boundary
// words alone (corner between consecutive letters joins the outgoing end of
// one edge to the incoming end of the next, weighted by the angle at their
// shared vertex of k) and tests weighted-graph isomorphism with build_L.
bool verify_T_link(const FlagComplex2& k, const PEMetric& m, double tol);

// Label-blind isomorphism with edge weights compared within tol.
bool weighted_graph_isomorphic(const WeightedGraph& a, const WeightedGraph& b,
                               double tol);

}  // namespace catlink
