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

#include "catlink/complex.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <iterator>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace catlink {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("degenerate edge " + a);
  Edge e{std::move(a), std::move(b)};
  if (e[1] < e[0]) std::swap(e[0], e[1]);
  return e;
}

Triangle make_triangle(Vertex a, Vertex b, Vertex c) {
  Triangle t{std::move(a), std::move(b), std::move(c)};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2])
    throw std::invalid_argument("degenerate triangle " + t[0] + " " + t[1] +
                                " " + t[2]);
  return t;
}

std::array<Edge, 3> edges_of(const Triangle& t) {
  return {make_edge(t[0], t[1]), make_edge(t[0], t[2]),
          make_edge(t[1], t[2])};
}

void Graph::add_edge(const Vertex& a, const Vertex& b) {
  Edge e = make_edge(a, b);
  vertices.insert(e[0]);
  vertices.insert(e[1]);
  edges.insert(e);
}

bool Graph::has_edge(const Vertex& a, const Vertex& b) const {
  return edges.count(make_edge(a, b)) > 0;
}

std::map<Vertex, std::set<Vertex>> Graph::adjacency() const {
  std::map<Vertex, std::set<Vertex>> adj;
  for (const auto& v : vertices) adj[v];
  for (const auto& e : edges) {
    adj[e[0]].insert(e[1]);
    adj[e[1]].insert(e[0]);
  }
  return adj;
}

void FlagComplex2::add_edge(const Vertex& a, const Vertex& b) {
  Edge e = make_edge(a, b);
  vertices.insert(e[0]);
  vertices.insert(e[1]);
  edges.insert(e);
}

void FlagComplex2::add_triangle(const Vertex& a, const Vertex& b,
                                const Vertex& c) {
  Triangle t = make_triangle(a, b, c);
  for (const auto& e : edges_of(t)) {
    vertices.insert(e[0]);
    vertices.insert(e[1]);
    edges.insert(e);
  }
  triangles.insert(t);
}

bool FlagComplex2::has_edge(const Vertex& a, const Vertex& b) const {
  return edges.count(make_edge(a, b)) > 0;
}

std::map<Vertex, std::set<Vertex>> FlagComplex2::adjacency() const {
  std::map<Vertex, std::set<Vertex>> adj;
  for (const auto& v : vertices) adj[v];
  for (const auto& e : edges) {
    adj[e[0]].insert(e[1]);
    adj[e[1]].insert(e[0]);
  }
  return adj;
}

std::vector<OrientedEdge> FlagComplex2::oriented_edges() const {
  std::vector<OrientedEdge> out;
  out.reserve(2 * edges.size());
  for (const auto& e : edges) {
    out.push_back({e[0], e[1]});
    out.push_back({e[1], e[0]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool valid_vertex_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == '#' || c == '>' || std::isspace(static_cast<unsigned char>(c)))
      return false;
  return true;
}

std::runtime_error parse_error(int line, const std::string& msg) {
  return std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

FlagComplex2 parse_complex(const std::string& text) {
  FlagComplex2 k;
  std::set<Edge> declared_edges;
  std::set<Triangle> declared_triangles;
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
    for (std::size_t i = 1; i < tok.size(); ++i)
      if (!valid_vertex_name(tok[i]))
        throw parse_error(lineno, "bad vertex name '" + tok[i] + "'");
    if (tok[0] == "vertex") {
      if (tok.size() != 2) throw parse_error(lineno, "vertex takes one name");
      if (k.has_vertex(tok[1]))
        throw parse_error(lineno, "duplicate vertex '" + tok[1] + "'");
      k.add_vertex(tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() != 3) throw parse_error(lineno, "edge takes two names");
      for (int i : {1, 2})
        if (!k.has_vertex(tok[i]))
          throw parse_error(lineno, "unknown vertex '" + tok[i] + "'");
      if (tok[1] == tok[2]) throw parse_error(lineno, "degenerate edge");
      if (!declared_edges.insert(make_edge(tok[1], tok[2])).second)
        throw parse_error(lineno, "duplicate edge");
      k.add_edge(tok[1], tok[2]);
    } else if (tok[0] == "triangle") {
      if (tok.size() != 4)
        throw parse_error(lineno, "triangle takes three names");
      for (int i : {1, 2, 3})
        if (!k.has_vertex(tok[i]))
          throw parse_error(lineno, "unknown vertex '" + tok[i] + "'");
      if (tok[1] == tok[2] || tok[1] == tok[3] || tok[2] == tok[3])
        throw parse_error(lineno, "degenerate triangle");
      if (!declared_triangles.insert(make_triangle(tok[1], tok[2], tok[3]))
               .second)
        throw parse_error(lineno, "duplicate triangle");
      k.add_triangle(tok[1], tok[2], tok[3]);
    } else {
      throw parse_error(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  return k;
}

std::string serialize_complex(const FlagComplex2& k) {
  std::ostringstream out;
  for (const auto& v : k.vertices) out << "vertex " << v << "\n";
  std::set<Edge> implied;
  for (const auto& t : k.triangles)
    for (const auto& e : edges_of(t)) implied.insert(e);
  for (const auto& e : k.edges)
    if (!implied.count(e)) out << "edge " << e[0] << " " << e[1] << "\n";
  for (const auto& t : k.triangles)
    out << "triangle " << t[0] << " " << t[1] << " " << t[2] << "\n";
  return out.str();
}

FlagReport check_flag(const FlagComplex2& k) {
  FlagReport rep;
  auto adj = k.adjacency();
  for (const auto& e : k.edges) {
    std::vector<Vertex> common;
    std::set_intersection(adj[e[0]].begin(), adj[e[0]].end(),
                          adj[e[1]].begin(), adj[e[1]].end(),
                          std::back_inserter(common));
    for (const auto& w : common) {
      if (w <= e[1]) continue;
      Triangle t = make_triangle(e[0], e[1], w);
      if (!k.has_triangle(t))
        rep.violations.push_back("clique " + t[0] + " " + t[1] + " " + t[2] +
                                 " spans no triangle");
      for (const auto& z : common) {
        if (z <= w) continue;
        if (adj[w].count(z))
          rep.violations.push_back("4-clique " + e[0] + " " + e[1] + " " + w +
                                   " " + z);
      }
    }
  }
  rep.is_flag = rep.violations.empty();
  std::map<Edge, int> tri_count;
  for (const auto& t : k.triangles)
    for (const auto& e : edges_of(t)) ++tri_count[e];
  for (const auto& e : k.edges)
    if (tri_count[e] == 1) rep.free_edges.push_back(e);
  rep.connected = true;
  if (!k.vertices.empty()) {
    std::set<Vertex> seen{*k.vertices.begin()};
    std::vector<Vertex> stack{*k.vertices.begin()};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const auto& w : adj[v])
        if (seen.insert(w).second) stack.push_back(w);
    }
    rep.connected = seen.size() == k.vertices.size();
  }
  return rep;
}

Graph link_graph(const FlagComplex2& k, const Vertex& v) {
  if (!k.has_vertex(v))
    throw std::invalid_argument("unknown vertex '" + v + "'");
  Graph g;
  for (const auto& e : k.edges) {
    if (e[0] == v) g.add_vertex(e[1]);
    if (e[1] == v) g.add_vertex(e[0]);
  }
  for (const auto& t : k.triangles) {
    if (t[0] == v)
      g.add_edge(t[1], t[2]);
    else if (t[1] == v)
      g.add_edge(t[0], t[2]);
    else if (t[2] == v)
      g.add_edge(t[0], t[1]);
  }
  return g;
}

Graph one_skeleton(const FlagComplex2& k) {
  Graph g;
  g.vertices = k.vertices;
  g.edges = k.edges;
  return g;
}

FlagComplex2 suspension(const Graph& l) {
  for (const Vertex& apex : {Vertex("p"), Vertex("q")})
    if (l.vertices.count(apex))
      throw std::invalid_argument("apex name '" + apex + "' already in use");
  auto adj = l.adjacency();
  for (const auto& e : l.edges) {
    std::vector<Vertex> common;
    std::set_intersection(adj[e[0]].begin(), adj[e[0]].end(),
                          adj[e[1]].begin(), adj[e[1]].end(),
                          std::back_inserter(common));
    if (!common.empty())
      throw std::invalid_argument("graph has triangle " + e[0] + " " + e[1] +
                                  " " + common.front());
  }
  FlagComplex2 k;
  for (const auto& v : l.vertices) {
    k.add_edge("p", v);
    k.add_edge("q", v);
  }
  for (const auto& e : l.edges) {
    k.add_edge(e[0], e[1]);
    k.add_triangle("p", e[0], e[1]);
    k.add_triangle("q", e[0], e[1]);
  }
  return k;
}

void Delta2Complex::validate() const {
  for (const auto& e : edges)
    if (e.from < 0 || e.from >= num_vertices || e.to < 0 ||
        e.to >= num_vertices)
      throw std::invalid_argument("edge endpoint out of range");
  for (const auto& t : triangles) {
    for (const auto& s : t.sides)
      if (s.edge < 0 || s.edge >= static_cast<int>(edges.size()))
        throw std::invalid_argument("triangle side out of range");
    for (int i = 0; i < 3; ++i)
      if (side_end(t.sides[i]) != side_start(t.sides[(i + 1) % 3]))
        throw std::invalid_argument("triangle sides do not close up");
  }
}

Delta2Complex barycentric_subdivision(const Delta2Complex& d) {
  d.validate();
  Delta2Complex out;
  const int nv = d.num_vertices;
  const int ne = static_cast<int>(d.edges.size());
  const int nt = static_cast<int>(d.triangles.size());
  out.num_vertices = nv + ne + nt;
  // Vertex ids: old vertices, then edge midpoints nv+e, then centers
  // nv+ne+t.  Edge ids: halves 2e (from from) and 2e+1 (from to), then six
  // spokes per triangle.
  for (int e = 0; e < ne; ++e) {
    out.edges.push_back({d.edges[e].from, nv + e});
    out.edges.push_back({d.edges[e].to, nv + e});
  }
  const int spoke0 = 2 * ne;
  for (int t = 0; t < nt; ++t) {
    const DeltaTriangle& tri = d.triangles[t];
    const int center = nv + ne + t;
    for (int i = 0; i < 3; ++i)
      out.edges.push_back({d.side_start(tri.sides[i]), center});
    for (int i = 0; i < 3; ++i)
      out.edges.push_back({nv + tri.sides[i].edge, center});
    for (int i = 0; i < 3; ++i) {
      const TriSide& s = tri.sides[i];
      const int half_from_start = 2 * s.edge + (s.reversed ? 1 : 0);
      const int half_from_end = 2 * s.edge + (s.reversed ? 0 : 1);
      const int corner_spoke = spoke0 + 6 * t + i;
      const int next_corner_spoke = spoke0 + 6 * t + (i + 1) % 3;
      const int mid_spoke = spoke0 + 6 * t + 3 + i;
      out.triangles.push_back({{TriSide{half_from_start, false},
                                TriSide{mid_spoke, false},
                                TriSide{corner_spoke, true}}});
      out.triangles.push_back({{TriSide{half_from_end, false},
                                TriSide{mid_spoke, false},
                                TriSide{next_corner_spoke, true}}});
    }
  }
  return out;
}

FlagComplex2 to_flag_complex2(const Delta2Complex& d) {
  d.validate();
  int width = 1;
  for (int n = d.num_vertices - 1; n >= 10; n /= 10) ++width;
  auto name = [&](int v) {
    std::string digits = std::to_string(v);
    return "b" + std::string(width - digits.size(), '0') + digits;
  };
  FlagComplex2 k;
  for (int v = 0; v < d.num_vertices; ++v) k.add_vertex(name(v));
  std::set<Edge> seen;
  for (const auto& e : d.edges) {
    if (e.from == e.to)
      throw std::invalid_argument("not simplicial: loop edge");
    if (!seen.insert(make_edge(name(e.from), name(e.to))).second)
      throw std::invalid_argument("not simplicial: parallel edges");
    k.add_edge(name(e.from), name(e.to));
  }
  std::set<Triangle> tris;
  for (const auto& t : d.triangles) {
    const int a = d.side_start(t.sides[0]);
    const int b = d.side_start(t.sides[1]);
    const int c = d.side_start(t.sides[2]);
    if (a == b || b == c || a == c)
      throw std::invalid_argument("not simplicial: repeated corner");
    if (!tris.insert(make_triangle(name(a), name(b), name(c))).second)
      throw std::invalid_argument("not simplicial: repeated triangle");
    k.add_triangle(name(a), name(b), name(c));
  }
  return k;
}

Delta2Complex to_delta(const FlagComplex2& k) {
  Delta2Complex d;
  std::map<Vertex, int> id;
  for (const auto& v : k.vertices) id.emplace(v, id.size());
  d.num_vertices = static_cast<int>(id.size());
  std::map<Edge, int> eid;
  for (const auto& e : k.edges) {
    eid.emplace(e, static_cast<int>(d.edges.size()));
    d.edges.push_back({id.at(e[0]), id.at(e[1])});
  }
  for (const auto& t : k.triangles) {
    DeltaTriangle tri;
    tri.sides[0] = TriSide{eid.at(make_edge(t[0], t[1])), false};
    tri.sides[1] = TriSide{eid.at(make_edge(t[1], t[2])), false};
    tri.sides[2] = TriSide{eid.at(make_edge(t[0], t[2])), true};
    d.triangles.push_back(tri);
  }
  d.validate();
  return d;
}

Delta2Complex dunce_hat_delta() {
  Delta2Complex d;
  d.num_vertices = 1;
  d.edges.push_back({0, 0});
  d.triangles.push_back(
      {{TriSide{0, false}, TriSide{0, false}, TriSide{0, true}}});
  d.validate();
  return d;
}

namespace {

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}
double norm2(Vec3 a) { return dot(a, a); }
Vec3 normalize(Vec3 a) { return (1.0 / std::sqrt(norm2(a))) * a; }

// Rodrigues rotation about the unit axis a.
Vec3 rotate(Vec3 a, double theta, Vec3 x) {
  const double c = std::cos(theta), s = std::sin(theta);
  return c * x + s * cross(a, x) + (1 - c) * dot(a, x) * a;
}

Vec3 reflect(Vec3 a, Vec3 x) { return x - 2 * dot(a, x) * a; }

struct Icosahedron {
  std::vector<Vec3> verts;                  // 12
  std::vector<std::array<int, 3>> faces;    // 20, sorted triples
  std::vector<int> antipode;                // vertex -> opposite vertex
  std::vector<std::array<int, 5>> pentagon; // per vertex, faces in cyclic
                                            // order seen from outside
};

Icosahedron build_icosahedron() {
  Icosahedron ico;
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0}) {
      ico.verts.push_back({0, s1, s2 * phi});
      ico.verts.push_back({s1, s2 * phi, 0});
      ico.verts.push_back({s2 * phi, 0, s1});
    }
  const int n = 12;
  auto adjacent = [&](int i, int j) {
    return norm2(ico.verts[i] - ico.verts[j]) < 4.5;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (adjacent(i, j) && adjacent(j, k) && adjacent(i, k))
          ico.faces.push_back({i, j, k});
  ico.antipode.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (norm2(ico.verts[i] + ico.verts[j]) < 1e-9) ico.antipode[i] = j;
  auto centroid = [&](int f) {
    const auto& t = ico.faces[f];
    return (1.0 / 3.0) *
           (ico.verts[t[0]] + ico.verts[t[1]] + ico.verts[t[2]]);
  };
  for (int v = 0; v < n; ++v) {
    std::vector<int> around;
    for (int f = 0; f < static_cast<int>(ico.faces.size()); ++f) {
      const auto& t = ico.faces[f];
      if (t[0] == v || t[1] == v || t[2] == v) around.push_back(f);
    }
    const Vec3 axis = normalize(ico.verts[v]);
    const Vec3 c0 = centroid(around[0]);
    const Vec3 ref = normalize(c0 - dot(c0, axis) * axis);
    auto angle = [&](int f) {
      const Vec3 c = centroid(f);
      const Vec3 p = c - dot(c, axis) * axis;
      return std::atan2(dot(cross(ref, p), axis), dot(ref, p));
    };
    std::sort(around.begin(), around.end(),
              [&](int f, int g) { return angle(f) < angle(g); });
    std::array<int, 5> pent;
    std::copy_n(around.begin(), 5, pent.begin());
    ico.pentagon.push_back(pent);
  }
  return ico;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Dual-face identification data for one candidate: for each of the six
// antipodal vertex pairs, the image of every dual vertex (icosahedron face)
// of the source pentagon.  A face lies in several pentagons, so the image
// map is kept per pair.
struct SpineGluing {
  std::vector<int> pair_rep;              // 6 source vertices
  std::vector<std::map<int, int>> image;  // per pair, face -> image face
};

SpineGluing spine_gluing(const Icosahedron& ico, int candidate) {
  if (candidate < 0 || candidate > 9)
    throw std::invalid_argument("candidate out of range");
  SpineGluing g;
  auto centroid = [&](int f) {
    const auto& t = ico.faces[f];
    return (1.0 / 3.0) *
           (ico.verts[t[0]] + ico.verts[t[1]] + ico.verts[t[2]]);
  };
  const double pi = std::acos(-1.0);
  for (int v = 0; v < 12; ++v) {
    if (ico.antipode[v] < v) continue;
    g.pair_rep.push_back(v);
    g.image.emplace_back();
    const Vec3 axis = normalize(ico.verts[v]);
    for (int f : ico.pentagon[v]) {
      Vec3 image;
      if (candidate < 5) {
        image = rotate(axis, 2 * pi * candidate / 5,
                       -1.0 * centroid(f));
      } else {
        image = rotate(axis, pi / 5 + 2 * pi * (candidate - 5) / 5,
                       reflect(axis, centroid(f)));
      }
      int best = -1;
      for (int h : ico.pentagon[ico.antipode[v]])
        if (norm2(centroid(h) - image) < 1e-9) best = h;
      if (best < 0)
        throw std::logic_error("candidate map misses the dual vertices");
      g.image.back()[f] = best;
    }
  }
  return g;
}

// Directed dodecahedron edges are ordered pairs of adjacent faces.
struct SpineQuotient {
  bool valid = false;
  Delta2Complex coned;
};

SpineQuotient spine_quotient(int candidate) {
  const Icosahedron ico = build_icosahedron();
  const SpineGluing glue = spine_gluing(ico, candidate);
  const int nf = static_cast<int>(ico.faces.size());
  std::map<std::array<int, 2>, int> side_id;
  std::vector<std::array<int, 2>> sides;
  for (int v = 0; v < 12; ++v) {
    const auto& pent = ico.pentagon[v];
    for (int i = 0; i < 5; ++i) {
      std::array<int, 2> s{pent[i], pent[(i + 1) % 5]};
      if (!side_id.count(s)) {
        side_id[s] = static_cast<int>(sides.size());
        sides.push_back(s);
      }
    }
  }
  UnionFind vert_uf(nf);
  UnionFind side_uf(static_cast<int>(sides.size()));
  for (int p = 0; p < 6; ++p) {
    const int v = glue.pair_rep[p];
    const auto& im = glue.image[p];
    const auto& pent = ico.pentagon[v];
    for (int i = 0; i < 5; ++i) {
      const int f = pent[i];
      const int fn = pent[(i + 1) % 5];
      vert_uf.unite(f, im.at(f));
      side_uf.unite(side_id.at({f, fn}), side_id.at({im.at(f), im.at(fn)}));
      side_uf.unite(side_id.at({fn, f}), side_id.at({im.at(fn), im.at(f)}));
    }
  }
  SpineQuotient out;
  auto rev = [&](int s) {
    return side_id.at({sides[s][1], sides[s][0]});
  };
  for (int s = 0; s < static_cast<int>(sides.size()); ++s)
    if (side_uf.find(s) == side_uf.find(rev(s))) return out;
  out.valid = true;

  // Compress vertex classes and pick per undirected edge class the
  // orientation whose class contains the smallest directed side.
  std::map<int, int> vclass;
  for (int f = 0; f < nf; ++f) {
    const int r = vert_uf.find(f);
    if (!vclass.count(r)) {
      const int id = static_cast<int>(vclass.size());
      vclass[r] = id;
    }
  }
  std::map<int, int> canon;  // directed side class root -> quotient edge id
  Delta2Complex q;
  q.num_vertices = static_cast<int>(vclass.size());
  for (int s = 0; s < static_cast<int>(sides.size()); ++s) {
    const int r = side_uf.find(s);
    if (canon.count(r) || canon.count(side_uf.find(rev(s)))) continue;
    canon[r] = static_cast<int>(q.edges.size());
    q.edges.push_back({vclass.at(vert_uf.find(sides[s][0])),
                       vclass.at(vert_uf.find(sides[s][1]))});
  }
  auto side_ref = [&](int f, int fn) {
    const int s = side_id.at({f, fn});
    const int r = side_uf.find(s);
    if (canon.count(r)) return TriSide{canon.at(r), false};
    return TriSide{canon.at(side_uf.find(rev(s))), true};
  };

  // Cone each of the six quotient pentagons from its own apex.
  const int napex0 = q.num_vertices;
  q.num_vertices += 6;
  std::vector<std::array<int, 5>> cone_edges(6);
  for (int p = 0; p < 6; ++p) {
    const auto& pent = ico.pentagon[glue.pair_rep[p]];
    for (int i = 0; i < 5; ++i) {
      cone_edges[p][i] = static_cast<int>(q.edges.size());
      q.edges.push_back(
          {vclass.at(vert_uf.find(pent[i])), napex0 + p});
    }
    for (int i = 0; i < 5; ++i) {
      q.triangles.push_back({{side_ref(pent[i], pent[(i + 1) % 5]),
                              TriSide{cone_edges[p][(i + 1) % 5], false},
                              TriSide{cone_edges[p][i], true}}});
    }
  }
  q.validate();
  out.coned = q;
  return out;
}

}  // namespace

bool spine_candidate_valid(int candidate) {
  return spine_quotient(candidate).valid;
}

Delta2Complex spine_quotient_delta(int candidate) {
  SpineQuotient q = spine_quotient(candidate);
  if (!q.valid)
    throw std::invalid_argument("candidate glues an edge to its reversal");
  return q.coned;
}

int spine_chosen_candidate() { return 5; }

FlagComplex2 fixture(const std::string& name) {
  FlagComplex2 k;
  if (name == "triangle") {
    k.add_triangle("u", "v", "w");
  } else if (name == "two_triangles") {
    k.add_triangle("u", "v", "w");
    k.add_triangle("u", "v", "z");
  } else if (name == "path4") {
    k.add_edge("u1", "u2");
    k.add_edge("u2", "u3");
    k.add_edge("u3", "u4");
  } else if (name == "k0") {
    k = suspension(one_skeleton(fixture("path4")));
  } else if (name == "torus") {
    auto t = [](int i) { return "t" + std::to_string(i % 7); };
    for (int i = 0; i < 7; ++i) {
      k.add_triangle(t(i), t(i + 1), t(i + 3));
      k.add_triangle(t(i), t(i + 2), t(i + 3));
    }
  } else if (name == "rp2") {
    for (const char* t : {"123", "124", "135", "146", "156", "236", "245",
                          "256", "345", "346"}) {
      k.add_triangle(std::string("r") + t[0], std::string("r") + t[1],
                     std::string("r") + t[2]);
    }
  } else if (name == "dunce_hat_flag") {
    k = to_flag_complex2(barycentric_subdivision(
        barycentric_subdivision(barycentric_subdivision(dunce_hat_delta()))));
  } else if (name == "poincare_spine") {
    k = to_flag_complex2(barycentric_subdivision(barycentric_subdivision(
        barycentric_subdivision(spine_quotient_delta(spine_chosen_candidate())))));
  } else {
    throw std::invalid_argument("unknown fixture '" + name + "'");
  }
  return k;
}

std::vector<std::string> fixture_names() {
  return {"triangle", "two_triangles", "path4",          "k0",
          "torus",    "rp2",           "dunce_hat_flag", "poincare_spine"};
}

std::map<std::string, OrientedEdge> k0_labels() {
  return {
      {"a", {"u2", "u1"}}, {"x", {"u2", "u3"}}, {"e", {"u3", "u4"}},
      {"b", {"p", "u2"}},  {"h", {"p", "u3"}},  {"r", {"p", "u4"}},
      {"u", {"p", "u1"}},  {"d", {"q", "u2"}},  {"k", {"q", "u3"}},
      {"s", {"q", "u4"}},  {"v", {"q", "u1"}},
  };
}

std::vector<std::vector<std::string>> k0_circuits() {
  return {
      {"b", "h", "r", "e", "s", "k", "d", "v", "a", "u"},
      {"b", "x^-1", "d", "k", "x", "h"},
      {"b", "x^-1", "d", "v", "a", "u"},
      {"h", "r", "e", "s", "k", "x"},
  };
}

OrientedEdge k0_resolve(const std::string& token) {
  static const std::string suffix = "^-1";
  std::string base = token;
  bool rev = false;
  if (base.size() > suffix.size() &&
      base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0) {
    base = base.substr(0, base.size() - suffix.size());
    rev = true;
  }
  const auto labels = k0_labels();
  auto it = labels.find(base);
  if (it == labels.end())
    throw std::invalid_argument("unknown circuit label '" + token + "'");
  return rev ? it->second.reversed() : it->second;
}

}  // namespace catlink
