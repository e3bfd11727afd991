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

#include <array>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace catlink {

using Vertex = std::string;

// Unordered simplices are stored sorted, so set iteration is the canonical
// lexicographic order used by every serializer and report.
using Edge = std::array<Vertex, 2>;
using Triangle = std::array<Vertex, 3>;

Edge make_edge(Vertex a, Vertex b);
Triangle make_triangle(Vertex a, Vertex b, Vertex c);
std::array<Edge, 3> edges_of(const Triangle& t);

struct OrientedEdge {
  Vertex source;
  Vertex target;

  OrientedEdge reversed() const { return {target, source}; }
  Edge underlying() const { return make_edge(source, target); }

  // Label used for graph vertices and file output.
  std::string label() const { return source + ">" + target; }

  auto operator<=>(const OrientedEdge&) const = default;
};

// Simple graph on named vertices.
struct Graph {
  std::set<Vertex> vertices;
  std::set<Edge> edges;

  void add_vertex(const Vertex& v) { vertices.insert(v); }
  void add_edge(const Vertex& a, const Vertex& b);
  bool has_edge(const Vertex& a, const Vertex& b) const;
  std::map<Vertex, std::set<Vertex>> adjacency() const;

  bool operator==(const Graph&) const = default;
};

// Two-dimensional simplicial complex, closed under faces by construction.
// The flag property is not an invariant of the container; check_flag reports
// it.
struct FlagComplex2 {
  std::set<Vertex> vertices;
  std::set<Edge> edges;
  std::set<Triangle> triangles;

  void add_vertex(const Vertex& v) { vertices.insert(v); }
  void add_edge(const Vertex& a, const Vertex& b);
  void add_triangle(const Vertex& a, const Vertex& b, const Vertex& c);

  bool has_vertex(const Vertex& v) const { return vertices.count(v) > 0; }
  bool has_edge(const Vertex& a, const Vertex& b) const;
  bool has_triangle(const Triangle& t) const { return triangles.count(t) > 0; }

  std::map<Vertex, std::set<Vertex>> adjacency() const;

  // All 2*|edges| oriented edges, lexicographic by (source, target).
  std::vector<OrientedEdge> oriented_edges() const;

  bool operator==(const FlagComplex2&) const = default;
};

struct FlagReport {
  bool is_flag = false;
  std::vector<std::string> violations;
  std::vector<Edge> free_edges;
  bool connected = false;
};

// Parses the line-based complex format:
//   vertex <name>
//   edge <a> <b>
//   triangle <a> <b> <c>
// '#' starts a comment.  Edges of declared triangles are implied; explicit
// edge lines are for 1-cells outside every triangle.  Vertex names must be
// declared before use.  Throws std::runtime_error with a "line N:" prefix.
FlagComplex2 parse_complex(const std::string& text);

// Inverse of parse_complex up to implied edges: emits vertices, then edges
// in no triangle, then triangles.  Byte-stable for equal complexes.
std::string serialize_complex(const FlagComplex2& k);

FlagReport check_flag(const FlagComplex2& k);

// Vertices: neighbors of v.  Edges: one per triangle containing v, joining
// the two other corners.
Graph link_graph(const FlagComplex2& k, const Vertex& v);

Graph one_skeleton(const FlagComplex2& k);

// Apexes "p" and "q" joined to every vertex of l, one triangle per edge of l
// and per apex.  Requires l triangle-free and the apex names unused.
FlagComplex2 suspension(const Graph& l);

// Delta complexes: 2-dimensional cell complexes whose attaching maps may
// identify faces.  Side i of a triangle runs from corner i to corner i+1
// (mod 3); corners are implied by the sides and must be consistent.
struct DeltaEdge {
  int from = 0;
  int to = 0;
};

struct TriSide {
  int edge = 0;
  bool reversed = false;
};

struct DeltaTriangle {
  std::array<TriSide, 3> sides;
};

struct Delta2Complex {
  int num_vertices = 0;
  std::vector<DeltaEdge> edges;
  std::vector<DeltaTriangle> triangles;

  int side_start(const TriSide& s) const {
    return s.reversed ? edges[s.edge].to : edges[s.edge].from;
  }
  int side_end(const TriSide& s) const {
    return s.reversed ? edges[s.edge].from : edges[s.edge].to;
  }

  // Throws std::invalid_argument on dangling references or corner mismatch.
  void validate() const;
};

// One new vertex per cell; each triangle splits into six.  New edges run
// from the lower-dimensional cell's vertex to the higher one's.
Delta2Complex barycentric_subdivision(const Delta2Complex& d);

// Requires d simplicial: no loops, no parallel edges, distinct triangle
// corners, no repeated triangles.  Vertices are renamed b0..bN zero-padded.
FlagComplex2 to_flag_complex2(const Delta2Complex& d);

// Views a simplicial complex as a delta complex; vertex i is the i-th
// vertex in lexicographic order.
Delta2Complex to_delta(const FlagComplex2& k);

// Triangle with all three sides identified to one loop, two coherently and
// one against.
Delta2Complex dunce_hat_delta();

// Identification candidates for the dodecahedron face pairing, indexed
// 0..9.  Candidates 0..4 compose the antipodal map with a rotation by
// 2*pi*k/5 about the face axis; 5..9 compose the reflection through the
// plane orthogonal to the axis with a rotation by pi/5 + 2*pi*k/5.  A
// candidate is structurally valid when no edge gets glued to its own
// reversal; spine_quotient_delta returns the quotient with every pentagon
// coned off, and throws for invalid candidates.
bool spine_candidate_valid(int candidate);
Delta2Complex spine_quotient_delta(int candidate);

// The candidate baked into fixture("poincare_spine"): the pi/5 twist
// (candidate 5).  The test suite certifies its quotient is acyclic and maps
// the full candidate landscape.  Candidates k and 5 + (k + 2 mod 5) realize
// the same rigid map, so the ten indices cover five distinct gluings.
int spine_chosen_candidate();

// Named fixtures: triangle, two_triangles, path4, k0, torus, rp2,
// dunce_hat_flag, poincare_spine.
FlagComplex2 fixture(const std::string& name);
std::vector<std::string> fixture_names();

// Oriented-edge labels on the k0 fixture used by the reference circuits.
std::map<std::string, OrientedEdge> k0_labels();

// The four reference circuits over the labels, each listed once around the
// cycle without repeating the starting vertex.  A "^-1" suffix denotes the
// reversed oriented edge.
std::vector<std::vector<std::string>> k0_circuits();

// Resolves a circuit token ("x" or "x^-1") to the oriented edge.
OrientedEdge k0_resolve(const std::string& token);

}  // namespace catlink
