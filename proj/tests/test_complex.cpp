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

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"

#include "catlink/complex.hpp"

using namespace catlink;

TEST_CASE("simplices sort their vertices") {
  CHECK(make_edge("b", "a") == Edge{"a", "b"});
  CHECK(make_triangle("c", "a", "b") == Triangle{"a", "b", "c"});
  CHECK_THROWS_AS(make_edge("a", "a"), std::invalid_argument);
  CHECK_THROWS_AS(make_triangle("a", "b", "a"), std::invalid_argument);
  const auto es = edges_of(make_triangle("u", "w", "v"));
  CHECK(es == std::array<Edge, 3>{Edge{"u", "v"}, Edge{"u", "w"},
                                  Edge{"v", "w"}});
}

TEST_CASE("oriented edges label and reverse") {
  const OrientedEdge e{"u", "v"};
  CHECK(e.label() == "u>v");
  CHECK(e.reversed().label() == "v>u");
  CHECK(e.underlying() == make_edge("v", "u"));
}

TEST_CASE("parse_complex reads the line format") {
  const auto k = parse_complex(
      "# a comment\n"
      "vertex a\nvertex b\nvertex c\nvertex d\n"
      "triangle a b c\n"
      "edge c d\n");
  CHECK(k.vertices.size() == 4);
  CHECK(k.edges.size() == 4);  // three implied plus one explicit
  CHECK(k.triangles.size() == 1);
  CHECK(k.has_edge("c", "d"));
  CHECK(parse_complex(serialize_complex(k)) == k);
}

TEST_CASE("parse_complex errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_complex("vertex a\ntriangle a b\n"),
                       doctest::Contains("line 2"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_complex("edge a b\n"),
                       doctest::Contains("line 1"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_complex("vertex a\nvertex a\n"),
                       doctest::Contains("line 2"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_complex("frob a b\n"),
                       doctest::Contains("line 1"), std::runtime_error);
}

TEST_CASE("fixture inventories are frozen") {
  const std::map<std::string, std::array<size_t, 3>> expected{
      {"triangle", {3, 3, 1}},       {"two_triangles", {4, 5, 2}},
      {"path4", {4, 3, 0}},          {"k0", {6, 11, 6}},
      {"torus", {7, 21, 14}},        {"rp2", {6, 15, 10}},
      {"dunce_hat_flag", {105, 320, 216}},
      {"poincare_spine", {3201, 9680, 6480}}};
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    const auto k = fixture(name);
    const auto& e = expected.at(name);
    CHECK(k.vertices.size() == e[0]);
    CHECK(k.edges.size() == e[1]);
    CHECK(k.triangles.size() == e[2]);
    CHECK(parse_complex(serialize_complex(k)) == k);
  }
  CHECK_THROWS_AS(fixture("nonsense"), std::invalid_argument);
}

TEST_CASE("check_flag accepts the flag fixtures and rejects the torus") {
  for (const std::string name :
       {"triangle", "two_triangles", "path4", "k0", "dunce_hat_flag",
        "poincare_spine"}) {
    CAPTURE(name);
    CHECK(check_flag(fixture(name)).is_flag);
  }
  const auto torus = check_flag(fixture("torus"));
  CHECK_FALSE(torus.is_flag);
  CHECK_FALSE(torus.violations.empty());
  CHECK(torus.connected);
  CHECK(torus.free_edges.empty());

  // An empty square: 4-cycle whose diagonal cliques are fine (no triangle
  // needed), so it is flag; adding one diagonal creates an empty triangle.
  auto sq = parse_complex(
      "vertex a\nvertex b\nvertex c\nvertex d\n"
      "edge a b\nedge b c\nedge c d\nedge a d\n");
  CHECK(check_flag(sq).is_flag);
  sq.add_edge("a", "c");
  CHECK_FALSE(check_flag(sq).is_flag);
}

TEST_CASE("free edges are the edges in exactly one triangle") {
  const auto rep = check_flag(fixture("k0"));
  CHECK(rep.free_edges.size() == 4);
  for (const auto& e : rep.free_edges) {
    CHECK((e == make_edge("p", "u1") || e == make_edge("q", "u1") ||
           e == make_edge("p", "u4") || e == make_edge("q", "u4")));
  }
  CHECK(check_flag(fixture("torus")).free_edges.empty());
}

TEST_CASE("adjacency includes isolated vertices") {
  FlagComplex2 k;
  k.add_vertex("lonely");
  k.add_vertex("a");
  k.add_vertex("b");
  k.add_edge("a", "b");
  const auto adj = k.adjacency();
  CHECK(adj.at("lonely").empty());
  CHECK(adj.at("a") == std::set<Vertex>{"b"});
}

TEST_CASE("oriented edge count is twice the edge count") {
  for (const std::string name : {"triangle", "k0", "torus"}) {
    const auto k = fixture(name);
    CHECK(k.oriented_edges().size() == 2 * k.edges.size());
  }
}

TEST_CASE("link graphs of k0") {
  const auto k = fixture("k0");
  const auto lu2 = link_graph(k, "u2");
  CHECK(lu2.vertices == std::set<Vertex>{"p", "q", "u1", "u3"});
  CHECK(lu2.edges.size() == 4);  // the 4-cycle p u1 q u3
  CHECK(lu2.has_edge("p", "u1"));
  CHECK(lu2.has_edge("q", "u1"));
  CHECK(lu2.has_edge("p", "u3"));
  CHECK(lu2.has_edge("q", "u3"));
  CHECK_FALSE(lu2.has_edge("p", "q"));
  const auto lp = link_graph(k, "p");
  CHECK(lp.vertices.size() == 4);
  CHECK(lp.edges.size() == 3);  // the path u1 u2 u3 u4
}

TEST_CASE("k0 is the suspension of path4") {
  const auto k = fixture("k0");
  CHECK(suspension(one_skeleton(fixture("path4"))) == k);
  // Suspensions of triangle-free graphs are flag.
  CHECK(check_flag(k).is_flag);
  CHECK_THROWS_AS(suspension(one_skeleton(fixture("triangle"))),
                  std::invalid_argument);
}

TEST_CASE("k0 circuits are closed under angle-graph adjacency") {
  const auto k = fixture("k0");
  const auto labels = k0_labels();
  CHECK(labels.size() == 11);
  for (const auto& [name, oe] : labels) {
    CAPTURE(name);
    CHECK(k.edges.count(oe.underlying()) == 1);
  }
  // Two oriented edges are adjacent when they share a source or a target
  // and both lie in one triangle.
  const auto adjacent = [&](const OrientedEdge& a, const OrientedEdge& b) {
    Vertex shared, x, y;
    if (a.source == b.source) {
      shared = a.source;
      x = a.target;
      y = b.target;
    } else if (a.target == b.target) {
      shared = a.target;
      x = a.source;
      y = b.source;
    } else {
      return false;
    }
    if (x == y) return false;
    return k.triangles.count(make_triangle(shared, x, y)) == 1;
  };
  const auto circuits = k0_circuits();
  REQUIRE(circuits.size() == 4);
  CHECK(circuits[0].size() == 10);
  CHECK(circuits[1].size() == 6);
  CHECK(circuits[2].size() == 6);
  CHECK(circuits[3].size() == 6);
  for (size_t ci = 0; ci < circuits.size(); ++ci) {
    CAPTURE(ci);
    const auto& c = circuits[ci];
    std::set<std::string> seen;
    for (size_t i = 0; i < c.size(); ++i) {
      const auto cur = k0_resolve(c[i]);
      const auto nxt = k0_resolve(c[(i + 1) % c.size()]);
      CHECK(adjacent(cur, nxt));
      CHECK(seen.insert(cur.label()).second);  // simple circuit
    }
  }
}

TEST_CASE("delta complex validation") {
  Delta2Complex d;
  d.num_vertices = 1;
  d.edges.push_back({0, 0});
  DeltaTriangle t;
  t.sides[0] = {0, false};
  t.sides[1] = {0, false};
  t.sides[2] = {0, true};
  d.triangles.push_back(t);
  CHECK_NOTHROW(d.validate());

  Delta2Complex bad = d;
  bad.triangles[0].sides[1].edge = 3;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("dunce hat delta complex and its subdivisions") {
  const auto d = dunce_hat_delta();
  CHECK(d.num_vertices == 1);
  CHECK(d.edges.size() == 1);
  CHECK(d.triangles.size() == 1);

  // One new vertex per cell, six triangles per triangle.
  auto s = barycentric_subdivision(d);
  CHECK(s.num_vertices == 1 + 1 + 1);
  CHECK(s.triangles.size() == 6);
  CHECK(s.edges.size() == 2 * 1 + 6 * 1);
  s = barycentric_subdivision(s);
  CHECK(s.num_vertices == 3 + 8 + 6);
  s = barycentric_subdivision(s);
  CHECK(s.num_vertices == 105);
  CHECK(s.triangles.size() == 216);
  CHECK(s.edges.size() == 320);

  // The flag fixture is exactly the triple subdivision, renamed.
  CHECK(to_flag_complex2(s) == fixture("dunce_hat_flag"));
}

TEST_CASE("to_delta views a simplicial complex as a delta complex") {
  const auto k = fixture("two_triangles");
  const auto d = to_delta(k);
  CHECK(d.num_vertices == 4);
  CHECK(d.edges.size() == 5);
  CHECK(d.triangles.size() == 2);
  CHECK_NOTHROW(d.validate());
  // Round trip through the renaming preserves the shape.
  const auto back = to_flag_complex2(d);
  CHECK(back.vertices.size() == k.vertices.size());
  CHECK(back.edges.size() == k.edges.size());
  CHECK(back.triangles.size() == k.triangles.size());
}

TEST_CASE("spine candidates") {
  CHECK(spine_chosen_candidate() == 5);
  CHECK(spine_candidate_valid(5));
  int valid = 0;
  for (int c = 0; c < 10; ++c) {
    if (spine_candidate_valid(c)) {
      ++valid;
      CHECK_NOTHROW(spine_quotient_delta(c).validate());
    } else {
      CHECK_THROWS_AS(spine_quotient_delta(c), std::invalid_argument);
    }
  }
  CHECK(valid >= 1);
  // The fixture is the chosen candidate's quotient, subdivided to flag.
  const auto q = spine_quotient_delta(spine_chosen_candidate());
  CHECK(q.num_vertices == 11);
  CHECK(q.edges.size() == 40);
  CHECK(q.triangles.size() == 30);
  const auto flag = to_flag_complex2(barycentric_subdivision(
      barycentric_subdivision(barycentric_subdivision(q))));
  CHECK(flag == fixture("poincare_spine"));
}

TEST_CASE("barycentric subdivision of a plain triangle is flag") {
  const auto d = to_delta(fixture("triangle"));
  const auto s = barycentric_subdivision(d);
  CHECK(s.num_vertices == 3 + 3 + 1);
  CHECK(s.triangles.size() == 6);
  const auto k = to_flag_complex2(s);
  CHECK(check_flag(k).is_flag);
}
