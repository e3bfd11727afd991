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

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "catlink/complex.hpp"
#include "catlink/raag.hpp"

using namespace catlink;

namespace {

struct GroupCtx {
  Graph graph;
  std::vector<std::string> gens;  // sorted, index = oracle generator id
  std::vector<std::vector<char>> adj;
};

GroupCtx make_ctx(const Graph& g) {
  GroupCtx c;
  c.graph = g;
  c.gens.assign(g.vertices.begin(), g.vertices.end());
  const size_t n = c.gens.size();
  c.adj.assign(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      c.adj[i][j] = (i != j && g.has_edge(c.gens[i], c.gens[j])) ? 1 : 0;
    }
  }
  return c;
}

int gen_id(const GroupCtx& c, const std::string& name) {
  return static_cast<int>(
      std::lower_bound(c.gens.begin(), c.gens.end(), name) - c.gens.begin());
}

oracles::OWord to_oword(const GroupCtx& c, const RaagWord& w) {
  oracles::OWord out;
  out.reserve(w.letters.size());
  for (const auto& l : w.letters) out.push_back({gen_id(c, l.gen), l.exp});
  return out;
}

std::uint64_t oracle_key(const GroupCtx& c, const RaagWord& w) {
  return oracles::pack_word(
      oracles::canonical_word(oracles::fold_word(to_oword(c, w), c.adj),
                              c.adj));
}

// Row-major copy of the adjacency table for detail::reduce_core.
std::vector<char> flatten(const GroupCtx& c) {
  std::vector<char> out;
  out.reserve(c.gens.size() * c.gens.size());
  for (const auto& row : c.adj) out.insert(out.end(), row.begin(), row.end());
  return out;
}

Graph pentagon() {
  Graph g;
  for (int i = 0; i < 5; ++i) g.add_vertex("v" + std::to_string(i));
  for (int i = 0; i < 5; ++i) {
    g.add_edge("v" + std::to_string(i), "v" + std::to_string((i + 1) % 5));
  }
  return g;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  Graph g;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i) g.add_vertex("g" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng) < p) {
        g.add_edge("g" + std::to_string(i), "g" + std::to_string(j));
      }
    }
  }
  return g;
}

RaagWord random_word(const GroupCtx& c, int len, std::mt19937_64& rng) {
  std::uniform_int_distribution<size_t> pick(0, c.gens.size() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> ls;
  for (int i = 0; i < len; ++i) {
    ls.push_back({c.gens[pick(rng)], sign(rng) ? 1 : -1});
  }
  return make_word(c.graph, std::move(ls));
}

// Two hexagonal bands of triangles between an outer 3-cycle a0 a1 a2 and an
// inner 3-cycle b0 b1 b2; neither boundary triangle is a face.
FlagComplex2 annulus() {
  FlagComplex2 k;
  for (const auto v : {"a0", "a1", "a2", "b0", "b1", "b2"}) k.add_vertex(v);
  k.add_triangle("a0", "a1", "b0");
  k.add_triangle("a1", "b0", "b1");
  k.add_triangle("a1", "a2", "b1");
  k.add_triangle("a2", "b1", "b2");
  k.add_triangle("a2", "a0", "b2");
  k.add_triangle("a0", "b2", "b0");
  return k;
}

}  // namespace

TEST_CASE("words parse, format, and validate") {
  const auto g = one_skeleton(fixture("path4"));
  const auto w = parse_word(g, "u2^-1 u1");
  REQUIRE(w.letters.size() == 2);
  CHECK(w.letters[0] == Letter{"u2", -1});
  CHECK(w.letters[1] == Letter{"u1", 1});
  CHECK(format_word(w) == "u2^-1 u1");
  CHECK(parse_word(g, "u1^3").letters.size() == 3);
  CHECK(format_word(parse_word(g, "u1 u1 u1")) == "u1^3");
  CHECK(format_word(parse_word(g, "u1^2 u1^-2")) == "u1^2 u1^-2");
  CHECK(parse_word(g, "").letters.empty());
  CHECK(format_word(parse_word(g, "")) == "");
  CHECK_THROWS_AS(parse_word(g, "u9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(g, "u1^0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(g, "u1^x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(g, "u1^99999999"), std::invalid_argument);
  CHECK_THROWS_AS(make_word(g, {{"u1", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_word(g, {{"zz", 1}}), std::invalid_argument);
  std::mt19937_64 rng(17);
  const auto ctx = make_ctx(g);
  std::uniform_int_distribution<int> len(0, 12);
  for (int t = 0; t < 100; ++t) {
    const auto r = random_word(ctx, len(rng), rng);
    CHECK(parse_word(g, format_word(r)) == r);
  }
}

TEST_CASE("reduce on pinned words") {
  const auto g = one_skeleton(fixture("path4"));
  CHECK(reduce(parse_word(g, "u1 u2 u1^-1 u2^-1")).letters.empty());
  const auto w = parse_word(g, "u1 u3 u1^-1");
  CHECK(reduce(w).letters.size() == 3);
  CHECK(reduce(reduce(w)) == reduce(w));
  // Cancellation across a commuting block.
  CHECK(reduce(parse_word(g, "u2 u1 u3 u2^-1")).letters.size() == 2);
}

TEST_CASE("reduce length matches Cayley graph distance for short words") {
  const auto ctx = make_ctx(one_skeleton(fixture("path4")));
  const int n = static_cast<int>(ctx.gens.size());
  const auto ball = oracles::build_ball(n, ctx.adj, 5);
  // Every word of length <= 5: walk the tree of letter strings, folding
  // incrementally; check the library's geodesic length against the oracle
  // fold and the BFS ball distance.
  std::vector<int> lgens, lexps;
  long long visited = 0;
  const auto visit = [&](auto&& self, const oracles::OWord& folded) -> void {
    ++visited;
    std::vector<int> rg = lgens, re = lexps;
    detail::reduce_core(rg, re, flatten(ctx), n);
    REQUIRE(rg.size() == folded.size());
    const auto key =
        oracles::pack_word(oracles::canonical_word(folded, ctx.adj));
    REQUIRE(ball.dist(key) == static_cast<int>(folded.size()));
    if (lgens.size() == 5) return;
    for (int gi = 0; gi < n; ++gi) {
      for (int e = -1; e <= 1; e += 2) {
        auto next = folded;
        oracles::fold_letter(next, gi, e, ctx.adj);
        lgens.push_back(gi);
        lexps.push_back(e);
        self(self, next);
        lgens.pop_back();
        lexps.pop_back();
      }
    }
  };
  visit(visit, {});
  CHECK(visited == 1 + 8 + 64 + 512 + 4096 + 32768);
}

TEST_CASE("equality on pinned pairs") {
  const auto g = one_skeleton(fixture("path4"));
  CHECK(equal(parse_word(g, "u1 u2"), parse_word(g, "u2 u1")));
  CHECK_FALSE(equal(parse_word(g, "u1 u3"), parse_word(g, "u3 u1")));
  CHECK_THROWS_AS(
      concat(parse_word(g, "u1"), parse_word(pentagon(), "v0")),
      std::invalid_argument);
}

TEST_CASE("normal forms agree with the fold oracle on every short word") {
  std::mt19937_64 rng(23);
  for (const bool pent : {false, true}) {
    const auto ctx =
        make_ctx(pent ? pentagon() : one_skeleton(fixture("path4")));
    const int n = static_cast<int>(ctx.gens.size());
    CAPTURE(n);
    // Normal-form keys partition words into group elements, so per-word
    // agreement decides equality for every pair of words at once.
    std::vector<int> lgens, lexps;
    std::vector<std::uint64_t> keys;
    const auto fl = flatten(ctx);
    const auto visit = [&](auto&& self, const oracles::OWord& folded) -> void {
      std::vector<int> rg = lgens, re = lexps;
      detail::reduce_core(rg, re, fl, n);
      REQUIRE(rg.size() == folded.size());
      oracles::OWord red(rg.size());
      for (size_t i = 0; i < rg.size(); ++i) red[i] = {rg[i], re[i]};
      const auto lib_key =
          oracles::pack_word(oracles::canonical_word(red, ctx.adj));
      const auto orc_key =
          oracles::pack_word(oracles::canonical_word(folded, ctx.adj));
      REQUIRE(lib_key == orc_key);
      keys.push_back(orc_key);
      if (lgens.size() == 6) return;
      for (int gi = 0; gi < n; ++gi) {
        for (int e = -1; e <= 1; e += 2) {
          auto next = folded;
          oracles::fold_letter(next, gi, e, ctx.adj);
          lgens.push_back(gi);
          lexps.push_back(e);
          self(self, next);
          lgens.pop_back();
          lexps.pop_back();
        }
      }
    };
    visit(visit, {});
    const long long expect = pent ? (1LL + 10 + 100 + 1000 + 10000 + 100000 +
                                     1000000)
                                  : (1LL + 8 + 64 + 512 + 4096 + 32768 +
                                     262144);
    CHECK(static_cast<long long>(keys.size()) == expect);
    // Sampled pairs: the public equal() matches key equality.
    std::uniform_int_distribution<int> len(0, 6);
    for (int t = 0; t < 400; ++t) {
      const auto a = random_word(ctx, len(rng), rng);
      const auto b = random_word(ctx, len(rng), rng);
      CHECK(equal(a, b) == (oracle_key(ctx, a) == oracle_key(ctx, b)));
    }
  }
}

TEST_CASE("reduce is confluent under randomized deletion orders") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> nv(2, 6);
  std::uniform_int_distribution<int> len(0, 30);
  for (int t = 0; t < 100; ++t) {
    const auto ctx = make_ctx(random_graph(nv(rng), 0.5, rng));
    const auto w = random_word(ctx, len(rng), rng);
    const size_t want = reduce(w).letters.size();
    for (int order = 0; order < 10; ++order) {
      CHECK(oracles::literal_reduce(to_oword(ctx, w), ctx.adj, rng).size() ==
            want);
    }
  }
}

TEST_CASE("a word times its inverse reduces to nothing") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> nv(2, 6);
  std::uniform_int_distribution<int> len(0, 20);
  for (int t = 0; t < 300; ++t) {
    const auto ctx = make_ctx(random_graph(nv(rng), 0.5, rng));
    const auto w = random_word(ctx, len(rng), rng);
    CHECK(reduce(concat(w, inverse(w))).letters.empty());
    CHECK(reduce(concat(inverse(w), w)).letters.empty());
  }
  const auto g = one_skeleton(fixture("path4"));
  CHECK(format_word(inverse(parse_word(g, "u1 u2^-1"))) == "u2 u1^-1");
}

TEST_CASE("exponent sums and kernel membership") {
  const auto g = one_skeleton(fixture("path4"));
  CHECK(kernel_membership(parse_word(g, "u2^-1 u1")));
  CHECK_FALSE(kernel_membership(parse_word(g, "u1")));
  CHECK(exponent_sum(parse_word(g, "u1^3 u2^-1")) == 2);
  CHECK(exponent_sum(parse_word(g, "")) == 0);
  for (int n = 1; n <= 10; ++n) {
    CHECK(kernel_membership(distortion_word(n)));
  }
}

TEST_CASE("spanning trees") {
  const auto k = fixture("path4");
  const std::map<Vertex, Vertex> want{
      {"u2", "u1"}, {"u3", "u2"}, {"u4", "u3"}};
  CHECK(spanning_tree(k, "u1") == want);
  const std::map<Vertex, Vertex> want_k0{
      {"q", "u1"}, {"u1", "p"}, {"u2", "p"}, {"u3", "p"}, {"u4", "p"}};
  CHECK(spanning_tree(fixture("k0"), "p") == want_k0);
  CHECK_THROWS_AS(spanning_tree(k, "zz"), std::invalid_argument);
  FlagComplex2 disc;
  disc.add_vertex("a");
  disc.add_vertex("b");
  CHECK_THROWS_AS(spanning_tree(disc, "a"), std::invalid_argument);
}

TEST_CASE("kernel letters normalize orientation") {
  const auto g = one_skeleton(fixture("path4"));
  const auto fwd = make_kernel_letter(g, "u1", "u2", 1);
  const auto rev = make_kernel_letter(g, "u2", "u1", 1);
  CHECK(fwd.edge == make_edge("u1", "u2"));
  CHECK(fwd.exp == 1);
  CHECK(rev.edge == make_edge("u1", "u2"));
  CHECK(rev.exp == -1);
  CHECK_THROWS_AS(make_kernel_letter(g, "u1", "u3", 1),
                  std::invalid_argument);
  KernelWord w{{fwd, rev}};
  CHECK(free_reduce(w).letters.empty());
  CHECK(format_kernel_word(KernelWord{{rev}}) == "x(u1>u2)^-1");
  CHECK(format_kernel_word(KernelWord{{fwd, fwd}}) == "x(u1>u2)^2");
  // x_(u1,u2) stands for u1^-1 u2.
  CHECK(equal(substitute(KernelWord{{fwd}}, g), parse_word(g, "u1^-1 u2")));
}

TEST_CASE("kernel rewriting on pinned words") {
  const auto k = fixture("path4");
  const auto g = one_skeleton(k);
  const auto tree = spanning_tree(k, "u1");
  const KernelWord one{{make_kernel_letter(g, "u2", "u1", 1)}};
  CHECK(kernel_rewrite(parse_word(g, "u2^-1 u1"), k, "u1", tree) == one);
  CHECK(kernel_rewrite(parse_word(g, "u1 u2^-1"), k, "u1", tree) == one);
  CHECK(format_kernel_word(one) == "x(u1>u2)^-1");
  CHECK_THROWS_AS(kernel_rewrite(parse_word(g, "u1"), k, "u1", tree),
                  std::invalid_argument);
  CHECK_THROWS_AS(kernel_rewrite(parse_word(pentagon(), "v0 v1^-1"), k, "u1",
                                 tree),
                  std::invalid_argument);
}

TEST_CASE("kernel rewriting round-trips random kernel words") {
  std::mt19937_64 rng(41);
  for (const std::string name : {"path4", "k0"}) {
    CAPTURE(name);
    const auto k = fixture(name);
    const auto g = one_skeleton(k);
    const std::vector<Edge> edges(k.edges.begin(), k.edges.end());
    const Vertex basepoint = *k.vertices.begin();
    const auto tree = spanning_tree(k, basepoint);
    std::uniform_int_distribution<size_t> pick(0, edges.size() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_int_distribution<int> len(1, 10);
    for (int t = 0; t < 250; ++t) {
      KernelWord kw;
      const int l = len(rng);
      for (int i = 0; i < l; ++i) {
        kw.letters.push_back({edges[pick(rng)], sign(rng) ? 1 : -1});
      }
      const auto w = substitute(kw, g);
      REQUIRE(kernel_membership(w));
      const auto rewritten = kernel_rewrite(w, k, basepoint, tree);
      CHECK(equal(substitute(rewritten, g), w));
    }
  }
}

TEST_CASE("triangle presentations") {
  const auto k = fixture("triangle");
  CHECK_THROWS_AS(presentation_triangles(k, false), std::invalid_argument);
  const auto p = presentation_triangles(k, true);
  CHECK(p.mode == "triangle-relations");
  CHECK(p.simply_connected_attested);
  CHECK(p.generators ==
        std::vector<std::string>{"x(u>v)", "x(u>w)", "x(v>w)"});
  REQUIRE(p.relators.size() == 2);
  const auto g = one_skeleton(k);
  CHECK(format_kernel_word(p.relators[0]) == "x(u>v) x(v>w) x(u>w)^-1");
  CHECK(format_kernel_word(p.relators[1]) == "x(v>w) x(u>v) x(u>w)^-1");
  for (const auto& r : p.relators) {
    CHECK(reduce(substitute(r, g)).letters.empty());
  }
  // The two relators force the generators to commute; the commutator is
  // already trivial after substitution.
  KernelWord comm;
  comm.letters.push_back(make_kernel_letter(g, "u", "v", 1));
  comm.letters.push_back(make_kernel_letter(g, "v", "w", 1));
  comm.letters.push_back(make_kernel_letter(g, "u", "v", -1));
  comm.letters.push_back(make_kernel_letter(g, "v", "w", -1));
  CHECK(reduce(substitute(comm, g)).letters.empty());

  const auto pk0 = presentation_triangles(fixture("k0"), true);
  CHECK(pk0.generators.size() == 11);
  CHECK(pk0.relators.size() == 12);
  const auto gk0 = one_skeleton(fixture("k0"));
  std::set<std::string> declared(pk0.generators.begin(),
                                 pk0.generators.end());
  for (const auto& r : pk0.relators) {
    CHECK(reduce(substitute(r, gk0)).letters.empty());
    for (const auto& l : r.letters) {
      CHECK(declared.count("x(" + l.edge[0] + ">" + l.edge[1] + ")") == 1);
    }
  }
}

TEST_CASE("cycle presentations enumerate bounded relators") {
  const auto k = annulus();
  const auto g = one_skeleton(k);
  CHECK_THROWS_AS(presentation_cycles(k, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(presentation_cycles(k, 3, 0), std::invalid_argument);
  const auto p = presentation_cycles(k, 3, 1);
  CHECK(p.mode == "cycle-relators-bounded");
  CHECK_FALSE(p.simply_connected_attested);
  bool outer = false, inner = false;
  for (const auto& r : p.relators) {
    CHECK(reduce(substitute(r, g)).letters.empty());
    std::set<Edge> used;
    for (const auto& l : r.letters) used.insert(l.edge);
    if (used == std::set<Edge>{make_edge("a0", "a1"), make_edge("a1", "a2"),
                               make_edge("a0", "a2")}) {
      outer = true;
    }
    if (used == std::set<Edge>{make_edge("b0", "b1"), make_edge("b1", "b2"),
                               make_edge("b0", "b2")}) {
      inner = true;
    }
  }
  CHECK(outer);
  CHECK(inner);
  // Exponent bound 2 doubles each letter in place.
  const auto p2 = presentation_cycles(fixture("triangle"), 3, 2);
  CHECK(p2.relators.size() == 4);
  bool squared = false;
  for (const auto& r : p2.relators) {
    CHECK(reduce(substitute(r, one_skeleton(fixture("triangle"))))
              .letters.empty());
    if (r.letters.size() == 6 && r.letters[0] == r.letters[1]) {
      squared = true;
    }
  }
  CHECK(squared);
}

TEST_CASE("the distortion family") {
  // Free length over the a, x, e alphabet: fold with no commutation.
  const std::vector<std::vector<char>> free3(3, std::vector<char>(3, 0));
  for (int n = 1; n <= 6; ++n) {
    oracles::OWord w;
    for (int rep = 0; rep < n; ++rep) {
      w.push_back({0, 1});                            // a
      for (int i = 0; i < n; ++i) w.push_back({1, 1});  // x^n
      w.push_back({2, 1});                            // e
      for (int i = 0; i < n; ++i) w.push_back({1, -1});  // x^-n
    }
    CHECK(static_cast<long long>(oracles::fold_word(w, free3).size()) ==
          2LL * n * (n + 1));
    CHECK(static_cast<long long>(distortion_word(n).letters.size()) ==
          4LL * n * (n + 1));
    CHECK(static_cast<long long>(distortion_rewritten(n).letters.size()) ==
          6LL * n);
    CHECK(equal(distortion_word(n), distortion_rewritten(n)));
  }
  for (int n = 7; n <= 10; ++n) {
    CHECK(equal(distortion_word(n), distortion_rewritten(n)));
  }
  CHECK_THROWS_AS(distortion_word(0), std::invalid_argument);
  CHECK_THROWS_AS(distortion_table(0), std::invalid_argument);
}

TEST_CASE("distortion table rows") {
  const auto rows = distortion_table(20);
  REQUIRE(rows.size() == 20);
  for (const auto& r : rows) {
    CHECK(r.free_length == 2LL * r.n * (r.n + 1));
    CHECK(r.written_length == 6LL * r.n);
    CHECK(r.geodesic_length <= r.written_length);
    CHECK(r.geodesic_length % 2 == 0);  // zero exponent sum
    CHECK(r.ratio == static_cast<double>(r.free_length) /
                         static_cast<double>(r.geodesic_length));
    if (r.n >= 2) {
      CHECK(r.ratio >= static_cast<double>(r.n + 1) / 3.0);
    }
  }
  CHECK(rows[0].free_length == 4);
  CHECK(rows[0].written_length == 6);
  CHECK(rows[4].free_length == 60);
  CHECK(rows[4].written_length == 30);
}

TEST_CASE("small distortion words are geodesically verified") {
  const auto ctx = make_ctx(one_skeleton(fixture("path4")));
  const int n = static_cast<int>(ctx.gens.size());
  const auto ball = oracles::build_ball(n, ctx.adj, 6);
  // N = 1: the element lies inside the ball, distance read off directly.
  const auto w1 = oracles::fold_word(to_oword(ctx, distortion_word(1)),
                                     ctx.adj);
  const auto key1 =
      oracles::pack_word(oracles::canonical_word(w1, ctx.adj));
  CHECK(ball.dist(key1) == 6);
  CHECK(distortion_table(1)[0].geodesic_length == 6);

  // N = 2: distance 12 exceeds the ball, so split at radius 5: the element
  // has a representative of length <= 10 iff some prefix of length <= 5
  // leaves a tail of length <= 5.  Fold preserves reducedness, so the fold
  // length of the tail is its distance.
  const auto w2 = to_oword(ctx, distortion_word(2));
  const auto g2 = distortion_table(2)[1].geodesic_length;
  CHECK(g2 == 12);
  long long best = 1LL << 30;
  for (size_t d = 0; d <= 5; ++d) {
    for (const std::uint64_t key : ball.levels[d]) {
      oracles::OWord tail;
      const auto u = oracles::unpack_word(key);
      for (size_t i = u.size(); i-- > 0;) {
        oracles::fold_letter(tail, u[i].gen, -u[i].exp, ctx.adj);
      }
      for (const auto& l : w2) {
        oracles::fold_letter(tail, l.gen, l.exp, ctx.adj);
      }
      best = std::min(best,
                      static_cast<long long>(d) +
                          static_cast<long long>(tail.size()));
    }
  }
  // best == distance whenever distance <= 10; best > 10 rules 10 out, and
  // the fold witness caps the distance at 12.
  CHECK(best == 12);
}
