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

#include <map>
#include <string>
#include <vector>

#include "catlink/complex.hpp"

namespace catlink {

// One letter of a word in the graph group of the ambient graph.  Exponents
// are always +1 or -1; powers are expanded on input and collapsed on output.
struct Letter {
  Vertex gen;
  int exp = 1;

  bool operator==(const Letter&) const = default;
};

// Letters commute exactly when their generators are joined in the graph.
// Comparison is syntactic; use equal() for the group element.
struct RaagWord {
  Graph graph;
  std::vector<Letter> letters;

  bool operator==(const RaagWord&) const = default;
};

// Throws std::invalid_argument on an unknown generator or an exponent not
// in {+1,-1}.
RaagWord make_word(Graph graph, std::vector<Letter> letters);

// Whitespace-separated tokens `name` or `name^k` with nonzero integer k; a
// power expands to |k| letters.  Empty input is the empty word.
RaagWord parse_word(const Graph& graph, const std::string& text);

// Inverse of parse_word; adjacent letters with equal generator and sign
// collapse to `name^k`.  The empty word formats as "".
std::string format_word(const RaagWord& w);

RaagWord inverse(const RaagWord& w);

// Throws std::invalid_argument("mismatched ambient graphs") unless the two
// graphs are identical.
RaagWord concat(const RaagWord& a, const RaagWord& b);

// Geodesic representative.  Repeatedly deletes the leftmost-innermost pair
// g^e ... g^-e whose intermediate letters all commute with g; the output
// length is the geodesic length of the element and does not depend on the
// deletion order.
RaagWord reduce(const RaagWord& w);

bool equal(const RaagWord& a, const RaagWord& b);

int exponent_sum(const RaagWord& w);

// True iff the word lies in the kernel of the map sending every generator
// to 1.
bool kernel_membership(const RaagWord& w);

// Letter x_(u,v) of the kernel subgroup, the element u^-1 v for an edge
// (u,v).  Stored per unoriented edge with the lexicographically smaller
// source; x_(v,u) is normalized to x_(u,v)^-1 on input.
struct KernelLetter {
  Edge edge;
  int exp = 1;

  bool operator==(const KernelLetter&) const = default;
};

struct KernelWord {
  std::vector<KernelLetter> letters;

  bool operator==(const KernelWord&) const = default;
};

// Letter for x_(u,v); (u,v) must be an edge of the graph.
KernelLetter make_kernel_letter(const Graph& graph, const Vertex& u,
                                const Vertex& v, int exp);

// Tokens `x(u>v)` with collapsed powers, space separated.
std::string format_kernel_word(const KernelWord& w);

// Free reduction only: kernel letters carry no commutation relations.
KernelWord free_reduce(const KernelWord& w);

// Replaces x_(u,v) by u^-1 v.  Every letter's edge must lie in the graph.
RaagWord substitute(const KernelWord& w, const Graph& graph);

// Breadth-first tree over the 1-skeleton, vertices visited in lexicographic
// order; maps every non-root vertex to its parent.  Throws
// std::invalid_argument if the complex is disconnected or the root unknown.
std::map<Vertex, Vertex> spanning_tree(const FlagComplex2& k,
                                       const Vertex& root);

// Rewrites a kernel element as a word in the x_(u,v).  The tree must span
// the 1-skeleton; the result is verified by substitution before returning.
// Throws std::invalid_argument on nonzero exponent sum, disconnected
// complex, a word not over the complex's 1-skeleton, or an invalid tree.
KernelWord kernel_rewrite(const RaagWord& w, const FlagComplex2& k,
                          const Vertex& basepoint,
                          const std::map<Vertex, Vertex>& tree);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<KernelWord> relators;
  std::string mode;
  bool simply_connected_attested = false;
};

// Two relators per triangle {a,b,c}: x_(a,b) x_(b,c) x_(a,c)^-1 and
// x_(b,c) x_(a,b) x_(a,c)^-1.  The triangle relators present the kernel
// only when the complex is simply connected, which is not checked here;
// callers must attest to it or the call throws.
Presentation presentation_triangles(const FlagComplex2& k,
                                    bool simply_connected_attested);

// Relators x^n over each directed simple cycle, cycle length within
// [3, max_cycle_len] and 1 <= |n| <= max_exp.  Each unoriented cycle is
// enumerated once in a canonical direction; the opposite direction is
// covered by negative n.  The full relator family is infinite, so the
// output is a declared truncation.
Presentation presentation_cycles(const FlagComplex2& k, int max_cycle_len,
                                 int max_exp);

struct DistortionRow {
  int n = 0;
  long long free_length = 0;
  long long written_length = 0;
  long long geodesic_length = 0;
  double ratio = 0.0;
};

// The word (a x^N e x^-N)^N over path4 with a = u2^-1 u1, x = u2^-1 u3,
// e = u3^-1 u4, expanded into ambient generators.
RaagWord distortion_word(int n);

// The same element written as u2^-N (u2^-1 u1 u3^-1 u4)^N u2^N, length 6N.
RaagWord distortion_rewritten(int n);

// Rows for N = 1..nmax: free_length = 2(N^2+N), written_length = 6N,
// geodesic_length = |reduce(distortion_word(N))|, ratio = free/geodesic.
std::vector<DistortionRow> distortion_table(int nmax);

namespace detail {

// Reduction core on integer-mapped letters; adj is a row-major n*n
// adjacency table.  Exposed so bulk tests can skip per-word graph setup.
void reduce_core(std::vector<int>& gens, std::vector<int>& exps,
                 const std::vector<char>& adj, int n);

}  // namespace detail

}  // namespace catlink
