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

#include "catlink/raag.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace catlink {

namespace detail {

void reduce_core(std::vector<int>& gens, std::vector<int>& exps,
                 const std::vector<char>& adj, int n) {
  // Scan positions left to right; for each j walk back over letters that
  // commute with gens[j].  A letter with the same generator either cancels
  // (opposite sign) or ends the walk (same sign).  After a deletion at
  // (i, j), pairs ending before i are still non-deletable, so the scan
  // restarts at i.
  size_t j = 1;
  while (j < gens.size()) {
    bool deleted = false;
    for (size_t i = j; i-- > 0;) {
      if (gens[i] == gens[j]) {
        if (exps[i] == -exps[j]) {
          gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(j));
          exps.erase(exps.begin() + static_cast<std::ptrdiff_t>(j));
          gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
          exps.erase(exps.begin() + static_cast<std::ptrdiff_t>(i));
          j = i > 1 ? i : 1;
          deleted = true;
        }
        break;
      }
      if (!adj[static_cast<size_t>(gens[i]) * static_cast<size_t>(n) +
               static_cast<size_t>(gens[j])]) {
        break;
      }
    }
    if (!deleted) ++j;
  }
}

}  // namespace detail

namespace {

void check_letter(const Graph& g, const Letter& l) {
  if (l.exp != 1 && l.exp != -1) {
    throw std::invalid_argument("letter exponent must be +1 or -1");
  }
  if (g.vertices.count(l.gen) == 0) {
    throw std::invalid_argument("unknown generator: " + l.gen);
  }
}

constexpr long long kMaxTokenExponent = 1000000;

}  // namespace

RaagWord make_word(Graph graph, std::vector<Letter> letters) {
  for (const auto& l : letters) check_letter(graph, l);
  return {std::move(graph), std::move(letters)};
}

RaagWord parse_word(const Graph& graph, const std::string& text) {
  std::vector<Letter> letters;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::string name = tok;
    long long k = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      const std::string num = tok.substr(caret + 1);
      const char* first = num.data();
      const char* last = num.data() + num.size();
      auto [ptr, ec] = std::from_chars(first, last, k);
      if (ec != std::errc() || ptr != last) {
        throw std::invalid_argument("bad exponent in token: " + tok);
      }
      if (k == 0) {
        throw std::invalid_argument("zero exponent in token: " + tok);
      }
      if (k > kMaxTokenExponent || k < -kMaxTokenExponent) {
        throw std::invalid_argument("exponent too large in token: " + tok);
      }
    }
    if (name.empty()) {
      throw std::invalid_argument("empty generator in token: " + tok);
    }
    if (graph.vertices.count(name) == 0) {
      throw std::invalid_argument("unknown generator: " + name);
    }
    const int sign = k > 0 ? 1 : -1;
    const long long count = k > 0 ? k : -k;
    for (long long t = 0; t < count; ++t) letters.push_back({name, sign});
  }
  return {graph, std::move(letters)};
}

std::string format_word(const RaagWord& w) {
  std::string out;
  size_t i = 0;
  while (i < w.letters.size()) {
    size_t j = i;
    while (j < w.letters.size() && w.letters[j].gen == w.letters[i].gen &&
           w.letters[j].exp == w.letters[i].exp) {
      ++j;
    }
    const long long count =
        static_cast<long long>(j - i) * w.letters[i].exp;
    if (!out.empty()) out += ' ';
    out += w.letters[i].gen;
    if (count != 1) {
      out += '^';
      out += std::to_string(count);
    }
    i = j;
  }
  return out;
}

RaagWord inverse(const RaagWord& w) {
  RaagWord out;
  out.graph = w.graph;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back({it->gen, -it->exp});
  }
  return out;
}

RaagWord concat(const RaagWord& a, const RaagWord& b) {
  if (!(a.graph == b.graph)) {
    throw std::invalid_argument("mismatched ambient graphs");
  }
  RaagWord out;
  out.graph = a.graph;
  out.letters.reserve(a.letters.size() + b.letters.size());
  out.letters.insert(out.letters.end(), a.letters.begin(), a.letters.end());
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

RaagWord reduce(const RaagWord& w) {
  std::map<Vertex, int> id;
  for (const auto& v : w.graph.vertices) {
    id.emplace(v, static_cast<int>(id.size()));
  }
  const int n = static_cast<int>(id.size());
  std::vector<char> adj(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  for (const auto& e : w.graph.edges) {
    const size_t a = static_cast<size_t>(id.at(e[0]));
    const size_t b = static_cast<size_t>(id.at(e[1]));
    adj[a * static_cast<size_t>(n) + b] = 1;
    adj[b * static_cast<size_t>(n) + a] = 1;
  }
  std::vector<int> gens;
  std::vector<int> exps;
  gens.reserve(w.letters.size());
  exps.reserve(w.letters.size());
  for (const auto& l : w.letters) {
    auto it = id.find(l.gen);
    if (it == id.end()) {
      throw std::invalid_argument("unknown generator: " + l.gen);
    }
    if (l.exp != 1 && l.exp != -1) {
      throw std::invalid_argument("letter exponent must be +1 or -1");
    }
    gens.push_back(it->second);
    exps.push_back(l.exp);
  }
  detail::reduce_core(gens, exps, adj, n);
  std::vector<const Vertex*> names(static_cast<size_t>(n));
  for (const auto& [v, k] : id) names[static_cast<size_t>(k)] = &v;
  RaagWord out;
  out.graph = w.graph;
  out.letters.reserve(gens.size());
  for (size_t t = 0; t < gens.size(); ++t) {
    out.letters.push_back({*names[static_cast<size_t>(gens[t])], exps[t]});
  }
  return out;
}

bool equal(const RaagWord& a, const RaagWord& b) {
  return reduce(concat(a, inverse(b))).letters.empty();
}

int exponent_sum(const RaagWord& w) {
  int sum = 0;
  for (const auto& l : w.letters) sum += l.exp;
  return sum;
}

bool kernel_membership(const RaagWord& w) { return exponent_sum(w) == 0; }

KernelLetter make_kernel_letter(const Graph& graph, const Vertex& u,
                                const Vertex& v, int exp) {
  if (exp != 1 && exp != -1) {
    throw std::invalid_argument("kernel letter exponent must be +1 or -1");
  }
  if (u == v || !graph.has_edge(u, v)) {
    throw std::invalid_argument("not an edge: " + u + ">" + v);
  }
  if (u < v) return {{u, v}, exp};
  return {{v, u}, -exp};
}

std::string format_kernel_word(const KernelWord& w) {
  std::string out;
  size_t i = 0;
  while (i < w.letters.size()) {
    size_t j = i;
    while (j < w.letters.size() && w.letters[j].edge == w.letters[i].edge &&
           w.letters[j].exp == w.letters[i].exp) {
      ++j;
    }
    const long long count =
        static_cast<long long>(j - i) * w.letters[i].exp;
    if (!out.empty()) out += ' ';
    out += "x(" + w.letters[i].edge[0] + ">" + w.letters[i].edge[1] + ")";
    if (count != 1) {
      out += '^';
      out += std::to_string(count);
    }
    i = j;
  }
  return out;
}

KernelWord free_reduce(const KernelWord& w) {
  KernelWord out;
  for (const auto& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().edge == l.edge &&
        out.letters.back().exp == -l.exp) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

RaagWord substitute(const KernelWord& w, const Graph& graph) {
  std::vector<Letter> letters;
  letters.reserve(2 * w.letters.size());
  for (const auto& l : w.letters) {
    if (!graph.has_edge(l.edge[0], l.edge[1])) {
      throw std::invalid_argument("kernel letter is not an edge: " +
                                  l.edge[0] + ">" + l.edge[1]);
    }
    if (l.exp == 1) {
      letters.push_back({l.edge[0], -1});
      letters.push_back({l.edge[1], 1});
    } else {
      letters.push_back({l.edge[1], -1});
      letters.push_back({l.edge[0], 1});
    }
  }
  return make_word(graph, std::move(letters));
}

std::map<Vertex, Vertex> spanning_tree(const FlagComplex2& k,
                                       const Vertex& root) {
  if (!k.has_vertex(root)) {
    throw std::invalid_argument("unknown root: " + root);
  }
  const auto adj = k.adjacency();
  std::map<Vertex, Vertex> parent;
  std::set<Vertex> seen{root};
  std::deque<Vertex> queue{root};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (const Vertex& w : adj.at(v)) {
      if (seen.insert(w).second) {
        parent.emplace(w, v);
        queue.push_back(w);
      }
    }
  }
  if (seen.size() != k.vertices.size()) {
    throw std::invalid_argument("complex is disconnected");
  }
  return parent;
}

namespace {

KernelWord invert_kernel(const KernelWord& w) {
  KernelWord out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back({it->edge, -it->exp});
  }
  return out;
}

std::vector<Vertex> climb_to_root(const Vertex& v,
                                  const std::map<Vertex, Vertex>& tree,
                                  const Vertex& root, size_t cap) {
  std::vector<Vertex> chain{v};
  Vertex cur = v;
  while (cur != root) {
    auto it = tree.find(cur);
    if (it == tree.end() || chain.size() > cap) {
      throw std::invalid_argument(
          "spanning tree does not reach the basepoint from " + v);
    }
    cur = it->second;
    chain.push_back(cur);
  }
  return chain;
}

// Tree geodesic from s to t: both chains to the root with the common
// suffix trimmed.
std::vector<Vertex> tree_path(const Vertex& s, const Vertex& t,
                              const std::map<Vertex, Vertex>& tree,
                              const Vertex& root, size_t cap) {
  const auto cs = climb_to_root(s, tree, root, cap);
  const auto ct = climb_to_root(t, tree, root, cap);
  size_t i = cs.size();
  size_t j = ct.size();
  while (i > 0 && j > 0 && cs[i - 1] == ct[j - 1]) {
    --i;
    --j;
  }
  std::vector<Vertex> path(cs.begin(),
                           cs.begin() + static_cast<std::ptrdiff_t>(i + 1));
  for (size_t q = j; q-- > 0;) path.push_back(ct[q]);
  return path;
}

struct RewriteContext {
  const Graph* graph = nullptr;
  const std::map<Vertex, Vertex>* tree = nullptr;
  Vertex basepoint;
  size_t cap = 0;
  // Tree paths from the basepoint, filled on demand.
  std::map<Vertex, std::vector<Vertex>> paths;

  const std::vector<Vertex>& path_to(const Vertex& v) {
    auto it = paths.find(v);
    if (it == paths.end()) {
      it = paths.emplace(v, tree_path(basepoint, v, *tree, basepoint, cap))
               .first;
    }
    return it->second;
  }

  // Word for basepoint * v^-1 along the tree.
  KernelWord conj_word(const Vertex& v, int sign) {
    const auto& p = path_to(v);
    KernelWord out;
    out.letters.reserve(p.size() - 1);
    for (size_t q = 0; q + 1 < p.size(); ++q) {
      if (sign > 0) {
        out.letters.push_back(
            make_kernel_letter(*graph, p[q + 1], p[q], 1));
      } else {
        out.letters.push_back(
            make_kernel_letter(*graph, p[q], p[q + 1], 1));
      }
    }
    return out;
  }

  // Conjugation by the basepoint (sign +1) or its inverse (sign -1).
  // Letters touching the basepoint are fixed; any other x_(u,v) becomes
  // c x_(u,v) c^-1 with c the tree word for b u^-1 (resp. b^-1 u).
  KernelWord apply_conj(const KernelWord& w, int sign) {
    KernelWord out;
    for (const auto& l : w.letters) {
      if (l.edge[0] == basepoint || l.edge[1] == basepoint) {
        out.letters.push_back(l);
        continue;
      }
      const KernelWord c = conj_word(l.edge[0], sign);
      out.letters.insert(out.letters.end(), c.letters.begin(),
                         c.letters.end());
      out.letters.push_back(l);
      const KernelWord ci = invert_kernel(c);
      out.letters.insert(out.letters.end(), ci.letters.begin(),
                         ci.letters.end());
    }
    return free_reduce(out);
  }
};

}  // namespace

KernelWord kernel_rewrite(const RaagWord& w, const FlagComplex2& k,
                          const Vertex& basepoint,
                          const std::map<Vertex, Vertex>& tree) {
  const Graph skeleton = one_skeleton(k);
  if (!(w.graph == skeleton)) {
    throw std::invalid_argument("word is not over the complex's 1-skeleton");
  }
  if (!k.has_vertex(basepoint)) {
    throw std::invalid_argument("unknown basepoint: " + basepoint);
  }
  if (tree.count(basepoint) > 0) {
    throw std::invalid_argument("spanning tree maps the basepoint");
  }
  if (tree.size() + 1 != k.vertices.size()) {
    throw std::invalid_argument(
        "spanning tree must cover every non-root vertex");
  }
  for (const auto& [child, par] : tree) {
    if (!k.has_edge(child, par)) {
      throw std::invalid_argument("spanning tree pair is not an edge: " +
                                  child + ">" + par);
    }
  }
  const size_t cap = k.vertices.size();
  for (const auto& v : k.vertices) {
    climb_to_root(v, tree, basepoint, cap);
  }
  if (exponent_sum(w) != 0) {
    throw std::invalid_argument("nonzero exponent sum");
  }

  RewriteContext ctx;
  ctx.graph = &skeleton;
  ctx.tree = &tree;
  ctx.basepoint = basepoint;
  ctx.cap = cap;

  // w = prod_i b^{h_i} l_i b^{-h_{i+1}} with h_1 = 0 and running sums
  // h_{i+1} = h_i + e_i; the exponent sum 0 closes the telescope.  Each
  // factor is a conjugate of a tree word for g b^-1 or g^-1 b.
  int level = 0;
  KernelWord out;
  for (const auto& l : w.letters) {
    const auto& p = ctx.path_to(l.gen);
    KernelWord base;
    base.letters.reserve(p.size() - 1);
    if (l.exp > 0) {
      // g * b^-1 read along the tree path from g to b.
      for (size_t q = p.size(); q-- > 1;) {
        base.letters.push_back(
            make_kernel_letter(skeleton, p[q - 1], p[q], 1));
      }
    } else {
      // g^-1 * b read along the same path.
      for (size_t q = p.size(); q-- > 1;) {
        base.letters.push_back(
            make_kernel_letter(skeleton, p[q], p[q - 1], 1));
      }
    }
    const int sign = level > 0 ? 1 : -1;
    for (int t = 0; t < (level > 0 ? level : -level); ++t) {
      base = ctx.apply_conj(base, sign);
    }
    out.letters.insert(out.letters.end(), base.letters.begin(),
                       base.letters.end());
    level += l.exp;
  }
  out = free_reduce(out);
  if (!equal(substitute(out, w.graph), w)) {
    throw std::logic_error("kernel rewrite failed verification");
  }
  return out;
}

namespace {

std::string generator_label(const Edge& e) {
  return "x(" + e[0] + ">" + e[1] + ")";
}

std::vector<std::string> edge_generators(const FlagComplex2& k) {
  std::vector<std::string> out;
  out.reserve(k.edges.size());
  for (const auto& e : k.edges) out.push_back(generator_label(e));
  return out;
}

}  // namespace

Presentation presentation_triangles(const FlagComplex2& k,
                                    bool simply_connected_attested) {
  if (!simply_connected_attested) {
    throw std::invalid_argument(
        "triangle mode requires the caller to attest simple connectivity");
  }
  Presentation p;
  p.generators = edge_generators(k);
  p.mode = "triangle-relations";
  p.simply_connected_attested = true;
  const Graph g = one_skeleton(k);
  for (const auto& t : k.triangles) {
    KernelWord r1;
    r1.letters.push_back(make_kernel_letter(g, t[0], t[1], 1));
    r1.letters.push_back(make_kernel_letter(g, t[1], t[2], 1));
    r1.letters.push_back(make_kernel_letter(g, t[0], t[2], -1));
    KernelWord r2;
    r2.letters.push_back(make_kernel_letter(g, t[1], t[2], 1));
    r2.letters.push_back(make_kernel_letter(g, t[0], t[1], 1));
    r2.letters.push_back(make_kernel_letter(g, t[0], t[2], -1));
    p.relators.push_back(std::move(r1));
    p.relators.push_back(std::move(r2));
  }
  return p;
}

namespace {

// Simple cycles with minimal vertex first and second vertex smaller than
// last, each reported once.
std::vector<std::vector<Vertex>> canonical_cycles(const FlagComplex2& k,
                                                  int max_len) {
  const auto adj = k.adjacency();
  std::vector<std::vector<Vertex>> cycles;
  std::vector<Vertex> path;
  std::set<Vertex> on_path;

  for (const auto& s : k.vertices) {
    path.assign(1, s);
    on_path = {s};
    // Iterative depth-first search storing the neighbor iterator per level.
    struct Frame {
      std::set<Vertex>::const_iterator it;
      std::set<Vertex>::const_iterator end;
    };
    std::vector<Frame> stack;
    const auto& ns = adj.at(s);
    stack.push_back({ns.begin(), ns.end()});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.it == f.end) {
        stack.pop_back();
        on_path.erase(path.back());
        path.pop_back();
        continue;
      }
      const Vertex& w = *f.it;
      ++f.it;
      if (w == s) {
        if (path.size() >= 3 && path[1] < path.back()) {
          cycles.push_back(path);
        }
        continue;
      }
      if (w < s || on_path.count(w) > 0) continue;
      if (path.size() >= static_cast<size_t>(max_len)) continue;
      path.push_back(w);
      on_path.insert(w);
      const auto& nw = adj.at(w);
      stack.push_back({nw.begin(), nw.end()});
    }
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return cycles;
}

}  // namespace

Presentation presentation_cycles(const FlagComplex2& k, int max_cycle_len,
                                 int max_exp) {
  if (max_cycle_len < 3) {
    throw std::invalid_argument("cycle length bound must be at least 3");
  }
  if (max_exp < 1) {
    throw std::invalid_argument("exponent bound must be at least 1");
  }
  Presentation p;
  p.generators = edge_generators(k);
  p.mode = "cycle-relators-bounded";
  const Graph g = one_skeleton(k);
  const auto cycles = canonical_cycles(k, max_cycle_len);
  for (const auto& cyc : cycles) {
    for (int n = 1; n <= max_exp; ++n) {
      for (int sign : {1, -1}) {
        KernelWord r;
        r.letters.reserve(cyc.size() * static_cast<size_t>(n));
        for (size_t i = 0; i < cyc.size(); ++i) {
          const Vertex& a = cyc[i];
          const Vertex& b = cyc[(i + 1) % cyc.size()];
          const KernelLetter l = make_kernel_letter(g, a, b, sign);
          for (int t = 0; t < n; ++t) r.letters.push_back(l);
        }
        p.relators.push_back(std::move(r));
      }
    }
  }
  return p;
}

namespace {

const Graph& path4_graph() {
  static const Graph g = one_skeleton(fixture("path4"));
  return g;
}

}  // namespace

RaagWord distortion_word(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::vector<Letter> ls;
  ls.reserve(static_cast<size_t>(4 * n * (n + 1)));
  for (int rep = 0; rep < n; ++rep) {
    ls.push_back({"u2", -1});
    ls.push_back({"u1", 1});
    for (int i = 0; i < n; ++i) {
      ls.push_back({"u2", -1});
      ls.push_back({"u3", 1});
    }
    ls.push_back({"u3", -1});
    ls.push_back({"u4", 1});
    for (int i = 0; i < n; ++i) {
      ls.push_back({"u3", -1});
      ls.push_back({"u2", 1});
    }
  }
  return {path4_graph(), std::move(ls)};
}

RaagWord distortion_rewritten(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::vector<Letter> ls;
  ls.reserve(static_cast<size_t>(6 * n));
  for (int i = 0; i < n; ++i) ls.push_back({"u2", -1});
  for (int i = 0; i < n; ++i) {
    ls.push_back({"u2", -1});
    ls.push_back({"u1", 1});
    ls.push_back({"u3", -1});
    ls.push_back({"u4", 1});
  }
  for (int i = 0; i < n; ++i) ls.push_back({"u2", 1});
  return {path4_graph(), std::move(ls)};
}

std::vector<DistortionRow> distortion_table(int nmax) {
  if (nmax < 1) throw std::invalid_argument("nmax must be at least 1");
  std::vector<DistortionRow> rows;
  rows.reserve(static_cast<size_t>(nmax));
  for (int n = 1; n <= nmax; ++n) {
    DistortionRow r;
    r.n = n;
    r.free_length = 2LL * n * (n + 1);
    r.written_length = 6LL * n;
    r.geodesic_length =
        static_cast<long long>(reduce(distortion_word(n)).letters.size());
    r.ratio = static_cast<double>(r.free_length) /
              static_cast<double>(r.geodesic_length);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace catlink
