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

#include "catlink/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace catlink {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Indexed view of the optimization problem.  The topology of the target
// graphs never changes; only the arc weights (corner angles) do.
struct Arc {
  int a = 0;
  int b = 0;
  int tri = 0;
  int pos = 0;  // corner index inside the sorted triangle
};

struct Target {
  std::string label;  // link vertex, empty for the whole angle graph
  int nodes = 0;
  std::vector<std::string> node_names;
  std::vector<Arc> arcs;
  std::map<std::pair<int, int>, int> arc_of;
};

struct Skeleton {
  std::vector<Edge> edges;
  std::map<Edge, int> edge_id;
  std::vector<Triangle> tris;
  // Per triangle {v0,v1,v2}: edge ids of (v0v1, v0v2, v1v2).
  std::vector<std::array<int, 3>> tri_edges;
  std::vector<Target> targets;
};

void push_arc(Target& t, int a, int b, int tri, int pos) {
  const auto key = std::minmax(a, b);
  const int index = static_cast<int>(t.arcs.size());
  if (!t.arc_of.emplace(std::make_pair(key.first, key.second), index)
           .second) {
    throw std::logic_error("parallel arc in target graph");
  }
  t.arcs.push_back({a, b, tri, pos});
}

Skeleton build_skeleton(const FlagComplex2& k, SearchMode mode) {
  Skeleton s;
  for (const auto& e : k.edges) {
    s.edge_id.emplace(e, static_cast<int>(s.edges.size()));
    s.edges.push_back(e);
  }
  for (const auto& t : k.triangles) {
    s.tris.push_back(t);
    s.tri_edges.push_back({s.edge_id.at(make_edge(t[0], t[1])),
                           s.edge_id.at(make_edge(t[0], t[2])),
                           s.edge_id.at(make_edge(t[1], t[2]))});
  }
  if (mode == SearchMode::kGlobal) {
    Target tg;
    std::map<std::string, int> node_id;
    for (const auto& oe : k.oriented_edges()) {
      node_id.emplace(oe.label(), static_cast<int>(tg.node_names.size()));
      tg.node_names.push_back(oe.label());
    }
    tg.nodes = static_cast<int>(tg.node_names.size());
    for (size_t ti = 0; ti < s.tris.size(); ++ti) {
      const Triangle& t = s.tris[ti];
      const auto id = [&](const Vertex& x, const Vertex& y) {
        return node_id.at(x + ">" + y);
      };
      for (int pos = 0; pos < 3; ++pos) {
        const Vertex& v = t[static_cast<size_t>(pos)];
        const Vertex& x = t[pos == 0 ? 1 : 0];
        const Vertex& y = t[pos == 2 ? 1 : 2];
        // Corner at v joins the two oriented edges leaving v and the two
        // entering it.
        push_arc(tg, id(v, x), id(v, y), static_cast<int>(ti), pos);
        push_arc(tg, id(x, v), id(y, v), static_cast<int>(ti), pos);
      }
    }
    s.targets.push_back(std::move(tg));
  } else {
    const auto adj = k.adjacency();
    for (const auto& v : k.vertices) {
      Target tg;
      tg.label = v;
      std::map<Vertex, int> node_id;
      for (const auto& w : adj.at(v)) {
        node_id.emplace(w, static_cast<int>(tg.node_names.size()));
        tg.node_names.push_back(w);
      }
      tg.nodes = static_cast<int>(tg.node_names.size());
      for (size_t ti = 0; ti < s.tris.size(); ++ti) {
        const Triangle& t = s.tris[ti];
        int pos = -1;
        for (int p = 0; p < 3; ++p) {
          if (t[static_cast<size_t>(p)] == v) pos = p;
        }
        if (pos < 0) continue;
        const Vertex& x = t[pos == 0 ? 1 : 0];
        const Vertex& y = t[pos == 2 ? 1 : 2];
        push_arc(tg, node_id.at(x), node_id.at(y), static_cast<int>(ti),
                 pos);
      }
      s.targets.push_back(std::move(tg));
    }
  }
  return s;
}

struct CycleRef {
  int target = -1;
  std::vector<int> nodes;
};

void fill_angles(const Skeleton& s, const std::vector<double>& len,
                 std::vector<std::array<double, 3>>& angles) {
  angles.resize(s.tris.size());
  for (size_t t = 0; t < s.tris.size(); ++t) {
    const auto& te = s.tri_edges[t];
    const double l01 = len[static_cast<size_t>(te[0])];
    const double l02 = len[static_cast<size_t>(te[1])];
    const double l12 = len[static_cast<size_t>(te[2])];
    angles[t] = {triangle_angle(l01, l02, l12), triangle_angle(l01, l12, l02),
                 triangle_angle(l02, l12, l01)};
  }
}

// Min girth minus 2*pi over the targets; +infinity when no target has a
// circuit.
double eval_objective(const Skeleton& s, const std::vector<double>& len,
                      std::vector<std::array<double, 3>>& angles,
                      CycleRef* wit) {
  fill_angles(s, len, angles);
  double best = kInf;
  for (size_t ti = 0; ti < s.targets.size(); ++ti) {
    const Target& tg = s.targets[ti];
    if (tg.arcs.empty()) continue;
    std::vector<std::tuple<int, int, double>> es;
    es.reserve(tg.arcs.size());
    for (const Arc& a : tg.arcs) {
      es.emplace_back(a.a, a.b,
                      angles[static_cast<size_t>(a.tri)][
                          static_cast<size_t>(a.pos)]);
    }
    const auto c = girth_indexed<double>(tg.nodes, es);
    if (!c) continue;
    const double obj = c->length - kTwoPi;
    if (obj < best) {
      best = obj;
      if (wit) {
        wit->target = static_cast<int>(ti);
        wit->nodes = c->vertices;
      }
    }
  }
  return best;
}

bool margins_ok(const Skeleton& s, const std::vector<double>& len,
                double floor_value) {
  for (const auto& te : s.tri_edges) {
    if (relative_margin(len[static_cast<size_t>(te[0])],
                        len[static_cast<size_t>(te[1])],
                        len[static_cast<size_t>(te[2])]) < floor_value) {
      return false;
    }
  }
  return true;
}

// d(angle)/d(log length) terms for the corner (tri, pos), scaled and added
// into g.  Law of cosines differentiated; the guard on sin only engages
// outside the hard-margin region.
void accumulate_angle_grad(std::vector<double>& g, const Skeleton& s,
                           const std::vector<double>& len, int tri, int pos,
                           double scale) {
  const auto& te = s.tri_edges[static_cast<size_t>(tri)];
  int ia, ib, io;
  if (pos == 0) {
    ia = te[0];
    ib = te[1];
    io = te[2];
  } else if (pos == 1) {
    ia = te[0];
    ib = te[2];
    io = te[1];
  } else {
    ia = te[1];
    ib = te[2];
    io = te[0];
  }
  const double p = len[static_cast<size_t>(ia)];
  const double q = len[static_cast<size_t>(ib)];
  const double r = len[static_cast<size_t>(io)];
  double cv = (p * p + q * q - r * r) / (2.0 * p * q);
  cv = std::clamp(cv, -1.0, 1.0);
  double sv = std::sqrt(std::max(0.0, 1.0 - cv * cv));
  if (sv < 1e-12) sv = 1e-12;
  const double dp = -(p * p - q * q + r * r) / (2.0 * p * p * q * sv);
  const double dq = -(q * q - p * p + r * r) / (2.0 * q * q * p * sv);
  const double dr = r / (p * q * sv);
  g[static_cast<size_t>(ia)] += scale * dp * p;
  g[static_cast<size_t>(ib)] += scale * dq * q;
  g[static_cast<size_t>(io)] += scale * dr * r;
}

void add_cycle_grad(std::vector<double>& g, const Skeleton& s,
                    const std::vector<double>& len, const CycleRef& wit) {
  const Target& tg = s.targets[static_cast<size_t>(wit.target)];
  const size_t m = wit.nodes.size();
  for (size_t i = 0; i < m; ++i) {
    const int a = wit.nodes[i];
    const int b = wit.nodes[(i + 1) % m];
    const auto key = std::minmax(a, b);
    const Arc& arc = tg.arcs[static_cast<size_t>(
        tg.arc_of.at(std::make_pair(key.first, key.second)))];
    accumulate_angle_grad(g, s, len, arc.tri, arc.pos, 1.0);
  }
}

// Ascent direction of -penalty, penalty = weight * (tau - rho)^2 on every
// triangle whose relative margin rho sits below tau.
void add_penalty_grad(std::vector<double>& g, const Skeleton& s,
                      const std::vector<double>& len, double weight,
                      double tau) {
  for (const auto& te : s.tri_edges) {
    const double a = len[static_cast<size_t>(te[0])];
    const double b = len[static_cast<size_t>(te[1])];
    const double c = len[static_cast<size_t>(te[2])];
    const double per = a + b + c;
    const double e1 = stable_excess(a, b, c);
    const double e2 = stable_excess(b, c, a);
    const double e3 = stable_excess(a, c, b);
    double ex = e1;
    int which = 1;
    if (e2 < ex) {
      ex = e2;
      which = 2;
    }
    if (e3 < ex) {
      ex = e3;
      which = 3;
    }
    const double rho = ex / per;
    if (rho >= tau) continue;
    const double f = 2.0 * weight * (tau - rho);
    const double dpos = (per - ex) / (per * per);
    const double dneg = -(per + ex) / (per * per);
    double da, db, dc;
    if (which == 1) {
      da = dpos;
      db = dpos;
      dc = dneg;
    } else if (which == 2) {
      db = dpos;
      dc = dpos;
      da = dneg;
    } else {
      da = dpos;
      dc = dpos;
      db = dneg;
    }
    g[static_cast<size_t>(te[0])] += f * da * a;
    g[static_cast<size_t>(te[1])] += f * db * b;
    g[static_cast<size_t>(te[2])] += f * dc * c;
  }
}

struct RestartOut {
  double best = -kInf;
  std::vector<double> z;
  long long evals = 0;
};

void to_lengths(const std::vector<double>& z, std::vector<double>& len) {
  len.resize(z.size());
  for (size_t i = 0; i < z.size(); ++i) len[i] = std::exp(z[i]);
}

// Derivative-free fallback on the free coordinates (the pinned edge stays
// at log length 0).  Maximizes the raw objective; points violating the
// hard margin score -infinity.
void nelder_mead(const Skeleton& s, const SearchConfig& cfg,
                 RestartOut& out) {
  const size_t ne = s.edges.size();
  const size_t dim = ne - 1;
  if (dim == 0) return;
  std::vector<double> len;
  std::vector<std::array<double, 3>> angles;

  const auto expand = [&](const std::vector<double>& x) {
    std::vector<double> z(ne, 0.0);
    for (size_t i = 0; i < dim; ++i) z[i + 1] = x[i];
    return z;
  };
  const auto feval = [&](const std::vector<double>& x) {
    if (out.evals >= cfg.max_iters) return -kInf;
    ++out.evals;
    const std::vector<double> z = expand(x);
    to_lengths(z, len);
    if (!margins_ok(s, len, cfg.hard_margin)) return -kInf;
    const double obj = eval_objective(s, len, angles, nullptr);
    if (obj > out.best + 1e-12) {
      out.best = obj;
      out.z = z;
    }
    return obj;
  };

  using Point = std::pair<std::vector<double>, double>;
  std::vector<Point> simplex;
  std::vector<double> x0(dim);
  for (size_t i = 0; i < dim; ++i) x0[i] = out.z[i + 1];
  simplex.push_back({x0, feval(x0)});
  for (size_t i = 0; i < dim; ++i) {
    if (out.evals >= cfg.max_iters) return;
    std::vector<double> xi = x0;
    xi[i] += 0.1;
    simplex.push_back({xi, feval(xi)});
  }
  const auto by_value_desc = [](const Point& a, const Point& b) {
    return a.second > b.second;
  };
  std::stable_sort(simplex.begin(), simplex.end(), by_value_desc);

  while (out.evals < cfg.max_iters) {
    std::vector<double> centroid(dim, 0.0);
    for (size_t i = 0; i + 1 < simplex.size(); ++i) {
      for (size_t j = 0; j < dim; ++j) centroid[j] += simplex[i].first[j];
    }
    for (size_t j = 0; j < dim; ++j) {
      centroid[j] /= static_cast<double>(dim);
    }
    Point& worst = simplex.back();
    std::vector<double> xr(dim);
    for (size_t j = 0; j < dim; ++j) {
      xr[j] = centroid[j] + (centroid[j] - worst.first[j]);
    }
    const double fr = feval(xr);
    if (fr > simplex.front().second) {
      std::vector<double> xe(dim);
      for (size_t j = 0; j < dim; ++j) {
        xe[j] = centroid[j] + 2.0 * (xr[j] - centroid[j]);
      }
      const double fe = feval(xe);
      if (fe > fr) {
        worst = {xe, fe};
      } else {
        worst = {xr, fr};
      }
    } else if (fr > simplex[simplex.size() - 2].second) {
      worst = {xr, fr};
    } else {
      std::vector<double> xc(dim);
      for (size_t j = 0; j < dim; ++j) {
        xc[j] = centroid[j] + 0.5 * (worst.first[j] - centroid[j]);
      }
      const double fc = feval(xc);
      if (fc > worst.second) {
        worst = {xc, fc};
      } else {
        for (size_t i = 1; i < simplex.size(); ++i) {
          for (size_t j = 0; j < dim; ++j) {
            simplex[i].first[j] = simplex[0].first[j] +
                                  0.5 * (simplex[i].first[j] -
                                         simplex[0].first[j]);
          }
          simplex[i].second = feval(simplex[i].first);
        }
      }
    }
    std::stable_sort(simplex.begin(), simplex.end(), by_value_desc);
  }
}

RestartOut run_restart(const Skeleton& s, const SearchConfig& cfg, int r) {
  std::mt19937_64 rng(cfg.seed +
                      1000003ull * static_cast<unsigned long long>(r));
  std::normal_distribution<double> gauss(0.0, cfg.jitter_sigma);
  const size_t ne = s.edges.size();

  std::vector<double> z(ne, 0.0);
  std::vector<double> len;
  for (int attempt = 0; attempt < 100; ++attempt) {
    for (auto& v : z) v = gauss(rng);
    z[0] = 0.0;
    to_lengths(z, len);
    if (margins_ok(s, len, cfg.hard_margin)) break;
    if (attempt == 99) std::fill(z.begin(), z.end(), 0.0);
  }

  RestartOut out;
  std::vector<std::array<double, 3>> angles;
  CycleRef wit;

  to_lengths(z, len);
  double obj = eval_objective(s, len, angles, &wit);
  ++out.evals;
  out.best = obj;
  out.z = z;

  int stall = 0;
  bool fallback = false;
  std::vector<double> grad(ne);
  std::vector<double> znew(ne);
  for (int iter = 0; out.evals < cfg.max_iters; ++iter) {
    std::fill(grad.begin(), grad.end(), 0.0);
    add_cycle_grad(grad, s, len, wit);
    const double weight =
        cfg.penalty0 *
        std::exp2(-static_cast<double>(iter) / cfg.penalty_halflife);
    add_penalty_grad(grad, s, len, weight, cfg.margin_tau);
    grad[0] = 0.0;
    double norm = 0.0;
    for (const double v : grad) norm += v * v;
    norm = std::sqrt(norm);
    znew = z;
    if (norm > 1e-15) {
      const double step =
          cfg.step0 / (1.0 + static_cast<double>(iter) / cfg.step_decay);
      for (size_t i = 0; i < ne; ++i) znew[i] = z[i] + step * grad[i] / norm;
      znew[0] = 0.0;
      bool ok = false;
      for (int bt = 0; bt < 60; ++bt) {
        to_lengths(znew, len);
        if (margins_ok(s, len, cfg.hard_margin)) {
          ok = true;
          break;
        }
        for (size_t i = 0; i < ne; ++i) znew[i] = 0.5 * (znew[i] + z[i]);
      }
      if (!ok) znew = z;
    }
    z = znew;
    to_lengths(z, len);
    obj = eval_objective(s, len, angles, &wit);
    ++out.evals;
    if (obj > out.best + 1e-12) {
      out.best = obj;
      out.z = z;
      stall = 0;
    } else {
      ++stall;
    }
    if (stall >= cfg.stall_iters) {
      fallback = true;
      break;
    }
  }

  if (fallback && out.evals < cfg.max_iters) nelder_mead(s, cfg, out);
  return out;
}

// Objective recomputed through the public metric interface only; used for
// the stored result and the scale-invariance assertion.
double objective_public(const FlagComplex2& k, const PEMetric& m,
                        SearchMode mode, std::vector<std::string>* circuit,
                        std::string* link) {
  double best = kInf;
  if (mode == SearchMode::kGlobal) {
    if (const auto c = girth(build_L(k, m))) {
      best = c->length - kTwoPi;
      if (circuit) *circuit = c->vertices;
    }
  } else {
    for (const auto& v : k.vertices) {
      const auto c = girth(build_link(k, m, v));
      if (c && c->length - kTwoPi < best) {
        best = c->length - kTwoPi;
        if (circuit) *circuit = c->vertices;
        if (link) *link = v;
      }
    }
  }
  return best;
}

}  // namespace

SearchResult search_metric(const FlagComplex2& k, const SearchConfig& cfg) {
  if (k.triangles.empty()) {
    throw std::invalid_argument("complex has no triangles");
  }
  if (cfg.restarts < 1) {
    throw std::invalid_argument("restarts must be at least 1");
  }
  if (cfg.max_iters < 1) {
    throw std::invalid_argument("max_iters must be at least 1");
  }
  const Skeleton s = build_skeleton(k, cfg.mode);

  SearchResult res;
  {
    // Circuit existence is combinatorial, so vacuity is metric independent.
    std::vector<double> ones(s.edges.size(), 1.0);
    std::vector<std::array<double, 3>> angles;
    if (eval_objective(s, ones, angles, nullptr) == kInf) {
      res.vacuous = true;
      res.feasible = true;
      res.best_objective = kInf;
      for (const auto& e : s.edges) res.best_metric.lengths[e] = 1.0;
      return res;
    }
  }

  double best = -kInf;
  std::vector<double> best_z;
  for (int r = 0; r < cfg.restarts; ++r) {
    RestartOut out = run_restart(s, cfg, r);
    res.traces.push_back({r, out.best, out.evals});
    if (out.best > best) {
      best = out.best;
      best_z = out.z;
    }
  }

  for (size_t i = 0; i < s.edges.size(); ++i) {
    res.best_metric.lengths[s.edges[i]] = std::exp(best_z[i]);
  }
  res.best_objective = objective_public(k, res.best_metric, cfg.mode,
                                        &res.active_circuit,
                                        &res.active_link);

  PEMetric doubled;
  for (const auto& [e, l] : res.best_metric.lengths) {
    doubled.lengths[e] = 2.0 * l;
  }
  if (objective_public(k, doubled, cfg.mode, nullptr, nullptr) !=
      res.best_objective) {
    throw std::logic_error("objective is not scale invariant");
  }

  res.feasible = res.best_objective >= -cfg.tol &&
                 verify_certificate(k, res.best_metric, cfg.tol,
                                    cfg.mode).passes;
  return res;
}

Verdict verify_certificate(const FlagComplex2& k, const PEMetric& m,
                           double tol, SearchMode mode) {
  validate_metric(k, m);
  using Quad = boost::multiprecision::cpp_bin_float_quad;
  using std::atan2;
  const Quad two_pi = 2 * atan2(Quad(0), Quad(-1));
  const Skeleton s = build_skeleton(k, mode);

  std::vector<Quad> qlen(s.edges.size());
  for (size_t i = 0; i < s.edges.size(); ++i) {
    qlen[i] = Quad(m.lengths.at(s.edges[i]));
  }
  std::vector<std::array<Quad, 3>> qangles(s.tris.size());
  for (size_t t = 0; t < s.tris.size(); ++t) {
    const auto& te = s.tri_edges[t];
    const Quad l01 = qlen[static_cast<size_t>(te[0])];
    const Quad l02 = qlen[static_cast<size_t>(te[1])];
    const Quad l12 = qlen[static_cast<size_t>(te[2])];
    qangles[t] = {triangle_angle(l01, l02, l12),
                  triangle_angle(l01, l12, l02),
                  triangle_angle(l02, l12, l01)};
  }

  bool have = false;
  Quad best_len = 0;
  size_t best_target = 0;
  std::vector<int> best_cycle;
  for (size_t ti = 0; ti < s.targets.size(); ++ti) {
    const Target& tg = s.targets[ti];
    if (tg.arcs.empty()) continue;
    std::vector<std::tuple<int, int, Quad>> es;
    es.reserve(tg.arcs.size());
    for (const Arc& a : tg.arcs) {
      es.emplace_back(a.a, a.b,
                      qangles[static_cast<size_t>(a.tri)][
                          static_cast<size_t>(a.pos)]);
    }
    const auto c = girth_indexed<Quad>(tg.nodes, es);
    if (!c) continue;
    if (!have || c->length < best_len) {
      have = true;
      best_len = c->length;
      best_target = ti;
      best_cycle = c->vertices;
    }
  }

  Verdict v;
  if (!have) {
    v.vacuous = true;
    v.passes = true;
    v.slack = kInf;
    return v;
  }
  const Quad slack = best_len - two_pi;
  v.slack = static_cast<double>(slack);
  v.passes = slack >= -Quad(tol);
  v.boundary = abs(slack) <= Quad(tol);
  std::vector<std::string> names;
  names.reserve(best_cycle.size());
  for (const int id : best_cycle) {
    names.push_back(s.targets[best_target].node_names[
        static_cast<size_t>(id)]);
  }
  v.witness = canonical_cycle(std::move(names));
  v.witness_length = static_cast<double>(best_len);
  return v;
}

K0Report k0_report(unsigned long long seed, int restarts, double tol) {
  K0Report rep;
  const FlagComplex2 k = fixture("k0");
  const auto labels = k0_labels();
  const auto circuits = k0_circuits();

  std::vector<std::vector<std::string>> node_seqs;
  for (const auto& c : circuits) {
    std::vector<std::string> seq;
    seq.reserve(c.size());
    for (const auto& tok : c) seq.push_back(k0_resolve(tok).label());
    node_seqs.push_back(std::move(seq));
  }

  PEMetric equilateral;
  for (const auto& e : k.edges) equilateral.lengths[e] = 1.0;
  const WeightedGraph l0 = build_L(k, equilateral);

  bool valid = true;
  for (const auto& seq : node_seqs) {
    const std::set<std::string> uniq(seq.begin(), seq.end());
    if (uniq.size() != seq.size()) valid = false;
    for (size_t i = 0; i < seq.size(); ++i) {
      const Edge e = make_edge(seq[i], seq[(i + 1) % seq.size()]);
      if (l0.weights.count(e) == 0) valid = false;
    }
  }
  rep.circuits_valid = valid;
  for (size_t i = 0; i < 4; ++i) {
    rep.circuit_edge_counts[i] = static_cast<int>(node_seqs[i].size());
  }

  const std::string nb = labels.at("b").label();
  const std::string nh = labels.at("h").label();
  const std::string nd = labels.at("d").label();
  const std::string nk = labels.at("k").label();
  {
    std::multiset<Edge> left, right;
    for (size_t ci = 0; ci < 2; ++ci) {
      const auto& seq = node_seqs[ci];
      for (size_t i = 0; i < seq.size(); ++i) {
        left.insert(make_edge(seq[i], seq[(i + 1) % seq.size()]));
      }
    }
    for (size_t ci = 2; ci < 4; ++ci) {
      const auto& seq = node_seqs[ci];
      for (size_t i = 0; i < seq.size(); ++i) {
        right.insert(make_edge(seq[i], seq[(i + 1) % seq.size()]));
      }
    }
    right.insert(make_edge(nb, nh));
    right.insert(make_edge(nb, nh));
    right.insert(make_edge(nd, nk));
    right.insert(make_edge(nd, nk));
    rep.multiset_identity = (left == right);
  }

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::normal_distribution<double> gauss(0.0, 0.3);
  const std::vector<Edge> edges(k.edges.begin(), k.edges.end());
  const std::vector<Triangle> tris(k.triangles.begin(), k.triangles.end());
  for (int i = 0; i < 50; ++i) {
    PEMetric m;
    for (;;) {
      for (const auto& e : edges) m.lengths[e] = std::exp(gauss(rng));
      bool ok = true;
      for (const auto& t : tris) {
        if (relative_margin(m.length(t[0], t[1]), m.length(t[0], t[2]),
                            m.length(t[1], t[2])) < 1e-3) {
          ok = false;
          break;
        }
      }
      if (ok) break;
    }
    const WeightedGraph lg = build_L(k, m);
    const auto circuit_length = [&](size_t ci) {
      double sum = 0.0;
      const auto& seq = node_seqs[ci];
      for (size_t j = 0; j < seq.size(); ++j) {
        sum += lg.weights.at(make_edge(seq[j], seq[(j + 1) % seq.size()]));
      }
      return sum;
    };
    K0Sample sample;
    sample.index = i;
    for (size_t ci = 0; ci < 4; ++ci) {
      sample.lengths[ci] = circuit_length(ci);
    }
    sample.identity_residual =
        sample.lengths[0] + sample.lengths[1] - sample.lengths[2] -
        sample.lengths[3] - 2.0 * lg.weights.at(make_edge(nb, nh)) -
        2.0 * lg.weights.at(make_edge(nd, nk));
    sample.min_c3_c4 = std::min(sample.lengths[2], sample.lengths[3]);
    rep.samples.push_back(sample);
  }

  SearchConfig cfg;
  cfg.mode = SearchMode::kGlobal;
  cfg.restarts = restarts;
  cfg.seed = seed;
  cfg.tol = tol;
  rep.global_search = search_metric(k, cfg);
  rep.best_girth = kTwoPi + rep.global_search.best_objective;

  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "global search over %d restarts reached best girth %.9f, "
                "short of 2*pi = %.9f",
                restarts, rep.best_girth, kTwoPi);
  rep.conclusion =
      "Edge multisets satisfy edges(c1) + edges(c2) = edges(c3) + edges(c4) "
      "+ 2{b,h} + 2{d,k}, so len(c1) + len(c2) = len(c3) + len(c4) + "
      "2 len(b,h) + 2 len(d,k) for every metric.  The circuit c2 visits "
      "each corner of the two triangles on the shared edge exactly once, "
      "so len(c2) = 2*pi identically, and both c3 and c4 reaching 2*pi "
      "would force len(c1) >= 2*pi + 2 len(b,h) + 2 len(d,k).  The " +
      std::string(buf) +
      "; reported as no metric found at this budget, not as a proof of "
      "impossibility.";
  return rep;
}

}  // namespace catlink
