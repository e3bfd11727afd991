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
#include <string>
#include <vector>

#include "catlink/complex.hpp"
#include "catlink/metric.hpp"

namespace catlink {

// links: every vertex link must have girth >= 2*pi.  global: the whole
// angle graph must.
enum class SearchMode { kLinks, kGlobal };

struct SearchConfig {
  SearchMode mode = SearchMode::kGlobal;
  int restarts = 100;
  unsigned long long seed = 0;
  // Evaluation budget per restart; the ascent takes one evaluation per
  // iteration and the simplex fallback consumes whatever remains.
  int max_iters = 2000;
  double step0 = 0.15;        // ascent step in log-length space
  double step_decay = 500.0;  // step = step0 / (1 + iter / step_decay)
  double penalty0 = 1.0;
  double penalty_halflife = 400.0;  // weight halves every this many iters
  double margin_tau = 0.02;  // penalty turns on below this relative margin
  // Iterates keep every triangle's relative margin above this floor; steps
  // are backtracked to stay inside.
  double hard_margin = 1e-3;
  double jitter_sigma = 0.5;  // log-normal spread of initial lengths
  int stall_iters = 300;      // simplex fallback after this many flat iters
  double tol = 1e-9;
};

struct RestartTrace {
  int restart = 0;
  double best_objective = 0;
  long long evals = 0;
};

struct SearchResult {
  PEMetric best_metric;
  // Min girth minus 2*pi over the target graphs, recomputed from
  // best_metric through the public metric interface.
  double best_objective = 0;
  bool feasible = false;
  // Set when no target graph has a circuit at all; the girth condition
  // holds for every metric and best_objective is +infinity.
  bool vacuous = false;
  std::vector<RestartTrace> traces;
  std::vector<std::string> active_circuit;  // binding circuit, if any
  std::string active_link;                  // its vertex, links mode only
};

// Multi-start subgradient ascent over log edge lengths with the first edge
// pinned to length 1.  Deterministic for a fixed (k, cfg).  Throws
// std::invalid_argument when k has no triangles.
SearchResult search_metric(const FlagComplex2& k, const SearchConfig& cfg);

// Recomputes every corner angle and girth in quad precision and re-runs
// the verdict; passes only if slack >= -tol there.  Throws on a
// metric/complex mismatch.
Verdict verify_certificate(const FlagComplex2& k, const PEMetric& m,
                           double tol, SearchMode mode);

struct K0Sample {
  int index = 0;
  std::array<double, 4> lengths{};  // circuits c1..c4
  double identity_residual = 0;
  double min_c3_c4 = 0;
};

struct K0Report {
  bool circuits_valid = false;
  std::array<int, 4> circuit_edge_counts{};
  bool multiset_identity = false;
  std::vector<K0Sample> samples;
  SearchResult global_search;
  double best_girth = 0;
  std::string conclusion;
};

// Checks the four reference circuits of the k0 fixture combinatorially,
// verifies the edge-multiset identity behind the length relation, samples
// random metrics, and embeds a global-mode search summary.
K0Report k0_report(unsigned long long seed = 7, int restarts = 100,
                   double tol = 1e-9);

}  // namespace catlink
