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

#include <cmath>
#include <numbers>

#include "doctest.h"

#include "catlink/complex.hpp"
#include "catlink/metric.hpp"
#include "catlink/search.hpp"

using namespace catlink;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

SearchConfig quick(SearchMode mode, int restarts, unsigned long long seed) {
  SearchConfig cfg;
  cfg.mode = mode;
  cfg.restarts = restarts;
  cfg.seed = seed;
  return cfg;
}

double recompute_objective(const FlagComplex2& k, const PEMetric& m,
                           SearchMode mode) {
  if (mode == SearchMode::kGlobal) {
    const auto c = girth(build_L(k, m));
    return c ? c->length - kTwoPi
             : std::numeric_limits<double>::infinity();
  }
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& v : k.vertices) {
    const auto c = girth(build_link(k, m, v));
    if (c) worst = std::min(worst, c->length - kTwoPi);
  }
  return worst;
}

}  // namespace

TEST_CASE("a single simplex pins the global objective at zero") {
  const auto res = search_metric(fixture("triangle"),
                                 quick(SearchMode::kGlobal, 3, 1));
  CHECK(res.feasible);
  CHECK_FALSE(res.vacuous);
  CHECK(res.best_objective == 0.0);
  CHECK(res.active_circuit.size() == 6);
  CHECK(verify_certificate(fixture("triangle"), res.best_metric, 1e-9,
                           SearchMode::kGlobal)
            .passes);
}

TEST_CASE("links mode on a single simplex is vacuous") {
  const auto res = search_metric(fixture("triangle"),
                                 quick(SearchMode::kLinks, 2, 1));
  CHECK(res.feasible);
  CHECK(res.vacuous);
  CHECK(res.best_objective == std::numeric_limits<double>::infinity());
  for (const auto& [e, l] : res.best_metric.lengths) CHECK(l == 1.0);
}

TEST_CASE("k0 admits a metric passing the link condition") {
  const auto k = fixture("k0");
  const auto res = search_metric(k, quick(SearchMode::kLinks, 8, 1));
  CHECK(res.feasible);
  CHECK_FALSE(res.vacuous);
  CHECK(res.best_objective >= 0.0);
  const auto cert = verify_certificate(k, res.best_metric, 1e-9,
                                       SearchMode::kLinks);
  CHECK(cert.passes);
  const auto verdicts = check_link_condition(k, res.best_metric, 1e-9);
  for (const auto& [v, verdict] : verdicts) CHECK(verdict.passes);
}

TEST_CASE("k0 never reaches girth 2*pi in global mode") {
  const auto k = fixture("k0");
  const auto res = search_metric(k, quick(SearchMode::kGlobal, 10, 7));
  CHECK_FALSE(res.feasible);
  CHECK(res.best_objective < -1e-3);
  CHECK(res.traces.size() == 10);
  for (const auto& t : res.traces) {
    CHECK(t.best_objective <= res.best_objective);
    CHECK(t.evals > 0);
  }
}

TEST_CASE("searches are deterministic") {
  const auto k = fixture("k0");
  const auto a = search_metric(k, quick(SearchMode::kGlobal, 4, 3));
  const auto b = search_metric(k, quick(SearchMode::kGlobal, 4, 3));
  CHECK(a.best_objective == b.best_objective);
  CHECK(a.best_metric == b.best_metric);
  REQUIRE(a.traces.size() == b.traces.size());
  for (size_t i = 0; i < a.traces.size(); ++i) {
    CHECK(a.traces[i].best_objective == b.traces[i].best_objective);
    CHECK(a.traces[i].evals == b.traces[i].evals);
  }
  const auto c = search_metric(k, quick(SearchMode::kGlobal, 4, 4));
  CHECK(c.best_metric != a.best_metric);  // seed actually matters
}

TEST_CASE("stored objectives match an independent recomputation") {
  const auto k = fixture("k0");
  for (const auto mode : {SearchMode::kLinks, SearchMode::kGlobal}) {
    const auto res = search_metric(k, quick(mode, 3, 11));
    const double again = recompute_objective(k, res.best_metric, mode);
    CHECK(res.best_objective == doctest::Approx(again).epsilon(1e-12));
  }
}

TEST_CASE("search rejects bad inputs") {
  FlagComplex2 no_triangles;
  no_triangles.add_vertex("a");
  no_triangles.add_vertex("b");
  no_triangles.add_edge("a", "b");
  CHECK_THROWS_AS(search_metric(no_triangles,
                                quick(SearchMode::kGlobal, 1, 0)),
                  std::invalid_argument);
  SearchConfig cfg = quick(SearchMode::kGlobal, 0, 0);
  CHECK_THROWS_AS(search_metric(fixture("triangle"), cfg),
                  std::invalid_argument);
}

TEST_CASE("certificates are checked at elevated precision") {
  const auto k = fixture("k0");
  PEMetric eq;
  for (const auto& e : k.edges) eq.lengths[e] = 1.0;
  const auto v = verify_certificate(k, eq, 1e-9, SearchMode::kLinks);
  CHECK_FALSE(v.passes);
  CHECK(v.witness == std::vector<std::string>{"p", "u1", "q", "u3"});
  CHECK(v.witness_length == doctest::Approx(4 * std::numbers::pi / 3));
  CHECK(v.slack == doctest::Approx(4 * std::numbers::pi / 3 - kTwoPi));
  // Global mode on two_triangles: every circuit has length exactly 2*pi.
  const auto k2 = fixture("two_triangles");
  PEMetric eq2;
  for (const auto& e : k2.edges) eq2.lengths[e] = 1.0;
  const auto v2 = verify_certificate(k2, eq2, 1e-9, SearchMode::kGlobal);
  CHECK(v2.passes);
  CHECK(v2.boundary);
  // Perturbing one length keeps the case on the boundary at best: each
  // triangle's own circuit still sums to exactly 2*pi.
  PEMetric bad = eq2;
  bad.lengths.begin()->second = 0.5;
  const auto v3 = verify_certificate(k2, bad, 1e-9, SearchMode::kGlobal);
  CHECK((!v3.passes || v3.boundary));
  CHECK(v3.slack <= 1e-9);
  PEMetric mismatched = eq2;
  mismatched.lengths.erase(mismatched.lengths.begin());
  CHECK_THROWS_AS(
      verify_certificate(k2, mismatched, 1e-9, SearchMode::kGlobal),
      std::invalid_argument);
}

TEST_CASE("the k0 report validates the reference circuits") {
  const auto rep = k0_report(7, 10, 1e-9);
  CHECK(rep.circuits_valid);
  CHECK(rep.circuit_edge_counts == std::array<int, 4>{10, 6, 6, 6});
  CHECK(rep.multiset_identity);
  REQUIRE(rep.samples.size() == 50);
  for (const auto& s : rep.samples) {
    CHECK(std::fabs(s.identity_residual) < 1e-12);
    CHECK(s.min_c3_c4 ==
          doctest::Approx(std::min(s.lengths[2], s.lengths[3]))
              .epsilon(1e-15));
    for (const double l : s.lengths) CHECK(l > 0);
    // The length identity rearranged: c3 + c4 < c1 + c2 strictly, since
    // the b-h and d-k edges have positive length.
    CHECK(s.lengths[2] + s.lengths[3] < s.lengths[0] + s.lengths[1]);
  }
  CHECK_FALSE(rep.global_search.feasible);
  CHECK(rep.best_girth == doctest::Approx(kTwoPi +
                                          rep.global_search.best_objective));
  CHECK(rep.best_girth < kTwoPi - 1e-3);
  CHECK_FALSE(rep.conclusion.empty());
}
