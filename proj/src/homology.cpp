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

#include "catlink/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace catlink {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("shape mismatch");
  IntMatrix out(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const BigInt& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols; ++j) {
        const BigInt& b = o.at(k, j);
        if (b != 0) out.at(i, j) += a * b;
      }
    }
  return out;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row a -= q * row b
void row_sub(IntMatrix& m, int a, const BigInt& q, int b) {
  if (q == 0) return;
  for (int j = 0; j < m.cols; ++j) m.at(a, j) -= q * m.at(b, j);
}

void col_sub(IntMatrix& m, int a, const BigInt& q, int b) {
  if (q == 0) return;
  for (int i = 0; i < m.rows; ++i) m.at(i, a) -= q * m.at(i, b);
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& input) {
  SnfResult r;
  r.d = input;
  r.u = IntMatrix::identity(input.rows);
  r.v = IntMatrix::identity(input.cols);
  IntMatrix& a = r.d;
  const int n = std::min(a.rows, a.cols);
  for (int t = 0; t < n; ++t) {
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = t; i < a.rows; ++i)
        for (int j = t; j < a.cols; ++j) {
          if (a.at(i, j) == 0) continue;
          if (pi < 0 || abs(a.at(i, j)) < abs(a.at(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        t = n;  // remainder of the matrix is zero
        break;
      }
      swap_rows(a, t, pi);
      swap_rows(r.u, t, pi);
      swap_cols(a, t, pj);
      swap_cols(r.v, t, pj);
      bool clean = true;
      for (int i = t + 1; i < a.rows; ++i) {
        if (a.at(i, t) == 0) continue;
        const BigInt q = a.at(i, t) / a.at(t, t);
        row_sub(a, i, q, t);
        row_sub(r.u, i, q, t);
        if (a.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < a.cols; ++j) {
        if (a.at(t, j) == 0) continue;
        const BigInt q = a.at(t, j) / a.at(t, t);
        col_sub(a, j, q, t);
        col_sub(r.v, j, q, t);
        if (a.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Row and column t are clear; pull in any entry the pivot misses so
      // the divisibility chain holds.
      int bi = -1, bj = -1;
      for (int i = t + 1; i < a.rows && bi < 0; ++i)
        for (int j = t + 1; j < a.cols; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      row_sub(a, t, BigInt(-1), bi);
      row_sub(r.u, t, BigInt(-1), bi);
      (void)bj;
    }
  }
  for (int t = 0; t < n; ++t)
    if (a.at(t, t) < 0) {
      for (int j = 0; j < a.cols; ++j) a.at(t, j) = -a.at(t, j);
      for (int j = 0; j < r.u.cols; ++j) r.u.at(t, j) = -r.u.at(t, j);
    }
  return r;
}

namespace {

// Sparse unit-pivot elimination; returns leftover entries densely.
struct SparseElim {
  std::vector<std::map<int, BigInt>> row;
  std::vector<std::set<int>> col;
  int units = 0;

  SparseElim(int rows, int cols, const std::vector<SparseEntry>& entries)
      : row(rows), col(cols) {
    for (const auto& [i, j, v] : entries)
      if (v != 0) {
        row[i][j] = v;
        col[j].insert(i);
      }
  }

  void set(int i, int j, const BigInt& v) {
    if (v == 0) {
      row[i].erase(j);
      col[j].erase(i);
    } else {
      row[i][j] = v;
      col[j].insert(i);
    }
  }

  bool step() {
    int pi = -1, pj = -1;
    long long best = -1;
    for (int i = 0; i < static_cast<int>(row.size()) && best != 0; ++i)
      for (const auto& [j, v] : row[i]) {
        if (v != 1 && v != -1) continue;
        const long long fill = static_cast<long long>(row[i].size() - 1) *
                               static_cast<long long>(col[j].size() - 1);
        if (best < 0 || fill < best) {
          best = fill;
          pi = i;
          pj = j;
        }
        if (best == 0) break;
      }
    if (pi < 0) return false;
    const BigInt pivot = row[pi].at(pj);
    const std::set<int> col_rows = col[pj];
    const std::map<int, BigInt> pivot_row = row[pi];
    for (int i : col_rows) {
      if (i == pi) continue;
      const BigInt q = row[i].at(pj) * pivot;  // pivot inverse is itself
      for (const auto& [j, v] : pivot_row) {
        BigInt cur = 0;
        auto it = row[i].find(j);
        if (it != row[i].end()) cur = it->second;
        set(i, j, cur - q * v);
      }
    }
    for (const auto& [j, v] : pivot_row) set(pi, j, 0);
    ++units;
    return true;
  }
};

}  // namespace

std::vector<BigInt> elementary_divisors(const IntMatrix& a) {
  std::vector<SparseEntry> entries;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (a.at(i, j) != 0) entries.emplace_back(i, j, a.at(i, j));
  return elementary_divisors_sparse(a.rows, a.cols, entries);
}

std::vector<BigInt> elementary_divisors_sparse(
    int rows, int cols, const std::vector<SparseEntry>& entries) {
  SparseElim s(rows, cols, entries);
  while (s.step()) {
  }
  std::vector<int> live_rows, live_cols;
  std::set<int> colset;
  for (int i = 0; i < static_cast<int>(s.row.size()); ++i)
    if (!s.row[i].empty()) {
      live_rows.push_back(i);
      for (const auto& [j, v] : s.row[i]) colset.insert(j);
    }
  live_cols.assign(colset.begin(), colset.end());
  std::vector<BigInt> divisors(s.units, BigInt(1));
  if (!live_rows.empty()) {
    IntMatrix rest(static_cast<int>(live_rows.size()),
                   static_cast<int>(live_cols.size()));
    for (int i = 0; i < rest.rows; ++i)
      for (const auto& [j, v] : s.row[live_rows[i]]) {
        const int jj = static_cast<int>(
            std::lower_bound(live_cols.begin(), live_cols.end(), j) -
            live_cols.begin());
        rest.at(i, jj) = v;
      }
    SnfResult snf = smith_normal_form(rest);
    for (int t = 0; t < std::min(rest.rows, rest.cols); ++t)
      if (snf.d.at(t, t) != 0) divisors.push_back(snf.d.at(t, t));
  }
  return divisors;
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows != a.cols) throw std::invalid_argument("not square");
  const int n = a.rows;
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      swap_rows(m, k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) =
            (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::pair<IntMatrix, IntMatrix> boundary_matrices(const FlagComplex2& k) {
  std::map<Vertex, int> vid;
  std::map<Edge, int> eid;
  std::map<Triangle, int> tid;
  for (const auto& v : k.vertices) vid.emplace(v, vid.size());
  for (const auto& e : k.edges) eid.emplace(e, eid.size());
  for (const auto& t : k.triangles) tid.emplace(t, tid.size());
  IntMatrix d1(static_cast<int>(vid.size()), static_cast<int>(eid.size()));
  for (const auto& [e, j] : eid) {
    d1.at(vid.at(e[0]), j) = -1;
    d1.at(vid.at(e[1]), j) = 1;
  }
  IntMatrix d2(static_cast<int>(eid.size()), static_cast<int>(tid.size()));
  for (const auto& [t, j] : tid) {
    d2.at(eid.at(make_edge(t[1], t[2])), j) = 1;
    d2.at(eid.at(make_edge(t[0], t[2])), j) = -1;
    d2.at(eid.at(make_edge(t[0], t[1])), j) = 1;
  }
  return {d2, d1};
}

HomologyResult homology(const FlagComplex2& k) {
  std::map<Vertex, int> vid;
  std::map<Edge, int> eid;
  for (const auto& v : k.vertices) vid.emplace(v, vid.size());
  for (const auto& e : k.edges) eid.emplace(e, eid.size());
  std::vector<SparseEntry> e1, e2;
  for (const auto& [e, j] : eid) {
    e1.emplace_back(vid.at(e[0]), j, -1);
    e1.emplace_back(vid.at(e[1]), j, 1);
  }
  int tj = 0;
  for (const auto& t : k.triangles) {
    e2.emplace_back(eid.at(make_edge(t[1], t[2])), tj, 1);
    e2.emplace_back(eid.at(make_edge(t[0], t[2])), tj, -1);
    e2.emplace_back(eid.at(make_edge(t[0], t[1])), tj, 1);
    ++tj;
  }
  const auto div1 = elementary_divisors_sparse(
      static_cast<int>(vid.size()), static_cast<int>(eid.size()), e1);
  const auto div2 = elementary_divisors_sparse(
      static_cast<int>(eid.size()), tj, e2);
  const long long rank1 = static_cast<long long>(div1.size());
  const long long rank2 = static_cast<long long>(div2.size());
  HomologyResult h;
  h.b0 = static_cast<long long>(k.vertices.size()) - rank1;
  h.b1 = static_cast<long long>(k.edges.size()) - rank1 - rank2;
  h.b2 = static_cast<long long>(k.triangles.size()) - rank2;
  for (const auto& d : div2)
    if (d > 1) h.torsion_h1.push_back(d);
  return h;
}

}  // namespace catlink
