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

#include <boost/multiprecision/cpp_int.hpp>
#include <tuple>
#include <utility>
#include <vector>

#include "catlink/complex.hpp"

namespace catlink {

using BigInt = boost::multiprecision::cpp_int;

// Dense row-major integer matrix with exact entries.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * c) {}

  BigInt& at(int i, int j) { return data[std::size_t(i) * cols + j]; }
  const BigInt& at(int i, int j) const {
    return data[std::size_t(i) * cols + j];
  }

  static IntMatrix identity(int n);
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix&) const = default;
};

struct SnfResult {
  IntMatrix d;  // diagonal, nonnegative, each entry divides the next
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix v;  // unimodular, cols x cols
};

// U*A*V = D.  Pivot is the smallest nonzero absolute value, ties broken by
// lowest (row, col), so the result is deterministic.
SnfResult smith_normal_form(const IntMatrix& a);

// Nonzero diagonal of the Smith form, computed without transform tracking.
// Unit pivots are eliminated sparsely; whatever residue has no unit entry
// falls back to the dense routine.
std::vector<BigInt> elementary_divisors(const IntMatrix& a);

// Triplet entry of a sparse integer matrix: (row, col, value).
using SparseEntry = std::tuple<int, int, BigInt>;

// Same result as elementary_divisors on the equivalent dense matrix, but
// never materializes it; entries with equal (row, col) must not repeat.
std::vector<BigInt> elementary_divisors_sparse(
    int rows, int cols, const std::vector<SparseEntry>& entries);

// Fraction-free Bareiss determinant; a must be square.
BigInt determinant(const IntMatrix& a);

// Boundary operators with the lexicographic orientation convention: simplex
// vertices sorted, faces signed alternately.  Returns (d2, d1) with
// d1 * d2 = 0; rows and columns follow the sorted simplex order of k.
std::pair<IntMatrix, IntMatrix> boundary_matrices(const FlagComplex2& k);

struct HomologyResult {
  long long b0 = 0;
  long long b1 = 0;
  long long b2 = 0;
  // H0 is free, and H2 of a 2-complex is a subgroup of a free group, so the
  // only torsion lives in H1.
  std::vector<BigInt> torsion_h1;

  bool acyclic() const {
    return b0 == 1 && b1 == 0 && b2 == 0 && torsion_h1.empty();
  }
};

HomologyResult homology(const FlagComplex2& k);

}  // namespace catlink
