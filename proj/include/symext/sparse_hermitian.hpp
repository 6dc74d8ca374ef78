// Copyright 2026 The symext Authors.
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

#ifndef SYMEXT_SPARSE_HERMITIAN_HPP
#define SYMEXT_SPARSE_HERMITIAN_HPP

#include <vector>

#include "symext/linalg.hpp"

namespace symext {

struct Triplet {
  int row = 0;
  int col = 0;
  cd value;
};

/// Sparse Hermitian matrix used as a linear functional X -> Re tr(M X).
/// Entries are stored in full (both triangles); callers keep them
/// Hermitian by going through add_real_part / add_imag_part.
class SparseHermitian {
 public:
  explicit SparseHermitian(int side = 0) : side_(side) {}

  int side() const noexcept { return side_; }
  const std::vector<Triplet>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  void add(int row, int col, cd value);
  // Adds M with <M, X> = coef * Re X(p, q).
  void add_real_part(int p, int q, double coef);
  // Adds M with <M, X> = coef * Im X(p, q).
  void add_imag_part(int p, int q, double coef);
  void add_identity(double coef);

  // Sorts by (col, row), merges duplicates and drops exact zeros.
  void compress();

  double pair(const CMatrix& x) const;
  CMatrix dense() const;

 private:
  int side_;
  std::vector<Triplet> entries_;
};

// Re tr(a b); both must be compressed.
double inner(const SparseHermitian& a, const SparseHermitian& b);

/// Result of a greedy rank-revealing pass over a Gram matrix: the indices
/// kept (in input order) and, for each dropped index, its coefficients over
/// the kept ones in the least-squares sense.
struct IndependentSubset {
  std::vector<int> kept;
  std::vector<int> dropped;
  std::vector<Eigen::VectorXd> dropped_coefficients;
};

IndependentSubset greedy_independent(const Eigen::MatrixXd& gram, double rel_tol);

}  // namespace symext

#endif  // SYMEXT_SPARSE_HERMITIAN_HPP
