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

// Permutations of tensor factors and the linear constraints that make an
// operator on A (x) B_1 (x) ... (x) B_{k+1} invariant under permuting the
// B copies.
//
// Invariance under all (k+1)! permutations is imposed through the k
// adjacent transpositions (B_j B_{j+1}) only: they generate the symmetric
// group, so an operator fixed by each of them is fixed by every
// permutation.

#ifndef SYMEXT_SYMMETRY_HPP
#define SYMEXT_SYMMETRY_HPP

#include <vector>

#include "symext/linalg.hpp"
#include "symext/sparse_hermitian.hpp"

namespace symext::symmetry {

/// P_pi on (C^d)^{(x) m}: the content of factor j is moved to factor
/// pi[j]. Composition follows P_pi P_sigma = P_{pi o sigma}.
class PermutationOperator {
 public:
  PermutationOperator(std::vector<int> perm, int d);

  const std::vector<int>& permutation() const noexcept { return perm_; }
  int local_dim() const noexcept { return d_; }
  // image[x] is the basis index P_pi maps basis index x to.
  const std::vector<int>& image() const noexcept { return image_; }
  CMatrix matrix() const;

 private:
  std::vector<int> perm_;
  int d_;
  std::vector<int> image_;
};

PermutationOperator permutation_operator(const std::vector<int>& perm, int d);

std::vector<std::vector<int>> all_permutations(int m);

/// (1/k!) sum_pi P_pi on (C^d)^{(x) k}.
CMatrix symmetric_projector(int d, int k);

/// Orthonormal basis of Sym^k(C^d), one vector per occupation multiset,
/// multisets in lexicographic order. Columns of the returned matrix.
CMatrix symmetric_basis(int d, int k);
long long binomial(int n, int k);

/// Basis-index maps of the adjacent transpositions (B_j B_{j+1}),
/// j = 1..k, on A (x) B_1 (x) ... (x) B_{k+1}.
std::vector<std::vector<int>> adjacent_transposition_maps(int dim_a, int dim_b, int k);

/// Index map of I_A (x) P_pi with pi a permutation of the k+1 B copies.
std::vector<int> b_permutation_map(int dim_a, int dim_b, const std::vector<int>& perm);

/// Linearly independent Hermitian constraint matrices C_i with
/// <C_i, X> = 0 for all i iff X is invariant under every permutation of
/// the B copies. Side of the operators: dim_a * dim_b^(k+1), at most 128.
std::vector<SparseHermitian> invariant_constraint_basis(int dim_a, int dim_b, int k);

/// Group average of X over all permutations of the B copies.
CMatrix twirl(const CMatrix& x, int dim_a, int dim_b, int k);

inline constexpr int kMaxConstraintSide = 128;

}  // namespace symext::symmetry

#endif  // SYMEXT_SYMMETRY_HPP
