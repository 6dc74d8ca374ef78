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

// Affine constraints tying an extension variable X on
// A (x) B_1 (x) ... (x) B_{k+1} to a bipartite state. Shared by the
// extendibility, BSA and distance programs. Not installed.

#ifndef SYMEXT_EXTENSION_BUILDER_HPP
#define SYMEXT_EXTENSION_BUILDER_HPP

#include <vector>

#include "symext/extendibility.hpp"
#include "symext/sdp.hpp"

namespace symext::detail {

// The state with all A factors moved in front of all B factors.
struct CanonicalState {
  CMatrix mat;
  int dim_a = 0;
  int dim_b = 0;
  std::vector<int> dims;  // A factors, then B factors
  std::vector<Party> parties;
  DimensionProfile profile() const { return DimensionProfile(dims, parties); }
};
CanonicalState canonical(const DensityMatrix& rho);

struct ExtensionShape {
  int dim_a;
  int dim_b;
  int k;
  int side() const;
  int pair_side() const { return dim_a * dim_b; }
};

void check_extension_size(const ExtensionShape& shape);

// Number of assignments of the k copies other than B_j.
int rest_count(const ExtensionShape& shape);

// Full basis indices of |p>_{AB_j} (x) |rest>, p over the pair basis.
std::vector<int> pair_rows(const ExtensionShape& shape, int j, int rest);

// Entrywise constraints  marginal_j(X) + sum_s sign_s Y_s = target  over
// the (p <= q) entries of the AB_j marginal, for every j in `copies`.
// `x_block` indexes X; `extra` lists (block, sign) pairs of pair-side
// blocks entering each equation.
void add_marginal_constraints(std::vector<sdp::Constraint>& out, const ExtensionShape& shape,
                              int x_block, const std::vector<int>& copies,
                              const std::vector<std::pair<int, double>>& extra,
                              const CMatrix& target);

// Constraints making X invariant under every permutation of the B copies.
void add_invariance_constraints(std::vector<sdp::Constraint>& out, const ExtensionShape& shape,
                                int x_block);

// Full constraint set for "X extends the state" under the chosen formulation.
std::vector<sdp::Constraint> extension_constraints(const ExtensionShape& shape,
                                                   const CMatrix& target,
                                                   Formulation formulation, int x_block = 0);

// AB_1 marginal of an operator on A (x) B^{(x)(k+1)}.
CMatrix first_marginal(const CMatrix& x, const ExtensionShape& shape);

DimensionProfile extension_profile(const ExtensionShape& shape);

}  // namespace symext::detail

#endif  // SYMEXT_EXTENSION_BUILDER_HPP
