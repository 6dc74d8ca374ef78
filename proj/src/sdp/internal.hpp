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

// Helpers shared by the interior-point solver, the margin reformulation
// and the projection oracle. Not installed.

#ifndef SYMEXT_SDP_INTERNAL_HPP
#define SYMEXT_SDP_INTERNAL_HPP

#include <vector>

#include "symext/sdp.hpp"

namespace symext::sdp::detail {

void check_blocks(const std::vector<int>& block_sizes);
void check_constraint(const Constraint& c, const std::vector<int>& block_sizes);

Eigen::MatrixXd gram(const std::vector<Constraint>& cons, const std::vector<int>& block_sizes);
// <A_i, I>
Eigen::VectorXd identity_pairing(const std::vector<Constraint>& cons,
                                 const std::vector<int>& block_sizes);

Eigen::VectorXd apply(const std::vector<Constraint>& cons, const std::vector<CMatrix>& x);
std::vector<CMatrix> adjoint(const std::vector<Constraint>& cons, const Eigen::VectorXd& z,
                             const std::vector<int>& block_sizes);

struct Reduced {
  std::vector<Constraint> constraints;  // compressed, linearly independent
  std::vector<int> kept;                // indices into the input list
  Eigen::VectorXd rhs;
  bool consistent = true;
  double worst_inconsistency = 0.0;
};

// Compresses, drops linearly dependent constraints, and checks that the
// dropped right-hand sides agree with the kept ones.
Reduced reduce(const std::vector<Constraint>& cons, const std::vector<int>& block_sizes);

double frobenius_sq(const std::vector<CMatrix>& blocks);

// solve() without the phase-one fallback; used by the margin reformulation.
Solution solve_direct(const Problem& problem, const Options& options);

}  // namespace symext::sdp::detail

#endif  // SYMEXT_SDP_INTERNAL_HPP
