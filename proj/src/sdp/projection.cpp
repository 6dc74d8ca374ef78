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

// Dykstra iteration between the PSD cone and an affine set. Only the cone
// step carries a correction term: the affine set is a translated subspace,
// for which plain projection already converges to the nearest point.

#include <algorithm>
#include <cmath>
#include <limits>

#include "internal.hpp"

namespace symext::sdp {
namespace {

CMatrix clip_psd(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(m));
  const Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

ProjectionResult project_feasibility(const AffineSystem& system, const ProjectionOptions& options) {
  detail::check_blocks(system.block_sizes);
  for (const auto& c : system.constraints) detail::check_constraint(c, system.block_sizes);
  const auto& sizes = system.block_sizes;
  ProjectionResult result;

  const detail::Reduced red = detail::reduce(system.constraints, sizes);
  if (!red.consistent) {
    // Empty affine set: nothing to project onto.
    result.verdict = Verdict::kInfeasible;
    result.gap = std::numeric_limits<double>::infinity();
    return result;
  }
  const auto& cons = red.constraints;
  Eigen::LDLT<Eigen::MatrixXd> gram_solver;
  if (!cons.empty()) gram_solver.compute(detail::gram(cons, sizes));

  auto project_affine = [&](std::vector<CMatrix> x) {
    if (cons.empty()) return x;
    const Eigen::VectorXd r = detail::apply(cons, x) - red.rhs;
    const Eigen::VectorXd z = gram_solver.solve(r);
    const auto corr = detail::adjoint(cons, z, sizes);
    for (std::size_t b = 0; b < x.size(); ++b) x[b] -= corr[b];
    return x;
  };
  auto residual = [&](const std::vector<CMatrix>& x) {
    return cons.empty() ? 0.0 : (detail::apply(cons, x) - red.rhs).norm();
  };

  std::vector<CMatrix> x;
  std::vector<CMatrix> p;
  for (int s : sizes) {
    x.push_back(CMatrix::Zero(s, s));
    p.push_back(CMatrix::Zero(s, s));
  }
  x = project_affine(x);
  std::vector<CMatrix> y(x.size());
  std::vector<double> gaps;
  gaps.reserve(static_cast<std::size_t>(std::max(1, options.max_iterations)));

  for (int it = 1; it <= options.max_iterations; ++it) {
    double gap_sq = 0.0;
    for (std::size_t b = 0; b < x.size(); ++b) {
      const CMatrix shifted = x[b] + p[b];
      y[b] = clip_psd(shifted);
      p[b] = shifted - y[b];
    }
    x = project_affine(y);
    for (std::size_t b = 0; b < x.size(); ++b) gap_sq += (y[b] - x[b]).squaredNorm();
    const double gap = std::sqrt(gap_sq);
    gaps.push_back(gap);
    result.iterations = it;
    result.gap = gap;
    result.residual = residual(y);
    if (result.residual <= options.feasible_tol) {
      result.verdict = Verdict::kFeasible;
      result.x = y;
      return result;
    }
    const int window = it / 4;
    if (it >= 200 && window > 0 && gap > options.gap_floor) {
      const double earlier = gaps[static_cast<std::size_t>(it - 1 - window)];
      if (earlier - gap < options.stall_tol * gap) {
        result.verdict = Verdict::kInfeasible;
        result.x = y;
        return result;
      }
    }
  }
  result.verdict = Verdict::kUndecided;
  result.x = y;
  return result;
}

}  // namespace symext::sdp
