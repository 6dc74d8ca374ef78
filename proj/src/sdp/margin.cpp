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

// max t s.t. X - tI >= 0, X affine-feasible. With Y = X - tI and the trace
// tau fixed by the constraints, t = (tau - tr Y) / n, so the problem becomes
//
//   min tr Y  s.t.  <A_i - (g_i / n) I, Y> = b_i - g_i tau / n,  Y >= 0
//
// with g_i = <A_i, I>. Both this program and its dual are strictly feasible
// whenever the affine set is nonempty.

#include <cmath>
#include <limits>

#include "internal.hpp"
#include "symext/error.hpp"

namespace symext::sdp {

MarginResult feasibility_margin(const AffineSystem& system, const Options& options) {
  detail::check_blocks(system.block_sizes);
  for (const auto& c : system.constraints) detail::check_constraint(c, system.block_sizes);
  MarginResult result;

  const detail::Reduced red = detail::reduce(system.constraints, system.block_sizes);
  if (!red.consistent) {
    result.status = Status::kPrimalInfeasible;
    result.margin = -std::numeric_limits<double>::infinity();
    return result;
  }
  const auto& cons = red.constraints;
  const auto& sizes = system.block_sizes;
  double n = 0.0;
  for (int s : sizes) n += s;

  // Express I as a combination of the constraint matrices; tr X = w . b.
  const Eigen::VectorXd g = detail::identity_pairing(cons, sizes);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(g.size());
  if (g.size() > 0) w = detail::gram(cons, sizes).ldlt().solve(g);
  std::vector<CMatrix> combo = detail::adjoint(cons, w, sizes);
  for (auto& b : combo) b.diagonal().array() -= 1.0;
  if (g.size() == 0 || std::sqrt(detail::frobenius_sq(combo)) > 1e-8 * std::sqrt(n)) {
    throw ValidationError("feasibility margin needs constraints that fix tr X");
  }
  const double tau = w.dot(red.rhs);

  Problem shifted;
  shifted.block_sizes = sizes;
  shifted.sense = Sense::kMinimize;
  for (int s : sizes) shifted.objective.push_back(CMatrix::Identity(s, s));
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const double gi = g(static_cast<Eigen::Index>(i));
    Constraint c = cons[i];
    for (std::size_t b = 0; b < sizes.size(); ++b) c.add_identity(static_cast<int>(b), -gi / n);
    c.rhs = red.rhs(static_cast<Eigen::Index>(i)) - gi * tau / n;
    shifted.constraints.push_back(std::move(c));
  }

  result.detail = detail::solve_direct(shifted, options);
  result.status = result.detail.status;
  if (result.status != Status::kOptimal) return result;
  double tr_y = 0.0;
  for (const auto& b : result.detail.x) tr_y += b.trace().real();
  result.margin = (tau - tr_y) / n;
  for (const auto& b : result.detail.x) {
    CMatrix x = b;
    x.diagonal().array() += result.margin;
    result.witness.push_back(std::move(x));
  }
  return result;
}

}  // namespace symext::sdp
