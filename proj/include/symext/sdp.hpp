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

// Small dense semidefinite programs over block-diagonal Hermitian
// variables, in the standard primal form
//
//   min / max  sum_b Re tr(C_b X_b)
//   s.t.       <A_i, X> = b_i,  i = 1..m
//              X_b >= 0 for every block b
//
// solved by an infeasible primal-dual path-following method with
// Nesterov-Todd scaling. Alongside the solver live the feasibility margin
// (max t with X - tI >= 0 on an affine set) and an alternating-projection
// feasibility oracle that shares no code with the interior-point path.

#ifndef SYMEXT_SDP_HPP
#define SYMEXT_SDP_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symext/linalg.hpp"
#include "symext/sparse_hermitian.hpp"

namespace symext::sdp {

struct Entry {
  int block = 0;
  int row = 0;
  int col = 0;
  cd value;
};

/// Linear functional <A, X> = sum_b Re tr(A_b X_b) where each A_b is a
/// sparse Hermitian matrix plus an optional multiple of the identity.
class Constraint {
 public:
  Constraint() = default;
  explicit Constraint(double rhs) : rhs(rhs) {}

  void add(int block, int row, int col, cd value);
  void add_real_part(int block, int p, int q, double coef);
  void add_imag_part(int block, int p, int q, double coef);
  void add_identity(int block, double coef);
  void add_matrix(int block, const SparseHermitian& m, double scale = 1.0);
  void add_dense(int block, const CMatrix& m, double scale = 1.0);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  const std::vector<std::pair<int, double>>& identity_terms() const noexcept {
    return identity_;
  }

  // Sorts entries by (block, col, row), merges duplicates, drops zeros.
  void compress();
  double evaluate(const std::vector<CMatrix>& x) const;

  double rhs = 0.0;

 private:
  std::vector<Entry> entries_;
  std::vector<std::pair<int, double>> identity_;
};

enum class Sense { kMinimize, kMaximize };

struct Problem {
  std::vector<int> block_sizes;
  std::vector<CMatrix> objective;  // per block; an empty matrix means zero
  std::vector<Constraint> constraints;
  Sense sense = Sense::kMinimize;

  int add_block(int side);
  void validate() const;
};

enum class Status { kOptimal, kPrimalInfeasible, kDualInfeasible, kNumericalFailure };
std::string_view status_name(Status status);

struct Options {
  double gap_tol = 1e-6;       // relative duality gap
  double residual_tol = 1e-7;  // relative primal and dual residuals
  double psd_slack = 1e-8;
  int max_iterations = 200;
  double step_fraction = 0.98;
  double regularization = 1e-12;
  // After a breakdown the best iterate still counts as optimal when its
  // residuals are within relaxed_factor * residual_tol.
  double relaxed_factor = 100.0;
  // Solve the 2n real symmetric embedding [[Re, -Im], [Im, Re]] instead of
  // the complex Hermitian problem.
  bool real_embedding = false;
  // Appends "iteration,gap,primal_residual,dual_residual" rows when set.
  std::string trace_csv;
};

struct Solution {
  Status status = Status::kNumericalFailure;
  std::vector<CMatrix> x;  // primal blocks
  std::vector<CMatrix> s;  // dual slack blocks
  Eigen::VectorXd y;       // one multiplier per input constraint
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  double gap = 0.0;  // <X, S>
  double relative_gap = 0.0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  int iterations = 0;
  bool reduced_accuracy = false;  // accepted under the relaxed tolerance
};

Solution solve(const Problem& problem, const Options& options = {});

Eigen::MatrixXd embed_real(const CMatrix& h);
CMatrix unembed_real(const Eigen::MatrixXd& r);

/// Affine set {X block-diagonal Hermitian : <A_i, X> = b_i}.
struct AffineSystem {
  std::vector<int> block_sizes;
  std::vector<Constraint> constraints;
};

struct MarginResult {
  Status status = Status::kNumericalFailure;
  double margin = 0.0;  // t*; >= 0 certifies {X >= 0} meets the affine set
  std::vector<CMatrix> witness;
  Solution detail;
};

/// max t s.t. X - tI >= 0 and X in the affine set. The affine constraints
/// must imply a fixed value of tr X (otherwise t* may be unbounded);
/// ValidationError when they do not.
MarginResult feasibility_margin(const AffineSystem& system, const Options& options = {});

enum class Verdict { kFeasible, kInfeasible, kUndecided };
std::string_view verdict_name(Verdict verdict);

struct ProjectionOptions {
  int max_iterations = 20000;
  double feasible_tol = 1e-7;  // constraint residual at a PSD iterate
  double gap_floor = 1e-6;     // smallest inter-set gap reported as infeasible
  // Relative gap decrease over the trailing quarter of the run below which
  // the gap is considered stable.
  double stall_tol = 1e-4;
};

struct ProjectionResult {
  Verdict verdict = Verdict::kUndecided;
  std::vector<CMatrix> x;  // last PSD iterate
  double residual = 0.0;   // constraint residual of x
  double gap = 0.0;        // distance between the last PSD and affine iterates
  int iterations = 0;
};

/// Dykstra-style alternating projection between the PSD cone (eigenvalue
/// clipping per block) and the affine set (least-squares projection).
ProjectionResult project_feasibility(const AffineSystem& system,
                                     const ProjectionOptions& options = {});

}  // namespace symext::sdp

#endif  // SYMEXT_SDP_HPP
