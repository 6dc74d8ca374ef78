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

// k-extendibility of bipartite states.
//
// rho_AB is k-extendible when some state X on A (x) B_1 (x) ... (x) B_{k+1}
// is invariant under every permutation of the B copies and has AB_1
// marginal rho. Membership is decided through the feasibility margin
//
//   t* = max t  s.t.  X - tI >= 0,  X an invariant extension of rho,
//
// which is nonnegative exactly on the k-extendible set.

#ifndef SYMEXT_EXTENDIBILITY_HPP
#define SYMEXT_EXTENDIBILITY_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "symext/linalg.hpp"
#include "symext/sdp.hpp"

namespace symext {

inline constexpr int kMaxExtensionSide = 160;

enum class Method { kSdp, kAnalytic };
std::string_view method_name(Method method);

/// How the extension constraints are written.
enum class Formulation {
  // Every AB_j marginal equals rho; the witness is symmetrized afterwards.
  // Feasible sets (and margins) coincide with the invariant formulation
  // because averaging over permutations preserves X - tI >= 0.
  kMarginals,
  // Explicit invariance constraints plus the AB_1 marginal.
  kInvariantBasis,
};

struct ExtendibilityOptions {
  sdp::Options solver;
  Formulation formulation = Formulation::kMarginals;
  double boundary_tol = 1e-6;
};

struct ExtendibilityVerdict {
  int k = 1;
  bool feasible = false;
  bool boundary = false;  // |margin| <= boundary tolerance
  double margin = 0.0;
  std::optional<DensityMatrix> witness;  // on [A, B_1, ..., B_{k+1}]
  Method method = Method::kSdp;
};

/// SDP test. ValidationError when d_A d_B^(k+1) > kMaxExtensionSide,
/// NumericalError when the solver fails.
ExtendibilityVerdict is_k_extendible(const DensityMatrix& rho, int k,
                                     const ExtendibilityOptions& options = {});

/// The affine system of the extension problem (A factors first).
sdp::AffineSystem extension_system(const DensityMatrix& rho, int k,
                                   Formulation formulation = Formulation::kMarginals);

/// Closed-form k = 1 test for two qubits:
/// margin = tr rho_B^2 - tr rho^2 + 4 sqrt(det rho), feasible iff margin >= 0.
ExtendibilityVerdict two_qubit_extendible_analytic(const DensityMatrix& rho);

/// For a pure state on A (x) B^{(x)(k+1)} that is invariant (up to sign)
/// under permutations of the B copies: do rho_{AB_1} and rho_{B_2..B_{k+1}}
/// have the same ordered spectrum to `tolerance`?
bool pure_extension_spectral_check(const CVector& psi, int dim_a, int dim_b, int k,
                                   double tolerance = 1e-8);

struct ExtendibleNumberOptions {
  int k = 1;
  int trials = 4;           // random starts per rank
  int max_evaluations = 80; // Nelder-Mead budget per start
  double feasible_tol = 1e-6;
  // Smallest accepted r-th singular value of a rank-r filter (top one is 1).
  double min_singular_ratio = 1e-2;
};

struct ExtendibleNumberReport {
  int eta_lower = 1;
  int rank_a = 1;
  CMatrix best_filter;
  double margin_at_best = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
};

/// Heuristic lower bound on the largest filter rank r such that
/// (F (x) I) rho (F (x) I)^dagger, normalized, is extendible.
ExtendibleNumberReport extendible_number(const DensityMatrix& rho, std::uint64_t seed,
                                         const ExtendibleNumberOptions& options = {});

/// (F (x) I) rho (F (x) I)^dagger / tr, on the same profile. ValidationError
/// when the outcome has (numerically) zero probability.
DensityMatrix apply_local_filter(const DensityMatrix& rho, const CMatrix& filter_a);

struct LoccResult {
  DensityMatrix state;
  double probability = 0.0;
};

/// sum_ij (A_i (x) B_ij) rho (A_i (x) B_ij)^dagger, renormalized. An empty
/// b_ops[i] stands for the identity channel on B.
LoccResult one_way_locc_apply(const DensityMatrix& rho, const std::vector<CMatrix>& a_ops,
                              const std::vector<std::vector<CMatrix>>& b_ops);

}  // namespace symext

#endif  // SYMEXT_EXTENDIBILITY_HPP
