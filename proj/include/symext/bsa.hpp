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

// Best symmetric-extendible approximation
//
//   rho = lambda sigma_ext + (1 - lambda) sigma_next,  sigma_ext extendible,
//
// with the largest weight lambda_max, computed as
//
//   max tr Z  s.t.  Z = Tr_{B_2..} X,  X >= 0 invariant,  rho - Z >= 0.
//
// Also the derived monotone 1 - lambda_max, the max-relative entropy and
// the trace-norm distance to the extendible set.

#ifndef SYMEXT_BSA_HPP
#define SYMEXT_BSA_HPP

#include <optional>

#include "symext/linalg.hpp"
#include "symext/sdp.hpp"

namespace symext {

struct BsaOptions {
  int k = 1;
  sdp::Options solver;
};

struct BsaDecomposition {
  double lambda_max = 0.0;
  std::optional<DensityMatrix> sigma_ext;   // absent when lambda_max < 1e-8
  std::optional<DensityMatrix> sigma_next;  // absent when 1 - lambda_max < 1e-8
  // Normalized invariant extension of sigma_ext on [A, B_1, ..., B_{k+1}].
  std::optional<DensityMatrix> witness;
  int k = 1;
};

BsaDecomposition lambda_max(const DensityMatrix& rho, const BsaOptions& options = {});

double ess_monotone(const DensityMatrix& rho, const BsaOptions& options = {});

/// log2 min{lambda : sigma <= lambda rho}; +infinity when the support of
/// sigma leaves the support of rho (tested at 1e-10).
double d_max(const DensityMatrix& sigma, const DensityMatrix& rho);

struct DistanceResult {
  double epsilon = 0.0;  // min ||rho - sigma||_1 over extendible sigma
  DensityMatrix nearest;
  DensityMatrix witness;
};

DistanceResult distance_to_extendible_set(const DensityMatrix& rho,
                                          const BsaOptions& options = {});

}  // namespace symext

#endif  // SYMEXT_BSA_HPP
