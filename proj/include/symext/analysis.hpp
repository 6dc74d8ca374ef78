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

// Derived quantities and numerical experiments: coherent information,
// entropy continuity checks, the one-way key bound, Werner scans, the
// randomized two-copy filtering search and the locking demonstration.

#ifndef SYMEXT_ANALYSIS_HPP
#define SYMEXT_ANALYSIS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "symext/extendibility.hpp"
#include "symext/linalg.hpp"

namespace symext::analysis {

/// S(B) - S(AB) in bits.
double coherent_information(const DensityMatrix& rho);
double conditional_entropy(const DensityMatrix& rho);  // S(AB) - S(B)

/// 4 eps log2 d_A + 2 eta(1 - eps) + 2 eta(eps), with the eta arguments
/// clamped to [0, 1] so that trace distances above one stay admissible.
double continuity_bound(double eps, int dim_a);

struct EntropyBoundCheck {
  double epsilon = 0.0;
  double lhs = 0.0;  // |S(A|B) - S(A~|B~)|
  double rhs = 0.0;
  bool satisfied = false;
};

EntropyBoundCheck conditional_entropy_bound_check(const DensityMatrix& rho,
                                                  const DensityMatrix& rho_tilde);

struct KeyBoundReport {
  double epsilon = 0.0;
  int dim_a = 2;
  double bound = 0.0;  // 8 eps log2 d_A + 4 eta(1 - eps) + 4 eta(eps)
};

/// eps in [0, 2], d_A >= 2.
KeyBoundReport key_bound(double eps, int dim_a);

struct WernerScanRow {
  double alpha = 0.0;
  bool separable = false;
  bool npt = false;
  bool extendible = false;
  double margin = 0.0;
  double coherent_info = 0.0;
  Method method = Method::kSdp;
};

/// Points lo, lo + step, ..., hi (inclusive up to rounding), rounded to 1e-10.
std::vector<double> alpha_grid(double lo, double hi, double step);

/// Extendibility through the closed form when d = 2 and k = 1, the SDP
/// otherwise.
std::vector<WernerScanRow> werner_scan(int d, const std::vector<double>& alphas, int k = 1,
                                       const ExtendibilityOptions& options = {});

/// Bisection for the point where `pred` changes value on [lo, hi]; stops
/// once the bracket is narrower than `width` and returns its midpoint.
double bisect(const std::function<bool(double)>& pred, double lo, double hi, double width = 1e-4);

enum class FilterMode {
  kFull,   // Ginibre filter on A A', operator norm 1
  kProj2,  // rank-2 compression to C^2 after a random invertible map
};
std::string_view filter_mode_name(FilterMode mode);
std::optional<FilterMode> parse_filter_mode(std::string_view name);

struct DistillSearchOptions {
  long trials = 1000;
  std::uint64_t seed = 0;
  FilterMode mode = FilterMode::kFull;
  int threads = 0;  // 0: one per hardware thread
};

struct DistillTrial {
  long index = 0;
  bool valid = false;  // false when the filter outcome had zero probability
  double coherent_info = 0.0;
  double probability = 0.0;
  CMatrix filter;
  CMatrix unitary;
};

/// Trial `index` of the search on two copies of `rho`. Trial 0 is the
/// baseline (identity filter, or the first two basis states in kProj2, and
/// identity unitary); later trials draw from mix(seed, index).
DistillTrial distill_trial(const DensityMatrix& rho, std::uint64_t seed, long index, FilterMode mode);

struct DistillSearchReport {
  long trials = 0;
  std::uint64_t seed = 0;
  FilterMode mode = FilterMode::kFull;
  long skipped = 0;
  long positive_trials = 0;
  DistillTrial best;
};

DistillSearchReport distill_search(const DensityMatrix& rho, const DistillSearchOptions& options);

struct LockingDemoReport {
  int d = 2;
  double c = 0.0;
  std::optional<ExtendibilityVerdict> pre;  // absent when the extension is too large
  ExtendibilityVerdict post;
  DensityMatrix pre_state;
  DensityMatrix post_state;  // flags dephased and discarded
};

LockingDemoReport locking_demo(int d, double c, const ExtendibilityOptions& options = {});
LockingDemoReport locking_demo(int d, const ExtendibilityOptions& options = {});

}  // namespace symext::analysis

#endif  // SYMEXT_ANALYSIS_HPP
