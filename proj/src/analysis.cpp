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

#include "symext/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "symext/error.hpp"
#include "symext/random.hpp"
#include "symext/statezoo.hpp"

namespace symext::analysis {
namespace {

double clamped_eta(double x) { return eta(std::clamp(x, 0.0, 1.0)); }

double entropy_of(const CMatrix& m) { return entropy_of_spectrum(eigenvalues_hermitian(m)); }

// S(B) - S(AB) for a matrix on A (x) B with the given total dimensions.
double coherent_info_of(const CMatrix& m, int dim_a, int dim_b) {
  return entropy_of(partial_trace(m, {dim_a, dim_b}, {1})) - entropy_of(m);
}

}  // namespace

double coherent_information(const DensityMatrix& rho) {
  const auto& prof = rho.profile();
  if (!prof.has_both_parties()) throw ValidationError("coherent information needs parties A and B");
  return entropy(partial_trace(rho, prof.factors_of(Party::kB))) - entropy(rho);
}

double conditional_entropy(const DensityMatrix& rho) { return -coherent_information(rho); }

double continuity_bound(double eps, int dim_a) {
  return 4.0 * eps * std::log2(static_cast<double>(dim_a)) + 2.0 * clamped_eta(1.0 - eps) +
         2.0 * clamped_eta(eps);
}

EntropyBoundCheck conditional_entropy_bound_check(const DensityMatrix& rho,
                                                  const DensityMatrix& rho_tilde) {
  if (!(rho.profile() == rho_tilde.profile())) {
    throw ValidationError("states must share a dimension profile");
  }
  EntropyBoundCheck out;
  out.epsilon = trace_norm(rho.matrix() - rho_tilde.matrix());
  out.lhs = std::abs(conditional_entropy(rho) - conditional_entropy(rho_tilde));
  out.rhs = continuity_bound(out.epsilon, rho.profile().dim_a());
  out.satisfied = out.lhs <= out.rhs + 1e-9;
  return out;
}

KeyBoundReport key_bound(double eps, int dim_a) {
  if (!(eps >= 0.0 && eps <= 2.0)) throw ValidationError("eps must lie in [0, 2]");
  if (dim_a < 2) throw ValidationError("d_A must be at least 2");
  return KeyBoundReport{eps, dim_a, 2.0 * continuity_bound(eps, dim_a)};
}

std::vector<double> alpha_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) throw ValidationError("grid needs step > 0 and max >= min");
  std::vector<double> out;
  const long n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= n; ++i) out.push_back(std::round((lo + i * step) * 1e10) / 1e10);
  return out;
}

std::vector<WernerScanRow> werner_scan(int d, const std::vector<double>& alphas, int k,
                                       const ExtendibilityOptions& options) {
  std::vector<WernerScanRow> rows;
  for (double alpha : alphas) {
    const DensityMatrix w = zoo::werner(d, alpha);
    WernerScanRow row;
    row.alpha = alpha;
    row.separable = alpha >= -1.0 / d;
    row.npt = min_eigenvalue(partial_transpose(w, {1})) < -1e-12;
    const ExtendibilityVerdict v = (d == 2 && k == 1) ? two_qubit_extendible_analytic(w)
                                                      : is_k_extendible(w, k, options);
    row.extendible = v.feasible;
    row.margin = v.margin;
    row.method = v.method;
    row.coherent_info = coherent_information(w);
    rows.push_back(row);
  }
  return rows;
}

double bisect(const std::function<bool(double)>& pred, double lo, double hi, double width) {
  const bool at_lo = pred(lo);
  if (at_lo == pred(hi)) throw ValidationError("predicate does not change on the bracket");
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid) == at_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Filtering search

std::string_view filter_mode_name(FilterMode mode) {
  return mode == FilterMode::kFull ? "full" : "proj2";
}

std::optional<FilterMode> parse_filter_mode(std::string_view name) {
  if (name == "full" || name == "FULL") return FilterMode::kFull;
  if (name == "proj2" || name == "PROJ2") return FilterMode::kProj2;
  return std::nullopt;
}

DistillTrial distill_trial(const DensityMatrix& rho, std::uint64_t seed, long index, FilterMode mode) {
  const auto& prof = rho.profile();
  if (prof.dims() != std::vector<int>{2, 2} || !prof.a_precedes_b()) {
    throw ValidationError("filtering search needs a two-qubit state with A first");
  }
  // rho (x) rho on [A, B, A', B'] -> [A, A', B, B'].
  const CMatrix two = permute_factors(kron(rho.matrix(), rho.matrix()), {2, 2, 2, 2}, {0, 2, 1, 3});

  DistillTrial t;
  t.index = index;
  if (index == 0) {
    t.filter = mode == FilterMode::kFull ? CMatrix(CMatrix::Identity(4, 4))
                                         : CMatrix(CMatrix::Identity(2, 4));
    t.unitary = CMatrix::Identity(4, 4);
  } else {
    auto rng = random::engine_for(seed, static_cast<std::uint64_t>(index));
    CMatrix f = random::ginibre(4, 4, rng);
    if (mode == FilterMode::kProj2) {
      const CMatrix iso = random::haar_unitary(4, rng).leftCols(2);
      f = iso.adjoint() * f;
    }
    const double top = Eigen::JacobiSVD<CMatrix>(f).singularValues()(0);
    t.filter = f / top;
    t.unitary = random::haar_unitary(4, rng);
  }
  const CMatrix k = kron(t.filter, t.unitary);
  const CMatrix out = k * two * k.adjoint();
  t.probability = out.trace().real();
  if (!(t.probability > 1e-12)) return t;
  t.valid = true;
  t.coherent_info = coherent_info_of(hermitian_part(out / t.probability),
                                     static_cast<int>(t.filter.rows()), 4);
  return t;
}

DistillSearchReport distill_search(const DensityMatrix& rho, const DistillSearchOptions& options) {
  if (options.trials < 1) throw ValidationError("trials must be at least 1");
  distill_trial(rho, options.seed, 0, options.mode);  // validates the input once

  int threads = options.threads > 0 ? options.threads
                                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<long>(threads, options.trials));
  std::vector<DistillSearchReport> partial(static_cast<std::size_t>(threads));
  std::atomic<long> next{0};
  auto worker = [&](int id) {
    auto& rep = partial[static_cast<std::size_t>(id)];
    rep.best.coherent_info = -std::numeric_limits<double>::infinity();
    rep.best.index = -1;
    for (long i = next++; i < options.trials; i = next++) {
      DistillTrial t = distill_trial(rho, options.seed, i, options.mode);
      if (!t.valid) {
        ++rep.skipped;
        continue;
      }
      if (t.coherent_info > 0.0) ++rep.positive_trials;
      if (t.coherent_info > rep.best.coherent_info ||
          (t.coherent_info == rep.best.coherent_info && t.index < rep.best.index)) {
        rep.best = std::move(t);
      }
    }
  };
  std::vector<std::thread> pool;
  for (int id = 1; id < threads; ++id) pool.emplace_back(worker, id);
  worker(0);
  for (auto& th : pool) th.join();

  DistillSearchReport out;
  out.trials = options.trials;
  out.seed = options.seed;
  out.mode = options.mode;
  out.best.coherent_info = -std::numeric_limits<double>::infinity();
  out.best.index = -1;
  for (auto& rep : partial) {
    out.skipped += rep.skipped;
    out.positive_trials += rep.positive_trials;
    if (rep.best.index < 0) continue;
    if (rep.best.coherent_info > out.best.coherent_info ||
        (rep.best.coherent_info == out.best.coherent_info && rep.best.index < out.best.index)) {
      out.best = rep.best;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Locking

LockingDemoReport locking_demo(int d, double c, const ExtendibilityOptions& options) {
  const DensityMatrix pre = zoo::locking_state(d, c);
  const DensityMatrix dephased = zoo::dephase_a_flag(pre);
  const DensityMatrix post = partial_trace(dephased, {1, 3});
  std::optional<ExtendibilityVerdict> pre_verdict;
  if (2 * d * (2 * d) * (2 * d) <= kMaxExtensionSide) pre_verdict = is_k_extendible(pre, 1, options);
  ExtendibilityVerdict post_verdict = is_k_extendible(post, 1, options);
  return LockingDemoReport{d, c, std::move(pre_verdict), std::move(post_verdict), pre, post};
}

LockingDemoReport locking_demo(int d, const ExtendibilityOptions& options) {
  return locking_demo(d, std::sqrt(static_cast<double>(d)), options);
}

}  // namespace symext::analysis
