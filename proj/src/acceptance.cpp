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

#include "symext/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "symext/analysis.hpp"
#include "symext/bsa.hpp"
#include "symext/error.hpp"
#include "symext/extendibility.hpp"
#include "symext/random.hpp"
#include "symext/sdp.hpp"
#include "symext/statezoo.hpp"
#include "symext/symmetry.hpp"

namespace symext::acceptance {
namespace {

// Pinned tolerances and targets.
constexpr double kWernerExtBoundary = -0.8;
constexpr double kWernerExtTol = 0.005;
constexpr double kCoherentRoot = -0.8556;
constexpr double kCoherentRootTol = 0.0005;
constexpr double kMarginTol = 1e-6;
constexpr double kMarginalTol = 1e-12;
constexpr double kInclusionSlack = 1e-5;
constexpr double kLambdaTol = 1e-5;
constexpr double kLockTol = 1e-4;
constexpr double kKeyBoundTarget = 2.6758;
constexpr double kKeyBoundTol = 1e-3;
constexpr double kCrossCheckMinMargin = 1e-5;
constexpr double kSpectralTol = 1e-8;
constexpr std::uint64_t kSeed = 20260417;

const DimensionProfile kQubits = DimensionProfile::bipartite(2, 2);

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Random two-qubit state mixed with white noise by a random amount, so that
// samples fall on both sides of the extendibility boundary.
DensityMatrix noisy_qubit_pair(random::Engine& rng) {
  const CMatrix r = random::random_density(4, rng, 1);
  const double p = random::uniform(rng, 0.0, 1.0);
  return DensityMatrix(hermitian_part((1.0 - p) * r + p * CMatrix::Identity(4, 4) / 4.0), kQubits);
}

DensityMatrix random_separable(random::Engine& rng, int terms) {
  CMatrix m = CMatrix::Zero(4, 4);
  double total = 0.0;
  for (int i = 0; i < terms; ++i) {
    const double w = random::uniform(rng, 0.1, 1.0);
    m += w * kron(random::random_density(2, rng), random::random_density(2, rng));
    total += w;
  }
  return DensityMatrix(hermitian_part(m / total), kQubits);
}

DensityMatrix random_pure_entangled(random::Engine& rng) {
  return DensityMatrix::pure(random::random_pure_state(4, rng), kQubits);
}

CriterionResult c1() {
  CriterionResult r{1, "Werner extendibility threshold (analytic and SDP)", false, {}, 0.0};
  auto analytic = [](double a) {
    return two_qubit_extendible_analytic(zoo::werner(2, a)).feasible;
  };
  auto sdp_test = [](double a) { return is_k_extendible(zoo::werner(2, a), 1).feasible; };
  const double a1 = analysis::bisect(analytic, -1.0, -0.5);
  const double a2 = analysis::bisect(sdp_test, -1.0, -0.5);
  r.passed = std::abs(a1 - kWernerExtBoundary) <= kWernerExtTol &&
             std::abs(a2 - kWernerExtBoundary) <= kWernerExtTol;
  r.detail = "analytic " + fmt("%.5f", a1) + ", sdp " + fmt("%.5f", a2) + " (target -0.800 +/- 0.005)";
  return r;
}

CriterionResult c2() {
  CriterionResult r{2, "Coherent-information root of d=2 Werner states", false, {}, 0.0};
  auto positive = [](double a) {
    return analysis::coherent_information(zoo::werner(2, a)) > 0.0;
  };
  const double root = analysis::bisect(positive, -1.0, -0.8);
  r.passed = std::abs(root - kCoherentRoot) <= kCoherentRootTol;
  r.detail = "root " + fmt("%.5f", root) + " (target -0.8556 +/- 0.0005)";
  return r;
}

CriterionResult c3() {
  CriterionResult r{3, "Upsilon(n) extendibility and W-state marginal", false, {}, 0.0};
  const DensityMatrix u1 = zoo::upsilon_n(1);
  const CMatrix marginal = partial_trace(projector(zoo::w_state(3)), {2, 2, 2}, {0, 1});
  const double marg_err = max_abs(marginal - u1.matrix());
  const auto v1 = is_k_extendible(u1, 1);
  const auto v2 = is_k_extendible(zoo::upsilon_n(2), 2);
  const auto probe1 = is_k_extendible(u1, 2);
  const auto probe2 = is_k_extendible(zoo::upsilon_n(2), 3);
  r.passed = v1.margin >= -kMarginTol && marg_err <= kMarginalTol && v1.feasible && v2.feasible;
  std::ostringstream os;
  os << "margin(U1,k=1) " << fmt("%.2e", v1.margin) << ", marginal err " << fmt("%.1e", marg_err)
     << ", U2 k=2 " << (v2.feasible ? "feasible" : "infeasible") << "; probe U1 k=2 "
     << (probe1.feasible ? "feasible" : "infeasible") << " (" << fmt("%.2e", probe1.margin)
     << "), U2 k=3 " << (probe2.feasible ? "feasible" : "infeasible") << " ("
     << fmt("%.2e", probe2.margin) << ")";
  r.detail = os.str();
  return r;
}

CriterionResult c4() {
  CriterionResult r{4, "Inclusion chain: 2-extendible implies 1-extendible", false, {}, 0.0};
  int violations = 0;
  int ext2 = 0;
  for (int i = 0; i < 100; ++i) {
    auto rng = random::engine_for(kSeed, 400 + i);
    const DensityMatrix rho = noisy_qubit_pair(rng);
    const double m1 = is_k_extendible(rho, 1).margin;
    const double m2 = is_k_extendible(rho, 2).margin;
    if (m2 >= 0.0) ++ext2;
    if (m2 >= 0.0 && m1 < -kInclusionSlack) ++violations;
  }
  r.passed = violations == 0;
  r.detail = std::to_string(violations) + " violations, " + std::to_string(ext2) +
             "/100 samples 2-extendible";
  return r;
}

CriterionResult c5() {
  CriterionResult r{5, "BSA weights and local-unitary invariance", false, {}, 0.0};
  double worst_se = 0.0;
  double worst_pure = 0.0;
  double worst_lu = 0.0;
  for (int i = 0; i < 20; ++i) {
    auto rng = random::engine_for(kSeed, 500 + i);
    worst_se = std::max(worst_se, std::abs(1.0 - lambda_max(random_separable(rng, 4)).lambda_max));
    worst_pure = std::max(worst_pure, lambda_max(random_pure_entangled(rng)).lambda_max);
  }
  for (int i = 0; i < 5; ++i) {
    auto rng = random::engine_for(kSeed, 550 + i);
    const DensityMatrix rho(random::random_density(4, rng, 2), kQubits);
    const CMatrix u = kron(random::haar_unitary(2, rng), random::haar_unitary(2, rng));
    const DensityMatrix moved(hermitian_part(u * rho.matrix() * u.adjoint()), kQubits);
    worst_lu = std::max(worst_lu, std::abs(ess_monotone(rho) - ess_monotone(moved)));
  }
  r.passed = worst_se <= kLambdaTol && worst_pure <= kLambdaTol && worst_lu <= kLambdaTol;
  r.detail = "max |1-lambda| (separable) " + fmt("%.1e", worst_se) + ", max lambda (pure) " +
             fmt("%.1e", worst_pure) + ", max E^ss change " + fmt("%.1e", worst_lu);
  return r;
}

CriterionResult c6() {
  CriterionResult r{6, "No extendible component in Phi+ (x) sigma", false, {}, 0.0};
  double worst = 0.0;
  const DimensionProfile prof({2, 2, 2, 2}, {Party::kA, Party::kB, Party::kA, Party::kB});
  for (int i = 0; i < 5; ++i) {
    auto rng = random::engine_for(kSeed, 600 + i);
    const CMatrix m = kron(zoo::max_entangled(2).matrix(), random::random_density(4, rng));
    worst = std::max(worst, lambda_max(DensityMatrix(hermitian_part(m), prof)).lambda_max);
  }
  r.passed = worst <= kLockTol;
  r.detail = "max lambda " + fmt("%.1e", worst) + " over 5 samples (limit 1e-4)";
  return r;
}

CriterionResult c7() {
  CriterionResult r{7, "Private state has no extendible component", false, {}, 0.0};
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    auto rng = random::engine_for(kSeed, 700 + i);
    const DensityMatrix inner(random::random_density(4, rng), kQubits);
    const CMatrix u1 = random::haar_unitary(4, rng);
    worst = std::max(worst,
                     lambda_max(zoo::private_state(inner, CMatrix::Identity(4, 4), u1)).lambda_max);
  }
  r.passed = worst <= kLockTol;
  r.detail = "max lambda " + fmt("%.1e", worst) + " over 3 samples (limit 1e-4)";
  return r;
}

CriterionResult c8() {
  CriterionResult r{8, "Locking demo d=2 with projection cross-check", false, {}, 0.0};
  const auto demo = analysis::locking_demo(2);
  const auto pre_oracle =
      sdp::project_feasibility(extension_system(demo.pre_state, 1, Formulation::kMarginals));
  const auto post_oracle =
      sdp::project_feasibility(extension_system(demo.post_state, 1, Formulation::kInvariantBasis));
  const bool pre_ok = demo.pre && !demo.pre->feasible;
  const bool post_ok = demo.post.feasible;
  r.passed = pre_ok && post_ok && pre_oracle.verdict == sdp::Verdict::kInfeasible &&
             post_oracle.verdict == sdp::Verdict::kFeasible;
  std::ostringstream os;
  os << "pre margin " << fmt("%.2e", demo.pre ? demo.pre->margin : NAN) << " oracle "
     << sdp::verdict_name(pre_oracle.verdict) << "; post margin " << fmt("%.2e", demo.post.margin)
     << " oracle " << sdp::verdict_name(post_oracle.verdict);
  r.detail = os.str();
  return r;
}

CriterionResult c9() {
  CriterionResult r{9, "Entropy continuity fuzz and key bound", false, {}, 0.0};
  int violations = 0;
  const std::vector<std::pair<int, int>> shapes{{2, 2}, {2, 3}, {3, 2}};
  for (int i = 0; i < 1000; ++i) {
    auto rng = random::engine_for(kSeed, 900 + i);
    const auto [da, db] = shapes[static_cast<std::size_t>(i) % shapes.size()];
    const auto prof = DimensionProfile::bipartite(da, db);
    const CMatrix a = random::random_density(da * db, rng);
    const CMatrix b = random::random_density(da * db, rng, 1 + i % (da * db));
    const double t = random::uniform(rng, 0.0, 1.0);
    const DensityMatrix rho(a, prof);
    const DensityMatrix tilde(hermitian_part((1.0 - t) * a + t * b), prof);
    if (!analysis::conditional_entropy_bound_check(rho, tilde).satisfied) ++violations;
  }
  const double kb = analysis::key_bound(0.1, 2).bound;
  const double eps = distance_to_extendible_set(zoo::upsilon_eps(2, 0.1)).epsilon;
  const double pipeline = analysis::key_bound(std::min(eps, 2.0), 2).bound;
  r.passed = violations == 0 && std::abs(kb - kKeyBoundTarget) <= kKeyBoundTol && pipeline <= kb;
  r.detail = std::to_string(violations) + " violations; key_bound(0.1,2) " + fmt("%.5f", kb) +
             "; pipeline eps " + fmt("%.5f", eps) + " bound " + fmt("%.5f", pipeline);
  return r;
}

CriterionResult c10() {
  CriterionResult r{10, "Two-copy filtering search (scaled down)", false, {}, 0.0};
  std::ostringstream os;
  bool ok = true;
  for (double alpha : {-0.82, -0.85}) {
    for (auto mode : {analysis::FilterMode::kFull, analysis::FilterMode::kProj2}) {
      const auto rep = analysis::distill_search(zoo::werner(2, alpha), {10000, kSeed, mode, 0});
      ok = ok && rep.best.coherent_info <= 0.0;
      os << "a=" << alpha << ' ' << analysis::filter_mode_name(mode) << " best "
         << fmt("%.4f", rep.best.coherent_info) << "; ";
    }
  }
  const auto hit = analysis::distill_search(zoo::werner(2, -0.9), {100, kSeed, analysis::FilterMode::kFull, 0});
  ok = ok && hit.best.coherent_info > 0.0;
  os << "a=-0.9 best " << fmt("%.4f", hit.best.coherent_info) << " (" << hit.positive_trials
     << "/100 positive)";
  r.passed = ok;
  r.detail = os.str();
  return r;
}

CriterionResult c11() {
  CriterionResult r{11, "Margin sign vs projection oracle on 200 instances", false, {}, 0.0};
  int compared = 0;
  int disagree = 0;
  int undecided = 0;
  for (int i = 0; i < 200; ++i) {
    auto rng = random::engine_for(kSeed, 1100 + i);
    const DensityMatrix rho = noisy_qubit_pair(rng);
    const double t = sdp::feasibility_margin(extension_system(rho, 1, Formulation::kMarginals)).margin;
    if (std::abs(t) <= kCrossCheckMinMargin) continue;
    ++compared;
    const auto v = sdp::project_feasibility(extension_system(rho, 1, Formulation::kInvariantBasis));
    if (v.verdict == sdp::Verdict::kUndecided) {
      ++undecided;
    } else if ((t > 0.0) != (v.verdict == sdp::Verdict::kFeasible)) {
      ++disagree;
    }
  }
  r.passed = disagree == 0 && undecided == 0;
  r.detail = std::to_string(compared) + " compared, " + std::to_string(disagree) +
             " disagreements, " + std::to_string(undecided) + " undecided";
  return r;
}

CriterionResult c12() {
  CriterionResult r{12, "Spectral condition for Bose-symmetric pure states", false, {}, 0.0};
  const CMatrix basis = symmetry::symmetric_basis(2, 3);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    auto rng = random::engine_for(kSeed, 1200 + i);
    const CVector coef = random::random_pure_state(static_cast<int>(basis.cols()), rng);
    const CVector psi = basis * coef;
    if (!pure_extension_spectral_check(psi / psi.norm(), 2, 2, 1, kSpectralTol)) ++failures;
  }
  r.passed = failures == 0;
  r.detail = std::to_string(failures) + "/100 mismatched spectra";
  return r;
}

}  // namespace

CriterionResult run_criterion(int id) {
  using Fn = CriterionResult (*)();
  static const Fn table[kCriterionCount] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12};
  if (id < 1 || id > kCriterionCount) throw ValidationError("no acceptance criterion " + std::to_string(id));
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = table[id - 1]();
  } catch (const std::exception& e) {
    r.id = id;
    r.name = "criterion " + std::to_string(id);
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run(const std::vector<int>& ids,
                                 const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<int> todo = ids;
  if (todo.empty()) {
    for (int i = 1; i <= kCriterionCount; ++i) todo.push_back(i);
  }
  std::vector<CriterionResult> out;
  for (int id : todo) {
    out.push_back(run_criterion(id));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "[%s] %2d ", r.passed ? "PASS" : "FAIL", r.id);
  return std::string(head) + r.name + ": " + r.detail + " (" + fmt("%.1f", r.seconds) + " s)";
}

}  // namespace symext::acceptance
