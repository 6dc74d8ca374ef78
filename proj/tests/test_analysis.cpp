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

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "symext/analysis.hpp"
#include "symext/error.hpp"
#include "symext/random.hpp"
#include "symext/statezoo.hpp"

using namespace symext;

namespace {

const DimensionProfile kQubits = DimensionProfile::bipartite(2, 2);

double eta_bits(double x) { return x <= 0.0 ? 0.0 : -x * std::log2(x); }

// Werner d = 2 spectrum: (1 - a)/(4 + 2a) once, (1 + a)/(4 + 2a) three times.
double werner_coherent_info(double a) {
  const double s = (1.0 - a) / (4.0 + 2.0 * a);
  const double t = (1.0 + a) / (4.0 + 2.0 * a);
  return 1.0 - (eta_bits(s) + 3.0 * eta_bits(t));
}

}  // namespace

TEST_CASE("coherent information") {
  CHECK(analysis::coherent_information(zoo::max_entangled(2)) == doctest::Approx(1.0));
  CHECK(analysis::coherent_information(DensityMatrix(CMatrix::Identity(4, 4) / 4.0, kQubits)) ==
        doctest::Approx(-1.0));
  CHECK(std::abs(analysis::coherent_information(zoo::werner(2, -0.85559))) < 5e-4);
  for (double a : {-1.0, -0.9, -0.5, 0.0, 0.7}) {
    CHECK(analysis::coherent_information(zoo::werner(2, a)) == doctest::Approx(werner_coherent_info(a)));
  }
  CHECK(analysis::coherent_information(zoo::werner(2, -0.9)) == doctest::Approx(0.209233).epsilon(1e-5));
  auto rng = random::engine_for(61, 0);
  const DensityMatrix rho(oracle::random_density(4, rng), kQubits);
  const double ref = oracle::von_neumann_bits(oracle::partial_trace(rho.matrix(), {2, 2}, {1})) -
                     oracle::von_neumann_bits(rho.matrix());
  CHECK(analysis::coherent_information(rho) == doctest::Approx(ref));
  CHECK(analysis::conditional_entropy(rho) == doctest::Approx(-ref));
}

TEST_CASE("continuity bound check") {
  auto rng = random::engine_for(62, 0);
  const DensityMatrix rho(oracle::random_density(4, rng), kQubits);
  const auto same = analysis::conditional_entropy_bound_check(rho, rho);
  CHECK(same.lhs == doctest::Approx(0.0).scale(1.0));
  CHECK(same.rhs == doctest::Approx(0.0).scale(1.0));
  CHECK(same.satisfied);

  const auto far = analysis::conditional_entropy_bound_check(
      zoo::max_entangled(2), DensityMatrix(CMatrix::Identity(4, 4) / 4.0, kQubits));
  CHECK(far.lhs == doctest::Approx(2.0));
  CHECK(far.epsilon == doctest::Approx(1.5));
  CHECK(far.rhs == doctest::Approx(analysis::continuity_bound(1.5, 2)));
  CHECK(far.satisfied);

  for (int t = 0; t < 200; ++t) {
    auto g = random::engine_for(63, static_cast<std::uint64_t>(t));
    const DensityMatrix a(oracle::random_density(4, g), kQubits);
    const DensityMatrix b(oracle::random_density(4, g), kQubits);
    CHECK(analysis::conditional_entropy_bound_check(a, b).satisfied);
  }
}

TEST_CASE("key bound") {
  CHECK(analysis::key_bound(0.0, 2).bound == doctest::Approx(0.0).scale(1.0));
  const double direct = 0.8 + 4.0 * eta_bits(0.9) + 4.0 * eta_bits(0.1);
  CHECK(analysis::key_bound(0.1, 2).bound == doctest::Approx(direct));
  CHECK(std::abs(analysis::key_bound(0.1, 2).bound - 2.6758) < 1e-3);
  CHECK(analysis::key_bound(0.1, 2).bound == doctest::Approx(2.0 * analysis::continuity_bound(0.1, 2)));
  CHECK_THROWS_AS(analysis::key_bound(-0.1, 2), ValidationError);
  CHECK_THROWS_AS(analysis::key_bound(0.1, 1), ValidationError);
  // Monotone on [0, 1/2].
  double prev = -1.0;
  for (double e = 0.0; e <= 0.5; e += 0.01) {
    const double b = analysis::key_bound(e, 3).bound;
    CHECK(b >= prev);
    prev = b;
  }
}

TEST_CASE("alpha grid and bisection") {
  const auto g = analysis::alpha_grid(-1.0, 0.0, 0.25);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == -1.0);
  CHECK(g.back() == 0.0);
  CHECK(analysis::alpha_grid(-1.0, 0.0, 0.01).size() == 101);
  CHECK_THROWS_AS(analysis::alpha_grid(0.0, -1.0, 0.1), ValidationError);
  const double root = analysis::bisect([](double x) { return x > 0.3; }, 0.0, 1.0, 1e-6);
  CHECK(root == doctest::Approx(0.3).epsilon(1e-5));
}

TEST_CASE("werner scan") {
  const auto rows = analysis::werner_scan(2, {-0.9, -0.6, -0.4});
  REQUIRE(rows.size() == 3);
  CHECK_FALSE(rows[0].extendible);
  CHECK(rows[0].npt);
  CHECK(rows[0].coherent_info > 0.0);
  CHECK_FALSE(rows[1].separable);
  CHECK(rows[1].npt);
  CHECK(rows[1].extendible);
  // -0.4 lies on the separable side of -1/2.
  CHECK(rows[2].separable);
  CHECK_FALSE(rows[2].npt);
  CHECK(rows[2].extendible);
  CHECK(rows[2].method == Method::kAnalytic);

  const auto grid = analysis::werner_scan(2, analysis::alpha_grid(-1.0, 0.0, 0.01));
  int ext_flip = -1;
  int coh_flip = -1;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i].extendible != grid[i - 1].extendible) ext_flip = static_cast<int>(i);
    if ((grid[i].coherent_info > 0) != (grid[i - 1].coherent_info > 0)) coh_flip = static_cast<int>(i);
  }
  REQUIRE(ext_flip > 0);
  REQUIRE(coh_flip > 0);
  CHECK(grid[static_cast<std::size_t>(ext_flip)].alpha >= -0.805);
  CHECK(grid[static_cast<std::size_t>(ext_flip) - 1].alpha <= -0.795);
  CHECK(grid[static_cast<std::size_t>(coh_flip) - 1].alpha <= -0.855);
  CHECK(grid[static_cast<std::size_t>(coh_flip)].alpha >= -0.856);

  const auto sdp_rows = analysis::werner_scan(3, {-0.9, 0.5}, 1);
  CHECK(sdp_rows[0].method == Method::kSdp);
}

TEST_CASE("distillation search") {
  const auto bell = analysis::distill_search(zoo::max_entangled(2), {20, 3, analysis::FilterMode::kFull, 1});
  CHECK(bell.best.coherent_info >= 1.0 - 1e-9);
  const auto base = analysis::distill_trial(zoo::max_entangled(2), 3, 0, analysis::FilterMode::kFull);
  CHECK(base.coherent_info == doctest::Approx(2.0));

  const auto w9 = analysis::distill_trial(zoo::werner(2, -0.9), 1, 0, analysis::FilterMode::kFull);
  CHECK(w9.coherent_info > 0.0);

  for (auto mode : {analysis::FilterMode::kFull, analysis::FilterMode::kProj2}) {
    const auto one = analysis::distill_search(zoo::werner(2, -0.82), {300, 77, mode, 1});
    const auto many = analysis::distill_search(zoo::werner(2, -0.82), {300, 77, mode, 4});
    CHECK(one.best.index == many.best.index);
    CHECK(one.best.coherent_info == many.best.coherent_info);
    CHECK(one.positive_trials == many.positive_trials);
    CHECK(one.best.coherent_info <= 0.0);
    const auto t = analysis::distill_trial(zoo::werner(2, -0.82), 77, one.best.index, mode);
    CHECK(t.coherent_info == one.best.coherent_info);
  }
  CHECK(analysis::parse_filter_mode("proj2") == analysis::FilterMode::kProj2);
  CHECK_FALSE(analysis::parse_filter_mode("other").has_value());
  CHECK_THROWS_AS(analysis::distill_search(zoo::werner(3, 0.0), {10, 1, analysis::FilterMode::kFull, 1}),
                  ValidationError);
}

TEST_CASE("locking demo") {
  const auto demo = analysis::locking_demo(2);
  REQUIRE(demo.pre.has_value());
  CHECK_FALSE(demo.pre->feasible);
  CHECK(demo.post.feasible);
  CHECK(max_abs(demo.post_state.matrix() - zoo::upsilon_eps(2, 0.0).matrix()) < 1e-14);
  // Without coherence the flag-00 block is a maximally entangled pure
  // state, so the pre state is still not extendible.
  const auto flat = analysis::locking_demo(2, 0.0);
  REQUIRE(flat.pre.has_value());
  CHECK_FALSE(flat.pre->feasible);
  CHECK(flat.post.feasible);
  CHECK_FALSE(analysis::locking_demo(3).pre.has_value());
}
