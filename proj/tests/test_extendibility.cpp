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

#include "extension_builder.hpp"
#include "oracles.hpp"
#include "symext/error.hpp"
#include "symext/extendibility.hpp"
#include "symext/random.hpp"
#include "symext/statezoo.hpp"
#include "symext/symmetry.hpp"

using namespace symext;

namespace {

const DimensionProfile kQubits = DimensionProfile::bipartite(2, 2);

DensityMatrix singlet() {
  CVector psi = CVector::Zero(4);
  psi(1) = 1.0 / std::sqrt(2.0);
  psi(2) = -1.0 / std::sqrt(2.0);
  return DensityMatrix::pure(psi, kQubits);
}

DensityMatrix classical_pair() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = 0.5;
  m(3, 3) = 0.5;
  return DensityMatrix(m, kQubits);
}

// Hand-rolled generator: random pure state mixed with white noise.
DensityMatrix noisy_pair(random::Engine& rng) {
  const CVector psi = random::random_pure_state(4, rng);
  const double p = random::uniform(rng, 0.0, 1.0);
  return DensityMatrix(hermitian_part((1.0 - p) * projector(psi) + p * CMatrix::Identity(4, 4) / 4.0),
                       kQubits);
}

}  // namespace

TEST_CASE("extendibility examples") {
  const auto u1 = is_k_extendible(zoo::upsilon_n(1), 1);
  CHECK(u1.feasible);
  CHECK(u1.margin >= -1e-6);
  CHECK_FALSE(is_k_extendible(singlet(), 1).feasible);
  CHECK_FALSE(is_k_extendible(zoo::werner(2, -0.9), 1).feasible);
  const auto cl = is_k_extendible(classical_pair(), 3);
  CHECK(cl.feasible);
  CHECK(cl.k == 3);
  CHECK(cl.method == Method::kSdp);
}

TEST_CASE("the witness is a symmetric extension of the input") {
  for (int t = 0; t < 5; ++t) {
    auto rng = random::engine_for(31, static_cast<std::uint64_t>(t));
    const CMatrix sep = kron(oracle::random_density(2, rng), oracle::random_density(2, rng));
    const DensityMatrix rho(hermitian_part(0.5 * sep + 0.5 * CMatrix::Identity(4, 4) / 4.0), kQubits);
    const auto v = is_k_extendible(rho, 2);
    REQUIRE(v.feasible);
    REQUIRE(v.witness.has_value());
    const CMatrix& w = v.witness->matrix();
    CHECK(max_abs(w - symmetry::twirl(w, 2, 2, 2)) < 1e-9);
    for (const std::vector<int> keep : {std::vector<int>{0, 1}, {0, 2}, {0, 3}}) {
      CHECK(max_abs(oracle::partial_trace(w, {2, 2, 2, 2}, keep) - rho.matrix()) < 1e-5);
    }
  }
}

TEST_CASE("analytic and SDP verdicts agree away from the boundary") {
  int compared = 0;
  for (int t = 0; t < 40; ++t) {
    auto rng = random::engine_for(32, static_cast<std::uint64_t>(t));
    const auto rho = noisy_pair(rng);
    const auto a = two_qubit_extendible_analytic(rho);
    const auto s = is_k_extendible(rho, 1);
    CHECK(a.method == Method::kAnalytic);
    if (std::abs(a.margin) > 1e-4 && std::abs(s.margin) > 1e-5) {
      ++compared;
      CHECK(a.feasible == s.feasible);
    }
  }
  CHECK(compared > 20);
  const auto w = two_qubit_extendible_analytic(zoo::werner(2, -0.8));
  CHECK(std::abs(w.margin) < 1e-12);
  CHECK(w.boundary);
  CHECK(two_qubit_extendible_analytic(DensityMatrix(CMatrix::Identity(4, 4) / 4.0, kQubits)).feasible);
  const auto bell = two_qubit_extendible_analytic(zoo::max_entangled(2));
  CHECK_FALSE(bell.feasible);
  CHECK(bell.margin == doctest::Approx(-0.5));
  CHECK_THROWS_AS(two_qubit_extendible_analytic(zoo::werner(3, 0.0)), ValidationError);
}

TEST_CASE("both extension formulations give the same margin sign") {
  for (int t = 0; t < 20; ++t) {
    auto rng = random::engine_for(33, static_cast<std::uint64_t>(t));
    const auto rho = noisy_pair(rng);
    ExtendibilityOptions inv;
    inv.formulation = Formulation::kInvariantBasis;
    const auto a = is_k_extendible(rho, 1);
    const auto b = is_k_extendible(rho, 1, inv);
    if (std::abs(a.margin) > 1e-5) CHECK(a.feasible == b.feasible);
  }
}

TEST_CASE("k-extendibility is monotone in k") {
  for (int t = 0; t < 15; ++t) {
    auto rng = random::engine_for(34, static_cast<std::uint64_t>(t));
    const auto rho = noisy_pair(rng);
    // Margins are normalized per extension size, so only verdicts compare.
    if (is_k_extendible(rho, 2).feasible) CHECK(is_k_extendible(rho, 1).feasible);
  }
}

TEST_CASE("party order is normalized before building the extension") {
  const auto rho = zoo::upsilon_n(2);
  const auto swapped = permute_factors(rho, {1, 0});
  const DensityMatrix relabeled(swapped.matrix(), DimensionProfile({2, 2}, {Party::kB, Party::kA}));
  CHECK(std::abs(is_k_extendible(rho, 1).margin - is_k_extendible(relabeled, 1).margin) < 1e-6);
}

TEST_CASE("size and argument validation") {
  CHECK_THROWS_AS(is_k_extendible(zoo::werner(3, 0.0), 3), ValidationError);
  CHECK_THROWS_AS(is_k_extendible(zoo::werner(2, 0.0), 0), ValidationError);
  const DensityMatrix only_a(CMatrix::Identity(2, 2) / 2.0, DimensionProfile({2}, {Party::kA}));
  CHECK_THROWS_AS(is_k_extendible(only_a, 1), ValidationError);
}

TEST_CASE("pure extension spectral check") {
  CHECK(pure_extension_spectral_check(zoo::w_state(3), 2, 2, 1));
  CHECK(pure_extension_spectral_check(zoo::ghz_state(3), 2, 2, 1));
  const CMatrix basis = symmetry::symmetric_basis(2, 3);
  for (int t = 0; t < 20; ++t) {
    auto rng = random::engine_for(35, static_cast<std::uint64_t>(t));
    const CVector coeffs = random::random_pure_state(static_cast<int>(basis.cols()), rng);
    CHECK(pure_extension_spectral_check(basis * coeffs, 2, 2, 1));
  }
  // A state that is not symmetric under exchanging the B copies.
  CVector asym = CVector::Zero(8);
  asym(1) = 1.0;  // |0 0 1>
  CHECK_THROWS_AS(pure_extension_spectral_check(asym, 2, 2, 1), ValidationError);
}

TEST_CASE("extendible number heuristic") {
  const auto sep = zoo::werner(2, -0.3);
  CHECK(extendible_number(sep, 5).eta_lower == 2);
  const auto bell = extendible_number(zoo::max_entangled(2), 5);
  CHECK(bell.eta_lower == 1);
  CHECK(bell.seed == 5);
  const auto a = extendible_number(zoo::werner(2, -0.9), 9);
  const auto b = extendible_number(zoo::werner(2, -0.9), 9);
  CHECK(a.eta_lower >= 1);
  CHECK(a.eta_lower == b.eta_lower);
  CHECK(a.margin_at_best == b.margin_at_best);
}

TEST_CASE("local filters and one-way LOCC") {
  const auto mixed = DensityMatrix(CMatrix::Identity(4, 4) / 4.0, kQubits);
  const auto same = one_way_locc_apply(mixed, {CMatrix::Identity(2, 2)}, {{}});
  CHECK(same.probability == doctest::Approx(1.0));
  CHECK(max_abs(same.state.matrix() - mixed.matrix()) < 1e-15);

  CMatrix p0 = CMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  const auto out = one_way_locc_apply(mixed, {p0}, {{}});
  CHECK(out.probability == doctest::Approx(0.5));
  CHECK(max_abs(out.state.matrix() - kron(p0, CMatrix::Identity(2, 2) / 2.0)) < 1e-15);

  CHECK(max_abs(apply_local_filter(mixed, p0).matrix() - out.state.matrix()) < 1e-15);
  CMatrix p1 = CMatrix::Zero(2, 2);
  p1(1, 1) = 1.0;
  CHECK_THROWS_AS(apply_local_filter(DensityMatrix(kron(p0, p0), kQubits), p1), ValidationError);

  // Closure: one-way LOCC maps an extendible state to an extendible state.
  for (int t = 0; t < 5; ++t) {
    auto rng = random::engine_for(36, static_cast<std::uint64_t>(t));
    const CMatrix u = random::haar_unitary(2, rng);
    std::vector<CMatrix> a_ops{u.col(0) * u.col(0).adjoint(), u.col(1) * u.col(1).adjoint()};
    std::vector<std::vector<CMatrix>> b_ops{{random::haar_unitary(2, rng)}, {random::haar_unitary(2, rng)}};
    const auto res = one_way_locc_apply(zoo::upsilon_n(1), a_ops, b_ops);
    CHECK(res.probability == doctest::Approx(1.0));
    CHECK(is_k_extendible(res.state, 1).margin >= -1e-6);
  }
}

TEST_CASE("marginal helper matches the loop oracle") {
  auto rng = random::engine_for(37, 0);
  const CMatrix x = oracle::random_hermitian(16, rng);
  const detail::ExtensionShape shape{2, 2, 2};
  CHECK(max_abs(detail::first_marginal(x, shape) - oracle::partial_trace(x, {2, 2, 2, 2}, {0, 1})) < 1e-13);
  CHECK(shape.side() == 16);
}
