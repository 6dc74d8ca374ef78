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
#include "symext/error.hpp"
#include "symext/linalg.hpp"
#include "symext/random.hpp"
#include "symext/state_io.hpp"
#include "symext/statezoo.hpp"

using namespace symext;

namespace {

CMatrix diag2(double a, double b) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

CMatrix pauli_x() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

const DimensionProfile kQubits = DimensionProfile::bipartite(2, 2);

}  // namespace

TEST_CASE("kron") {
  CHECK(max_abs(kron(CMatrix(CMatrix::Identity(2, 2)), CMatrix(CMatrix::Identity(2, 2))) - CMatrix::Identity(4, 4)) == 0.0);
  const CMatrix d = kron(diag2(1, 0), diag2(0, 1));
  CHECK(d(1, 1) == cd(1.0));
  CHECK(std::abs(d.trace() - cd(1.0)) == 0.0);
  const CVector out = kron(pauli_x(), pauli_x()) * basis_vector(4, 0);
  CHECK(std::abs(out(3) - cd(1.0)) == 0.0);
}

TEST_CASE("partial trace examples") {
  const auto phi = zoo::max_entangled(2);
  CHECK(max_abs(partial_trace(phi, {0}).matrix() - 0.5 * CMatrix::Identity(2, 2)) < 1e-15);

  const DimensionProfile three({2, 2, 2}, {Party::kA, Party::kB, Party::kB});
  const auto w = DensityMatrix::pure(zoo::w_state(3), three);
  CMatrix ups = CMatrix::Zero(4, 4);
  ups(0, 0) = 1.0 / 3.0;
  for (int r : {1, 2}) {
    for (int c : {1, 2}) ups(r, c) = 1.0 / 3.0;
  }
  CHECK(max_abs(partial_trace(w, {0, 1}).matrix() - ups) < 1e-15);

  auto rng = random::engine_for(1, 0);
  const CMatrix a = oracle::random_density(2, rng);
  const CMatrix b = oracle::random_density(3, rng);
  CHECK(max_abs(partial_trace(kron(a, b), {2, 3}, {0}) - a) < 1e-14);
}

TEST_CASE("partial trace agrees with the loop oracle on random inputs") {
  const std::vector<std::vector<int>> shapes{{2, 3}, {3, 2, 2}, {2, 2, 2, 2}};
  for (int trial = 0; trial < 30; ++trial) {
    auto rng = random::engine_for(2, static_cast<std::uint64_t>(trial));
    const auto& dims = shapes[static_cast<std::size_t>(trial) % shapes.size()];
    int n = 1;
    for (int d : dims) n *= d;
    const CMatrix m = oracle::random_hermitian(n, rng);
    std::vector<int> keep;
    for (int f = 0; f < static_cast<int>(dims.size()); ++f) {
      if ((trial >> f) & 1) keep.push_back(f);
    }
    if (keep.empty()) keep.push_back(0);
    CHECK(max_abs(partial_trace(m, dims, keep) - oracle::partial_trace(m, dims, keep)) < 1e-12);
  }
}

TEST_CASE("partial transpose") {
  CHECK(min_eigenvalue(partial_transpose(zoo::max_entangled(2), {1})) == doctest::Approx(-0.5));
  CHECK(min_eigenvalue(partial_transpose(zoo::werner(2, -0.5), {1})) == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
  auto rng = random::engine_for(3, 0);
  for (int i = 0; i < 10; ++i) {
    const CMatrix prod = kron(oracle::random_density(2, rng), oracle::random_density(3, rng));
    CHECK(min_eigenvalue(partial_transpose(prod, {2, 3}, {1})) > -1e-13);
  }
}

TEST_CASE("permute_factors moves factor contents") {
  auto rng = random::engine_for(4, 0);
  const CMatrix a = oracle::random_density(2, rng);
  const CMatrix b = oracle::random_density(3, rng);
  CHECK(max_abs(permute_factors(kron(a, b), {2, 3}, {1, 0}) - kron(b, a)) < 1e-15);
  const CMatrix m = oracle::random_hermitian(12, rng);
  const auto once = permute_factors(m, {2, 3, 2}, {2, 0, 1});
  const auto back = permute_factors(once, {2, 2, 3}, {1, 2, 0});
  CHECK(max_abs(back - m) < 1e-15);
}

TEST_CASE("eigendecomposition") {
  auto ev = eig_hermitian(diag2(0.25, 0.75));
  CHECK(ev.values(0) == doctest::Approx(0.75));
  CHECK(ev.values(1) == doctest::Approx(0.25));
  const auto bell = eigenvalues_hermitian(zoo::max_entangled(2).matrix());
  CHECK(bell(0) == doctest::Approx(1.0));
  CHECK(std::abs(bell(3)) < 1e-14);
  for (int i = 0; i < 10; ++i) {
    auto rng = random::engine_for(5, static_cast<std::uint64_t>(i));
    const CMatrix h = oracle::random_hermitian(6, rng);
    const auto e = eig_hermitian(h);
    const CMatrix rebuilt = e.vectors * e.values.cast<cd>().asDiagonal() * e.vectors.adjoint();
    CHECK(max_abs(rebuilt - h) < 1e-9);
    for (Eigen::Index j = 1; j < e.values.size(); ++j) CHECK(e.values(j - 1) >= e.values(j));
  }
  CMatrix bad = CMatrix::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(eig_hermitian(bad), ValidationError);
}

TEST_CASE("trace norm, entropy and eta") {
  auto rng = random::engine_for(6, 0);
  const DensityMatrix rho(oracle::random_density(4, rng), kQubits);
  CHECK(trace_norm(rho.matrix()) == doctest::Approx(1.0));
  CHECK(trace_norm(diag2(1, -1)) == doctest::Approx(2.0));
  CHECK(trace_norm(zoo::upsilon_eps(2, 0.1).matrix() - zoo::upsilon_eps(2, 0.0).matrix()) ==
        doctest::Approx(0.1));
  const CMatrix h = oracle::random_hermitian(5, rng);
  CHECK(trace_norm(h) == doctest::Approx(oracle::trace_norm(h)));

  const DimensionProfile qubit({2}, {Party::kA});
  CHECK(entropy(DensityMatrix(0.5 * CMatrix::Identity(2, 2), qubit)) == doctest::Approx(1.0));
  CHECK(entropy(zoo::max_entangled(2)) == doctest::Approx(0.0).scale(1.0));
  CHECK(entropy(DensityMatrix(diag2(0.75, 0.25), qubit)) == doctest::Approx(0.811278).epsilon(1e-6));
  CHECK(entropy(rho) == doctest::Approx(oracle::von_neumann_bits(rho.matrix())));

  CHECK(eta(0.0) == 0.0);
  CHECK(eta(1.0) == doctest::Approx(0.0).scale(1.0));
  CHECK(eta(0.5) == doctest::Approx(0.5));
  CHECK(eta(0.1) == doctest::Approx(0.332193).epsilon(1e-6));
}

TEST_CASE("density matrix invariants are enforced") {
  CHECK_THROWS_AS(DensityMatrix(diag2(0.5, 0.6), DimensionProfile({2}, {Party::kA})), ValidationError);
  CHECK_THROWS_AS(DensityMatrix(diag2(1.5, -0.5), DimensionProfile({2}, {Party::kA})), ValidationError);
  CHECK_THROWS_AS(DensityMatrix(CMatrix::Identity(4, 4) / 4.0, DimensionProfile::bipartite(2, 3)),
                  ValidationError);
  const auto near = DensityMatrix::nearest(diag2(1.2, -0.2), DimensionProfile({2}, {Party::kA}));
  CHECK(near.matrix()(0, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("state JSON round trip is bit exact") {
  for (int i = 0; i < 5; ++i) {
    auto rng = random::engine_for(7, static_cast<std::uint64_t>(i));
    const DimensionProfile prof({2, 3}, {Party::kB, Party::kA});
    const DensityMatrix rho(oracle::random_density(6, rng), prof);
    const auto back = io::state_from_json(nlohmann::json::parse(io::state_to_json(rho).dump()));
    CHECK(back.profile() == rho.profile());
    CHECK((back.matrix().array() == rho.matrix().array()).all());
  }
  CHECK_THROWS_AS(io::state_from_json(nlohmann::json::parse(R"({"re": [[1]]})")), ValidationError);
  CHECK_THROWS_AS(io::state_from_json(nlohmann::json::parse(
                      R"({"re": [[1, 0]], "dims": [2], "party": ["A"]})")),
                  ValidationError);
}
