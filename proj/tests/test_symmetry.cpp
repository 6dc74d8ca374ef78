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

#include "oracles.hpp"
#include "symext/linalg.hpp"
#include "symext/random.hpp"
#include "symext/symmetry.hpp"

using namespace symext;
using namespace symext::symmetry;

namespace {

int rank_of(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
  int r = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) r += es.eigenvalues()(i) > 1e-9;
  return r;
}

// Real dimension of the Hermitian operators fixed by every permutation of
// the B copies, from the rank of the twirl map.
int invariant_dimension(int da, int db, int k) {
  int n = da;
  for (int i = 0; i <= k; ++i) n *= db;
  std::vector<Eigen::VectorXd> images;
  Eigen::MatrixXd stacked(2 * n * n, n * n);
  int col = 0;
  for (int r = 0; r < n; ++r) {
    for (int c = r; c < n; ++c) {
      for (int part = 0; part < (r == c ? 1 : 2); ++part) {
        CMatrix e = CMatrix::Zero(n, n);
        const cd v = part == 0 ? cd(1.0) : cd(0.0, 1.0);
        e(r, c) += v;
        e(c, r) += std::conj(v);
        const CMatrix t = twirl(e, da, db, k);
        Eigen::VectorXd flat(2 * n * n);
        for (int i = 0; i < n * n; ++i) {
          flat(i) = t(i / n, i % n).real();
          flat(n * n + i) = t(i / n, i % n).imag();
        }
        stacked.col(col++) = flat;
      }
    }
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(stacked.leftCols(col));
  qr.setThreshold(1e-9);
  return static_cast<int>(qr.rank());
}

}  // namespace

TEST_CASE("permutation operators") {
  CHECK(max_abs(permutation_operator({0, 1, 2}, 3).matrix() - CMatrix::Identity(27, 27)) == 0.0);
  const CMatrix swap = permutation_operator({1, 0}, 2).matrix();
  CHECK(std::abs((swap * basis_vector(4, 1))(2) - cd(1.0)) == 0.0);
  CHECK(max_abs(swap - oracle::swap_factors({2, 2}, 0, 1)) == 0.0);
  for (const auto& perm : std::vector<std::vector<int>>{{1, 0, 2}, {0, 2, 1}, {2, 1, 0}}) {
    const CMatrix p = permutation_operator(perm, 3).matrix();
    CHECK(max_abs(p * p - CMatrix::Identity(27, 27)) == 0.0);
  }
  // P_pi P_sigma = P_{pi o sigma}
  const std::vector<int> pi{1, 2, 0};
  const std::vector<int> sigma{0, 2, 1};
  std::vector<int> comp(3);
  for (int i = 0; i < 3; ++i) comp[static_cast<std::size_t>(i)] = pi[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];
  CHECK(max_abs(permutation_operator(pi, 2).matrix() * permutation_operator(sigma, 2).matrix() -
                permutation_operator(comp, 2).matrix()) == 0.0);
}

TEST_CASE("symmetric projector ranks") {
  const CMatrix p22 = symmetric_projector(2, 2);
  CHECK(max_abs(p22 - 0.5 * (CMatrix::Identity(4, 4) + oracle::swap_factors({2, 2}, 0, 1))) < 1e-15);
  CHECK(rank_of(p22) == 3);
  CHECK(rank_of(symmetric_projector(2, 3)) == 4);
  CHECK(rank_of(symmetric_projector(3, 2)) == 6);
  for (auto [d, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const CMatrix p = symmetric_projector(d, k);
    CHECK(max_abs(p * p - p) < 1e-13);
    const CMatrix basis = symmetric_basis(d, k);
    CHECK(basis.cols() == binomial(d + k - 1, k));
    CHECK(max_abs(basis * basis.adjoint() - p) < 1e-13);
  }
}

TEST_CASE("invariant constraints match the explicit twirl for k = 1") {
  const CMatrix swap_b = oracle::swap_factors({2, 2, 2}, 1, 2);
  const auto basis = invariant_constraint_basis(2, 2, 1);
  for (int t = 0; t < 10; ++t) {
    auto rng = random::engine_for(11, static_cast<std::uint64_t>(t));
    const CMatrix x = oracle::random_hermitian(8, rng);
    const CMatrix avg = 0.5 * (x + swap_b * x * swap_b);
    CHECK(max_abs(twirl(x, 2, 2, 1) - avg) < 1e-14);
    double worst = 0.0;
    for (const auto& c : basis) worst = std::max(worst, std::abs(c.pair(avg)));
    CHECK(worst < 1e-13);
    double largest = 0.0;
    for (const auto& c : basis) largest = std::max(largest, std::abs(c.pair(x)));
    CHECK(largest > 1e-3);
  }
}

TEST_CASE("invariance under adjacent transpositions implies full invariance") {
  const std::vector<int> dims{2, 2, 2, 2};
  for (int t = 0; t < 5; ++t) {
    auto rng = random::engine_for(12, static_cast<std::uint64_t>(t));
    const CMatrix x = twirl(oracle::random_hermitian(16, rng), 2, 2, 2);
    for (const auto& perm : all_permutations(3)) {
      const auto map = b_permutation_map(2, 2, perm);
      CMatrix p = CMatrix::Zero(16, 16);
      for (int i = 0; i < 16; ++i) p(map[static_cast<std::size_t>(i)], i) = 1.0;
      CHECK(max_abs(p * x * p.adjoint() - x) < 1e-13);
    }
    for (const auto& c : invariant_constraint_basis(2, 2, 2)) CHECK(std::abs(c.pair(x)) < 1e-12);
  }
}

TEST_CASE("constraint count equals the codimension of the invariant subspace") {
  for (auto [da, db, k] : std::vector<std::tuple<int, int, int>>{{2, 2, 1}, {1, 2, 2}, {2, 3, 1}, {2, 2, 2}}) {
    int n = da;
    for (int i = 0; i <= k; ++i) n *= db;
    const int expected = n * n - invariant_dimension(da, db, k);
    CHECK(static_cast<int>(invariant_constraint_basis(da, db, k).size()) == expected);
  }
}
