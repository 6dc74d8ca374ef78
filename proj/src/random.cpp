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

#include "symext/random.hpp"

#include <cmath>

#include "symext/error.hpp"

namespace symext::random {

std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over a combination of both words
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Engine engine_for(std::uint64_t seed, std::uint64_t index) {
  return Engine(mix(seed, index));
}

double normal(Engine& rng) {
  // Box-Muller on the raw engine output so streams are identical across
  // standard library implementations.
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  double u1 = 0.0;
  do {
    u1 = std::generate_canonical<double, 53>(rng);
  } while (u1 <= 0.0);
  const double u2 = std::generate_canonical<double, 53>(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double uniform(Engine& rng, double lo, double hi) {
  return lo + (hi - lo) * std::generate_canonical<double, 53>(rng);
}

CMatrix ginibre(int rows, int cols, Engine& rng) {
  CMatrix g(rows, cols);
  const double s = std::sqrt(0.5);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) g(i, j) = cd(s * normal(rng), s * normal(rng));
  }
  return g;
}

CMatrix haar_unitary(int n, Engine& rng) {
  if (n < 1) throw ValidationError("haar_unitary: n must be positive");
  const CMatrix g = ginibre(n, n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const double mag = std::abs(r(i, i));
    const cd phase = mag > 0.0 ? r(i, i) / mag : cd(1.0, 0.0);
    q.col(i) *= phase;
  }
  return q;
}

CVector random_pure_state(int n, Engine& rng) {
  CVector v = ginibre(n, 1, rng).col(0);
  return v / v.norm();
}

CMatrix random_density(int n, Engine& rng, int rank) {
  if (rank <= 0 || rank > n) rank = n;
  const CMatrix g = ginibre(n, rank, rng);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return hermitian_part(rho);
}

CMatrix random_hermitian(int n, Engine& rng) {
  return hermitian_part(ginibre(n, n, rng));
}

DensityMatrix random_state(const DimensionProfile& profile, Engine& rng, int rank) {
  return DensityMatrix(random_density(profile.total_dim(), rng, rank), profile);
}

}  // namespace symext::random
