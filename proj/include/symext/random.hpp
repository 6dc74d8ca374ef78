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

// Reproducible random matrices. Randomized procedures derive one generator
// per trial from mix(seed, trial) so results do not depend on the order in
// which trials run.

#ifndef SYMEXT_RANDOM_HPP
#define SYMEXT_RANDOM_HPP

#include <cstdint>
#include <random>

#include "symext/linalg.hpp"

namespace symext::random {

using Engine = std::mt19937_64;

std::uint64_t mix(std::uint64_t seed, std::uint64_t index);
Engine engine_for(std::uint64_t seed, std::uint64_t index);

double normal(Engine& rng);
double uniform(Engine& rng, double lo, double hi);

// Entries i.i.d. complex normal with E|z|^2 = 1.
CMatrix ginibre(int rows, int cols, Engine& rng);
// QR of a Ginibre matrix with the phases of diag(R) divided out.
CMatrix haar_unitary(int n, Engine& rng);
CVector random_pure_state(int n, Engine& rng);
// G G^dagger / tr for G Ginibre n x rank.
CMatrix random_density(int n, Engine& rng, int rank = -1);
CMatrix random_hermitian(int n, Engine& rng);

DensityMatrix random_state(const DimensionProfile& profile, Engine& rng, int rank = -1);

}  // namespace symext::random

#endif  // SYMEXT_RANDOM_HPP
