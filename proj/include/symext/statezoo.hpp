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

// Constructors for the concrete state families. Every constructor returns
// a validated DensityMatrix (or a normalized vector for the pure
// multipartite states).

#ifndef SYMEXT_STATEZOO_HPP
#define SYMEXT_STATEZOO_HPP

#include <cmath>

#include "symext/linalg.hpp"

namespace symext::zoo {

/// Projector onto (1/sqrt d) sum_i |ii>.
DensityMatrix max_entangled(int d);

/// (n/(n+2)) |00><00| + (2/(n+2)) |Psi+><Psi+| with |Psi+> = (|01>+|10>)/sqrt 2.
DensityMatrix upsilon_n(int n);

/// (I + alpha SWAP) / (d^2 + alpha d), alpha in [-1, 1].
DensityMatrix werner(int d, double alpha);

/// Coherent block state on (flag (x) C^d)_A (x) (flag (x) C^d)_B,
/// factors [flag_A, A, flag_B, B]. With flags (f_A, f_B) labelling d^2
/// blocks, it is
///
///   1/(2d-1) [ d P+   0 0  C      ]
///            [ 0      0 0  0      ]
///            [ 0      0 0  0      ]
///            [ C^dag  0 0  sigma  ]
///
/// where sigma = sum_{i=1}^{d-1} |i0><i0| and C = c |Phi_d><10|.
/// PSD iff c <= sqrt d.
DensityMatrix locking_state(int d, double c);
inline DensityMatrix locking_state(int d) { return locking_state(d, std::sqrt(static_cast<double>(d))); }

/// Dephases Alice's flag (factor 0) in the computational basis.
DensityMatrix dephase_a_flag(const DensityMatrix& locking);

/// (d/(2d-1)) P+ + (1/(2d-1)) sum_{i=1}^{d-1} |i0><i0|.
DensityMatrix decohered_locking_state(int d);

/// [d/(2d-1) + eps/2] P+ + [1/(2d-1) - eps/(2(d-1))] sum_{i=1}^{d-1} |i0><i0|,
/// 0 <= eps <= 2(d-1)/(2d-1).
DensityMatrix upsilon_eps(int d, double eps);

/// (1/2) sum_{i,j} |ii><jj| (x) U_i sigma U_j^dagger with a qubit key pair,
/// returned on [A, A', B, B'].
DensityMatrix private_state(const DensityMatrix& sigma_inner, const CMatrix& u0, const CMatrix& u1);

/// (|0..01> + |0..10> + ... + |10..0>)/sqrt n on n qubits.
CVector w_state(int parties);
/// (|0..0> + |1..1>)/sqrt 2 on n qubits.
CVector ghz_state(int parties);

}  // namespace symext::zoo

#endif  // SYMEXT_STATEZOO_HPP
