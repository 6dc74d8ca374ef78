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

#include "symext/statezoo.hpp"

#include <string>

#include "symext/error.hpp"

namespace symext::zoo {
namespace {

CVector phi_d(int d) {
  CVector v = CVector::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return v;
}

// sum_{i=1}^{d-1} |i0><i0|
CMatrix shifted_diagonal(int d) {
  CMatrix s = CMatrix::Zero(d * d, d * d);
  for (int i = 1; i < d; ++i) s(i * d, i * d) = 1.0;
  return s;
}

void check_dim(int d) {
  if (d < 2) throw ValidationError("local dimension must be at least 2");
}

}  // namespace

DensityMatrix max_entangled(int d) {
  check_dim(d);
  return DensityMatrix::pure(phi_d(d), DimensionProfile::bipartite(d, d));
}

DensityMatrix upsilon_n(int n) {
  if (n < 1) throw ValidationError("upsilon_n needs n >= 1");
  CVector psi = CVector::Zero(4);
  psi(1) = psi(2) = 1.0 / std::sqrt(2.0);
  CMatrix m = (2.0 / (n + 2)) * projector(psi);
  m(0, 0) += static_cast<double>(n) / (n + 2);
  return DensityMatrix(m, DimensionProfile::bipartite(2, 2));
}

DensityMatrix werner(int d, double alpha) {
  check_dim(d);
  if (!(alpha >= -1.0 && alpha <= 1.0)) throw ValidationError("Werner parameter outside [-1, 1]");
  const int n = d * d;
  CMatrix m = CMatrix::Identity(n, n);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m(i * d + j, j * d + i) += alpha;
  }
  m /= (n + alpha * d);
  return DensityMatrix(m, DimensionProfile::bipartite(d, d));
}

DensityMatrix locking_state(int d, double c) {
  check_dim(d);
  if (!(c >= 0.0) || c > std::sqrt(static_cast<double>(d)) * (1.0 + 1e-12)) {
    throw ValidationError("coherence c must lie in [0, sqrt d]");
  }
  const int n = d * d;
  // Blocks indexed by (f_A, f_B) on [flag_A, flag_B, A, B] ordering.
  CMatrix m = CMatrix::Zero(4 * n, 4 * n);
  m.block(0, 0, n, n) = static_cast<double>(d) * projector(phi_d(d));
  m.block(3 * n, 3 * n, n, n) = shifted_diagonal(d);
  const CMatrix coupling = c * phi_d(d) * basis_vector(n, d).adjoint();  // |Phi><10|
  m.block(0, 3 * n, n, n) = coupling;
  m.block(3 * n, 0, n, n) = coupling.adjoint();
  m /= static_cast<double>(2 * d - 1);
  // [flag_A, flag_B, A, B] -> [flag_A, A, flag_B, B]
  const CMatrix ordered = permute_factors(m, {2, 2, d, d}, {0, 2, 1, 3});
  return DensityMatrix::nearest(
      ordered, DimensionProfile({2, d, 2, d}, {Party::kA, Party::kA, Party::kB, Party::kB}));
}

DensityMatrix dephase_a_flag(const DensityMatrix& locking) {
  const auto& dims = locking.profile().dims();
  if (dims.size() != 4 || dims[0] != 2) throw ValidationError("expected a locking-state profile");
  const int rest = locking.dim() / 2;
  CMatrix m = locking.matrix();
  m.block(0, rest, rest, rest).setZero();
  m.block(rest, 0, rest, rest).setZero();
  return DensityMatrix(m, locking.profile());
}

DensityMatrix decohered_locking_state(int d) { return upsilon_eps(d, 0.0); }

DensityMatrix upsilon_eps(int d, double eps) {
  check_dim(d);
  const double top = 2.0 * (d - 1) / (2.0 * d - 1);
  if (!(eps >= 0.0) || eps > top + 1e-15) {
    throw ValidationError("eps must lie in [0, " + std::to_string(top) + "]");
  }
  const double w_plus = d / (2.0 * d - 1) + eps / 2.0;
  const double w_rest = 1.0 / (2.0 * d - 1) - eps / (2.0 * (d - 1));
  const CMatrix m = w_plus * projector(phi_d(d)) + std::max(0.0, w_rest) * shifted_diagonal(d);
  return DensityMatrix(hermitian_part(m), DimensionProfile::bipartite(d, d));
}

DensityMatrix private_state(const DensityMatrix& sigma_inner, const CMatrix& u0, const CMatrix& u1) {
  const auto& prof = sigma_inner.profile();
  if (prof.factor_count() != 2 || !prof.a_precedes_b()) {
    throw ValidationError("inner state must be bipartite A'B' with A' first");
  }
  const int n = sigma_inner.dim();
  for (const CMatrix* u : {&u0, &u1}) {
    if (u->rows() != n || u->cols() != n ||
        max_abs(u->adjoint() * *u - CMatrix::Identity(n, n)) > 1e-10) {
      throw ValidationError("twisting operators must be unitaries on A'B'");
    }
  }
  const CMatrix* us[2] = {&u0, &u1};
  // [A, B, A', B'] with key basis |00>, |11> at indices 0 and 3.
  CMatrix m = CMatrix::Zero(4 * n, 4 * n);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      m.block(3 * i * n, 3 * j * n, n, n) = 0.5 * (*us[i]) * sigma_inner.matrix() * us[j]->adjoint();
    }
  }
  const int da = prof.dims()[0];
  const int db = prof.dims()[1];
  const CMatrix ordered = permute_factors(m, {2, 2, da, db}, {0, 2, 1, 3});
  return DensityMatrix::nearest(
      ordered, DimensionProfile({2, da, 2, db}, {Party::kA, Party::kA, Party::kB, Party::kB}));
}

CVector w_state(int parties) {
  if (parties < 2) throw ValidationError("W state needs at least two parties");
  const int n = 1 << parties;
  CVector v = CVector::Zero(n);
  for (int p = 0; p < parties; ++p) v(1 << p) = 1.0;
  return v / std::sqrt(static_cast<double>(parties));
}

CVector ghz_state(int parties) {
  if (parties < 2) throw ValidationError("GHZ state needs at least two parties");
  const int n = 1 << parties;
  CVector v = CVector::Zero(n);
  v(0) = v(n - 1) = 1.0 / std::sqrt(2.0);
  return v;
}

}  // namespace symext::zoo
