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

#include "symext/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "symext/error.hpp"
#include "symext/kernels.hpp"

namespace symext {
namespace {

// Row-major tensor convention: the last factor varies fastest, so that
// kron(a, b) indexes as i_a * dim(b) + i_b.
std::vector<int> strides_of(const std::vector<int>& dims) {
  std::vector<int> strides(dims.size(), 1);
  for (int f = static_cast<int>(dims.size()) - 2; f >= 0; --f) {
    strides[f] = strides[f + 1] * dims[f + 1];
  }
  return strides;
}

int product(const std::vector<int>& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

void check_dims(const std::vector<int>& dims, Eigen::Index side) {
  if (dims.empty()) throw ValidationError("empty dimension list");
  for (int d : dims) {
    if (d < 1) throw ValidationError("local dimension must be positive");
  }
  if (product(dims) != side) {
    throw ValidationError("dimension product " + std::to_string(product(dims)) +
                          " does not match matrix side " + std::to_string(side));
  }
}

std::vector<int> sorted_factor_set(const std::vector<int>& factors, int count) {
  std::vector<int> s = factors;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw ValidationError("duplicate factor index");
  }
  for (int f : s) {
    if (f < 0 || f >= count) {
      throw ValidationError("invalid factor index " + std::to_string(f));
    }
  }
  return s;
}

std::vector<int> permuted_index_map(const std::vector<int>& dims,
                                    const std::vector<int>& perm) {
  const int count = static_cast<int>(dims.size());
  if (static_cast<int>(perm.size()) != count) {
    throw ValidationError("permutation size does not match factor count");
  }
  std::vector<int> seen(count, 0);
  for (int p : perm) {
    if (p < 0 || p >= count || seen[p]++) throw ValidationError("invalid permutation");
  }
  std::vector<int> new_dims(count);
  for (int i = 0; i < count; ++i) new_dims[i] = dims[perm[i]];
  const auto old_strides = strides_of(dims);
  const auto new_strides = strides_of(new_dims);
  const int n = product(dims);
  std::vector<int> map(n);
  for (int old = 0; old < n; ++old) {
    int idx = 0;
    for (int i = 0; i < count; ++i) {
      const int digit = (old / old_strides[perm[i]]) % dims[perm[i]];
      idx += digit * new_strides[i];
    }
    map[old] = idx;
  }
  return map;
}

}  // namespace

// ---------------------------------------------------------------------------
// DimensionProfile

DimensionProfile::DimensionProfile(std::vector<int> dims, std::vector<Party> parties)
    : dims_(std::move(dims)), parties_(std::move(parties)) {
  if (dims_.empty()) throw ValidationError("profile needs at least one factor");
  if (dims_.size() != parties_.size()) {
    throw ValidationError("profile dims and party labels differ in length");
  }
  for (int d : dims_) {
    if (d < 2) throw ValidationError("local dimensions must be >= 2");
  }
  total_ = product(dims_);
}

DimensionProfile DimensionProfile::bipartite(int dim_a, int dim_b) {
  return DimensionProfile({dim_a, dim_b}, {Party::kA, Party::kB});
}

std::vector<int> DimensionProfile::factors_of(Party party) const {
  std::vector<int> out;
  for (int f = 0; f < factor_count(); ++f) {
    if (parties_[f] == party) out.push_back(f);
  }
  return out;
}

int DimensionProfile::dim_of(Party party) const {
  int d = 1;
  bool any = false;
  for (int f = 0; f < factor_count(); ++f) {
    if (parties_[f] == party) {
      d *= dims_[f];
      any = true;
    }
  }
  if (!any) throw ValidationError("profile has no factor for the requested party");
  return d;
}

bool DimensionProfile::has_both_parties() const {
  return std::find(parties_.begin(), parties_.end(), Party::kA) != parties_.end() &&
         std::find(parties_.begin(), parties_.end(), Party::kB) != parties_.end();
}

bool DimensionProfile::a_precedes_b() const {
  bool seen_b = false;
  for (Party p : parties_) {
    if (p == Party::kB) seen_b = true;
    if (p == Party::kA && seen_b) return false;
  }
  return true;
}

DimensionProfile DimensionProfile::select(const std::vector<int>& factors) const {
  std::vector<int> d;
  std::vector<Party> p;
  for (int f : factors) {
    if (f < 0 || f >= factor_count()) throw ValidationError("invalid factor index");
    d.push_back(dims_[f]);
    p.push_back(parties_[f]);
  }
  return DimensionProfile(std::move(d), std::move(p));
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(CMatrix mat, DimensionProfile profile)
    : mat_(std::move(mat)), profile_(std::move(profile)) {
  if (mat_.rows() != mat_.cols()) throw ValidationError("density matrix must be square");
  if (mat_.rows() != profile_.total_dim()) {
    throw ValidationError("matrix side does not match the dimension profile");
  }
  if (!mat_.allFinite()) throw ValidationError("density matrix has non-finite entries");
  if (!is_hermitian(mat_, tol::kHermitian)) {
    throw ValidationError("density matrix is not Hermitian");
  }
  const double tr = mat_.trace().real();
  if (std::abs(tr - 1.0) > tol::kTrace) {
    throw ValidationError("density matrix trace " + std::to_string(tr) + " != 1");
  }
  const double lo = min_eigenvalue(mat_);
  if (lo < -tol::kPsd) {
    throw ValidationError("density matrix is not PSD (min eigenvalue " +
                          std::to_string(lo) + ")");
  }
}

DensityMatrix DensityMatrix::nearest(const CMatrix& mat, DimensionProfile profile) {
  const auto eig = eig_hermitian(hermitian_part(mat));
  RVector vals = eig.values.cwiseMax(0.0);
  const double total = vals.sum();
  if (!(total > 0.0)) throw ValidationError("matrix has no positive part to normalize");
  vals /= total;
  CMatrix out = eig.vectors * vals.asDiagonal() * eig.vectors.adjoint();
  return DensityMatrix(hermitian_part(out), std::move(profile));
}

DensityMatrix DensityMatrix::pure(const CVector& psi, DimensionProfile profile) {
  const double n = psi.norm();
  if (!(n > 0.0)) throw ValidationError("zero state vector");
  return DensityMatrix(projector(psi / n), std::move(profile));
}

// ---------------------------------------------------------------------------
// Tensor operations

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

CMatrix partial_trace(const CMatrix& m, const std::vector<int>& dims,
                      const std::vector<int>& keep) {
  if (m.rows() != m.cols()) throw ValidationError("partial trace needs a square matrix");
  check_dims(dims, m.rows());
  const int count = static_cast<int>(dims.size());
  if (keep.empty()) throw ValidationError("partial trace must keep at least one factor");
  const auto kept = sorted_factor_set(keep, count);
  std::vector<int> traced;
  for (int f = 0; f < count; ++f) {
    if (!std::binary_search(kept.begin(), kept.end(), f)) traced.push_back(f);
  }
  const auto strides = strides_of(dims);
  int kept_dim = 1;
  for (int f : kept) kept_dim *= dims[f];
  const int traced_dim = static_cast<int>(m.rows()) / kept_dim;

  // groups[t][k] = full index whose kept digits encode k and traced digits t.
  std::vector<std::vector<int>> groups(traced_dim, std::vector<int>(kept_dim));
  for (int full = 0; full < m.rows(); ++full) {
    int k = 0;
    int t = 0;
    for (int f : kept) k = k * dims[f] + (full / strides[f]) % dims[f];
    for (int f : traced) t = t * dims[f] + (full / strides[f]) % dims[f];
    groups[t][k] = full;
  }
  CMatrix out = CMatrix::Zero(kept_dim, kept_dim);
  for (const auto& g : groups) {
    for (int c = 0; c < kept_dim; ++c) {
      for (int r = 0; r < kept_dim; ++r) out(r, c) += m(g[r], g[c]);
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const auto kept = sorted_factor_set(keep, rho.profile().factor_count());
  CMatrix reduced = partial_trace(rho.matrix(), rho.profile().dims(), kept);
  return DensityMatrix(hermitian_part(reduced), rho.profile().select(kept));
}

CMatrix partial_transpose(const CMatrix& m, const std::vector<int>& dims,
                          const std::vector<int>& factors) {
  if (m.rows() != m.cols()) throw ValidationError("partial transpose needs a square matrix");
  check_dims(dims, m.rows());
  const auto flip = sorted_factor_set(factors, static_cast<int>(dims.size()));
  const auto strides = strides_of(dims);
  const Eigen::Index n = m.rows();
  CMatrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      Eigen::Index src_i = i;
      Eigen::Index src_j = j;
      for (int f : flip) {
        const Eigen::Index di = (i / strides[f]) % dims[f];
        const Eigen::Index dj = (j / strides[f]) % dims[f];
        src_i += (dj - di) * strides[f];
        src_j += (di - dj) * strides[f];
      }
      out(i, j) = m(src_i, src_j);
    }
  }
  return out;
}

CMatrix partial_transpose(const DensityMatrix& rho, const std::vector<int>& factors) {
  return partial_transpose(rho.matrix(), rho.profile().dims(), factors);
}

CMatrix permute_factors(const CMatrix& m, const std::vector<int>& dims,
                        const std::vector<int>& perm) {
  check_dims(dims, m.rows());
  const auto map = permuted_index_map(dims, perm);
  const Eigen::Index n = m.rows();
  CMatrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) out(map[i], map[j]) = m(i, j);
  }
  return out;
}

CVector permute_factors(const CVector& v, const std::vector<int>& dims,
                        const std::vector<int>& perm) {
  check_dims(dims, v.size());
  const auto map = permuted_index_map(dims, perm);
  CVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(map[i]) = v(i);
  return out;
}

DensityMatrix permute_factors(const DensityMatrix& rho, const std::vector<int>& perm) {
  CMatrix m = permute_factors(rho.matrix(), rho.profile().dims(), perm);
  std::vector<int> dims;
  std::vector<Party> parties;
  for (int p : perm) {
    dims.push_back(rho.profile().dims()[p]);
    parties.push_back(rho.profile().parties()[p]);
  }
  return DensityMatrix(std::move(m), DimensionProfile(std::move(dims), std::move(parties)));
}

// ---------------------------------------------------------------------------
// Spectra, norms, entropies

EigenDecomposition eig_hermitian(const CMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("eigendecomposition needs a square matrix");
  const double scale = std::max(1.0, max_abs(m));
  if (!is_hermitian(m, tol::kEigInput * scale)) {
    throw ValidationError("eig_hermitian: input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigensolver did not converge");
  }
  const Eigen::Index n = m.rows();
  EigenDecomposition out{RVector(n), CMatrix(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = solver.eigenvalues()(n - 1 - i);
    out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return out;
}

RVector eigenvalues_hermitian(const CMatrix& m) {
  const double scale = std::max(1.0, max_abs(m));
  if (!is_hermitian(m, tol::kEigInput * scale)) {
    throw ValidationError("eigenvalues_hermitian: input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigensolver did not converge");
  }
  return solver.eigenvalues().reverse();
}

double min_eigenvalue(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(m), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

double trace_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  const double scale = std::max(1.0, max_abs(m));
  if (m.rows() == m.cols() && is_hermitian(m, tol::kHermitian * scale)) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(m),
                                                  Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().sum();
  }
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues().sum();
}

double entropy_of_spectrum(const RVector& spectrum) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    const double l = spectrum(i);
    if (l < -tol::kPsd) throw ValidationError("entropy of a non-PSD spectrum");
    if (l > tol::kClip) s -= l * std::log2(l);
  }
  return s;
}

double entropy(const DensityMatrix& rho) {
  return entropy_of_spectrum(eigenvalues_hermitian(rho.matrix()));
}

double eta(double x) {
  if (!(x >= -1e-12 && x <= 1.0 + 1e-12)) {
    throw ValidationError("eta: argument " + std::to_string(x) + " outside [0, 1]");
  }
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x);
}

double hermitian_inner(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("hermitian_inner: shape mismatch");
  }
  return kernels::re_dot(a.data(), b.data(), static_cast<std::size_t>(a.size()));
}

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return m.size() == 0 || (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

CMatrix projector(const CVector& psi) { return psi * psi.adjoint(); }

CVector basis_vector(int dim, int index) {
  if (index < 0 || index >= dim) throw ValidationError("basis index out of range");
  CVector v = CVector::Zero(dim);
  v(index) = 1.0;
  return v;
}

CMatrix psd_sqrt(const CMatrix& m) {
  const auto eig = eig_hermitian(m);
  RVector r = eig.values.unaryExpr([](double l) { return l > tol::kClip ? std::sqrt(l) : 0.0; });
  return eig.vectors * r.asDiagonal() * eig.vectors.adjoint();
}

CMatrix psd_pinv_sqrt(const CMatrix& m, double support_tol) {
  const auto eig = eig_hermitian(m);
  RVector r = eig.values.unaryExpr(
      [support_tol](double l) { return l > support_tol ? 1.0 / std::sqrt(l) : 0.0; });
  return eig.vectors * r.asDiagonal() * eig.vectors.adjoint();
}

int numerical_rank(const CMatrix& m, double tolerance) {
  const RVector vals = eigenvalues_hermitian(m);
  int r = 0;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) > tolerance) ++r;
  }
  return r;
}

}  // namespace symext
