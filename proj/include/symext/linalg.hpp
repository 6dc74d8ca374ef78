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

// Dense complex matrix substrate: tensor products, partial trace and
// transpose over labelled tensor factors, Hermitian spectra, norms and
// entropies. Entropies and logarithms are base 2 throughout.

#ifndef SYMEXT_LINALG_HPP
#define SYMEXT_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace symext {

using cd = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-10;
inline constexpr double kPsd = 1e-9;
inline constexpr double kEigInput = 1e-10;
// Eigenvalues below this are treated as exactly zero in entropies and roots.
inline constexpr double kClip = 1e-12;
}  // namespace tol

enum class Party { kA, kB };

/// Ordered local dimensions of a multipartite Hilbert space, each factor
/// labelled as belonging to Alice (A) or Bob (B).
class DimensionProfile {
 public:
  DimensionProfile(std::vector<int> dims, std::vector<Party> parties);

  static DimensionProfile bipartite(int dim_a, int dim_b);

  const std::vector<int>& dims() const noexcept { return dims_; }
  const std::vector<Party>& parties() const noexcept { return parties_; }
  int factor_count() const noexcept { return static_cast<int>(dims_.size()); }
  int total_dim() const noexcept { return total_; }

  std::vector<int> factors_of(Party party) const;
  int dim_of(Party party) const;
  int dim_a() const { return dim_of(Party::kA); }
  int dim_b() const { return dim_of(Party::kB); }
  bool has_both_parties() const;
  bool a_precedes_b() const;

  DimensionProfile select(const std::vector<int>& factors) const;

  bool operator==(const DimensionProfile& other) const = default;

 private:
  std::vector<int> dims_;
  std::vector<Party> parties_;
  int total_ = 1;
};

/// Hermitian, positive semidefinite, unit-trace matrix carrying a
/// DimensionProfile. The constructor enforces the invariants.
class DensityMatrix {
 public:
  DensityMatrix(CMatrix mat, DimensionProfile profile);

  /// Hermitian part, negative eigenvalues clipped, renormalized. For
  /// matrices that come out of an optimizer and are states only up to
  /// solver tolerance.
  static DensityMatrix nearest(const CMatrix& mat, DimensionProfile profile);
  static DensityMatrix pure(const CVector& psi, DimensionProfile profile);

  const CMatrix& matrix() const noexcept { return mat_; }
  const DimensionProfile& profile() const noexcept { return profile_; }
  int dim() const noexcept { return static_cast<int>(mat_.rows()); }

 private:
  CMatrix mat_;
  DimensionProfile profile_;
};

struct EigenDecomposition {
  RVector values;   // descending
  CMatrix vectors;  // orthonormal columns, vectors.col(i) <-> values(i)
};

CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(const CVector& a, const CVector& b);

CMatrix partial_trace(const CMatrix& m, const std::vector<int>& dims,
                      const std::vector<int>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

CMatrix partial_transpose(const CMatrix& m, const std::vector<int>& dims,
                          const std::vector<int>& factors);
CMatrix partial_transpose(const DensityMatrix& rho, const std::vector<int>& factors);

// New factor i is old factor perm[i].
CMatrix permute_factors(const CMatrix& m, const std::vector<int>& dims,
                        const std::vector<int>& perm);
CVector permute_factors(const CVector& v, const std::vector<int>& dims,
                        const std::vector<int>& perm);
DensityMatrix permute_factors(const DensityMatrix& rho, const std::vector<int>& perm);

/// Throws ValidationError unless `m` is Hermitian to 1e-10 (relative to
/// its largest entry when that exceeds one).
EigenDecomposition eig_hermitian(const CMatrix& m);
RVector eigenvalues_hermitian(const CMatrix& m);
double min_eigenvalue(const CMatrix& m);

double trace_norm(const CMatrix& m);

double entropy(const DensityMatrix& rho);
double entropy_of_spectrum(const RVector& spectrum);
double eta(double x);

/// Re tr(a b); both arguments Hermitian and of equal shape.
double hermitian_inner(const CMatrix& a, const CMatrix& b);

double max_abs(const CMatrix& m);
bool is_hermitian(const CMatrix& m, double tolerance);
CMatrix hermitian_part(const CMatrix& m);
CMatrix projector(const CVector& psi);
CVector basis_vector(int dim, int index);
CMatrix psd_sqrt(const CMatrix& m);
// (m^+)^{1/2} restricted to the support {eigenvalue > support_tol}.
CMatrix psd_pinv_sqrt(const CMatrix& m, double support_tol);
int numerical_rank(const CMatrix& m, double tolerance);

}  // namespace symext

#endif  // SYMEXT_LINALG_HPP
