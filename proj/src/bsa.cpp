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

#include "symext/bsa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "extension_builder.hpp"
#include "symext/error.hpp"
#include "symext/symmetry.hpp"

namespace symext {
namespace {

constexpr double kSupportTol = 1e-10;
// Weights closer than this to 0 or 1 are within solver accuracy; the
// corresponding component is left empty.
constexpr double kWeightTol = 1e-6;

std::vector<int> all_copies(int k) {
  std::vector<int> copies(static_cast<std::size_t>(k + 1));
  std::iota(copies.begin(), copies.end(), 0);
  return copies;
}

sdp::Solution solve_or_throw(const sdp::Problem& p, const sdp::Options& o, const char* what) {
  auto sol = sdp::solve(p, o);
  if (sol.status != sdp::Status::kOptimal) {
    throw NumericalError(std::string(what) + " ended with status " +
                         std::string(sdp::status_name(sol.status)));
  }
  return sol;
}

// Columns spanning the vectors of the extension space whose every AB_j
// marginal lies in the support of the state; X must live there whenever
// marginal_j(X) <= target.
CMatrix marginal_face(const detail::ExtensionShape& shape, const CMatrix& kernel_projector) {
  const int side = shape.side();
  CMatrix k = CMatrix::Zero(side, side);
  for (int j = 0; j <= shape.k; ++j) {
    for (int r = 0; r < detail::rest_count(shape); ++r) {
      const auto rows = detail::pair_rows(shape, j, r);
      for (std::size_t a = 0; a < rows.size(); ++a) {
        for (std::size_t b = 0; b < rows.size(); ++b) {
          k(rows[a], rows[b]) += kernel_projector(static_cast<Eigen::Index>(a),
                                                  static_cast<Eigen::Index>(b));
        }
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(k);
  int w = 0;
  while (w < side && es.eigenvalues()(w) < 1e-9) ++w;
  return es.eigenvectors().leftCols(w);
}

// Weight program on a rank-deficient state, restricted to the face above.
// Without the restriction the program has no strictly feasible point and
// the interior-point iterates stall.
CMatrix reduced_weight_program(const detail::ExtensionShape& shape, const CMatrix& face,
                               const CMatrix& support, const RVector& values,
                               const sdp::Options& options) {
  const int w = static_cast<int>(face.cols());
  const int rank = static_cast<int>(support.cols());
  sdp::Problem p;
  p.sense = sdp::Sense::kMaximize;
  const int xb = p.add_block(w);
  const int sb = p.add_block(rank);
  p.objective[static_cast<std::size_t>(xb)] = CMatrix::Identity(w, w);
  for (int j = 0; j <= shape.k; ++j) {
    std::vector<CMatrix> h;
    for (int r = 0; r < detail::rest_count(shape); ++r) {
      const auto rows = detail::pair_rows(shape, j, r);
      CMatrix block(static_cast<Eigen::Index>(rows.size()), w);
      for (std::size_t a = 0; a < rows.size(); ++a) block.row(static_cast<Eigen::Index>(a)) = face.row(rows[a]);
      h.push_back(support.adjoint() * block);
    }
    for (int pi = 0; pi < rank; ++pi) {
      for (int qi = pi; qi < rank; ++qi) {
        CMatrix t = CMatrix::Zero(w, w);
        for (const auto& hr : h) t += hr.row(qi).adjoint() * hr.row(pi);
        sdp::Constraint re(pi == qi ? values(pi) : 0.0);
        re.add_dense(xb, 0.5 * (t + t.adjoint()));
        re.add_real_part(sb, pi, qi, 1.0);
        p.constraints.push_back(std::move(re));
        if (pi != qi) {
          const cd i1(0.0, 1.0);
          sdp::Constraint im(0.0);
          im.add_dense(xb, 0.5 * (-i1 * t + i1 * t.adjoint()));
          im.add_imag_part(sb, pi, qi, 1.0);
          p.constraints.push_back(std::move(im));
        }
      }
    }
  }
  const auto sol = solve_or_throw(p, options, "weight program");
  return face * sol.x[static_cast<std::size_t>(xb)] * face.adjoint();
}

}  // namespace

BsaDecomposition lambda_max(const DensityMatrix& rho, const BsaOptions& options) {
  const auto st = detail::canonical(rho);
  const detail::ExtensionShape shape{st.dim_a, st.dim_b, options.k};
  detail::check_extension_size(shape);
  const int n = shape.pair_side();

  const auto eig = eig_hermitian(st.mat);
  int rank = 0;
  while (rank < n && eig.values(rank) > kSupportTol) ++rank;

  CMatrix x_full;
  if (rank == n) {
    sdp::Problem p;
    p.sense = sdp::Sense::kMaximize;
    const int xb = p.add_block(shape.side());
    const int sb = p.add_block(n);
    p.objective[static_cast<std::size_t>(xb)] = CMatrix::Identity(shape.side(), shape.side());
    detail::add_marginal_constraints(p.constraints, shape, xb, all_copies(options.k), {{sb, 1.0}},
                                     st.mat);
    x_full = solve_or_throw(p, options.solver, "weight program").x[static_cast<std::size_t>(xb)];
  } else {
    const CMatrix kernel = eig.vectors.rightCols(n - rank);
    const CMatrix face = marginal_face(shape, kernel * kernel.adjoint());
    if (face.cols() == 0) {
      x_full = CMatrix::Zero(shape.side(), shape.side());
    } else {
      x_full = reduced_weight_program(shape, face, eig.vectors.leftCols(rank),
                                      eig.values.head(rank), options.solver);
    }
  }

  const CMatrix x = symmetry::twirl(x_full, shape.dim_a, shape.dim_b, options.k);
  const double lam = x.trace().real();
  if (lam > 1.0 + 1e-6) throw NumericalError("extendible weight exceeds one");
  BsaDecomposition out;
  out.k = options.k;
  out.lambda_max = std::clamp(lam, 0.0, 1.0);
  const CMatrix z = detail::first_marginal(x, shape);
  if (out.lambda_max >= kWeightTol) {
    out.sigma_ext = DensityMatrix::nearest(z / lam, st.profile());
    out.witness = DensityMatrix::nearest(x / lam, detail::extension_profile(shape));
  }
  if (1.0 - out.lambda_max >= kWeightTol) {
    out.sigma_next = DensityMatrix::nearest((st.mat - z) / (1.0 - out.lambda_max), st.profile());
  }
  return out;
}

double ess_monotone(const DensityMatrix& rho, const BsaOptions& options) {
  return 1.0 - lambda_max(rho, options).lambda_max;
}

double d_max(const DensityMatrix& sigma, const DensityMatrix& rho) {
  if (!(sigma.profile() == rho.profile())) throw ValidationError("d_max needs equal profiles");
  const auto eig = eig_hermitian(rho.matrix());
  const Eigen::Index n = eig.values.size();
  Eigen::Index rank = 0;
  while (rank < n && eig.values(rank) > kSupportTol) ++rank;
  const CMatrix kernel = eig.vectors.rightCols(n - rank);
  if (n - rank > 0) {
    const double outside = (kernel.adjoint() * sigma.matrix() * kernel).trace().real();
    if (outside > kSupportTol) return std::numeric_limits<double>::infinity();
  }
  const CMatrix support = eig.vectors.leftCols(rank);
  const RVector inv_sqrt = eig.values.head(rank).cwiseSqrt().cwiseInverse();
  const CMatrix root = support * inv_sqrt.asDiagonal() * support.adjoint();
  const CMatrix m = hermitian_part(root * sigma.matrix() * root);
  return std::log2(eigenvalues_hermitian(m)(0));
}

DistanceResult distance_to_extendible_set(const DensityMatrix& rho, const BsaOptions& options) {
  const auto st = detail::canonical(rho);
  const detail::ExtensionShape shape{st.dim_a, st.dim_b, options.k};
  detail::check_extension_size(shape);
  const int n = shape.pair_side();

  sdp::Problem p;
  p.sense = sdp::Sense::kMinimize;
  const int xb = p.add_block(shape.side());
  const int pb = p.add_block(n);
  const int qb = p.add_block(n);
  p.objective[static_cast<std::size_t>(pb)] = CMatrix::Identity(n, n);
  p.objective[static_cast<std::size_t>(qb)] = CMatrix::Identity(n, n);
  detail::add_marginal_constraints(p.constraints, shape, xb, all_copies(options.k),
                                   {{pb, 1.0}, {qb, -1.0}}, st.mat);
  sdp::Constraint unit(1.0);
  unit.add_identity(xb, 1.0);
  p.constraints.push_back(std::move(unit));
  const auto sol = solve_or_throw(p, options.solver, "distance program");

  const CMatrix x = symmetry::twirl(sol.x[static_cast<std::size_t>(xb)], shape.dim_a,
                                    shape.dim_b, options.k);
  const DensityMatrix w = DensityMatrix::nearest(x, detail::extension_profile(shape));
  const CMatrix z = detail::first_marginal(w.matrix(), shape);
  return DistanceResult{std::max(0.0, sol.primal_objective),
                        DensityMatrix::nearest(z, st.profile()), w};
}

}  // namespace symext
