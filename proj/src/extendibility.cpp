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

#include "symext/extendibility.hpp"

#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "extension_builder.hpp"
#include "symext/error.hpp"
#include "symext/random.hpp"
#include "symext/symmetry.hpp"

namespace symext {
namespace {

DensityMatrix a_first(const DensityMatrix& rho) {
  const auto& prof = rho.profile();
  if (prof.a_precedes_b()) return rho;
  std::vector<int> perm = prof.factors_of(Party::kA);
  const auto fb = prof.factors_of(Party::kB);
  perm.insert(perm.end(), fb.begin(), fb.end());
  return permute_factors(rho, perm);
}

std::vector<int> factor_range(int from, int to) {
  std::vector<int> out;
  for (int i = from; i < to; ++i) out.push_back(i);
  return out;
}

}  // namespace

std::string_view method_name(Method method) {
  return method == Method::kSdp ? "SDP" : "ANALYTIC";
}

sdp::AffineSystem extension_system(const DensityMatrix& rho, int k, Formulation formulation) {
  const auto st = detail::canonical(rho);
  const detail::ExtensionShape shape{st.dim_a, st.dim_b, k};
  detail::check_extension_size(shape);
  return sdp::AffineSystem{{shape.side()}, detail::extension_constraints(shape, st.mat, formulation)};
}

ExtendibilityVerdict is_k_extendible(const DensityMatrix& rho, int k,
                                     const ExtendibilityOptions& options) {
  const auto st = detail::canonical(rho);
  const detail::ExtensionShape shape{st.dim_a, st.dim_b, k};
  detail::check_extension_size(shape);
  const sdp::AffineSystem sys{{shape.side()},
                              detail::extension_constraints(shape, st.mat, options.formulation)};
  const auto res = sdp::feasibility_margin(sys, options.solver);
  if (res.status != sdp::Status::kOptimal) {
    throw NumericalError("extendibility program ended with status " +
                         std::string(sdp::status_name(res.status)));
  }
  ExtendibilityVerdict v;
  v.k = k;
  v.method = Method::kSdp;
  v.margin = res.margin;
  v.feasible = res.margin >= -options.boundary_tol;
  v.boundary = std::abs(res.margin) <= options.boundary_tol;
  if (v.feasible) {
    const CMatrix x = symmetry::twirl(res.witness.at(0), shape.dim_a, shape.dim_b, k);
    v.witness = DensityMatrix::nearest(x, detail::extension_profile(shape));
  }
  return v;
}

ExtendibilityVerdict two_qubit_extendible_analytic(const DensityMatrix& rho) {
  const auto& prof = rho.profile();
  if (prof.factor_count() != 2 || prof.dims()[0] != 2 || prof.dims()[1] != 2 ||
      !prof.has_both_parties()) {
    throw ValidationError("analytic test needs a two-qubit state");
  }
  const DensityMatrix r = a_first(rho);
  const CMatrix rho_b = partial_trace(r.matrix(), {2, 2}, {1});
  const double purity_b = (rho_b * rho_b).trace().real();
  const double purity = (r.matrix() * r.matrix()).trace().real();
  const RVector lam = eigenvalues_hermitian(r.matrix());
  const double det = std::max(0.0, lam.prod());
  ExtendibilityVerdict v;
  v.k = 1;
  v.method = Method::kAnalytic;
  v.margin = purity_b - purity + 4.0 * std::sqrt(det);
  v.feasible = v.margin >= -1e-12;
  v.boundary = std::abs(v.margin) <= 1e-6;
  return v;
}

bool pure_extension_spectral_check(const CVector& psi, int dim_a, int dim_b, int k,
                                   double tolerance) {
  const detail::ExtensionShape shape{dim_a, dim_b, k};
  if (k < 1 || dim_a < 2 || dim_b < 2 || psi.size() != shape.side()) {
    throw ValidationError("state vector does not match A (x) B^(k+1)");
  }
  if (std::abs(psi.norm() - 1.0) > 1e-8) throw ValidationError("state vector is not normalized");
  for (const auto& map : symmetry::adjacent_transposition_maps(dim_a, dim_b, k)) {
    CVector moved(psi.size());
    for (Eigen::Index x = 0; x < psi.size(); ++x) moved(map[static_cast<std::size_t>(x)]) = psi(x);
    if ((moved - psi).norm() > 1e-8 && (moved + psi).norm() > 1e-8) {
      throw ValidationError("state is not invariant under permutations of the B copies");
    }
  }
  std::vector<int> dims{dim_a};
  for (int i = 0; i <= k; ++i) dims.push_back(dim_b);
  const CMatrix rho = projector(psi);
  RVector left = eigenvalues_hermitian(partial_trace(rho, dims, {0, 1}));
  RVector right = eigenvalues_hermitian(partial_trace(rho, dims, factor_range(2, k + 2)));
  const Eigen::Index n = std::max(left.size(), right.size());
  RVector l = RVector::Zero(n);
  RVector r = RVector::Zero(n);
  l.head(left.size()) = left;
  r.head(right.size()) = right;
  return (l - r).cwiseAbs().maxCoeff() <= tolerance;
}

DensityMatrix apply_local_filter(const DensityMatrix& rho, const CMatrix& filter_a) {
  const DensityMatrix r = a_first(rho);
  const int da = r.profile().dim_a();
  const int db = r.profile().dim_b();
  if (filter_a.rows() != da || filter_a.cols() != da) {
    throw ValidationError("filter must act on the A space");
  }
  const CMatrix k = kron(filter_a, CMatrix::Identity(db, db));
  const CMatrix out = k * r.matrix() * k.adjoint();
  const double p = out.trace().real();
  if (!(p > 1e-14)) throw ValidationError("filter outcome has zero probability");
  return DensityMatrix::nearest(out / p, r.profile());
}

LoccResult one_way_locc_apply(const DensityMatrix& rho, const std::vector<CMatrix>& a_ops,
                              const std::vector<std::vector<CMatrix>>& b_ops) {
  const DensityMatrix r = a_first(rho);
  const int da = r.profile().dim_a();
  const int db = r.profile().dim_b();
  if (a_ops.empty() || b_ops.size() != a_ops.size()) {
    throw ValidationError("need one list of B operators per A operator");
  }
  CMatrix sum_a = CMatrix::Zero(da, da);
  for (const auto& a : a_ops) {
    if (a.rows() != da || a.cols() != da) throw ValidationError("A operator has the wrong shape");
    sum_a += a.adjoint() * a;
  }
  if (eigenvalues_hermitian(hermitian_part(sum_a))(0) > 1.0 + 1e-8) {
    throw ValidationError("A operators violate sum A_i^dagger A_i <= I");
  }
  for (const auto& channel : b_ops) {
    if (channel.empty()) continue;
    CMatrix sum_b = CMatrix::Zero(db, db);
    for (const auto& b : channel) {
      if (b.rows() != db || b.cols() != db) throw ValidationError("B operator has the wrong shape");
      sum_b += b.adjoint() * b;
    }
    if (max_abs(sum_b - CMatrix::Identity(db, db)) > 1e-8) {
      throw ValidationError("B operators of an outcome are not trace preserving");
    }
  }
  CMatrix out = CMatrix::Zero(r.dim(), r.dim());
  for (std::size_t i = 0; i < a_ops.size(); ++i) {
    const CMatrix ka = kron(a_ops[i], CMatrix::Identity(db, db));
    const CMatrix mid = ka * r.matrix() * ka.adjoint();
    if (b_ops[i].empty()) {
      out += mid;
      continue;
    }
    for (const auto& b : b_ops[i]) {
      const CMatrix kb = kron(CMatrix::Identity(da, da), b);
      out += kb * mid * kb.adjoint();
    }
  }
  const double p = out.trace().real();
  if (!(p > 1e-14)) throw ValidationError("one-way operation has zero success probability");
  return LoccResult{DensityMatrix::nearest(out / p, r.profile()), p};
}

// ---------------------------------------------------------------------------
// Extendible number

namespace {

struct FilterSearch {
  const DensityMatrix* rho;
  CMatrix proj;  // rank-r projector composed after the free matrix
  int dim_a;
  ExtendibilityOptions ext;
  int k;
  int rank = 0;
  double min_singular_ratio = 0.0;
};

CMatrix filter_from(const FilterSearch& s, const double* params) {
  const int d = s.dim_a;
  CMatrix g(d, d);
  for (int i = 0; i < d * d; ++i) g(i / d, i % d) = cd(params[2 * i], params[2 * i + 1]);
  CMatrix f = s.proj * g;
  Eigen::JacobiSVD<CMatrix> svd(f);
  const double top = svd.singularValues()(0);
  if (top > 0.0) f /= top;
  return f;
}

double margin_for(const FilterSearch& s, const CMatrix& f) {
  try {
    return is_k_extendible(apply_local_filter(*s.rho, f), s.k, s.ext).margin;
  } catch (const std::exception&) {
    return -1e3;
  }
}

// Filters that are numerically of lower rank than requested are rejected;
// the filtered state would otherwise drift toward a product state.
double negative_margin(const gsl_vector* v, void* data) {
  const auto* s = static_cast<const FilterSearch*>(data);
  const CMatrix f = filter_from(*s, v->data);
  const Eigen::VectorXd sv = Eigen::JacobiSVD<CMatrix>(f).singularValues();
  const double ratio = sv(s->rank - 1);
  if (ratio < s->min_singular_ratio) return 1.0 + (s->min_singular_ratio - ratio);
  return -margin_for(*s, f);
}

}  // namespace

ExtendibleNumberReport extendible_number(const DensityMatrix& rho, std::uint64_t seed,
                                         const ExtendibleNumberOptions& options) {
  const DensityMatrix r = a_first(rho);
  const int da = r.profile().dim_a();
  const int db = r.profile().dim_b();
  if (da > 4 || db > 4) throw ValidationError("extendible number search needs d_A, d_B <= 4");
  std::vector<int> a_factors = r.profile().factors_of(Party::kA);
  const CMatrix rho_a = partial_trace(r.matrix(), r.profile().dims(), a_factors);

  ExtendibleNumberReport rep;
  rep.seed = seed;
  rep.rank_a = numerical_rank(rho_a, 1e-10);
  FilterSearch search{&r, CMatrix::Identity(da, da), da, {}, options.k, da,
                      options.min_singular_ratio};

  // Full rank: the identity filter decides extendibility of rho itself.
  const double base = margin_for(search, CMatrix::Identity(da, da));
  if (base >= -options.feasible_tol) {
    rep.eta_lower = rep.rank_a;
    rep.best_filter = CMatrix::Identity(da, da);
    rep.margin_at_best = base;
    return rep;
  }

  const std::size_t nparams = static_cast<std::size_t>(2 * da * da);
  for (int rank = rep.rank_a; rank >= 2; --rank) {
    search.rank = rank;
    for (int t = 0; t < options.trials; ++t) {
      auto rng = random::engine_for(seed, (static_cast<std::uint64_t>(rank) << 32) | t);
      const CMatrix basis = random::haar_unitary(da, rng).leftCols(rank);
      search.proj = basis * basis.adjoint();
      const CMatrix g = random::ginibre(da, da, rng);
      ++rep.trials;

      std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> x(gsl_vector_alloc(nparams),
                                                               gsl_vector_free);
      std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> step(gsl_vector_alloc(nparams),
                                                                  gsl_vector_free);
      for (int i = 0; i < da * da; ++i) {
        gsl_vector_set(x.get(), 2 * i, g(i / da, i % da).real());
        gsl_vector_set(x.get(), 2 * i + 1, g(i / da, i % da).imag());
      }
      gsl_vector_set_all(step.get(), 0.5);
      gsl_multimin_function fn{&negative_margin, nparams, &search};
      std::unique_ptr<gsl_multimin_fminimizer, decltype(&gsl_multimin_fminimizer_free)> nm(
          gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, nparams),
          gsl_multimin_fminimizer_free);
      gsl_multimin_fminimizer_set(nm.get(), &fn, x.get(), step.get());
      // fval is only valid after the first iterate.
      for (int it = 0; it < options.max_evaluations; ++it) {
        if (gsl_multimin_fminimizer_iterate(nm.get()) != GSL_SUCCESS) break;
        if (-gsl_multimin_fminimizer_minimum(nm.get()) >= -options.feasible_tol) break;
        if (gsl_multimin_fminimizer_size(nm.get()) < 1e-8) break;
      }
      const double best = -gsl_multimin_fminimizer_minimum(nm.get());
      if (best >= -options.feasible_tol) {
        rep.eta_lower = rank;
        rep.best_filter = filter_from(search, gsl_multimin_fminimizer_x(nm.get())->data);
        rep.margin_at_best = best;
        return rep;
      }
    }
  }

  // Rank one: |e_0><v| with v the top eigenvector of rho_A leaves a product
  // state, which is extendible.
  const auto eig = eig_hermitian(rho_a);
  CMatrix f = basis_vector(da, 0) * eig.vectors.col(0).adjoint();
  rep.eta_lower = 1;
  rep.best_filter = f;
  rep.margin_at_best = margin_for(search, f);
  return rep;
}

}  // namespace symext
