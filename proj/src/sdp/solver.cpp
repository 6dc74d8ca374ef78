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

// Primal-dual path-following interior-point method with Nesterov-Todd
// scaling. Each iteration solves the Schur complement system
//
//   M dy = rp - A(Rc - W Rd W),  M_ij = <A_i, W A_j W>,
//
// once with Rc = -X (predictor, sets the centering weight sigma from the
// affine-scaling step) and once with Rc = sigma mu S^{-1} - X.
// The core is templated on the scalar type so the real symmetric embedding
// of a Hermitian problem runs through the same code.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "internal.hpp"
#include "symext/error.hpp"
#include "symext/kernels.hpp"

namespace symext::sdp {
namespace {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Blocks = std::vector<Mat<S>>;

inline double re(double v) { return v; }
inline double re(cd v) { return v.real(); }

inline double re_dot(const double* a, const double* b, std::size_t n) {
  return kernels::dot(a, b, n);
}
inline double re_dot(const cd* a, const cd* b, std::size_t n) {
  return kernels::re_dot(a, b, n);
}
inline void axpy(double a, const double* x, double* y, std::size_t n) {
  kernels::axpy(a, x, y, n);
}
inline void axpy(cd a, const cd* x, cd* y, std::size_t n) { kernels::caxpy(a, x, y, n); }

template <class S>
struct IEntry {
  int block;
  int row;
  int col;
  S value;
};

template <class S>
struct ICon {
  std::vector<IEntry<S>> entries;
  std::vector<std::pair<int, double>> ident;
};

template <class S>
struct IpmInput {
  std::vector<int> sizes;
  Blocks<S> c;
  std::vector<ICon<S>> a;
  Eigen::VectorXd b;
};

template <class S>
struct IpmOutput {
  Status status = Status::kNumericalFailure;
  Blocks<S> x;
  Blocks<S> s;
  Eigen::VectorXd y;
  double pobj = 0.0;
  double dobj = 0.0;
  double gap = 0.0;
  double relgap = 0.0;
  double pinf = 0.0;
  double dinf = 0.0;
  int iterations = 0;
  bool reduced_accuracy = false;
};

template <class S>
double inner(const Blocks<S>& a, const Blocks<S>& b) {
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    acc += re_dot(a[k].data(), b[k].data(), static_cast<std::size_t>(a[k].size()));
  }
  return acc;
}

template <class S>
double norm(const Blocks<S>& a) {
  return std::sqrt(std::max(0.0, inner(a, a)));
}

template <class S>
double pair(const ICon<S>& con, const Blocks<S>& x) {
  double acc = 0.0;
  for (const auto& e : con.entries) acc += re(e.value * x[e.block](e.col, e.row));
  for (const auto& [b, c] : con.ident) acc += c * re(x[b].trace());
  return acc;
}

template <class S>
Eigen::VectorXd apply_ops(const std::vector<ICon<S>>& cons, const Blocks<S>& x) {
  Eigen::VectorXd out(cons.size());
  for (std::size_t i = 0; i < cons.size(); ++i) out(static_cast<Eigen::Index>(i)) = pair(cons[i], x);
  return out;
}

template <class S>
Blocks<S> adjoint_ops(const std::vector<ICon<S>>& cons, const Eigen::VectorXd& z,
                  const std::vector<int>& sizes) {
  Blocks<S> out;
  for (int n : sizes) out.push_back(Mat<S>::Zero(n, n));
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const double zi = z(static_cast<Eigen::Index>(i));
    for (const auto& e : cons[i].entries) out[e.block](e.row, e.col) += zi * e.value;
    for (const auto& [b, c] : cons[i].ident) out[b].diagonal().array() += S(zi * c);
  }
  return out;
}

template <class S>
void hermitize(Blocks<S>& x) {
  for (auto& b : x) {
    Mat<S> h = S(0.5) * (b + b.adjoint());
    b = std::move(h);
  }
}

template <class S>
Blocks<S> sandwich(const Blocks<S>& w, const Blocks<S>& m) {
  Blocks<S> out(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out[k] = w[k] * m[k] * w[k];
  return out;
}

// M_ij = <A_i, W A_j W>; W A_j W is accumulated one sparse entry at a time
// as rank-one column updates.
template <class S>
Eigen::MatrixXd schur_complement(const std::vector<ICon<S>>& cons, const Blocks<S>& w,
                                 const std::vector<int>& sizes) {
  const auto m = static_cast<Eigen::Index>(cons.size());
  const std::size_t nb = sizes.size();
  Blocks<S> w2(nb);
  bool have_w2 = false;
  Blocks<S> v;
  for (int n : sizes) v.push_back(Mat<S>::Zero(n, n));
  std::vector<char> touched(nb, 0);
  Eigen::MatrixXd out(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const auto& cj = cons[j];
    for (const auto& e : cj.entries) {
      const Mat<S>& wb = w[e.block];
      Mat<S>& vb = v[e.block];
      const auto n = static_cast<std::size_t>(sizes[e.block]);
      const S* wr = wb.col(e.row).data();
      for (Eigen::Index t = 0; t < vb.cols(); ++t) {
        const S coef = e.value * wb(e.col, t);
        if (coef != S(0)) axpy(coef, wr, vb.col(t).data(), n);
      }
      touched[e.block] = 1;
    }
    if (!cj.ident.empty() && !have_w2) {
      for (std::size_t b = 0; b < nb; ++b) w2[b] = w[b] * w[b];
      have_w2 = true;
    }
    for (const auto& [b, c] : cj.ident) {
      v[b] += S(c) * w2[b];
      touched[b] = 1;
    }
    for (Eigen::Index i = 0; i <= j; ++i) out(i, j) = out(j, i) = pair(cons[i], v);
    for (std::size_t b = 0; b < nb; ++b) {
      if (touched[b]) {
        v[b].setZero();
        touched[b] = 0;
      }
    }
  }
  return out;
}

// Largest alpha with X + alpha dX >= 0, given the Cholesky factor of X.
template <class S>
double max_step(const std::vector<Eigen::LLT<Mat<S>>>& chol, const Blocks<S>& dx) {
  double alpha = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < dx.size(); ++k) {
    const auto l = chol[k].matrixL();
    Mat<S> t = l.solve(dx[k]);
    Mat<S> u = l.solve(t.adjoint());
    u = S(0.5) * (u + u.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat<S>> es(u, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues()(0);
    if (lo < 0.0) alpha = std::min(alpha, -1.0 / lo);
  }
  return alpha;
}

template <class S>
IpmOutput<S> interior_point(const IpmInput<S>& in, const Options& opt) {
  const auto& sizes = in.sizes;
  const std::size_t nb = sizes.size();
  const auto m = static_cast<Eigen::Index>(in.a.size());
  double total_side = 0.0;
  for (int n : sizes) total_side += n;

  std::ofstream trace;
  if (!opt.trace_csv.empty()) {
    trace.open(opt.trace_csv, std::ios::app);
    trace << "iteration,gap,primal_residual,dual_residual\n";
  }

  // Starting point scaled to the data.
  const double norm_b = in.b.norm();
  const double norm_c = norm(in.c);
  Blocks<S> x(nb);
  Blocks<S> s(nb);
  for (std::size_t k = 0; k < nb; ++k) {
    const double n = sizes[k];
    double xi = std::max(10.0, std::sqrt(n));
    double eta = std::max({10.0, std::sqrt(n), std::sqrt(std::max(0.0, re_dot(in.c[k].data(), in.c[k].data(), static_cast<std::size_t>(in.c[k].size()))))});
    for (Eigen::Index i = 0; i < m; ++i) {
      double na2 = 0.0;
      double tr = 0.0;
      double id = 0.0;
      for (const auto& e : in.a[i].entries) {
        if (e.block != static_cast<int>(k)) continue;
        na2 += std::norm(std::complex<double>(re(e.value), 0.0)) +
               (std::abs(e.value) * std::abs(e.value) - re(e.value) * re(e.value));
        if (e.row == e.col) tr += re(e.value);
      }
      for (const auto& [b, c] : in.a[i].ident) {
        if (b == static_cast<int>(k)) id += c;
      }
      na2 += 2.0 * id * tr + id * id * n;
      const double na = std::sqrt(std::max(0.0, na2));
      if (na == 0.0) continue;
      xi = std::max(xi, n * (1.0 + std::abs(in.b(i))) / (1.0 + na));
      eta = std::max(eta, na);
    }
    x[k] = xi * Mat<S>::Identity(sizes[k], sizes[k]);
    s[k] = eta * Mat<S>::Identity(sizes[k], sizes[k]);
  }
  Eigen::VectorXd y = Eigen::VectorXd::Zero(m);

  IpmOutput<S> out;
  IpmOutput<S> best;
  double best_score = std::numeric_limits<double>::infinity();
  int stalled = 0;
  // On breakdown, fall back to the best iterate if it meets the relaxed
  // tolerances (faces without a strictly feasible point stall the residual).
  auto finish = [&]() -> IpmOutput<S> {
    const double rtol = opt.relaxed_factor * opt.residual_tol;
    if (best.relgap <= opt.gap_tol && best.pinf <= rtol && best.dinf <= rtol) {
      best.status = Status::kOptimal;
      best.reduced_accuracy = true;
      best.iterations = out.iterations;
      return best;
    }
    out.status = Status::kNumericalFailure;
    return out;
  };
  for (int iter = 0;; ++iter) {
    const Eigen::VectorXd rp = in.b - apply_ops(in.a, x);
    Blocks<S> rd = adjoint_ops(in.a, y, sizes);
    for (std::size_t k = 0; k < nb; ++k) rd[k] = in.c[k] - rd[k] - s[k];
    const double pobj = inner(in.c, x);
    const double dobj = in.b.dot(y);
    const double gap = inner(x, s);
    const double denom = 1.0 + std::abs(pobj) + std::abs(dobj);
    const double relgap = std::max(gap, std::abs(pobj - dobj)) / denom;
    const double pinf = rp.norm() / (1.0 + norm_b);
    const double dinf = norm(rd) / (1.0 + norm_c);

    out.x = x;
    out.s = s;
    out.y = y;
    out.pobj = pobj;
    out.dobj = dobj;
    out.gap = gap;
    out.relgap = relgap;
    out.pinf = pinf;
    out.dinf = dinf;
    out.iterations = iter;
    if (trace.is_open()) trace << iter << ',' << gap << ',' << pinf << ',' << dinf << '\n';
    const double score = std::max({relgap / opt.gap_tol, pinf / opt.residual_tol, dinf / opt.residual_tol});
    if (score < best_score) {
      best_score = score;
      best = out;
    }

    if (relgap <= opt.gap_tol && pinf <= opt.residual_tol && dinf <= opt.residual_tol) {
      out.status = Status::kOptimal;
      return out;
    }
    // Farkas-type certificates, read off diverging iterates.
    if (dobj > 0.0) {
      Blocks<S> aty = adjoint_ops(in.a, y, sizes);
      for (std::size_t k = 0; k < nb; ++k) aty[k] += s[k];
      if (norm(aty) / dobj < 1e-8 && y.norm() > 1e6) {
        out.status = Status::kPrimalInfeasible;
        return out;
      }
    }
    if (pobj < 0.0) {
      const Eigen::VectorXd ax = apply_ops(in.a, x);
      if (ax.norm() / -pobj < 1e-8 && norm(x) > 1e6) {
        out.status = Status::kDualInfeasible;
        return out;
      }
    }
    if (iter >= opt.max_iterations) {
      return finish();
    }

    // Nesterov-Todd scaling point W with W S W = X.
    std::vector<Eigen::LLT<Mat<S>>> chol_x(nb);
    std::vector<Eigen::LLT<Mat<S>>> chol_s(nb);
    Blocks<S> w(nb);
    Blocks<S> s_inv(nb);
    for (std::size_t k = 0; k < nb; ++k) {
      chol_x[k].compute(x[k]);
      chol_s[k].compute(s[k]);
      if (chol_x[k].info() != Eigen::Success || chol_s[k].info() != Eigen::Success) {
        return finish();
      }
      const Mat<S> lx = chol_x[k].matrixL();
      const Mat<S> ls = chol_s[k].matrixL();
      const Mat<S> prod = ls.adjoint() * lx;
      Eigen::BDCSVD<Mat<S>> svd(prod, Eigen::ComputeFullU | Eigen::ComputeFullV);
      const Eigen::VectorXd sv = svd.singularValues();
      if (sv.minCoeff() <= 0.0) {
        return finish();
      }
      const Eigen::VectorXd scale = sv.cwiseSqrt().cwiseInverse();
      const Mat<S> g = lx * svd.matrixV() * scale.template cast<S>().asDiagonal();
      w[k] = g * g.adjoint();
      const Mat<S> ls_inv = chol_s[k].matrixL().solve(Mat<S>::Identity(sizes[k], sizes[k]));
      s_inv[k] = ls_inv.adjoint() * ls_inv;
    }

    Eigen::MatrixXd schur = schur_complement(in.a, w, sizes);
    const double diag_scale = m > 0 ? std::max(1.0, schur.diagonal().cwiseAbs().maxCoeff()) : 1.0;
    Eigen::LLT<Eigen::MatrixXd> chol_m;
    double reg = opt.regularization * diag_scale;
    bool factored = false;
    for (int attempt = 0; attempt < 6; ++attempt) {
      Eigen::MatrixXd mm = schur;
      mm.diagonal().array() += reg;
      chol_m.compute(mm);
      if (chol_m.info() == Eigen::Success) {
        factored = true;
        break;
      }
      reg *= 100.0;
    }
    if (!factored) {
      return finish();
    }

    const Blocks<S> wrdw = sandwich(w, rd);
    const Eigen::VectorXd a_wrdw = apply_ops(in.a, wrdw);
    const double mu = gap / total_side;

    auto direction = [&](const Blocks<S>& rc, Blocks<S>& dx, Eigen::VectorXd& dy, Blocks<S>& ds) {
      const Eigen::VectorXd rhs = rp - apply_ops(in.a, rc) + a_wrdw;
      dy = m > 0 ? Eigen::VectorXd(chol_m.solve(rhs)) : Eigen::VectorXd();
      ds = adjoint_ops(in.a, dy, sizes);
      for (std::size_t k = 0; k < nb; ++k) ds[k] = rd[k] - ds[k];
      dx = sandwich(w, ds);
      for (std::size_t k = 0; k < nb; ++k) dx[k] = rc[k] - dx[k];
      hermitize(dx);
      hermitize(ds);
    };

    // Predictor.
    Blocks<S> rc(nb);
    for (std::size_t k = 0; k < nb; ++k) rc[k] = -x[k];
    Blocks<S> dx;
    Blocks<S> ds;
    Eigen::VectorXd dy;
    direction(rc, dx, dy, ds);
    double ap = std::min(1.0, max_step(chol_x, dx));
    double ad = std::min(1.0, max_step(chol_s, ds));
    Blocks<S> xa(nb);
    Blocks<S> sa(nb);
    for (std::size_t k = 0; k < nb; ++k) {
      xa[k] = x[k] + S(ap) * dx[k];
      sa[k] = s[k] + S(ad) * ds[k];
    }
    const double mu_aff = std::max(0.0, inner(xa, sa)) / total_side;
    double sigma = mu > 0.0 ? std::pow(mu_aff / mu, 3.0) : 0.0;
    sigma = std::clamp(sigma, 0.0, 1.0);

    // Corrector.
    for (std::size_t k = 0; k < nb; ++k) rc[k] = S(sigma * mu) * s_inv[k] - x[k];
    direction(rc, dx, dy, ds);
    ap = std::min(1.0, opt.step_fraction * max_step(chol_x, dx));
    ad = std::min(1.0, opt.step_fraction * max_step(chol_s, ds));

    for (std::size_t k = 0; k < nb; ++k) {
      x[k] += S(ap) * dx[k];
      s[k] += S(ad) * ds[k];
    }
    if (m > 0) y += ad * dy;
    hermitize(x);
    hermitize(s);

    stalled = (ap < 1e-10 && ad < 1e-10) ? stalled + 1 : 0;
    if (stalled >= 3) {
      out.iterations = iter + 1;
      return finish();
    }
  }
}

IpmInput<cd> complex_input(const Problem& p, const detail::Reduced& red, double sign) {
  IpmInput<cd> in;
  in.sizes = p.block_sizes;
  for (std::size_t k = 0; k < p.block_sizes.size(); ++k) {
    const int n = p.block_sizes[k];
    if (k < p.objective.size() && p.objective[k].size() > 0) {
      in.c.push_back(sign * hermitian_part(p.objective[k]));
    } else {
      in.c.push_back(CMatrix::Zero(n, n));
    }
  }
  for (const auto& con : red.constraints) {
    ICon<cd> ic;
    for (const auto& e : con.entries()) ic.entries.push_back({e.block, e.row, e.col, e.value});
    ic.ident = con.identity_terms();
    in.a.push_back(std::move(ic));
  }
  in.b = red.rhs;
  return in;
}

// <embed(A), embed(X)> = 2 <A, X>, so right-hand sides double and the
// multipliers carry over unchanged.
IpmInput<double> embedded_input(const IpmInput<cd>& c) {
  IpmInput<double> in;
  for (int n : c.sizes) in.sizes.push_back(2 * n);
  for (const auto& blk : c.c) in.c.push_back(embed_real(blk));
  for (const auto& con : c.a) {
    ICon<double> ic;
    for (const auto& e : con.entries) {
      const int n = c.sizes[e.block];
      const double a = e.value.real();
      const double b = e.value.imag();
      if (a != 0.0) {
        ic.entries.push_back({e.block, e.row, e.col, a});
        ic.entries.push_back({e.block, e.row + n, e.col + n, a});
      }
      if (b != 0.0) {
        ic.entries.push_back({e.block, e.row + n, e.col, b});
        ic.entries.push_back({e.block, e.row, e.col + n, -b});
      }
    }
    ic.ident = con.ident;
    in.a.push_back(std::move(ic));
  }
  in.b = 2.0 * c.b;
  return in;
}

}  // namespace

namespace detail {

Solution solve_direct(const Problem& problem, const Options& options) {
  problem.validate();
  const Reduced red = reduce(problem.constraints, problem.block_sizes);
  Solution sol;
  sol.y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(problem.constraints.size()));
  if (!red.consistent) {
    sol.status = Status::kPrimalInfeasible;
    sol.primal_residual = red.worst_inconsistency;
    return sol;
  }
  const double sign = problem.sense == Sense::kMaximize ? -1.0 : 1.0;
  const IpmInput<cd> in = complex_input(problem, red, sign);

  Eigen::VectorXd y;
  if (options.real_embedding) {
    const auto res = interior_point(embedded_input(in), options);
    sol.status = res.status;
    for (const auto& b : res.x) sol.x.push_back(unembed_real(b));
    for (const auto& b : res.s) sol.s.push_back(unembed_real(b));
    y = res.y;
    sol.primal_objective = 0.5 * res.pobj;
    sol.dual_objective = 0.5 * res.dobj;
    sol.gap = 0.5 * res.gap;
    sol.relative_gap = res.relgap;
    sol.primal_residual = res.pinf;
    sol.dual_residual = res.dinf;
    sol.iterations = res.iterations;
    sol.reduced_accuracy = res.reduced_accuracy;
  } else {
    auto res = interior_point(in, options);
    sol.status = res.status;
    sol.x = std::move(res.x);
    sol.s = std::move(res.s);
    y = res.y;
    sol.primal_objective = res.pobj;
    sol.dual_objective = res.dobj;
    sol.gap = res.gap;
    sol.relative_gap = res.relgap;
    sol.primal_residual = res.pinf;
    sol.dual_residual = res.dinf;
    sol.iterations = res.iterations;
    sol.reduced_accuracy = res.reduced_accuracy;
  }
  sol.primal_objective *= sign;
  sol.dual_objective *= sign;
  for (std::size_t a = 0; a < red.kept.size(); ++a) {
    sol.y(red.kept[a]) = sign * y(static_cast<Eigen::Index>(a));
  }
  return sol;
}

}  // namespace detail

Solution solve(const Problem& problem, const Options& options) {
  Solution sol = detail::solve_direct(problem, options);
  if (sol.status != Status::kNumericalFailure) return sol;
  // Phase one: when the constraints pin tr X, a clearly negative margin
  // classifies the failure as primal infeasibility.
  AffineSystem sys{problem.block_sizes, problem.constraints};
  try {
    const MarginResult phase_one = feasibility_margin(sys, options);
    if (phase_one.status == Status::kOptimal && phase_one.margin < -1e-6) {
      sol.status = Status::kPrimalInfeasible;
    } else if (phase_one.status == Status::kPrimalInfeasible) {
      sol.status = Status::kPrimalInfeasible;
    }
  } catch (const ValidationError&) {
    // no trace normalization: leave the failure as reported
  }
  return sol;
}

}  // namespace symext::sdp
