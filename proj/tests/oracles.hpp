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

// Independent reference computations for the test suites. Written with
// plain index loops so they share no code with the library routines they
// check.

#ifndef SYMEXT_TESTS_ORACLES_HPP
#define SYMEXT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "symext/linalg.hpp"
#include "symext/random.hpp"

namespace oracle {

using symext::CMatrix;
using symext::CVector;
using symext::cd;

inline std::vector<int> digits(int index, const std::vector<int>& dims) {
  std::vector<int> out(dims.size());
  for (int f = static_cast<int>(dims.size()) - 1; f >= 0; --f) {
    out[static_cast<std::size_t>(f)] = index % dims[static_cast<std::size_t>(f)];
    index /= dims[static_cast<std::size_t>(f)];
  }
  return out;
}

inline int compose(const std::vector<int>& dig, const std::vector<int>& dims) {
  int idx = 0;
  for (std::size_t f = 0; f < dims.size(); ++f) idx = idx * dims[f] + dig[f];
  return idx;
}

// Sum over the traced factors, entry by entry.
inline CMatrix partial_trace(const CMatrix& m, const std::vector<int>& dims,
                             const std::vector<int>& keep) {
  std::vector<int> kd;
  for (int f : keep) kd.push_back(dims[static_cast<std::size_t>(f)]);
  int kside = 1;
  for (int d : kd) kside *= d;
  CMatrix out = CMatrix::Zero(kside, kside);
  const int n = static_cast<int>(m.rows());
  for (int r = 0; r < n; ++r) {
    const auto dr = digits(r, dims);
    for (int c = 0; c < n; ++c) {
      const auto dc = digits(c, dims);
      bool diag = true;
      for (std::size_t f = 0; f < dims.size(); ++f) {
        if (std::find(keep.begin(), keep.end(), static_cast<int>(f)) == keep.end() &&
            dr[f] != dc[f]) {
          diag = false;
        }
      }
      if (!diag) continue;
      std::vector<int> kr;
      std::vector<int> kc;
      for (int f : keep) {
        kr.push_back(dr[static_cast<std::size_t>(f)]);
        kc.push_back(dc[static_cast<std::size_t>(f)]);
      }
      out(compose(kr, kd), compose(kc, kd)) += m(r, c);
    }
  }
  return out;
}

// Unitary exchanging tensor factors i and j.
inline CMatrix swap_factors(const std::vector<int>& dims, int i, int j) {
  int n = 1;
  for (int d : dims) n *= d;
  CMatrix p = CMatrix::Zero(n, n);
  for (int x = 0; x < n; ++x) {
    auto dig = digits(x, dims);
    std::swap(dig[static_cast<std::size_t>(i)], dig[static_cast<std::size_t>(j)]);
    p(compose(dig, dims), x) = 1.0;
  }
  return p;
}

inline double von_neumann_bits(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double v = es.eigenvalues()(i);
    if (v > 1e-15) s -= v * std::log2(v);
  }
  return s;
}

inline double trace_norm(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (m + m.adjoint()));
  return es.eigenvalues().cwiseAbs().sum();
}

inline CMatrix random_hermitian(int n, symext::random::Engine& rng) {
  std::normal_distribution<double> g;
  CMatrix h(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) h(r, c) = cd(g(rng), g(rng));
  }
  return 0.5 * (h + h.adjoint());
}

inline CMatrix random_density(int n, symext::random::Engine& rng) {
  std::normal_distribution<double> g;
  CMatrix a(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a(r, c) = cd(g(rng), g(rng));
  }
  CMatrix rho = a * a.adjoint();
  return rho / rho.trace().real();
}

}  // namespace oracle

#endif  // SYMEXT_TESTS_ORACLES_HPP
