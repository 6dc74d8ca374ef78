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

#include "symext/sparse_hermitian.hpp"

#include <algorithm>
#include <cmath>

#include "symext/error.hpp"

namespace symext {

void SparseHermitian::add(int row, int col, cd value) {
  if (row < 0 || col < 0 || row >= side_ || col >= side_) {
    throw ValidationError("sparse entry out of range");
  }
  entries_.push_back({row, col, value});
}

void SparseHermitian::add_real_part(int p, int q, double coef) {
  if (p == q) {
    add(p, p, coef);
  } else {
    add(q, p, 0.5 * coef);
    add(p, q, 0.5 * coef);
  }
}

void SparseHermitian::add_imag_part(int p, int q, double coef) {
  if (p == q) return;
  add(q, p, cd(0.0, -0.5 * coef));
  add(p, q, cd(0.0, 0.5 * coef));
}

void SparseHermitian::add_identity(double coef) {
  for (int i = 0; i < side_; ++i) add(i, i, coef);
}

void SparseHermitian::compress() {
  std::sort(entries_.begin(), entries_.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  std::vector<Triplet> merged;
  merged.reserve(entries_.size());
  for (const auto& t : entries_) {
    if (!merged.empty() && merged.back().row == t.row && merged.back().col == t.col) {
      merged.back().value += t.value;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Triplet& t) { return t.value == cd(0.0, 0.0); });
  entries_ = std::move(merged);
}

double SparseHermitian::pair(const CMatrix& x) const {
  double acc = 0.0;
  for (const auto& t : entries_) acc += (t.value * x(t.col, t.row)).real();
  return acc;
}

CMatrix SparseHermitian::dense() const {
  CMatrix m = CMatrix::Zero(side_, side_);
  for (const auto& t : entries_) m(t.row, t.col) += t.value;
  return m;
}

double inner(const SparseHermitian& a, const SparseHermitian& b) {
  // Re sum a_pq b_qp = Re sum a_pq conj(b_pq) for Hermitian b.
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  double acc = 0.0;
  while (i < ea.size() && j < eb.size()) {
    const auto& x = ea[i];
    const auto& y = eb[j];
    if (x.col == y.col && x.row == y.row) {
      acc += x.value.real() * y.value.real() + x.value.imag() * y.value.imag();
      ++i;
      ++j;
    } else if (x.col < y.col || (x.col == y.col && x.row < y.row)) {
      ++i;
    } else {
      ++j;
    }
  }
  return acc;
}

IndependentSubset greedy_independent(const Eigen::MatrixXd& gram, double rel_tol) {
  const Eigen::Index m = gram.rows();
  IndependentSubset out;
  Eigen::MatrixXd chol = Eigen::MatrixXd::Zero(m, m);  // lower factor of gram[kept, kept]
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    Eigen::VectorXd g(k);
    for (Eigen::Index a = 0; a < k; ++a) g(a) = gram(out.kept[a], i);
    Eigen::VectorXd z = g;
    if (k > 0) chol.topLeftCorner(k, k).triangularView<Eigen::Lower>().solveInPlace(z);
    const double diag = gram(i, i);
    const double resid = diag - z.squaredNorm();
    if (diag > 0.0 && resid > rel_tol * diag) {
      chol.block(k, 0, 1, k) = z.transpose();
      chol(k, k) = std::sqrt(resid);
      out.kept.push_back(static_cast<int>(i));
      ++k;
    } else {
      Eigen::VectorXd c = z;
      if (k > 0) chol.topLeftCorner(k, k).transpose().triangularView<Eigen::Upper>().solveInPlace(c);
      out.dropped.push_back(static_cast<int>(i));
      out.dropped_coefficients.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace symext
