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

#include "symext/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "symext/error.hpp"

namespace symext::symmetry {
namespace {

int ipow(int base, int exp) {
  int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Digits of x in base d, most significant first, `m` of them.
std::vector<int> digits_of(int x, int d, int m) {
  std::vector<int> out(m);
  for (int j = m - 1; j >= 0; --j) {
    out[j] = x % d;
    x /= d;
  }
  return out;
}

int index_of(const std::vector<int>& digits, int d) {
  int x = 0;
  for (int v : digits) x = x * d + v;
  return x;
}

void check_permutation(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= static_cast<int>(perm.size()) || seen[p]) {
      throw ValidationError("invalid permutation");
    }
    seen[p] = 1;
  }
}

}  // namespace

PermutationOperator::PermutationOperator(std::vector<int> perm, int d)
    : perm_(std::move(perm)), d_(d) {
  if (perm_.empty()) throw ValidationError("empty permutation");
  if (d_ < 1) throw ValidationError("local dimension must be positive");
  check_permutation(perm_);
  const int m = static_cast<int>(perm_.size());
  const int n = ipow(d_, m);
  image_.resize(n);
  std::vector<int> moved(m);
  for (int x = 0; x < n; ++x) {
    const auto digits = digits_of(x, d_, m);
    for (int j = 0; j < m; ++j) moved[perm_[j]] = digits[j];
    image_[x] = index_of(moved, d_);
  }
}

CMatrix PermutationOperator::matrix() const {
  const int n = static_cast<int>(image_.size());
  CMatrix m = CMatrix::Zero(n, n);
  for (int x = 0; x < n; ++x) m(image_[x], x) = 1.0;
  return m;
}

PermutationOperator permutation_operator(const std::vector<int>& perm, int d) {
  return PermutationOperator(perm, d);
}

std::vector<std::vector<int>> all_permutations(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

CMatrix symmetric_projector(int d, int k) {
  if (d < 2 || k < 1) throw ValidationError("symmetric_projector needs d >= 2, k >= 1");
  if (k > 8) throw ValidationError("symmetric_projector: k too large for explicit averaging");
  const int n = ipow(d, k);
  CMatrix out = CMatrix::Zero(n, n);
  const auto perms = all_permutations(k);
  for (const auto& p : perms) {
    const PermutationOperator op(p, d);
    for (int x = 0; x < n; ++x) out(op.image()[x], x) += 1.0;
  }
  return out / static_cast<double>(perms.size());
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

CMatrix symmetric_basis(int d, int k) {
  if (d < 1 || k < 1) throw ValidationError("symmetric_basis needs d >= 1, k >= 1");
  const int n = ipow(d, k);
  const auto count = static_cast<int>(binomial(d + k - 1, k));
  CMatrix basis = CMatrix::Zero(n, count);
  std::vector<int> tuple(k, 0);
  int col = 0;
  while (true) {
    std::vector<int> arrangement = tuple;
    std::vector<int> indices;
    do {
      indices.push_back(index_of(arrangement, d));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    const double amp = 1.0 / std::sqrt(static_cast<double>(indices.size()));
    for (int idx : indices) basis(idx, col) = amp;
    ++col;
    // next non-decreasing tuple in lexicographic order
    int pos = k - 1;
    while (pos >= 0 && tuple[pos] == d - 1) --pos;
    if (pos < 0) break;
    const int v = tuple[pos] + 1;
    for (int j = pos; j < k; ++j) tuple[j] = v;
  }
  return basis;
}

std::vector<int> b_permutation_map(int dim_a, int dim_b, const std::vector<int>& perm) {
  const PermutationOperator op(perm, dim_b);
  const int nb = static_cast<int>(op.image().size());
  std::vector<int> map(static_cast<std::size_t>(dim_a) * nb);
  for (int a = 0; a < dim_a; ++a) {
    for (int b = 0; b < nb; ++b) map[a * nb + b] = a * nb + op.image()[b];
  }
  return map;
}

std::vector<std::vector<int>> adjacent_transposition_maps(int dim_a, int dim_b, int k) {
  if (k < 1) throw ValidationError("extension count k must be >= 1");
  std::vector<std::vector<int>> maps;
  for (int j = 0; j < k; ++j) {
    std::vector<int> perm(k + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[j], perm[j + 1]);
    maps.push_back(b_permutation_map(dim_a, dim_b, perm));
  }
  return maps;
}

std::vector<SparseHermitian> invariant_constraint_basis(int dim_a, int dim_b, int k) {
  if (dim_a < 1 || dim_b < 2 || k < 1) {
    throw ValidationError("invariant_constraint_basis: need dim_a >= 1, dim_b >= 2, k >= 1");
  }
  const long long side_ll = static_cast<long long>(dim_a) * ipow(dim_b, k + 1);
  if (side_ll > kMaxConstraintSide) {
    throw ValidationError("invariant_constraint_basis: operator side " +
                          std::to_string(side_ll) + " exceeds " +
                          std::to_string(kMaxConstraintSide));
  }
  const int n = static_cast<int>(side_ll);
  const auto gens = adjacent_transposition_maps(dim_a, dim_b, k);

  // Orbits of ordered index pairs (p, q) under the generated group.
  std::vector<int> orbit_of(static_cast<std::size_t>(n) * n, -1);
  std::vector<std::vector<int>> orbits;
  for (int start = 0; start < n * n; ++start) {
    if (orbit_of[start] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<int> members{start};
    orbit_of[start] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const int p = members[head] / n;
      const int q = members[head] % n;
      for (const auto& g : gens) {
        const int y = g[p] * n + g[q];
        if (orbit_of[y] < 0) {
          orbit_of[y] = id;
          members.push_back(y);
        }
      }
    }
    orbits.push_back(std::move(members));
  }

  std::vector<SparseHermitian> out;
  for (int id = 0; id < static_cast<int>(orbits.size()); ++id) {
    const auto& members = orbits[id];
    const int x0 = members.front();
    const int transposed = orbit_of[(x0 % n) * n + x0 / n];
    // Constraints on the transposed orbit are conjugates of these ones.
    if (transposed < id) continue;
    std::vector<SparseHermitian> candidates;
    for (int x : members) {
      const int p = x / n;
      const int q = x % n;
      for (const auto& g : gens) {
        const int gp = g[p];
        const int gq = g[q];
        if (gp == p && gq == q) continue;
        SparseHermitian re(n);
        re.add_real_part(p, q, 1.0);
        re.add_real_part(gp, gq, -1.0);
        re.compress();
        if (!re.empty()) candidates.push_back(std::move(re));
        SparseHermitian im(n);
        im.add_imag_part(p, q, 1.0);
        im.add_imag_part(gp, gq, -1.0);
        im.compress();
        if (!im.empty()) candidates.push_back(std::move(im));
      }
    }
    if (candidates.empty()) continue;
    const auto m = static_cast<Eigen::Index>(candidates.size());
    Eigen::MatrixXd gram(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j <= i; ++j) {
        gram(i, j) = gram(j, i) = inner(candidates[i], candidates[j]);
      }
    }
    const auto subset = greedy_independent(gram, 1e-9);
    for (int idx : subset.kept) out.push_back(std::move(candidates[idx]));
  }
  return out;
}

CMatrix twirl(const CMatrix& x, int dim_a, int dim_b, int k) {
  const int n = dim_a * ipow(dim_b, k + 1);
  if (x.rows() != n || x.cols() != n) throw ValidationError("twirl: operator side mismatch");
  const auto perms = all_permutations(k + 1);
  CMatrix out = CMatrix::Zero(n, n);
  for (const auto& perm : perms) {
    const auto map = b_permutation_map(dim_a, dim_b, perm);
    for (int q = 0; q < n; ++q) {
      for (int p = 0; p < n; ++p) out(map[p], map[q]) += x(p, q);
    }
  }
  return out / static_cast<double>(perms.size());
}

}  // namespace symext::symmetry
