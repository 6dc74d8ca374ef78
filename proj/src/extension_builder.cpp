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

#include "extension_builder.hpp"

#include <numeric>

#include "symext/error.hpp"
#include "symext/symmetry.hpp"

namespace symext::detail {
namespace {

int ipow(int base, int exp) {
  int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Full basis index of (a, b_j = b, rest) where `rest` enumerates the other
// k copies in increasing copy order.
int full_index(const ExtensionShape& s, int j, int a, int b, int rest) {
  const int copies = s.k + 1;
  int idx = a;
  int r = rest;
  std::vector<int> digits(static_cast<std::size_t>(copies));
  for (int c = copies - 1; c >= 0; --c) {
    if (c == j) {
      digits[static_cast<std::size_t>(c)] = b;
    } else {
      digits[static_cast<std::size_t>(c)] = r % s.dim_b;
      r /= s.dim_b;
    }
  }
  for (int c = 0; c < copies; ++c) idx = idx * s.dim_b + digits[static_cast<std::size_t>(c)];
  return idx;
}

}  // namespace

CanonicalState canonical(const DensityMatrix& rho) {
  const auto& prof = rho.profile();
  CanonicalState out;
  out.dim_a = prof.dim_a();
  out.dim_b = prof.dim_b();
  std::vector<int> perm = prof.factors_of(Party::kA);
  const auto fb = prof.factors_of(Party::kB);
  perm.insert(perm.end(), fb.begin(), fb.end());
  for (int f : perm) {
    out.dims.push_back(prof.dims()[static_cast<std::size_t>(f)]);
    out.parties.push_back(prof.parties()[static_cast<std::size_t>(f)]);
  }
  out.mat = prof.a_precedes_b() ? rho.matrix() : permute_factors(rho.matrix(), prof.dims(), perm);
  return out;
}

int rest_count(const ExtensionShape& shape) { return ipow(shape.dim_b, shape.k); }

std::vector<int> pair_rows(const ExtensionShape& shape, int j, int rest) {
  std::vector<int> rows(static_cast<std::size_t>(shape.pair_side()));
  for (int p = 0; p < shape.pair_side(); ++p) {
    rows[static_cast<std::size_t>(p)] = full_index(shape, j, p / shape.dim_b, p % shape.dim_b, rest);
  }
  return rows;
}

int ExtensionShape::side() const { return dim_a * ipow(dim_b, k + 1); }

void check_extension_size(const ExtensionShape& shape) {
  if (shape.k < 1) throw ValidationError("extension count k must be at least 1");
  double side = shape.dim_a;
  for (int i = 0; i <= shape.k; ++i) side *= shape.dim_b;
  if (side > kMaxExtensionSide) {
    throw ValidationError("extension side " + std::to_string(static_cast<long long>(side)) +
                          " exceeds the limit of " + std::to_string(kMaxExtensionSide));
  }
}

void add_marginal_constraints(std::vector<sdp::Constraint>& out, const ExtensionShape& shape,
                              int x_block, const std::vector<int>& copies,
                              const std::vector<std::pair<int, double>>& extra,
                              const CMatrix& target) {
  const int n = shape.pair_side();
  const int rests = ipow(shape.dim_b, shape.k);
  for (int j : copies) {
    for (int p = 0; p < n; ++p) {
      for (int q = p; q < n; ++q) {
        const int ap = p / shape.dim_b;
        const int bp = p % shape.dim_b;
        const int aq = q / shape.dim_b;
        const int bq = q % shape.dim_b;
        sdp::Constraint re(target(p, q).real());
        sdp::Constraint im(target(p, q).imag());
        for (int r = 0; r < rests; ++r) {
          const int u = full_index(shape, j, ap, bp, r);
          const int v = full_index(shape, j, aq, bq, r);
          re.add_real_part(x_block, u, v, 1.0);
          if (p != q) im.add_imag_part(x_block, u, v, 1.0);
        }
        for (const auto& [blk, sign] : extra) {
          re.add_real_part(blk, p, q, sign);
          if (p != q) im.add_imag_part(blk, p, q, sign);
        }
        out.push_back(std::move(re));
        if (p != q) out.push_back(std::move(im));
      }
    }
  }
}

void add_invariance_constraints(std::vector<sdp::Constraint>& out, const ExtensionShape& shape,
                                int x_block) {
  for (const auto& m : symmetry::invariant_constraint_basis(shape.dim_a, shape.dim_b, shape.k)) {
    sdp::Constraint c(0.0);
    c.add_matrix(x_block, m);
    out.push_back(std::move(c));
  }
}

std::vector<sdp::Constraint> extension_constraints(const ExtensionShape& shape,
                                                   const CMatrix& target,
                                                   Formulation formulation, int x_block) {
  std::vector<sdp::Constraint> cons;
  if (formulation == Formulation::kInvariantBasis) {
    add_invariance_constraints(cons, shape, x_block);
    add_marginal_constraints(cons, shape, x_block, {0}, {}, target);
  } else {
    std::vector<int> copies(static_cast<std::size_t>(shape.k + 1));
    std::iota(copies.begin(), copies.end(), 0);
    add_marginal_constraints(cons, shape, x_block, copies, {}, target);
  }
  return cons;
}

CMatrix first_marginal(const CMatrix& x, const ExtensionShape& shape) {
  std::vector<int> dims{shape.dim_a};
  for (int i = 0; i <= shape.k; ++i) dims.push_back(shape.dim_b);
  return partial_trace(x, dims, {0, 1});
}

DimensionProfile extension_profile(const ExtensionShape& shape) {
  std::vector<int> dims{shape.dim_a};
  std::vector<Party> parties{Party::kA};
  for (int i = 0; i <= shape.k; ++i) {
    dims.push_back(shape.dim_b);
    parties.push_back(Party::kB);
  }
  return DimensionProfile(std::move(dims), std::move(parties));
}

}  // namespace symext::detail
