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

#include <algorithm>
#include <cmath>
#include <string>

#include "internal.hpp"
#include "symext/error.hpp"

namespace symext::sdp {

// ---------------------------------------------------------------------------
// Constraint

void Constraint::add(int block, int row, int col, cd value) {
  if (block < 0 || row < 0 || col < 0) throw ValidationError("negative constraint index");
  entries_.push_back({block, row, col, value});
}

void Constraint::add_real_part(int block, int p, int q, double coef) {
  if (p == q) {
    add(block, p, p, coef);
  } else {
    add(block, q, p, 0.5 * coef);
    add(block, p, q, 0.5 * coef);
  }
}

void Constraint::add_imag_part(int block, int p, int q, double coef) {
  if (p == q) return;
  add(block, q, p, cd(0.0, -0.5 * coef));
  add(block, p, q, cd(0.0, 0.5 * coef));
}

void Constraint::add_identity(int block, double coef) {
  if (block < 0) throw ValidationError("negative block index");
  for (auto& term : identity_) {
    if (term.first == block) {
      term.second += coef;
      return;
    }
  }
  identity_.emplace_back(block, coef);
}

void Constraint::add_matrix(int block, const SparseHermitian& m, double scale) {
  for (const auto& t : m.entries()) add(block, t.row, t.col, scale * t.value);
}

void Constraint::add_dense(int block, const CMatrix& m, double scale) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (m(r, c) != cd(0.0, 0.0)) {
        add(block, static_cast<int>(r), static_cast<int>(c), scale * m(r, c));
      }
    }
  }
}

void Constraint::compress() {
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    if (a.block != b.block) return a.block < b.block;
    if (a.col != b.col) return a.col < b.col;
    return a.row < b.row;
  });
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (const auto& e : entries_) {
    if (!merged.empty() && merged.back().block == e.block && merged.back().row == e.row &&
        merged.back().col == e.col) {
      merged.back().value += e.value;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.value == cd(0.0, 0.0); });
  entries_ = std::move(merged);
  std::sort(identity_.begin(), identity_.end());
  std::erase_if(identity_, [](const auto& t) { return t.second == 0.0; });
}

double Constraint::evaluate(const std::vector<CMatrix>& x) const {
  double acc = 0.0;
  for (const auto& e : entries_) acc += (e.value * x.at(e.block)(e.col, e.row)).real();
  for (const auto& [b, c] : identity_) acc += c * x.at(b).trace().real();
  return acc;
}

// ---------------------------------------------------------------------------
// Problem

int Problem::add_block(int side) {
  if (side < 1) throw ValidationError("block side must be positive");
  block_sizes.push_back(side);
  objective.emplace_back();
  return static_cast<int>(block_sizes.size()) - 1;
}

void Problem::validate() const {
  detail::check_blocks(block_sizes);
  if (objective.size() > block_sizes.size()) {
    throw ValidationError("more objective blocks than variable blocks");
  }
  for (std::size_t b = 0; b < objective.size(); ++b) {
    const auto& c = objective[b];
    if (c.size() == 0) continue;
    if (c.rows() != block_sizes[b] || c.cols() != block_sizes[b]) {
      throw ValidationError("objective block " + std::to_string(b) + " has the wrong side");
    }
    if (!c.allFinite() || !is_hermitian(c, 1e-10 * std::max(1.0, max_abs(c)))) {
      throw ValidationError("objective block " + std::to_string(b) + " is not Hermitian");
    }
  }
  for (const auto& con : constraints) detail::check_constraint(con, block_sizes);
}

std::string_view status_name(Status status) {
  switch (status) {
    case Status::kOptimal:
      return "OPTIMAL";
    case Status::kPrimalInfeasible:
      return "PRIMAL_INFEASIBLE";
    case Status::kDualInfeasible:
      return "DUAL_INFEASIBLE";
    case Status::kNumericalFailure:
      return "NUMERICAL_FAILURE";
  }
  return "UNKNOWN";
}

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::kFeasible:
      return "FEASIBLE";
    case Verdict::kInfeasible:
      return "INFEASIBLE";
    case Verdict::kUndecided:
      return "UNDECIDED";
  }
  return "UNKNOWN";
}

Eigen::MatrixXd embed_real(const CMatrix& h) {
  const Eigen::Index n = h.rows();
  Eigen::MatrixXd r(2 * n, 2 * n);
  r.topLeftCorner(n, n) = h.real();
  r.bottomRightCorner(n, n) = h.real();
  r.bottomLeftCorner(n, n) = h.imag();
  r.topRightCorner(n, n) = -h.imag();
  return r;
}

CMatrix unembed_real(const Eigen::MatrixXd& r) {
  const Eigen::Index n = r.rows() / 2;
  const Eigen::MatrixXd re = 0.5 * (r.topLeftCorner(n, n) + r.bottomRightCorner(n, n));
  const Eigen::MatrixXd im = 0.5 * (r.bottomLeftCorner(n, n) - r.topRightCorner(n, n));
  CMatrix h(n, n);
  h.real() = re;
  h.imag() = im;
  return h;
}

// ---------------------------------------------------------------------------
// Shared helpers

namespace detail {

void check_blocks(const std::vector<int>& block_sizes) {
  if (block_sizes.empty()) throw ValidationError("problem has no variable blocks");
  for (int s : block_sizes) {
    if (s < 1) throw ValidationError("block side must be positive");
  }
}

void check_constraint(const Constraint& c, const std::vector<int>& block_sizes) {
  const int nb = static_cast<int>(block_sizes.size());
  for (const auto& e : c.entries()) {
    if (e.block >= nb || e.row >= block_sizes[e.block] || e.col >= block_sizes[e.block]) {
      throw ValidationError("constraint entry outside its block");
    }
    if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag())) {
      throw ValidationError("non-finite constraint coefficient");
    }
  }
  for (const auto& [b, coef] : c.identity_terms()) {
    if (b >= nb || !std::isfinite(coef)) throw ValidationError("bad identity term");
  }
  if (!std::isfinite(c.rhs)) throw ValidationError("non-finite right-hand side");
}

namespace {

double sparse_trace(const Constraint& c, int block) {
  double t = 0.0;
  for (const auto& e : c.entries()) {
    if (e.block == block && e.row == e.col) t += e.value.real();
  }
  return t;
}

double sparse_inner(const Constraint& a, const Constraint& b) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  double acc = 0.0;
  auto key_less = [](const Entry& x, const Entry& y) {
    if (x.block != y.block) return x.block < y.block;
    if (x.col != y.col) return x.col < y.col;
    return x.row < y.row;
  };
  while (i < ea.size() && j < eb.size()) {
    if (key_less(ea[i], eb[j])) {
      ++i;
    } else if (key_less(eb[j], ea[i])) {
      ++j;
    } else {
      acc += ea[i].value.real() * eb[j].value.real() + ea[i].value.imag() * eb[j].value.imag();
      ++i;
      ++j;
    }
  }
  return acc;
}

}  // namespace

Eigen::MatrixXd gram(const std::vector<Constraint>& cons, const std::vector<int>& block_sizes) {
  const auto m = static_cast<Eigen::Index>(cons.size());
  const int nb = static_cast<int>(block_sizes.size());
  // Sparse traces and identity coefficients per block.
  Eigen::MatrixXd traces = Eigen::MatrixXd::Zero(m, nb);
  Eigen::MatrixXd ident = Eigen::MatrixXd::Zero(m, nb);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (const auto& [b, c] : cons[i].identity_terms()) {
      ident(i, b) += c;
    }
    for (int b = 0; b < nb; ++b) traces(i, b) = sparse_trace(cons[i], b);
  }
  Eigen::MatrixXd g(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      double v = sparse_inner(cons[i], cons[j]);
      for (int b = 0; b < nb; ++b) {
        v += ident(i, b) * traces(j, b) + ident(j, b) * traces(i, b) +
             ident(i, b) * ident(j, b) * block_sizes[b];
      }
      g(i, j) = g(j, i) = v;
    }
  }
  return g;
}

Eigen::VectorXd identity_pairing(const std::vector<Constraint>& cons,
                                 const std::vector<int>& block_sizes) {
  Eigen::VectorXd g(cons.size());
  for (std::size_t i = 0; i < cons.size(); ++i) {
    double v = 0.0;
    for (const auto& e : cons[i].entries()) {
      if (e.row == e.col) v += e.value.real();
    }
    for (const auto& [b, c] : cons[i].identity_terms()) v += c * block_sizes[b];
    g(static_cast<Eigen::Index>(i)) = v;
  }
  return g;
}

Eigen::VectorXd apply(const std::vector<Constraint>& cons, const std::vector<CMatrix>& x) {
  Eigen::VectorXd out(cons.size());
  for (std::size_t i = 0; i < cons.size(); ++i) {
    out(static_cast<Eigen::Index>(i)) = cons[i].evaluate(x);
  }
  return out;
}

std::vector<CMatrix> adjoint(const std::vector<Constraint>& cons, const Eigen::VectorXd& z,
                             const std::vector<int>& block_sizes) {
  std::vector<CMatrix> out;
  for (int s : block_sizes) out.push_back(CMatrix::Zero(s, s));
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const double zi = z(static_cast<Eigen::Index>(i));
    if (zi == 0.0) continue;
    for (const auto& e : cons[i].entries()) out[e.block](e.row, e.col) += zi * e.value;
    for (const auto& [b, c] : cons[i].identity_terms()) {
      out[b].diagonal().array() += zi * c;
    }
  }
  return out;
}

Reduced reduce(const std::vector<Constraint>& cons, const std::vector<int>& block_sizes) {
  Reduced out;
  std::vector<Constraint> compressed = cons;
  for (auto& c : compressed) c.compress();
  const Eigen::MatrixXd g = gram(compressed, block_sizes);
  const auto subset = greedy_independent(g, 1e-10);
  Eigen::VectorXd b_all(compressed.size());
  for (std::size_t i = 0; i < compressed.size(); ++i) {
    b_all(static_cast<Eigen::Index>(i)) = compressed[i].rhs;
  }
  out.kept = subset.kept;
  out.rhs.resize(static_cast<Eigen::Index>(subset.kept.size()));
  for (std::size_t a = 0; a < subset.kept.size(); ++a) {
    out.rhs(static_cast<Eigen::Index>(a)) = b_all(subset.kept[a]);
    out.constraints.push_back(compressed[subset.kept[a]]);
  }
  for (std::size_t d = 0; d < subset.dropped.size(); ++d) {
    const auto& coef = subset.dropped_coefficients[d];
    // Coefficients refer to the constraints kept before this one.
    const auto head = out.rhs.head(coef.size());
    const double implied = coef.size() ? coef.dot(head) : 0.0;
    const double actual = b_all(subset.dropped[d]);
    const double scale = 1.0 + std::abs(actual) + coef.cwiseAbs().dot(head.cwiseAbs());
    const double err = std::abs(implied - actual) / scale;
    out.worst_inconsistency = std::max(out.worst_inconsistency, err);
    if (err > 1e-8) out.consistent = false;
  }
  return out;
}

double frobenius_sq(const std::vector<CMatrix>& blocks) {
  double acc = 0.0;
  for (const auto& b : blocks) acc += b.squaredNorm();
  return acc;
}

}  // namespace detail
}  // namespace symext::sdp
