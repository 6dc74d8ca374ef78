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

// Scalar reference kernels against the AVX2 variants and the dispatcher.

#include <doctest.h>

#include <complex>
#include <random>
#include <vector>

#include "symext/kernels.hpp"

namespace k = symext::kernels;
using cd = std::complex<double>;

namespace {

std::vector<double> reals(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> v(n);
  for (auto& x : v) x = g(rng);
  return v;
}

std::vector<cd> complexes(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cd> v(n);
  for (auto& x : v) x = cd(g(rng), g(rng));
  return v;
}

double naive_dot(const std::vector<double>& x, const std::vector<double>& y) {
  long double acc = 0.0L;
  for (std::size_t i = 0; i < x.size(); ++i) acc += static_cast<long double>(x[i]) * y[i];
  return static_cast<double>(acc);
}

}  // namespace

TEST_CASE("scalar kernels match naive loops") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {0, 1, 3, 4, 7, 16, 33}) {
    const auto x = reals(n, rng);
    const auto y = reals(n, rng);
    CHECK(k::scalar::dot(x.data(), y.data(), n) == doctest::Approx(naive_dot(x, y)).epsilon(1e-12));

    auto z = y;
    k::scalar::axpy(0.5, x.data(), z.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(z[i] == doctest::Approx(y[i] + 0.5 * x[i]));

    const auto cx = complexes(n, rng);
    const auto cy = complexes(n, rng);
    double re = 0.0;
    double nsq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      re += (std::conj(cx[i]) * cy[i]).real();
      nsq += std::norm(cx[i]);
    }
    CHECK(k::scalar::re_dot(cx.data(), cy.data(), n) == doctest::Approx(re).epsilon(1e-12));
    CHECK(k::scalar::norm_sq(cx.data(), n) == doctest::Approx(nsq).epsilon(1e-12));

    auto cz = cy;
    const cd a(0.3, -1.2);
    k::scalar::caxpy(a, cx.data(), cz.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(cz[i] - (cy[i] + a * cx[i])) < 1e-13);
  }
}

#if defined(SYMEXT_HAVE_AVX2)
TEST_CASE("avx2 kernels agree with the scalar reference") {
  if (!k::isa_available(k::Isa::kAvx2)) {
    MESSAGE("AVX2 not available on this CPU; equivalence not exercised");
    return;
  }
  std::mt19937_64 rng(11);
  for (std::size_t n = 0; n < 70; ++n) {
    const auto x = reals(n, rng);
    const auto y = reals(n, rng);
    const double ref = k::scalar::dot(x.data(), y.data(), n);
    CHECK(k::avx2::dot(x.data(), y.data(), n) == doctest::Approx(ref).epsilon(1e-12).scale(1.0));

    auto z1 = y;
    auto z2 = y;
    k::scalar::axpy(-1.7, x.data(), z1.data(), n);
    k::avx2::axpy(-1.7, x.data(), z2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(z1[i] - z2[i]) < 1e-14);

    const auto cx = complexes(n, rng);
    const auto cy = complexes(n, rng);
    CHECK(k::avx2::re_dot(cx.data(), cy.data(), n) ==
          doctest::Approx(k::scalar::re_dot(cx.data(), cy.data(), n)).epsilon(1e-12).scale(1.0));
    CHECK(k::avx2::norm_sq(cx.data(), n) ==
          doctest::Approx(k::scalar::norm_sq(cx.data(), n)).epsilon(1e-12).scale(1.0));

    auto c1 = cy;
    auto c2 = cy;
    k::scalar::caxpy(cd(0.4, 0.9), cx.data(), c1.data(), n);
    k::avx2::caxpy(cd(0.4, 0.9), cx.data(), c2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(c1[i] - c2[i]) < 1e-14);
  }
}
#endif

TEST_CASE("dispatcher honours a forced instruction set") {
  std::mt19937_64 rng(3);
  const auto x = reals(37, rng);
  const auto y = reals(37, rng);
  const k::Isa original = k::active_isa();
  k::force_isa(k::Isa::kScalar);
  CHECK(k::active_isa() == k::Isa::kScalar);
  const double scalar = k::dot(x.data(), y.data(), x.size());
  CHECK(scalar == k::scalar::dot(x.data(), y.data(), x.size()));
  if (k::isa_available(k::Isa::kAvx2)) {
    k::force_isa(k::Isa::kAvx2);
    CHECK(k::active_isa() == k::Isa::kAvx2);
    CHECK(k::dot(x.data(), y.data(), x.size()) == doctest::Approx(scalar).epsilon(1e-12));
  }
  k::force_isa(original);
  CHECK(k::isa_name(k::Isa::kScalar) == "scalar");
}
