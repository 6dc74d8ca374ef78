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

// Inner-loop kernels used by the SDP solver and the matrix substrate.
//
// Every kernel has a portable scalar reference in namespace `scalar` and,
// on x86-64 builds, an AVX2+FMA variant in namespace `avx2`. The free
// functions in `symext::kernels` dispatch to the best variant the running
// CPU supports; the choice is made once and can be pinned with the
// environment variable SYMEXT_ISA=scalar (or avx2) or with force_isa().

#ifndef SYMEXT_KERNELS_HPP
#define SYMEXT_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <string_view>

namespace symext::kernels {

using cd = std::complex<double>;

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);
Isa active_isa();
// Pins the dispatch target. Throws ValidationError when `isa` is not
// available on this machine or in this build.
void force_isa(Isa isa);

// sum_i x[i] * y[i]
double dot(const double* x, const double* y, std::size_t n);
// y += a * x
void axpy(double a, const double* x, double* y, std::size_t n);
// y += a * x over complex arrays
void caxpy(cd a, const cd* x, cd* y, std::size_t n);
// sum_i Re(x[i]) Re(y[i]) + Im(x[i]) Im(y[i]); equals Re tr(A B) when x and
// y hold Hermitian A and B in the same storage order.
double re_dot(const cd* x, const cd* y, std::size_t n);
// sum_i |x[i]|^2
double norm_sq(const cd* x, std::size_t n);

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void caxpy(cd a, const cd* x, cd* y, std::size_t n);
double re_dot(const cd* x, const cd* y, std::size_t n);
double norm_sq(const cd* x, std::size_t n);
}  // namespace scalar

#if defined(SYMEXT_HAVE_AVX2)
namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void caxpy(cd a, const cd* x, cd* y, std::size_t n);
double re_dot(const cd* x, const cd* y, std::size_t n);
double norm_sq(const cd* x, std::size_t n);
}  // namespace avx2
#endif

}  // namespace symext::kernels

#endif  // SYMEXT_KERNELS_HPP
