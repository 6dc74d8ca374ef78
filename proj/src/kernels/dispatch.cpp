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

#include <atomic>
#include <cstdlib>
#include <string>

#include "symext/error.hpp"
#include "symext/kernels.hpp"

namespace symext::kernels {
namespace {

struct Table {
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*caxpy)(cd, const cd*, cd*, std::size_t);
  double (*re_dot)(const cd*, const cd*, std::size_t);
  double (*norm_sq)(const cd*, std::size_t);
};

constexpr Table kScalarTable{scalar::dot, scalar::axpy, scalar::caxpy, scalar::re_dot,
                             scalar::norm_sq};
#if defined(SYMEXT_HAVE_AVX2)
constexpr Table kAvx2Table{avx2::dot, avx2::axpy, avx2::caxpy, avx2::re_dot,
                           avx2::norm_sq};
#endif

bool cpu_has_avx2() {
#if defined(SYMEXT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Table* table_for(Isa isa) {
#if defined(SYMEXT_HAVE_AVX2)
  if (isa == Isa::kAvx2) return &kAvx2Table;
#endif
  (void)isa;
  return &kScalarTable;
}

Isa initial_isa() {
  if (const char* env = std::getenv("SYMEXT_ISA")) {
    const std::string v(env);
    if (v == "scalar") return Isa::kScalar;
    if (v == "avx2" && cpu_has_avx2()) return Isa::kAvx2;
  }
  return cpu_has_avx2() ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> table{table_for(initial_isa())};
  return table;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  return isa == Isa::kScalar || (isa == Isa::kAvx2 && cpu_has_avx2());
}

Isa active_isa() {
  return current().load() == &kScalarTable ? Isa::kScalar : Isa::kAvx2;
}

void force_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw ValidationError("kernel ISA not available: " + std::string(isa_name(isa)));
  }
  current().store(table_for(isa));
}

double dot(const double* x, const double* y, std::size_t n) {
  return current().load(std::memory_order_relaxed)->dot(x, y, n);
}
void axpy(double a, const double* x, double* y, std::size_t n) {
  current().load(std::memory_order_relaxed)->axpy(a, x, y, n);
}
void caxpy(cd a, const cd* x, cd* y, std::size_t n) {
  current().load(std::memory_order_relaxed)->caxpy(a, x, y, n);
}
double re_dot(const cd* x, const cd* y, std::size_t n) {
  return current().load(std::memory_order_relaxed)->re_dot(x, y, n);
}
double norm_sq(const cd* x, std::size_t n) {
  return current().load(std::memory_order_relaxed)->norm_sq(x, n);
}

}  // namespace symext::kernels
