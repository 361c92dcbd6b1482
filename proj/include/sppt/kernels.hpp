// Copyright 2026 The sppt developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>

// Low-level dense complex kernels. Every routine exists as a scalar
// reference implementation and (on x86-64) an AVX2+FMA variant; the active
// backend is chosen once at startup from CPUID, overridable with
// SPPT_KERNELS=scalar|avx2. All matrices are row-major, contiguous,
// non-aliasing unless stated otherwise.

namespace sppt::kernels {

using cx = std::complex<double>;

struct Backend {
  const char* name;

  // c (m x n) += a (m x k) * b (k x n)
  void (*mul_nn)(const cx* a, const cx* b, cx* c, std::size_t m, std::size_t k,
                 std::size_t n);
  // c (m x n) += a† * b  with a stored as (k x m)
  void (*mul_cn)(const cx* a, const cx* b, cx* c, std::size_t m, std::size_t k,
                 std::size_t n);
  // c (m x n) += a * b†  with b stored as (n x k)
  void (*mul_nc)(const cx* a, const cx* b, cx* c, std::size_t m, std::size_t k,
                 std::size_t n);
  // y += alpha * x
  void (*axpy)(cx* y, cx alpha, const cx* x, std::size_t n);
  // sum of |z|^2
  double (*norm_sq)(const cx* a, std::size_t n);
  // (u, v) <- (a*u + b*v, c*u + d*v), elementwise over length n
  void (*rot2)(cx* u, cx* v, cx a, cx b, cx c, cx d, std::size_t n);
};

const Backend& scalar_backend();

#if defined(__x86_64__) || defined(_M_X64)
#define SPPT_HAVE_AVX2_BACKEND 1
const Backend& avx2_backend();
bool cpu_supports_avx2();
#else
#define SPPT_HAVE_AVX2_BACKEND 0
#endif

/// The backend selected at startup (CPUID + SPPT_KERNELS override).
const Backend& active();

}  // namespace sppt::kernels
