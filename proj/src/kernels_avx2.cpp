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

#include "sppt/kernels.hpp"

#if SPPT_HAVE_AVX2_BACKEND

#include <immintrin.h>

// A __m256d holds two complex doubles as [re0, im0, re1, im1]. For a complex
// weight w, w*z = z*re(w) + swap(z)*[-im(w), +im(w)] where swap exchanges the
// real/imag lanes of each complex element.

namespace sppt::kernels {

namespace {

inline __m256d cswap(__m256d z) { return _mm256_permute_pd(z, 0x5); }

// crow[0..n) += w * brow[0..n), complex elements
inline void caxpy_row(cx* crow, cx w, const cx* brow, std::size_t n) {
  const __m256d wr = _mm256_set1_pd(w.real());
  const __m256d wi = _mm256_setr_pd(-w.imag(), w.imag(), -w.imag(), w.imag());
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    __m256d z = _mm256_loadu_pd(reinterpret_cast<const double*>(brow + j));
    __m256d acc = _mm256_loadu_pd(reinterpret_cast<double*>(crow + j));
    acc = _mm256_fmadd_pd(z, wr, acc);
    acc = _mm256_fmadd_pd(cswap(z), wi, acc);
    _mm256_storeu_pd(reinterpret_cast<double*>(crow + j), acc);
  }
  for (; j < n; ++j) crow[j] += w * brow[j];
}

void mul_nn_avx2(const cx* a, const cx* b, cx* c, std::size_t m, std::size_t k,
                 std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const cx w = a[i * k + l];
      if (w == cx{}) continue;
      caxpy_row(c + i * n, w, b + l * n, n);
    }
  }
}

void mul_cn_avx2(const cx* a, const cx* b, cx* c, std::size_t m, std::size_t k,
                 std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const cx w = std::conj(a[l * m + i]);
      if (w == cx{}) continue;
      caxpy_row(c + i * n, w, b + l * n, n);
    }
  }
}

void mul_nc_avx2(const cx* a, const cx* b, cx* c, std::size_t m, std::size_t k,
                 std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const cx* arow = a + i * k;
    for (std::size_t j = 0; j < n; ++j) {
      const cx* brow = b + j * k;
      // sum arow[l] * conj(brow[l]): accumulate the products' real parts as
      // pairwise [x*u, y*v] lanes and imaginary parts as [y*u, x*v] lanes.
      __m256d acc_re = _mm256_setzero_pd();
      __m256d acc_im = _mm256_setzero_pd();
      std::size_t l = 0;
      for (; l + 2 <= k; l += 2) {
        __m256d za = _mm256_loadu_pd(reinterpret_cast<const double*>(arow + l));
        __m256d zb = _mm256_loadu_pd(reinterpret_cast<const double*>(brow + l));
        acc_re = _mm256_fmadd_pd(za, zb, acc_re);
        acc_im = _mm256_fmadd_pd(cswap(za), zb, acc_im);
      }
      alignas(32) double re4[4];
      alignas(32) double im4[4];
      _mm256_store_pd(re4, acc_re);
      _mm256_store_pd(im4, acc_im);
      cx sum{re4[0] + re4[1] + re4[2] + re4[3],
             im4[0] - im4[1] + im4[2] - im4[3]};
      for (; l < k; ++l) sum += arow[l] * std::conj(brow[l]);
      c[i * n + j] += sum;
    }
  }
}

void axpy_avx2(cx* y, cx alpha, const cx* x, std::size_t n) {
  caxpy_row(y, alpha, x, n);
}

double norm_sq_avx2(const cx* a, std::size_t n) {
  const double* p = reinterpret_cast<const double*>(a);
  const std::size_t len = 2 * n;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256d z = _mm256_loadu_pd(p + i);
    acc = _mm256_fmadd_pd(z, z, acc);
  }
  alignas(32) double s4[4];
  _mm256_store_pd(s4, acc);
  double sum = s4[0] + s4[1] + s4[2] + s4[3];
  for (; i < len; ++i) sum += p[i] * p[i];
  return sum;
}

void rot2_avx2(cx* u, cx* v, cx a, cx b, cx c, cx d, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_setr_pd(-a.imag(), a.imag(), -a.imag(), a.imag());
  const __m256d br = _mm256_set1_pd(b.real());
  const __m256d bi = _mm256_setr_pd(-b.imag(), b.imag(), -b.imag(), b.imag());
  const __m256d cr = _mm256_set1_pd(c.real());
  const __m256d ci = _mm256_setr_pd(-c.imag(), c.imag(), -c.imag(), c.imag());
  const __m256d dr = _mm256_set1_pd(d.real());
  const __m256d di = _mm256_setr_pd(-d.imag(), d.imag(), -d.imag(), d.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d U = _mm256_loadu_pd(reinterpret_cast<double*>(u + i));
    __m256d V = _mm256_loadu_pd(reinterpret_cast<double*>(v + i));
    __m256d Us = cswap(U);
    __m256d Vs = cswap(V);
    __m256d nu = _mm256_mul_pd(U, ar);
    nu = _mm256_fmadd_pd(Us, ai, nu);
    nu = _mm256_fmadd_pd(V, br, nu);
    nu = _mm256_fmadd_pd(Vs, bi, nu);
    __m256d nv = _mm256_mul_pd(U, cr);
    nv = _mm256_fmadd_pd(Us, ci, nv);
    nv = _mm256_fmadd_pd(V, dr, nv);
    nv = _mm256_fmadd_pd(Vs, di, nv);
    _mm256_storeu_pd(reinterpret_cast<double*>(u + i), nu);
    _mm256_storeu_pd(reinterpret_cast<double*>(v + i), nv);
  }
  for (; i < n; ++i) {
    const cx ui = u[i];
    const cx vi = v[i];
    u[i] = a * ui + b * vi;
    v[i] = c * ui + d * vi;
  }
}

}  // namespace

const Backend& avx2_backend() {
  static const Backend backend{
      "avx2",     mul_nn_avx2,  mul_cn_avx2, mul_nc_avx2,
      axpy_avx2,  norm_sq_avx2, rot2_avx2,
  };
  return backend;
}

bool cpu_supports_avx2() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

}  // namespace sppt::kernels

#endif  // SPPT_HAVE_AVX2_BACKEND
