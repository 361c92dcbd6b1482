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

namespace sppt::kernels {

namespace {

// Row-major saxpy formulation: C[i,:] accumulates coeff * B[l,:]. The same
// loop shape serves mul_nn and mul_cn, which differ only in the coefficient.

void mul_nn_scalar(const cx* a, const cx* b, cx* c, std::size_t m,
                   std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    cx* crow = c + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const cx w = a[i * k + l];
      if (w == cx{}) continue;
      const cx* brow = b + l * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += w * brow[j];
    }
  }
}

void mul_cn_scalar(const cx* a, const cx* b, cx* c, std::size_t m,
                   std::size_t k, std::size_t n) {
  // a is k x m; coefficient for (i, l) is conj(a[l, i])
  for (std::size_t i = 0; i < m; ++i) {
    cx* crow = c + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const cx w = std::conj(a[l * m + i]);
      if (w == cx{}) continue;
      const cx* brow = b + l * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += w * brow[j];
    }
  }
}

void mul_nc_scalar(const cx* a, const cx* b, cx* c, std::size_t m,
                   std::size_t k, std::size_t n) {
  // b is n x k; c[i,j] += <a_row_i, conj(b_row_j)>
  for (std::size_t i = 0; i < m; ++i) {
    const cx* arow = a + i * k;
    cx* crow = c + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      const cx* brow = b + j * k;
      cx sum{};
      for (std::size_t l = 0; l < k; ++l) sum += arow[l] * std::conj(brow[l]);
      crow[j] += sum;
    }
  }
}

void axpy_scalar(cx* y, cx alpha, const cx* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double norm_sq_scalar(const cx* a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  }
  return sum;
}

void rot2_scalar(cx* u, cx* v, cx a, cx b, cx c, cx d, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const cx ui = u[i];
    const cx vi = v[i];
    u[i] = a * ui + b * vi;
    v[i] = c * ui + d * vi;
  }
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend backend{
      "scalar",     mul_nn_scalar,  mul_cn_scalar, mul_nc_scalar,
      axpy_scalar,  norm_sq_scalar, rot2_scalar,
  };
  return backend;
}

}  // namespace sppt::kernels
