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

#include "sppt/rng.hpp"

#include <cmath>
#include <numbers>

namespace sppt {

double Rng::uniform() {
  // 53 random bits into [0, 1)
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

cx Rng::gaussian_cx() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

ComplexMatrix Rng::gaussian_matrix(std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = gaussian_cx();
  return m;
}

ComplexMatrix Rng::haar_unitary(std::size_t n) {
  // Modified Gram-Schmidt with positive column norms gives the QR "Q" with
  // the R diagonal already real positive, which is the Haar-correct
  // normalization. A second orthogonalization pass keeps the columns
  // orthonormal to machine precision.
  ComplexMatrix q = gaussian_matrix(n, n);
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        cx proj{};
        for (std::size_t i = 0; i < n; ++i)
          proj += std::conj(q(i, k)) * q(i, j);
        for (std::size_t i = 0; i < n; ++i) q(i, j) -= proj * q(i, k);
      }
      double norm = 0.0;
      for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
      norm = std::sqrt(norm);
      require(norm > 1e-150, ErrorKind::Internal,
              "degenerate gaussian matrix in haar_unitary");
      for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
    }
  }
  return q;
}

std::vector<double> Rng::probability_vector(std::size_t n) {
  std::vector<double> p(n);
  double sum = 0.0;
  for (double& v : p) {
    double u = uniform();
    while (u <= 0.0) u = uniform();
    v = -std::log(u);
    sum += v;
  }
  for (double& v : p) v /= sum;
  return p;
}

ComplexMatrix Rng::density_matrix(std::size_t n) {
  const ComplexMatrix g = gaussian_matrix(n, n);
  ComplexMatrix rho = ComplexMatrix::mul_adj_left(g, g);
  const double tr = rho.trace().real();
  rho *= cx{1.0 / tr};
  return rho;
}

}  // namespace sppt
