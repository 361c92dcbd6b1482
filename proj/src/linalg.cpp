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

#include "sppt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sppt/kernels.hpp"

namespace sppt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double offdiag_norm(const ComplexMatrix& h) {
  double sum = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (i != j) sum += std::norm(h(i, j));
  return std::sqrt(sum);
}

ComplexMatrix symmetrized(const ComplexMatrix& a) {
  ComplexMatrix h(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return h;
}

void symmetrize_in_place(ComplexMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      const cx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
}

/// V diag(f(values)) V^dagger for a spectral function f given as values.
ComplexMatrix spectral_apply(const EigenSystem& eig,
                             const std::vector<double>& fvalues) {
  const std::size_t n = eig.vectors.rows();
  ComplexMatrix scaled = eig.vectors;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= fvalues[j];
  ComplexMatrix out = ComplexMatrix::mul_adj_right(scaled, eig.vectors);
  symmetrize_in_place(out);
  return out;
}

}  // namespace

ComplexMatrix EigenSystem::reconstruct() const {
  return spectral_apply(*this, values);
}

EigenSystem hermitian_eig(const ComplexMatrix& a, double herm_tol) {
  require(a.is_square(), ErrorKind::NotSquare,
          "hermitian_eig requires a square matrix");
  const std::size_t n = a.rows();
  const double norm = a.frobenius_norm();
  require(a.hermitian_defect() <= herm_tol * std::max(norm, 1e-300),
          ErrorKind::NotHermitian,
          "matrix is not Hermitian within tolerance");

  ComplexMatrix h = symmetrized(a);
  // w accumulates the product of rotation adjoints, i.e. w = V^dagger.
  ComplexMatrix w = ComplexMatrix::identity(n);

  const double conv_tol = 40.0 * kEps * std::max(norm, 1e-300);
  const double skip_tol = conv_tol / (2.0 * static_cast<double>(n));
  const int max_sweeps = 60;
  const auto& ker = kernels::active();

  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    if (offdiag_norm(h) <= conv_tol) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cx apq = h(p, q);
        const double mag = std::abs(apq);
        if (mag <= skip_tol) continue;

        const double app = h(p, p).real();
        const double aqq = h(q, q).real();
        const cx phase = apq / mag;
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = tau >= 0.0
                             ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                             : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Rows p,q of h and w get the adjoint rotation; the rotated 2x2
        // corner is set analytically and columns follow by hermiticity.
        const cx ra{c};
        const cx rb = -s * phase;
        const cx rc{s};
        const cx rd = c * phase;
        ker.rot2(h.data() + p * n, h.data() + q * n, ra, rb, rc, rd, n);
        ker.rot2(w.data() + p * n, w.data() + q * n, ra, rb, rc, rd, n);

        h(p, p) = app - t * mag;
        h(q, q) = aqq + t * mag;
        h(p, q) = 0.0;
        h(q, p) = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          h(i, p) = std::conj(h(p, i));
          h(i, q) = std::conj(h(q, i));
        }
      }
    }
  }
  if (sweep == max_sweeps) {
    require(offdiag_norm(h) <= 1e-10 * std::max(norm, 1e-300),
            ErrorKind::ConvergenceFailure,
            "Jacobi eigensolver did not converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x,
                                                   std::size_t y) {
    return h(x, x).real() < h(y, y).real();
  });

  EigenSystem out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    out.values[j] = h(src, src).real();
    // column j of V is the conjugate of row src of w (V = w^dagger)
    for (std::size_t i = 0; i < n; ++i)
      out.vectors(i, j) = std::conj(w(src, i));
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a, double tol) {
  const EigenSystem eig = hermitian_eig(a);
  const double clamp = tol * a.frobenius_norm();
  require(eig.values.front() >= -clamp, ErrorKind::NotPSD,
          "matrix has eigenvalue below -tol*norm");
  std::vector<double> roots(eig.values.size());
  for (std::size_t i = 0; i < roots.size(); ++i)
    roots[i] = eig.values[i] > 0.0 ? std::sqrt(eig.values[i]) : 0.0;
  return spectral_apply(eig, roots);
}

ComplexMatrix pseudo_inverse(const ComplexMatrix& a, double rank_tol) {
  const EigenSystem eig = hermitian_eig(a);
  double max_abs = 0.0;
  for (double v : eig.values) max_abs = std::max(max_abs, std::abs(v));
  const double cutoff = rank_tol * max_abs;
  std::vector<double> inv(eig.values.size());
  for (std::size_t i = 0; i < inv.size(); ++i) {
    inv[i] =
        std::abs(eig.values[i]) > cutoff ? 1.0 / eig.values[i] : 0.0;
  }
  return spectral_apply(eig, inv);
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t dim_a,
                                std::size_t dim_b) {
  const std::size_t dim = dim_a * dim_b;
  require(rho.rows() == dim && rho.cols() == dim, ErrorKind::DimensionMismatch,
          "matrix size does not equal dimA*dimB");
  ComplexMatrix out(dim, dim);
  for (std::size_t bi = 0; bi < dim_a; ++bi) {
    for (std::size_t bj = 0; bj < dim_a; ++bj) {
      for (std::size_t i = 0; i < dim_b; ++i) {
        for (std::size_t j = 0; j < dim_b; ++j) {
          out(bi * dim_b + i, bj * dim_b + j) =
              rho(bj * dim_b + i, bi * dim_b + j);
        }
      }
    }
  }
  return out;
}

double min_eigenvalue(const ComplexMatrix& a) {
  return hermitian_eig(a).values.front();
}

}  // namespace sppt
