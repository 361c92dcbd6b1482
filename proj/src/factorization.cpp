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

#include "sppt/factorization.hpp"

#include <algorithm>
#include <cmath>

#include "sppt/linalg.hpp"

namespace sppt {

BlockFactor block_cholesky(const BipartiteState& rho, double tol) {
  const std::size_t m = rho.dim_a;
  const std::size_t n = rho.dim_b;
  const double rho_norm = std::max(rho.matrix.frobenius_norm(), 1e-300);
  const double abs_tol = tol * rho_norm;

  BlockFactor factor(m, n);
  // rows of the assembled X computed so far: a[k][j] = S_kj X_k (j >= k)
  std::vector<std::vector<ComplexMatrix>> a(
      m, std::vector<ComplexMatrix>(m, ComplexMatrix(n, n)));

  for (std::size_t i = 0; i < m; ++i) {
    ComplexMatrix g = rho.block(i, i);
    for (std::size_t k = 0; k < i; ++k) {
      ComplexMatrix corr(n, n);
      ComplexMatrix::add_mul_adj_left(corr, a[k][i], a[k][i]);
      g -= corr;
    }
    // g is Hermitian in exact arithmetic; enforce it so that a complement
    // of tiny norm does not trip the eigensolver's relative defect check
    for (std::size_t r = 0; r < n; ++r) {
      g(r, r) = g(r, r).real();
      for (std::size_t c = r + 1; c < n; ++c) {
        const cx v = 0.5 * (g(r, c) + std::conj(g(c, r)));
        g(r, c) = v;
        g(c, r) = std::conj(v);
      }
    }

    const EigenSystem eig = hermitian_eig(g);
    require(eig.values.front() >= -abs_tol, ErrorKind::NotPSD,
            "Schur complement has a negative eigenvalue: input is not a "
            "state");
    // Rank decision at abs_tol: directions with eigenvalue <= abs_tol are
    // dropped from both the root and its pseudoinverse, so that round-off
    // modes of a rank-deficient complement cannot be inverted into S_ij.
    std::vector<double> root(n), inv_root(n);
    for (std::size_t t = 0; t < n; ++t) {
      if (eig.values[t] > abs_tol) {
        root[t] = std::sqrt(eig.values[t]);
        inv_root[t] = 1.0 / root[t];
      }
    }
    auto spectral = [&](const std::vector<double>& f) {
      ComplexMatrix scaled = eig.vectors;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < n; ++r) scaled(r, j) *= f[j];
      ComplexMatrix out = ComplexMatrix::mul_adj_right(scaled, eig.vectors);
      // exact hermiticity
      for (std::size_t r = 0; r < n; ++r) {
        out(r, r) = out(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
          const cx v = 0.5 * (out(r, c) + std::conj(out(c, r)));
          out(r, c) = v;
          out(c, r) = std::conj(v);
        }
      }
      return out;
    };
    factor.x(i) = spectral(root);
    const ComplexMatrix x_pinv = spectral(inv_root);
    a[i][i] = factor.x(i);

    for (std::size_t j = i + 1; j < m; ++j) {
      ComplexMatrix r = rho.block(i, j);
      for (std::size_t k = 0; k < i; ++k) {
        ComplexMatrix corr(n, n);
        ComplexMatrix::add_mul_adj_left(corr, a[k][i], a[k][j]);
        r -= corr;
      }
      const ComplexMatrix s = x_pinv * r * x_pinv;
      // positivity of rho confines R_ij to range(X_i) up to round-off;
      // a larger defect means the coupling block cannot represent R_ij
      const ComplexMatrix back = factor.x(i) * s * factor.x(i);
      require(frobenius_diff(back, r) <= abs_tol,
              ErrorKind::RangeViolation,
              "off-diagonal block not supported on range(X_i); state is "
              "numerically borderline");
      factor.s(i, j) = s;
      a[i][j] = s * factor.x(i);
    }
  }

  const BipartiteState rebuilt = from_factor(factor);
  factor.set_reconstruction_residual(
      frobenius_diff(rebuilt.matrix, rho.matrix) / rho_norm);
  return factor;
}

namespace {

ComplexMatrix assemble(const BlockFactor& factor, bool adjoint_couplings) {
  factor.validate();
  const std::size_t m = factor.dim_a();
  const std::size_t n = factor.dim_b();
  ComplexMatrix big(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i) {
    big.set_block(i * n, i * n, factor.x(i));
    for (std::size_t j = i + 1; j < m; ++j) {
      const ComplexMatrix coupled =
          adjoint_couplings ? factor.s(i, j).adjoint() * factor.x(i)
                            : factor.s(i, j) * factor.x(i);
      big.set_block(i * n, j * n, coupled);
    }
  }
  return big;
}

}  // namespace

ComplexMatrix assemble_X(const BlockFactor& factor) {
  return assemble(factor, false);
}

ComplexMatrix assemble_Y(const BlockFactor& factor) {
  return assemble(factor, true);
}

}  // namespace sppt
