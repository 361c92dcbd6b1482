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

#include "sppt/classification.hpp"

#include <algorithm>
#include <cmath>

#include "sppt/linalg.hpp"

namespace sppt {

namespace {

bool marginal(double value, double threshold) {
  return value > threshold / 10.0 && value <= threshold * 10.0;
}

}  // namespace

std::pair<bool, double> is_ppt(const BipartiteState& rho, double tol) {
  const ComplexMatrix pt =
      partial_transpose(rho.matrix, rho.dim_a, rho.dim_b);
  const double min_eig = min_eigenvalue(pt);
  const double floor = -tol * std::max(rho.matrix.frobenius_norm(), 1e-300);
  return {min_eig >= floor, min_eig};
}

std::pair<bool, double> is_sppt(const BlockFactor& factor, double tol) {
  factor.validate();
  const std::size_t m = factor.dim_a();
  const std::size_t n = factor.dim_b();
  const BipartiteState rho = from_factor(factor);
  const double rho_norm = std::max(rho.matrix.frobenius_norm(), 1e-300);

  // componentwise defect: the k = i term cancels exactly (S_ii = I)
  double worst = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      ComplexMatrix defect(n, n);
      for (std::size_t k = 0; k < i; ++k) {
        const ComplexMatrix& ski = factor.s(k, i);
        const ComplexMatrix& skj = factor.s(k, j);
        ComplexMatrix comm = ComplexMatrix::mul_adj_left(skj, ski);
        comm -= ComplexMatrix::mul_adj_right(ski, skj);
        const ComplexMatrix sandwiched =
            ComplexMatrix::mul_adj_left(factor.x(k), comm * factor.x(k));
        defect += sandwiched;
      }
      worst = std::max(worst, defect.frobenius_norm());
    }
  }
  double residual = worst / rho_norm;

  // operator identity: rho^Gamma = Y^dagger Y
  const ComplexMatrix y = assemble_Y(factor);
  const ComplexMatrix yy = ComplexMatrix::mul_adj_left(y, y);
  const ComplexMatrix pt = partial_transpose(rho.matrix, m, n);
  residual = std::max(residual, frobenius_diff(yy, pt) / rho_norm);

  return {residual <= tol, residual};
}

std::pair<bool, double> is_super_sppt(const BlockFactor& factor, double tol) {
  factor.validate();
  const std::size_t m = factor.dim_a();
  double residual = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) {
        const ComplexMatrix& ski = factor.s(k, i);
        const ComplexMatrix& skj = factor.s(k, j);
        ComplexMatrix comm = ComplexMatrix::mul_adj_right(ski, skj);
        comm -= ComplexMatrix::mul_adj_left(skj, ski);
        const double scale =
            std::max(1.0, ski.frobenius_norm() * skj.frobenius_norm());
        residual = std::max(residual, comm.frobenius_norm() / scale);
      }
    }
  }
  return {residual <= tol, residual};
}

Classification classify(const BipartiteState& rho, const ComplexMatrix& basis,
                        double tol) {
  const std::size_t m = rho.dim_a;
  require(basis.rows() == m && basis.cols() == m,
          ErrorKind::DimensionMismatch, "basis must be M x M");
  require(basis.unitary_defect() <= 1e-10 * static_cast<double>(m),
          ErrorKind::NotUnitary, "basis must be unitary");

  const ComplexMatrix big = kron(basis, ComplexMatrix::identity(rho.dim_b));
  ComplexMatrix transformed =
      ComplexMatrix::mul_adj_left(big, rho.matrix) * big;
  // exact hermiticity for downstream checks
  for (std::size_t r = 0; r < transformed.rows(); ++r) {
    transformed(r, r) = transformed(r, r).real();
    for (std::size_t c = r + 1; c < transformed.cols(); ++c) {
      const cx v = 0.5 * (transformed(r, c) + std::conj(transformed(c, r)));
      transformed(r, c) = v;
      transformed(c, r) = std::conj(v);
    }
  }
  const BipartiteState rotated{rho.dim_a, rho.dim_b, std::move(transformed),
                               rho.normalized};

  BlockFactor factor = block_cholesky(rotated, tol);
  factor.set_basis(basis);

  Classification result;
  result.basis = basis;
  result.tol = tol;
  std::tie(result.ppt, result.ppt_min_eig) = is_ppt(rotated, tol);
  std::tie(result.sppt, result.sppt_residual) = is_sppt(factor, tol);
  std::tie(result.super_sppt, result.ssppt_residual) =
      is_super_sppt(factor, tol);

  require(!(result.super_sppt && !result.sppt) &&
              !(result.sppt && !result.ppt),
          ErrorKind::Internal,
          "implication chain super_sppt => sppt => ppt violated");

  const double rho_norm = std::max(rho.matrix.frobenius_norm(), 1e-300);
  result.ppt_marginal = marginal(std::abs(result.ppt_min_eig), tol * rho_norm);
  result.sppt_marginal = marginal(result.sppt_residual, tol);
  result.ssppt_marginal = marginal(result.ssppt_residual, tol);
  return result;
}

Classification classify(const BipartiteState& rho, double tol) {
  return classify(rho, ComplexMatrix::identity(rho.dim_a), tol);
}

}  // namespace sppt
