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

#include <vector>

#include "sppt/complex_matrix.hpp"

namespace sppt {

/// Default relative tolerance (against the Frobenius norm of the operand)
/// used throughout the library; every routine takes an override.
inline constexpr double kDefaultTol = 1e-9;

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns are orthonormal eigenvectors

  /// V diag(values) V^dagger.
  ComplexMatrix reconstruct() const;
};

/// Spectral decomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. The input is symmetrized to (A+A^dagger)/2 after checking
/// that its Hermitian defect is below herm_tol * ||A||_F.
EigenSystem hermitian_eig(const ComplexMatrix& a, double herm_tol = 1e-10);

/// Hermitian PSD square root. Eigenvalues in [-tol*||A||_F, 0) are clamped
/// to zero; anything more negative raises NotPSD.
ComplexMatrix psd_sqrt(const ComplexMatrix& a, double tol = kDefaultTol);

/// Moore-Penrose pseudoinverse of a Hermitian matrix via its
/// eigendecomposition; eigenvalues with |lambda| <= rank_tol * |lambda|_max
/// are treated as zero.
ComplexMatrix pseudo_inverse(const ComplexMatrix& a,
                             double rank_tol = 1e-12);

/// Partial transposition on the A factor of an (dimA*dimB)-dimensional
/// bipartite matrix: output A-block (i,j) is input A-block (j,i).
ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t dim_a,
                                std::size_t dim_b);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& a);

}  // namespace sppt
