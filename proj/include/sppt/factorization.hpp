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

#include "sppt/linalg.hpp"
#include "sppt/state.hpp"

namespace sppt {

/// Sequential block Cholesky rho = X^dagger X with block-upper-triangular X.
/// Row i: Schur complement G_i = rho_ii - sum_{k<i} X_k^dagger S_ki^dagger
/// S_ki X_k, X_i its Hermitian PSD root, and S_ij = X_i^+ R_ij X_i^+ for
/// j > i with R_ij the correspondingly deflated off-diagonal block.
///
/// `tol` is relative to ||rho||_F. Eigenvalues of G_i below tol*||rho||_F
/// are treated as exact rank deficiency (dropped from X_i and its
/// pseudoinverse alike, so round-off modes cannot leak into S_ij).
/// Throws NotPSD if a Schur complement has an eigenvalue below
/// -tol*||rho||_F, and RangeViolation if some R_ij is not supported on
/// range(X_i), i.e. ||X_i S_ij X_i - R_ij||_F > tol*||rho||_F; either one
/// means the input is not a state or is numerically borderline.
BlockFactor block_cholesky(const BipartiteState& rho,
                           double tol = kDefaultTol);

/// The MN x MN block matrix of the factorization: block (i,j) = S_ij X_i
/// with S_ii = I, zero below the diagonal.
ComplexMatrix assemble_X(const BlockFactor& factor);

/// Same with every S_ij replaced by its adjoint; Y^dagger Y reproduces the
/// partial transpose exactly when the factor satisfies the coupling
/// condition.
ComplexMatrix assemble_Y(const BlockFactor& factor);

}  // namespace sppt
