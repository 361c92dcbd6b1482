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

#include "sppt/classification.hpp"

namespace sppt {

/// Joint spectral data of one row's coupling family {S_ki : i > k}: a
/// single orthonormal basis of rank-1 projectors u_l u_l^dagger that
/// diagonalizes every member, with the eigenvalue table lambda^(ki)_l.
struct JointSpectrum {
  std::size_t row = 0;     // k
  ComplexMatrix vectors;   // N x N unitary; column l spans projector l
  // eigenvalues[a][l]: eigenvalue of family member a on projector l
  std::vector<std::vector<cx>> eigenvalues;

  ComplexMatrix projector(std::size_t l) const;
};

/// Simultaneously diagonalize a family of mutually commuting normal
/// matrices (the commutation residual is checked against tol first). The
/// basis comes from a random real linear combination
/// H = sum_i alpha_i (S_i + S_i^dagger) + beta_i i(S_i^dagger - S_i);
/// degenerate clusters are refined recursively, and off-diagonal leakage
/// of every member must fall below tol * max(1, ||S_i||_F), retrying with
/// fresh coefficients (at most 8 attempts). The coefficient stream is
/// internally seeded: calls are deterministic.
JointSpectrum joint_eigenbasis(const std::vector<ComplexMatrix>& family,
                               double tol = kDefaultTol);

struct ProductTerm {
  double weight = 0.0;
  std::vector<cx> vec_a;  // unit norm, length M
  std::vector<cx> vec_b;  // unit norm, length N
};

/// rho = sum_t weight_t (a_t a_t^dagger) (x) (b_t b_t^dagger), with at most
/// M*N terms and nonnegative weights.
struct SeparableDecomposition {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::vector<ProductTerm> terms;
};

/// Constructive separable decomposition of a factor satisfying the
/// coupling-commutation condition (checked; NotSuperSPPT otherwise).
/// Row k contributes one term per joint projector: the A-side vector has
/// components conj(lambda^(ki)_l) on i >= k (1 at i = k, 0 below) and the
/// B-side vector is X_k^dagger u_l. Rows with an empty family (always the
/// last row) use the eigenprojectors of X_k^dagger X_k, which keeps every
/// emitted term a pure product. Terms with weight below
/// tol * ||rho||_F are dropped; ordering is row-major in (k, l).
SeparableDecomposition separable_decomposition(const BlockFactor& factor,
                                               double tol = kDefaultTol);

struct VerificationReport {
  bool passed = false;
  double residual = 0.0;       // ||sum terms - rho||_F / ||rho||_F
  double min_weight = 0.0;
  double max_norm_defect_a = 0.0;  // worst | ||vec_a|| - 1 |
  double max_norm_defect_b = 0.0;
  std::size_t term_count = 0;
};

/// Direct check of the separability definition: rebuild the sum of product
/// terms and compare with rho. Passes iff the relative residual is at most
/// tol and no weight is negative.
VerificationReport verify_decomposition(const SeparableDecomposition& decomp,
                                        const BipartiteState& rho,
                                        double tol = 1e-8);

}  // namespace sppt
