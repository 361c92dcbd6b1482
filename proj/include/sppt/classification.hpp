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

#include <utility>

#include "sppt/factorization.hpp"

namespace sppt {

/// Verdict record. Flags follow the residual rule exactly (residual <= tol,
/// or min eigenvalue >= -tol*||rho||_F for ppt); the implication chain
/// super_sppt => sppt => ppt is asserted at construction and a violation is
/// an internal error. A *_marginal diagnostic marks residuals within a
/// factor 10 of the decision threshold on either side.
struct Classification {
  bool ppt = false;
  double ppt_min_eig = 0.0;
  bool sppt = false;
  double sppt_residual = 0.0;
  bool super_sppt = false;
  double ssppt_residual = 0.0;
  ComplexMatrix basis;
  double tol = kDefaultTol;

  bool ppt_marginal = false;
  bool sppt_marginal = false;
  bool ssppt_marginal = false;
};

/// Positivity of the partial transpose: returns (min eigenvalue of
/// rho^Gamma >= -tol*||rho||_F, that eigenvalue).
std::pair<bool, double> is_ppt(const BipartiteState& rho,
                               double tol = kDefaultTol);

/// Componentwise condition: max over i <= j of
/// ||sum_{k<=i} X_k^dagger (S_kj^dagger S_ki - S_ki S_kj^dagger) X_k||_F
/// normalized by ||rho||_F, cross-checked against the operator identity
/// ||Y^dagger Y - rho^Gamma||_F / ||rho||_F; the larger residual is
/// reported and the flag is (residual <= tol).
std::pair<bool, double> is_sppt(const BlockFactor& factor,
                                double tol = kDefaultTol);

/// Coupling commutation: max over k < i <= j of
/// ||S_ki S_kj^dagger - S_kj^dagger S_ki||_F normalized per triple by
/// max(1, ||S_ki||_F ||S_kj||_F); 0 when no triples exist. The i = j
/// instances reduce to normality of each S_ki.
std::pair<bool, double> is_super_sppt(const BlockFactor& factor,
                                      double tol = kDefaultTol);

/// Transform rho by (basis^dagger (x) I) rho (basis (x) I), factorize in
/// the computational basis of the transformed matrix, and run all three
/// verdicts. `basis` must be M x M unitary.
Classification classify(const BipartiteState& rho, const ComplexMatrix& basis,
                        double tol = kDefaultTol);

/// classify in the computational basis.
Classification classify(const BipartiteState& rho, double tol = kDefaultTol);

}  // namespace sppt
