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

#include <cstdint>
#include <utility>
#include <vector>

#include "sppt/block_factor.hpp"
#include "sppt/complex_matrix.hpp"

namespace sppt {

/// Density operator on an M (x) N bipartite system. Unnormalized operators
/// are first class (factorizations keep a cleaner form without premature
/// rescaling); `normalized` records whether the trace is 1.
struct BipartiteState {
  std::size_t dim_a;
  std::size_t dim_b;
  ComplexMatrix matrix;  // MN x MN
  bool normalized;

  /// N x N block (i,j) of the M x M block structure.
  ComplexMatrix block(std::size_t i, std::size_t j) const;
};

/// Validating constructor: Hermitian within 1e-10*||m||_F, smallest
/// eigenvalue >= -1e-9*||m||_F, and trace 1 within 1e-10 when `normalized`.
BipartiteState make_state(std::size_t dim_a, std::size_t dim_b,
                          ComplexMatrix matrix, bool normalized);

/// Rescale to unit trace (explicit step; most constructors do not).
BipartiteState normalize(const BipartiteState& state);

/// Two-qubit Werner state W_p in the computational basis:
/// diagonal (2p, 3-2p, 3-2p, 2p)/6, inner anti-diagonal entries (4p-3)/6.
BipartiteState werner(double p);

/// Classical-quantum state sum_n p_n |e_n><e_n| (x) sigma_n with |e_n> the
/// columns of basis_a.
BipartiteState cq_state(const std::vector<double>& probs,
                        const std::vector<ComplexMatrix>& sigmas,
                        const ComplexMatrix& basis_a);

/// Classical-classical state sum_nm p_nm |e_n><e_n| (x) |f_m><f_m|; joint
/// is the M x N probability table (real entries, total 1).
BipartiteState cc_state(const ComplexMatrix& joint,
                        const ComplexMatrix& basis_a,
                        const ComplexMatrix& basis_b);

/// Assemble rho = X^dagger X from a factor blockwise:
/// rho_ij = sum_{k<=i} X_k^dagger S_ki^dagger S_kj X_k for i <= j.
BipartiteState from_factor(const BlockFactor& factor);

/// Random factor satisfying the commuting-coupling condition by
/// construction: per row k one Haar eigenbasis V_k shared by all S_ki
/// (S_ki = V_k Lambda_ki V_k^dagger with diagonal complex Lambda), plus a
/// random Hermitian PSD X_k whose spectrum may contain exact zeros.
/// Deterministic in the seed. Returns (from_factor(factor), factor).
std::pair<BipartiteState, BlockFactor> random_super_sppt(std::size_t dim_a,
                                                         std::size_t dim_b,
                                                         std::uint64_t seed);

/// Random normalized density matrix g^dagger g / tr on M (x) N.
BipartiteState random_density(std::size_t dim_a, std::size_t dim_b,
                              std::uint64_t seed);

}  // namespace sppt
