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
#include <optional>

#include "sppt/classification.hpp"

namespace sppt {

/// (U (x) I) rho (U^dagger (x) I); U must be M x M unitary. Preserves the
/// spectrum (so PPT verdicts) while the factorization-based verdicts may
/// change: they are defined relative to a basis.
BipartiteState local_unitary_a(const BipartiteState& rho,
                               const ComplexMatrix& u);

/// (I (x) U) rho (I (x) U^dagger); U must be N x N unitary.
BipartiteState local_unitary_b(const BipartiteState& rho,
                               const ComplexMatrix& u);

enum class SearchTarget { kSppt, kSuperSppt };

struct BasisSearchResult {
  /// First basis achieving the target verdict, if any.
  std::optional<ComplexMatrix> basis;
  std::optional<Classification> classification;
  std::size_t trial = 0;  // index of the hit

  /// Lowest-residual basis seen (diagnostics; equals the hit when found).
  double best_residual = 0.0;
  ComplexMatrix best_basis;
  std::size_t trials_run = 0;

  bool found() const { return basis.has_value(); }
};

/// Sample `trials` Haar-random bases (seeded, deterministic), classify rho
/// in each, and return the first basis whose target verdict holds. A miss
/// means "not found in this sample", never nonexistence.
BasisSearchResult random_basis_search(const BipartiteState& rho,
                                      std::size_t trials, double tol,
                                      std::uint64_t seed,
                                      SearchTarget target);

}  // namespace sppt
