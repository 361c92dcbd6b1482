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

#include <cstddef>
#include <vector>

#include "sppt/complex_matrix.hpp"

namespace sppt {

/// Block-triangular factorization data of an M (x) N state rho = X^dagger X:
/// diagonal blocks x[k] (N x N) and strictly upper coupling blocks s(i,j)
/// for i < j. The conventions S_ii = I and S_ij = 0 below the diagonal are
/// implicit and never stored. `basis` records the A-side basis the factor
/// refers to (identity = computational).
///
/// Factorization routines produce Hermitian PSD x[k]; the type itself
/// admits arbitrary x[k] so that gauge-transformed factors (x -> W x,
/// s -> W s W^dagger) and literature fixtures remain representable.
class BlockFactor {
 public:
  BlockFactor(std::size_t dim_a, std::size_t dim_b);

  static BlockFactor make(std::size_t dim_a, std::size_t dim_b,
                          std::vector<ComplexMatrix> x,
                          std::vector<ComplexMatrix> s_upper,
                          ComplexMatrix basis);

  std::size_t dim_a() const noexcept { return dim_a_; }
  std::size_t dim_b() const noexcept { return dim_b_; }

  const ComplexMatrix& x(std::size_t k) const;
  ComplexMatrix& x(std::size_t k);

  /// Coupling block for 0 <= i < j < M; other index pairs are invalid.
  const ComplexMatrix& s(std::size_t i, std::size_t j) const;
  ComplexMatrix& s(std::size_t i, std::size_t j);

  const ComplexMatrix& basis() const noexcept { return basis_; }
  void set_basis(ComplexMatrix b);

  double reconstruction_residual() const noexcept {
    return reconstruction_residual_;
  }
  void set_reconstruction_residual(double r) noexcept {
    reconstruction_residual_ = r;
  }

  /// Throws MalformedFactor unless all block shapes are consistent.
  void validate() const;

 private:
  std::size_t s_index(std::size_t i, std::size_t j) const;

  std::size_t dim_a_;
  std::size_t dim_b_;
  std::vector<ComplexMatrix> x_;
  std::vector<ComplexMatrix> s_;  // row-major strict upper triangle
  ComplexMatrix basis_;
  double reconstruction_residual_ = 0.0;
};

}  // namespace sppt
