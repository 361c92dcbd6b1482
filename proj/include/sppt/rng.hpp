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
#include <random>
#include <vector>

#include "sppt/complex_matrix.hpp"

namespace sppt {

/// Seeded PRNG used by every randomized constructor. The engine is
/// std::mt19937_64 (bit-exact across platforms); the distributions are
/// implemented here (53-bit uniforms, Box-Muller gaussians) instead of
/// <random>'s, whose output is implementation-defined, so that a seed
/// produces the same stream everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double uniform();
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal via Box-Muller.
  double gaussian();
  /// Complex with independent N(0,1) real and imaginary parts.
  cx gaussian_cx();

  ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols);
  /// Haar-distributed unitary: Gram-Schmidt of a gaussian matrix with
  /// positive-real diagonal normalization.
  ComplexMatrix haar_unitary(std::size_t n);
  /// Random point of the probability simplex (Dirichlet(1,...,1)).
  std::vector<double> probability_vector(std::size_t n);
  /// Random density matrix g^dagger g / tr (unit trace, PSD).
  ComplexMatrix density_matrix(std::size_t n);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sppt
