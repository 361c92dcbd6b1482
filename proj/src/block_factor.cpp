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

#include "sppt/block_factor.hpp"

namespace sppt {

BlockFactor::BlockFactor(std::size_t dim_a, std::size_t dim_b)
    : dim_a_(dim_a),
      dim_b_(dim_b),
      basis_(ComplexMatrix::identity(dim_a == 0 ? 1 : dim_a)) {
  require(dim_a >= 1 && dim_b >= 1, ErrorKind::OutOfRange,
          "factor dimensions must be >= 1");
  x_.assign(dim_a, ComplexMatrix(dim_b, dim_b));
  s_.assign(dim_a * (dim_a - 1) / 2, ComplexMatrix(dim_b, dim_b));
}

BlockFactor BlockFactor::make(std::size_t dim_a, std::size_t dim_b,
                              std::vector<ComplexMatrix> x,
                              std::vector<ComplexMatrix> s_upper,
                              ComplexMatrix basis) {
  BlockFactor f(dim_a, dim_b);
  require(x.size() == dim_a, ErrorKind::MalformedFactor,
          "factor needs exactly M diagonal blocks");
  require(s_upper.size() == dim_a * (dim_a - 1) / 2,
          ErrorKind::MalformedFactor,
          "factor needs exactly M(M-1)/2 coupling blocks");
  f.x_ = std::move(x);
  f.s_ = std::move(s_upper);
  f.basis_ = std::move(basis);
  f.validate();
  return f;
}

std::size_t BlockFactor::s_index(std::size_t i, std::size_t j) const {
  require(i < j && j < dim_a_, ErrorKind::MalformedFactor,
          "coupling block index requires i < j < M");
  // row-major offset into the strict upper triangle
  return i * dim_a_ - i * (i + 1) / 2 + (j - i - 1);
}

const ComplexMatrix& BlockFactor::x(std::size_t k) const {
  require(k < dim_a_, ErrorKind::MalformedFactor, "diagonal block index");
  return x_[k];
}

ComplexMatrix& BlockFactor::x(std::size_t k) {
  require(k < dim_a_, ErrorKind::MalformedFactor, "diagonal block index");
  return x_[k];
}

const ComplexMatrix& BlockFactor::s(std::size_t i, std::size_t j) const {
  return s_[s_index(i, j)];
}

ComplexMatrix& BlockFactor::s(std::size_t i, std::size_t j) {
  return s_[s_index(i, j)];
}

void BlockFactor::set_basis(ComplexMatrix b) {
  require(b.rows() == dim_a_ && b.cols() == dim_a_,
          ErrorKind::DimensionMismatch, "basis must be M x M");
  basis_ = std::move(b);
}

void BlockFactor::validate() const {
  require(x_.size() == dim_a_ && s_.size() == dim_a_ * (dim_a_ - 1) / 2,
          ErrorKind::MalformedFactor, "factor block count mismatch");
  for (const ComplexMatrix& m : x_) {
    require(m.rows() == dim_b_ && m.cols() == dim_b_,
            ErrorKind::MalformedFactor, "diagonal block must be N x N");
    require(m.all_finite(), ErrorKind::MalformedFactor,
            "non-finite factor entry");
  }
  for (const ComplexMatrix& m : s_) {
    require(m.rows() == dim_b_ && m.cols() == dim_b_,
            ErrorKind::MalformedFactor, "coupling block must be N x N");
    require(m.all_finite(), ErrorKind::MalformedFactor,
            "non-finite factor entry");
  }
  require(basis_.rows() == dim_a_ && basis_.cols() == dim_a_,
          ErrorKind::MalformedFactor, "factor basis must be M x M");
}

}  // namespace sppt
