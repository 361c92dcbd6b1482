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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "sppt/errors.hpp"

namespace sppt {

using cx = std::complex<double>;

/// Dense complex matrix, row-major. The universal value type of the
/// library: density-matrix blocks, factors, unitaries and projectors are
/// all carried as ComplexMatrix. Dimensions are strictly positive and
/// element-data constructors reject non-finite entries.
class ComplexMatrix {
 public:
  /// 1x1 zero matrix (the smallest valid shape).
  ComplexMatrix() : ComplexMatrix(1, 1) {}
  ComplexMatrix(std::size_t rows, std::size_t cols);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(const std::vector<cx>& entries);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<cx>> rows);
  static ComplexMatrix from_data(std::size_t rows, std::size_t cols,
                                 std::vector<cx> data);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  cx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  cx* data() noexcept { return data_.data(); }
  const cx* data() const noexcept { return data_.data(); }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  cx trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  /// ||A - A^dagger||_F (0 for exactly Hermitian matrices).
  double hermitian_defect() const;
  /// ||A^dagger A - I||_F.
  double unitary_defect() const;

  bool all_finite() const;

  ComplexMatrix block(std::size_t i0, std::size_t j0, std::size_t r,
                      std::size_t c) const;
  void set_block(std::size_t i0, std::size_t j0, const ComplexMatrix& m);

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cx scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, cx s) {
    a *= s;
    return a;
  }
  friend ComplexMatrix operator*(cx s, ComplexMatrix a) {
    a *= s;
    return a;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
    return mul(a, b);
  }

  /// a * b
  static ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b);
  /// a^dagger * b, without materializing the adjoint
  static ComplexMatrix mul_adj_left(const ComplexMatrix& a,
                                    const ComplexMatrix& b);
  /// a * b^dagger, without materializing the adjoint
  static ComplexMatrix mul_adj_right(const ComplexMatrix& a,
                                     const ComplexMatrix& b);

  /// Accumulating variants used by block assembly: c += a*b etc.
  static void add_mul(ComplexMatrix& c, const ComplexMatrix& a,
                      const ComplexMatrix& b);
  static void add_mul_adj_left(ComplexMatrix& c, const ComplexMatrix& a,
                               const ComplexMatrix& b);
  static void add_mul_adj_right(ComplexMatrix& c, const ComplexMatrix& a,
                                const ComplexMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<cx> data_;
};

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest |a_ij - b_ij|; matrices must have equal shape.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||a - b||_F; matrices must have equal shape.
double frobenius_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace sppt
