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

#include "sppt/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "sppt/kernels.hpp"

namespace sppt {

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
  require(rows >= 1 && cols >= 1, ErrorKind::OutOfRange,
          "matrix dimensions must be >= 1");
}

void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          ErrorKind::DimensionMismatch, "matrix shapes differ");
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  check_dims(rows, cols);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cx>& entries) {
  ComplexMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  require(m.all_finite(), ErrorKind::OutOfRange, "non-finite matrix entry");
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<cx>> rows) {
  const std::size_t r = rows.size();
  require(r >= 1, ErrorKind::OutOfRange, "matrix dimensions must be >= 1");
  const std::size_t c = rows.begin()->size();
  ComplexMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    require(row.size() == c, ErrorKind::DimensionMismatch,
            "ragged initializer rows");
    std::size_t j = 0;
    for (const cx& v : row) m(i, j++) = v;
    ++i;
  }
  require(m.all_finite(), ErrorKind::OutOfRange, "non-finite matrix entry");
  return m;
}

ComplexMatrix ComplexMatrix::from_data(std::size_t rows, std::size_t cols,
                                       std::vector<cx> data) {
  check_dims(rows, cols);
  require(data.size() == rows * cols, ErrorKind::DimensionMismatch,
          "data length does not match rows*cols");
  ComplexMatrix m(rows, cols);
  m.data_ = std::move(data);
  require(m.all_finite(), ErrorKind::OutOfRange, "non-finite matrix entry");
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = std::conj(data_[i]);
  return out;
}

cx ComplexMatrix::trace() const {
  require(is_square(), ErrorKind::NotSquare, "trace of non-square matrix");
  cx t{};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  return std::sqrt(kernels::active().norm_sq(data_.data(), data_.size()));
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cx& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::hermitian_defect() const {
  require(is_square(), ErrorKind::NotSquare,
          "hermitian_defect of non-square matrix");
  double sum = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const cx d = (*this)(i, j) - std::conj((*this)(j, i));
      sum += std::norm(d);
    }
  }
  return std::sqrt(sum);
}

double ComplexMatrix::unitary_defect() const {
  ComplexMatrix g = mul_adj_left(*this, *this);
  for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
  return g.frobenius_norm();
}

bool ComplexMatrix::all_finite() const {
  for (const cx& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

ComplexMatrix ComplexMatrix::block(std::size_t i0, std::size_t j0,
                                   std::size_t r, std::size_t c) const {
  require(i0 + r <= rows_ && j0 + c <= cols_, ErrorKind::DimensionMismatch,
          "block exceeds matrix bounds");
  ComplexMatrix out(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) out(i, j) = (*this)(i0 + i, j0 + j);
  return out;
}

void ComplexMatrix::set_block(std::size_t i0, std::size_t j0,
                              const ComplexMatrix& m) {
  require(i0 + m.rows() <= rows_ && j0 + m.cols() <= cols_,
          ErrorKind::DimensionMismatch, "block exceeds matrix bounds");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      (*this)(i0 + i, j0 + j) = m(i, j);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  check_same_shape(*this, other);
  kernels::active().axpy(data_.data(), cx{1.0}, other.data(), data_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  check_same_shape(*this, other);
  kernels::active().axpy(data_.data(), cx{-1.0}, other.data(), data_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cx scalar) {
  for (cx& v : data_) v *= scalar;
  return *this;
}

ComplexMatrix ComplexMatrix::mul(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
  require(a.cols() == b.rows(), ErrorKind::DimensionMismatch,
          "inner dimensions differ in a*b");
  ComplexMatrix c(a.rows(), b.cols());
  kernels::active().mul_nn(a.data(), b.data(), c.data(), a.rows(), a.cols(),
                           b.cols());
  return c;
}

ComplexMatrix ComplexMatrix::mul_adj_left(const ComplexMatrix& a,
                                          const ComplexMatrix& b) {
  require(a.rows() == b.rows(), ErrorKind::DimensionMismatch,
          "inner dimensions differ in a^dagger*b");
  ComplexMatrix c(a.cols(), b.cols());
  kernels::active().mul_cn(a.data(), b.data(), c.data(), a.cols(), a.rows(),
                           b.cols());
  return c;
}

ComplexMatrix ComplexMatrix::mul_adj_right(const ComplexMatrix& a,
                                           const ComplexMatrix& b) {
  require(a.cols() == b.cols(), ErrorKind::DimensionMismatch,
          "inner dimensions differ in a*b^dagger");
  ComplexMatrix c(a.rows(), b.rows());
  kernels::active().mul_nc(a.data(), b.data(), c.data(), a.rows(), a.cols(),
                           b.rows());
  return c;
}

void ComplexMatrix::add_mul(ComplexMatrix& c, const ComplexMatrix& a,
                            const ComplexMatrix& b) {
  require(a.cols() == b.rows() && c.rows() == a.rows() && c.cols() == b.cols(),
          ErrorKind::DimensionMismatch, "shape mismatch in c += a*b");
  kernels::active().mul_nn(a.data(), b.data(), c.data(), a.rows(), a.cols(),
                           b.cols());
}

void ComplexMatrix::add_mul_adj_left(ComplexMatrix& c, const ComplexMatrix& a,
                                     const ComplexMatrix& b) {
  require(a.rows() == b.rows() && c.rows() == a.cols() && c.cols() == b.cols(),
          ErrorKind::DimensionMismatch, "shape mismatch in c += a^dagger*b");
  kernels::active().mul_cn(a.data(), b.data(), c.data(), a.cols(), a.rows(),
                           b.cols());
}

void ComplexMatrix::add_mul_adj_right(ComplexMatrix& c, const ComplexMatrix& a,
                                      const ComplexMatrix& b) {
  require(a.cols() == b.cols() && c.rows() == a.rows() && c.cols() == b.rows(),
          ErrorKind::DimensionMismatch, "shape mismatch in c += a*b^dagger");
  kernels::active().mul_nc(a.data(), b.data(), c.data(), a.rows(), a.cols(),
                           b.rows());
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cx w = a(i, j);
      if (w == cx{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = w * b(k, l);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double frobenius_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    sum += std::norm(a.data()[i] - b.data()[i]);
  return std::sqrt(sum);
}

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NotDensityMatrix: return "NotDensityMatrix";
    case ErrorKind::NotCommutingFamily: return "NotCommutingFamily";
    case ErrorKind::NotSuperSPPT: return "NotSuperSPPT";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidProbability: return "InvalidProbability";
    case ErrorKind::MalformedFactor: return "MalformedFactor";
    case ErrorKind::RangeViolation: return "RangeViolation";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::DiagonalizationFailure: return "DiagonalizationFailure";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace sppt
