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

#include "sppt/basis_tools.hpp"

#include <limits>

#include "sppt/rng.hpp"

namespace sppt {

namespace {

BipartiteState conjugate_by(const BipartiteState& rho,
                            const ComplexMatrix& big) {
  ComplexMatrix out = big * ComplexMatrix::mul_adj_right(rho.matrix, big);
  // keep hermiticity exact under round-off
  for (std::size_t r = 0; r < out.rows(); ++r) {
    out(r, r) = out(r, r).real();
    for (std::size_t c = r + 1; c < out.cols(); ++c) {
      const cx v = 0.5 * (out(r, c) + std::conj(out(c, r)));
      out(r, c) = v;
      out(c, r) = std::conj(v);
    }
  }
  return BipartiteState{rho.dim_a, rho.dim_b, std::move(out), rho.normalized};
}

void check_unitary(const ComplexMatrix& u, std::size_t dim) {
  require(u.rows() == dim && u.cols() == dim, ErrorKind::DimensionMismatch,
          "unitary has wrong dimensions for this side");
  require(u.unitary_defect() <= 1e-10 * static_cast<double>(dim),
          ErrorKind::NotUnitary, "matrix is not unitary within 1e-10");
}

}  // namespace

BipartiteState local_unitary_a(const BipartiteState& rho,
                               const ComplexMatrix& u) {
  check_unitary(u, rho.dim_a);
  return conjugate_by(rho, kron(u, ComplexMatrix::identity(rho.dim_b)));
}

BipartiteState local_unitary_b(const BipartiteState& rho,
                               const ComplexMatrix& u) {
  check_unitary(u, rho.dim_b);
  return conjugate_by(rho, kron(ComplexMatrix::identity(rho.dim_a), u));
}

BasisSearchResult random_basis_search(const BipartiteState& rho,
                                      std::size_t trials, double tol,
                                      std::uint64_t seed,
                                      SearchTarget target) {
  require(trials >= 1, ErrorKind::OutOfRange, "need at least one trial");
  Rng rng(seed);

  BasisSearchResult result;
  result.best_residual = std::numeric_limits<double>::infinity();
  result.best_basis = ComplexMatrix::identity(rho.dim_a);

  for (std::size_t t = 0; t < trials; ++t) {
    const ComplexMatrix u = rng.haar_unitary(rho.dim_a);
    const Classification c = classify(rho, u, tol);
    const double residual = target == SearchTarget::kSppt
                                ? c.sppt_residual
                                : c.ssppt_residual;
    const bool hit = target == SearchTarget::kSppt ? c.sppt : c.super_sppt;
    result.trials_run = t + 1;
    if (residual < result.best_residual) {
      result.best_residual = residual;
      result.best_basis = u;
    }
    if (hit) {
      result.basis = u;
      result.classification = c;
      result.trial = t;
      break;
    }
  }
  return result;
}

}  // namespace sppt
