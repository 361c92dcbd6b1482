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

#include "sppt/state.hpp"

#include <algorithm>
#include <cmath>

#include "sppt/linalg.hpp"
#include "sppt/rng.hpp"

namespace sppt {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kPsdTol = 1e-9;
constexpr double kTraceTol = 1e-10;

void check_unitary(const ComplexMatrix& u, std::size_t dim,
                   const char* what) {
  require(u.rows() == dim && u.cols() == dim, ErrorKind::DimensionMismatch,
          std::string(what) + ": wrong dimensions");
  require(u.unitary_defect() <= 1e-10 * static_cast<double>(dim),
          ErrorKind::NotUnitary, std::string(what) + ": not unitary");
}

}  // namespace

ComplexMatrix BipartiteState::block(std::size_t i, std::size_t j) const {
  return matrix.block(i * dim_b, j * dim_b, dim_b, dim_b);
}

BipartiteState make_state(std::size_t dim_a, std::size_t dim_b,
                          ComplexMatrix matrix, bool normalized) {
  require(dim_a >= 1 && dim_b >= 1, ErrorKind::OutOfRange,
          "state dimensions must be >= 1");
  const std::size_t dim = dim_a * dim_b;
  require(matrix.rows() == dim && matrix.cols() == dim,
          ErrorKind::DimensionMismatch, "state matrix must be MN x MN");
  require(matrix.all_finite(), ErrorKind::OutOfRange,
          "non-finite state entry");
  const double norm = matrix.frobenius_norm();
  require(matrix.hermitian_defect() <= kHermTol * std::max(norm, 1e-300),
          ErrorKind::NotHermitian, "state matrix is not Hermitian");
  require(min_eigenvalue(matrix) >= -kPsdTol * std::max(norm, 1e-300),
          ErrorKind::NotPSD, "state matrix is not PSD");
  if (normalized) {
    require(std::abs(matrix.trace() - cx{1.0}) <= kTraceTol,
            ErrorKind::NotDensityMatrix,
            "normalized state must have unit trace");
  }
  return BipartiteState{dim_a, dim_b, std::move(matrix), normalized};
}

BipartiteState normalize(const BipartiteState& state) {
  const double tr = state.matrix.trace().real();
  require(tr > 0.0, ErrorKind::NotDensityMatrix,
          "cannot normalize a traceless operator");
  ComplexMatrix m = state.matrix;
  m *= cx{1.0 / tr};
  return BipartiteState{state.dim_a, state.dim_b, std::move(m), true};
}

BipartiteState werner(double p) {
  require(p >= 0.0 && p <= 1.0, ErrorKind::OutOfRange,
          "werner parameter must lie in [0, 1]");
  ComplexMatrix w(4, 4);
  const double a = 2.0 * p / 6.0;
  const double b = (3.0 - 2.0 * p) / 6.0;
  const double c = (4.0 * p - 3.0) / 6.0;
  w(0, 0) = a;
  w(1, 1) = b;
  w(2, 2) = b;
  w(3, 3) = a;
  w(1, 2) = c;
  w(2, 1) = c;
  return BipartiteState{2, 2, std::move(w), true};
}

BipartiteState cq_state(const std::vector<double>& probs,
                        const std::vector<ComplexMatrix>& sigmas,
                        const ComplexMatrix& basis_a) {
  const std::size_t m = probs.size();
  require(m >= 1 && sigmas.size() == m, ErrorKind::DimensionMismatch,
          "need one sigma per probability");
  double sum = 0.0;
  for (double p : probs) {
    require(p >= 0.0, ErrorKind::InvalidProbability,
            "probabilities must be nonnegative");
    sum += p;
  }
  require(std::abs(sum - 1.0) <= 1e-10, ErrorKind::InvalidProbability,
          "probabilities must sum to 1");
  check_unitary(basis_a, m, "basis_a");

  const std::size_t n = sigmas.front().rows();
  for (const ComplexMatrix& sigma : sigmas) {
    require(sigma.rows() == n && sigma.cols() == n,
            ErrorKind::DimensionMismatch, "sigmas must share one dimension");
    const double snorm = std::max(sigma.frobenius_norm(), 1e-300);
    const bool ok = sigma.hermitian_defect() <= kHermTol * snorm &&
                    min_eigenvalue(sigma) >= -kPsdTol * snorm &&
                    std::abs(sigma.trace() - cx{1.0}) <= 1e-9;
    require(ok, ErrorKind::NotDensityMatrix,
            "each sigma must be a density matrix");
  }

  ComplexMatrix rho(m * n, m * n);
  for (std::size_t t = 0; t < m; ++t) {
    if (probs[t] == 0.0) continue;
    // |e_t><e_t| from column t of basis_a
    ComplexMatrix proj(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        proj(i, j) = probs[t] * basis_a(i, t) * std::conj(basis_a(j, t));
    rho += kron(proj, sigmas[t]);
  }
  return make_state(m, n, std::move(rho), true);
}

BipartiteState cc_state(const ComplexMatrix& joint,
                        const ComplexMatrix& basis_a,
                        const ComplexMatrix& basis_b) {
  const std::size_t m = joint.rows();
  const std::size_t n = joint.cols();
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      require(std::abs(joint(i, j).imag()) == 0.0,
              ErrorKind::InvalidProbability,
              "joint probability table must be real");
      require(joint(i, j).real() >= 0.0, ErrorKind::InvalidProbability,
              "joint probabilities must be nonnegative");
      sum += joint(i, j).real();
    }
  }
  require(std::abs(sum - 1.0) <= 1e-10, ErrorKind::InvalidProbability,
          "joint probabilities must total 1");
  check_unitary(basis_a, m, "basis_a");
  check_unitary(basis_b, n, "basis_b");

  ComplexMatrix rho(m * n, m * n);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      const double p = joint(s, t).real();
      if (p == 0.0) continue;
      for (std::size_t bi = 0; bi < m; ++bi) {
        for (std::size_t bj = 0; bj < m; ++bj) {
          const cx wa = basis_a(bi, s) * std::conj(basis_a(bj, s));
          if (wa == cx{}) continue;
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              rho(bi * n + i, bj * n + j) +=
                  p * wa * basis_b(i, t) * std::conj(basis_b(j, t));
            }
          }
        }
      }
    }
  }
  return make_state(m, n, std::move(rho), true);
}

BipartiteState from_factor(const BlockFactor& factor) {
  factor.validate();
  const std::size_t m = factor.dim_a();
  const std::size_t n = factor.dim_b();
  ComplexMatrix rho(m * n, m * n);

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      ComplexMatrix block(n, n);
      for (std::size_t k = 0; k <= i; ++k) {
        // (S_ki X_k)^dagger (S_kj X_k), with S_kk = I implicit
        const ComplexMatrix left =
            k == i ? factor.x(k) : factor.s(k, i) * factor.x(k);
        const ComplexMatrix right =
            k == j ? factor.x(k) : factor.s(k, j) * factor.x(k);
        ComplexMatrix::add_mul_adj_left(block, left, right);
      }
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          rho(i * n + r, j * n + c) = block(r, c);
          if (i != j) rho(j * n + c, i * n + r) = std::conj(block(r, c));
        }
      }
    }
  }
  // exact hermiticity of the diagonal blocks
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      rho(i * n + r, i * n + r) = rho(i * n + r, i * n + r).real();
      for (std::size_t c = r + 1; c < n; ++c) {
        const cx v =
            0.5 * (rho(i * n + r, i * n + c) +
                   std::conj(rho(i * n + c, i * n + r)));
        rho(i * n + r, i * n + c) = v;
        rho(i * n + c, i * n + r) = std::conj(v);
      }
    }
  }
  return BipartiteState{m, n, std::move(rho), false};
}

std::pair<BipartiteState, BlockFactor> random_super_sppt(std::size_t dim_a,
                                                         std::size_t dim_b,
                                                         std::uint64_t seed) {
  require(dim_a >= 2 && dim_b >= 1, ErrorKind::OutOfRange,
          "random_super_sppt needs M >= 2, N >= 1");
  Rng rng(seed);
  BlockFactor factor(dim_a, dim_b);

  bool any_nonzero = false;
  for (std::size_t k = 0; k < dim_a; ++k) {
    // One eigenbasis per row: S_ki = V_k Lambda_ki V_k^dagger commute and
    // are normal for every diagonal Lambda, which is the coupling
    // condition by construction. X_k is drawn in the same eigenbasis so
    // that its kernel (eigenvalues are zeroed with probability 1/4, mixing
    // full- and deficient-rank blocks) never cuts a coupling in half:
    // states built this way stay canonically factorizable at any rank.
    const ComplexMatrix vk = rng.haar_unitary(dim_b);

    std::vector<double> spec(dim_b);
    for (double& v : spec) {
      v = rng.uniform() < 0.25 ? 0.0 : rng.uniform(0.3, 1.5);
      if (v != 0.0) any_nonzero = true;
    }
    ComplexMatrix scaled = vk;
    for (std::size_t j = 0; j < dim_b; ++j)
      for (std::size_t i = 0; i < dim_b; ++i) scaled(i, j) *= spec[j];
    factor.x(k) = ComplexMatrix::mul_adj_right(scaled, vk);

    for (std::size_t i = k + 1; i < dim_a; ++i) {
      ComplexMatrix vl = vk;
      for (std::size_t j = 0; j < dim_b; ++j) {
        const cx lambda{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        for (std::size_t r = 0; r < dim_b; ++r) vl(r, j) *= lambda;
      }
      factor.s(k, i) = ComplexMatrix::mul_adj_right(vl, vk);
    }
  }
  if (!any_nonzero) {
    // keep the state nonzero: give the first block a unit eigenvalue
    factor.x(0) = ComplexMatrix::identity(dim_b);
  }
  return {from_factor(factor), factor};
}

BipartiteState random_density(std::size_t dim_a, std::size_t dim_b,
                              std::uint64_t seed) {
  require(dim_a >= 1 && dim_b >= 1, ErrorKind::OutOfRange,
          "state dimensions must be >= 1");
  Rng rng(seed);
  return BipartiteState{dim_a, dim_b, rng.density_matrix(dim_a * dim_b),
                        true};
}

}  // namespace sppt
