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

#include "sppt/decomposition.hpp"

#include <algorithm>
#include <cmath>

#include "sppt/linalg.hpp"
#include "sppt/rng.hpp"

namespace sppt {

namespace {

/// Off-diagonal Frobenius mass of V^dagger S V.
double leakage(const ComplexMatrix& s, const ComplexMatrix& v) {
  const ComplexMatrix t = ComplexMatrix::mul_adj_left(v, s * v);
  double sum = 0.0;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j)
      if (i != j) sum += std::norm(t(i, j));
  return std::sqrt(sum);
}

ComplexMatrix random_hermitian_combination(
    const std::vector<ComplexMatrix>& family, Rng& rng) {
  const std::size_t n = family.front().rows();
  ComplexMatrix h(n, n);
  for (const ComplexMatrix& s : family) {
    const double alpha = rng.uniform(0.25, 1.0);
    const double beta = rng.uniform(0.25, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const cx sij = s(i, j);
        const cx sji_c = std::conj(s(j, i));
        // alpha (S + S^dagger) + beta i (S^dagger - S), both Hermitian
        h(i, j) += alpha * (sij + sji_c) + beta * cx{0.0, 1.0} * (sji_c - sij);
      }
    }
  }
  return h;
}

/// One simultaneous basis attempt: eigenbasis of a random combination,
/// with near-degenerate eigenvalue clusters refined recursively on the
/// restricted family.
ComplexMatrix simultaneous_basis(const std::vector<ComplexMatrix>& family,
                                 Rng& rng, int depth) {
  const std::size_t n = family.front().rows();
  if (n == 1 || depth > 8) return ComplexMatrix::identity(n);

  const ComplexMatrix h = random_hermitian_combination(family, rng);
  const EigenSystem eig = hermitian_eig(h);
  ComplexMatrix basis = eig.vectors;

  const double spread =
      std::max(eig.values.back() - eig.values.front(), 1e-300);
  const double gap_tol = 1e-7 * spread;

  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && eig.values[end] - eig.values[end - 1] <= gap_tol) ++end;
    const std::size_t width = end - start;
    if (width > 1 && width < n) {
      // restrict the family to the cluster subspace and recurse
      ComplexMatrix w(n, width);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < width; ++j) w(i, j) = basis(i, start + j);
      std::vector<ComplexMatrix> restricted;
      restricted.reserve(family.size());
      for (const ComplexMatrix& s : family)
        restricted.push_back(ComplexMatrix::mul_adj_left(w, s * w));
      const ComplexMatrix sub = simultaneous_basis(restricted, rng, depth + 1);
      const ComplexMatrix refined = w * sub;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < width; ++j)
          basis(i, start + j) = refined(i, j);
    }
    start = end;
  }
  return basis;
}

}  // namespace

ComplexMatrix JointSpectrum::projector(std::size_t l) const {
  const std::size_t n = vectors.rows();
  require(l < n, ErrorKind::OutOfRange, "projector index out of range");
  ComplexMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p(i, j) = vectors(i, l) * std::conj(vectors(j, l));
  return p;
}

JointSpectrum joint_eigenbasis(const std::vector<ComplexMatrix>& family,
                               double tol) {
  require(!family.empty(), ErrorKind::OutOfRange,
          "joint_eigenbasis needs a non-empty family");
  const std::size_t n = family.front().rows();
  for (const ComplexMatrix& s : family) {
    require(s.rows() == n && s.cols() == n, ErrorKind::DimensionMismatch,
            "family members must share one square shape");
  }

  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a; b < family.size(); ++b) {
      ComplexMatrix comm =
          ComplexMatrix::mul_adj_right(family[a], family[b]);
      comm -= ComplexMatrix::mul_adj_left(family[b], family[a]);
      const double scale = std::max(
          1.0, family[a].frobenius_norm() * family[b].frobenius_norm());
      require(comm.frobenius_norm() <= tol * scale,
              ErrorKind::NotCommutingFamily,
              "family is not commuting-normal within tolerance");
    }
  }

  Rng rng(0x6a1bcd2026u);  // fixed stream: deterministic results
  for (int attempt = 0; attempt < 8; ++attempt) {
    const ComplexMatrix basis = simultaneous_basis(family, rng, 0);
    bool ok = true;
    for (const ComplexMatrix& s : family) {
      if (leakage(s, basis) > tol * std::max(1.0, s.frobenius_norm())) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    JointSpectrum js;
    js.vectors = basis;
    js.eigenvalues.reserve(family.size());
    for (const ComplexMatrix& s : family) {
      const ComplexMatrix t = ComplexMatrix::mul_adj_left(basis, s * basis);
      std::vector<cx> diag(n);
      for (std::size_t l = 0; l < n; ++l) diag[l] = t(l, l);
      js.eigenvalues.push_back(std::move(diag));
    }
    return js;
  }
  throw Error(ErrorKind::DiagonalizationFailure,
              "no simultaneous eigenbasis found within the attempt budget");
}

SeparableDecomposition separable_decomposition(const BlockFactor& factor,
                                               double tol) {
  factor.validate();
  const auto [is_ss, ss_residual] = is_super_sppt(factor, tol);
  require(is_ss, ErrorKind::NotSuperSPPT,
          "factor does not satisfy the coupling-commutation condition");

  const std::size_t m = factor.dim_a();
  const std::size_t n = factor.dim_b();
  const BipartiteState rho = from_factor(factor);
  const double weight_floor = tol * rho.matrix.frobenius_norm();

  SeparableDecomposition out{m, n, {}};
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<ComplexMatrix> family;
    for (std::size_t i = k + 1; i < m; ++i) family.push_back(factor.s(k, i));

    ComplexMatrix vectors(n, n);
    std::vector<std::vector<cx>> lambda;
    if (!family.empty()) {
      JointSpectrum js = joint_eigenbasis(family, tol);
      js.row = k;
      vectors = js.vectors;
      lambda = std::move(js.eigenvalues);
    } else {
      // empty family (the last row): eigenprojectors of X_k^dagger X_k
      // keep the row's contribution |k><k| (x) X_k^dagger X_k pure-product
      const ComplexMatrix gram =
          ComplexMatrix::mul_adj_left(factor.x(k), factor.x(k));
      vectors = hermitian_eig(gram).vectors;
    }

    for (std::size_t l = 0; l < n; ++l) {
      // B side: v = X_k^dagger u_l, so v v^dagger = X_k^dagger P_l X_k
      std::vector<cx> v(n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i < n; ++i)
          v[r] += std::conj(factor.x(k)(i, r)) * vectors(i, l);
      double wb = 0.0;
      for (const cx& c : v) wb += std::norm(c);

      // A side: psi_k = 1, psi_i = conj(lambda^(ki)_l) for i > k
      std::vector<cx> psi(m);
      psi[k] = 1.0;
      double wa = 1.0;
      for (std::size_t i = k + 1; i < m; ++i) {
        psi[i] = std::conj(lambda[i - k - 1][l]);
        wa += std::norm(psi[i]);
      }

      const double weight = wa * wb;
      if (weight < weight_floor) continue;

      const double na = std::sqrt(wa);
      const double nb = std::sqrt(wb);
      for (cx& c : psi) c /= na;
      for (cx& c : v) c /= nb;
      out.terms.push_back(ProductTerm{weight, std::move(psi), std::move(v)});
    }
  }
  return out;
}

VerificationReport verify_decomposition(const SeparableDecomposition& decomp,
                                        const BipartiteState& rho,
                                        double tol) {
  require(decomp.dim_a == rho.dim_a && decomp.dim_b == rho.dim_b,
          ErrorKind::DimensionMismatch,
          "decomposition and state dimensions differ");
  const std::size_t m = rho.dim_a;
  const std::size_t n = rho.dim_b;

  VerificationReport report;
  report.term_count = decomp.terms.size();
  report.min_weight =
      decomp.terms.empty() ? 0.0 : decomp.terms.front().weight;

  ComplexMatrix sum(m * n, m * n);
  for (const ProductTerm& term : decomp.terms) {
    require(term.vec_a.size() == m && term.vec_b.size() == n,
            ErrorKind::DimensionMismatch, "product term vector length");
    report.min_weight = std::min(report.min_weight, term.weight);
    double norm_a = 0.0, norm_b = 0.0;
    for (const cx& c : term.vec_a) norm_a += std::norm(c);
    for (const cx& c : term.vec_b) norm_b += std::norm(c);
    report.max_norm_defect_a = std::max(report.max_norm_defect_a,
                                        std::abs(std::sqrt(norm_a) - 1.0));
    report.max_norm_defect_b = std::max(report.max_norm_defect_b,
                                        std::abs(std::sqrt(norm_b) - 1.0));
    for (std::size_t ia = 0; ia < m; ++ia) {
      for (std::size_t ja = 0; ja < m; ++ja) {
        const cx wa =
            term.weight * term.vec_a[ia] * std::conj(term.vec_a[ja]);
        if (wa == cx{}) continue;
        for (std::size_t ib = 0; ib < n; ++ib)
          for (std::size_t jb = 0; jb < n; ++jb)
            sum(ia * n + ib, ja * n + jb) +=
                wa * term.vec_b[ib] * std::conj(term.vec_b[jb]);
      }
    }
  }

  report.residual = frobenius_diff(sum, rho.matrix) /
                    std::max(rho.matrix.frobenius_norm(), 1e-300);
  report.passed = report.residual <= tol && report.min_weight >= 0.0;
  return report;
}

}  // namespace sppt
