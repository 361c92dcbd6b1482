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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "sppt/linalg.hpp"
#include "sppt/rng.hpp"

using namespace sppt;

namespace {

ComplexMatrix random_hermitian(Rng& rng, std::size_t n) {
  const ComplexMatrix g = rng.gaussian_matrix(n, n);
  ComplexMatrix h = g + g.adjoint();
  h *= cx{0.5};
  return h;
}

/// Random Hermitian PSD with the given eigenvalues.
ComplexMatrix psd_with_spectrum(Rng& rng, const std::vector<double>& eigs) {
  const ComplexMatrix u = rng.haar_unitary(eigs.size());
  ComplexMatrix scaled = u;
  for (std::size_t j = 0; j < eigs.size(); ++j)
    for (std::size_t i = 0; i < eigs.size(); ++i) scaled(i, j) *= eigs[j];
  return ComplexMatrix::mul_adj_right(scaled, u);
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("hermitian_eig: identity") {
  const auto eig = hermitian_eig(ComplexMatrix::identity(2));
  CHECK(eig.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eig.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eig.vectors.unitary_defect() < 1e-13);
}

TEST_CASE("hermitian_eig: already diagonal, sorted ascending") {
  const auto eig = hermitian_eig(ComplexMatrix::diagonal({{3.0}, {-1.0}}));
  CHECK(eig.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(eig.values[1] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eig: random 5x5 reconstruction and invariants") {
  Rng rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    const ComplexMatrix a = random_hermitian(rng, 5);
    const auto eig = hermitian_eig(a);
    const double norm = a.frobenius_norm();

    CHECK(frobenius_diff(eig.reconstruct(), a) < 1e-9 * norm);
    CHECK(eig.vectors.unitary_defect() < 1e-10 * 5);

    // A V = V diag(values)
    ComplexMatrix av = a * eig.vectors;
    ComplexMatrix vd = eig.vectors;
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t i = 0; i < 5; ++i) vd(i, j) *= eig.values[j];
    CHECK(frobenius_diff(av, vd) < 1e-9 * norm);

    double sum = 0.0;
    for (double v : eig.values) sum += v;
    CHECK(std::abs(sum - a.trace().real()) < 1e-9 * std::max(norm, 1.0));

    for (std::size_t i = 1; i < eig.values.size(); ++i)
      CHECK(eig.values[i - 1] <= eig.values[i]);
  }
}

TEST_CASE("hermitian_eig: larger matrices stay accurate") {
  Rng rng(11);
  for (std::size_t n : {16, 40, 100}) {
    const ComplexMatrix a = random_hermitian(rng, n);
    const auto eig = hermitian_eig(a);
    CHECK(frobenius_diff(eig.reconstruct(), a) < 1e-10 * a.frobenius_norm());
    CHECK(eig.vectors.unitary_defect() < 1e-10 * static_cast<double>(n));
  }
}

TEST_CASE("hermitian_eig: rejects non-square and non-Hermitian") {
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix(2, 3)), Error);
  ComplexMatrix bad = ComplexMatrix::from_rows({{1.0, 2.0}, {3.0, 4.0}});
  CHECK_THROWS_AS(hermitian_eig(bad), Error);
  try {
    hermitian_eig(bad);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHermitian);
  }
}

TEST_CASE("psd_sqrt: fixed points and diagonal roots") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(frobenius_diff(psd_sqrt(i2), i2) < 1e-14);

  const auto r = psd_sqrt(ComplexMatrix::diagonal({{4.0}, {9.0}}));
  CHECK(std::abs(r(0, 0) - cx{2.0}) < 1e-13);
  CHECK(std::abs(r(1, 1) - cx{3.0}) < 1e-13);
  CHECK(std::abs(r(0, 1)) < 1e-14);
}

TEST_CASE("psd_sqrt: Werner rho_11 block at p=0.6") {
  // diag(p/3, (3-2p)/6) at p=0.6 -> diag(sqrt(0.2), sqrt(0.3))
  const auto r = psd_sqrt(ComplexMatrix::diagonal({{0.2}, {0.3}}));
  CHECK(std::abs(r(0, 0) - cx{std::sqrt(0.2)}) < 1e-14);
  CHECK(std::abs(r(1, 1) - cx{std::sqrt(0.3)}) < 1e-14);
}

TEST_CASE("psd_sqrt: squares back to the input, clamps tiny negatives") {
  Rng rng(13);
  for (int rep = 0; rep < 8; ++rep) {
    const ComplexMatrix a = psd_with_spectrum(rng, {0.0, 0.1, 1.0, 2.5});
    const ComplexMatrix b = psd_sqrt(a);
    CHECK(frobenius_diff(b * b, a) < 1e-9 * a.frobenius_norm());
    CHECK(b.hermitian_defect() < 1e-12);
  }
  // an eigenvalue inside [-tol*norm, 0) is clamped, not rejected
  Rng rng2(14);
  ComplexMatrix near0 = psd_with_spectrum(rng2, {1.0, 1.0});
  const ComplexMatrix u = near0;  // exactly PSD
  const ComplexMatrix almost =
      psd_with_spectrum(rng2, {-1e-12, 0.5, 1.0});
  const ComplexMatrix s = psd_sqrt(almost);
  CHECK(min_eigenvalue(s) > -1e-13);

  CHECK_THROWS_AS(psd_sqrt(ComplexMatrix::diagonal({{-1.0}, {1.0}})), Error);
}

TEST_CASE("pseudo_inverse: diagonal and identity fixtures") {
  const auto p = pseudo_inverse(ComplexMatrix::diagonal({{2.0}, {0.0}}));
  CHECK(std::abs(p(0, 0) - cx{0.5}) < 1e-14);
  CHECK(std::abs(p(1, 1)) < 1e-14);

  const ComplexMatrix i3 = ComplexMatrix::identity(3);
  CHECK(frobenius_diff(pseudo_inverse(i3), i3) < 1e-13);
}

TEST_CASE("pseudo_inverse: Penrose identities on rank-deficient PSD") {
  Rng rng(17);
  for (int rank = 0; rank <= 4; ++rank) {
    std::vector<double> eigs(4, 0.0);
    for (int i = 0; i < rank; ++i) eigs[i] = rng.uniform(0.5, 2.0);
    const ComplexMatrix a = psd_with_spectrum(rng, eigs);
    const ComplexMatrix p = pseudo_inverse(a);
    const double scale = std::max(a.frobenius_norm(), 1.0);

    CHECK(frobenius_diff(a * p * a, a) < 1e-9 * scale);
    CHECK(frobenius_diff(p * a * p, p) < 1e-9 * scale);
    const ComplexMatrix ap = a * p;
    const ComplexMatrix pa = p * a;
    CHECK(frobenius_diff(ap, ap.adjoint()) < 1e-9 * scale);
    CHECK(frobenius_diff(pa, pa.adjoint()) < 1e-9 * scale);
  }
}

TEST_CASE("partial_transpose: identity is a fixed point") {
  ComplexMatrix id = ComplexMatrix::identity(6);
  id *= cx{1.0 / 6.0};
  CHECK(frobenius_diff(partial_transpose(id, 2, 3), id) == 0.0);
  CHECK(frobenius_diff(partial_transpose(id, 3, 2), id) == 0.0);
}

TEST_CASE("partial_transpose: involution preserving trace and norm") {
  Rng rng(19);
  const ComplexMatrix a = rng.gaussian_matrix(6, 6);
  const ComplexMatrix pt = partial_transpose(a, 2, 3);
  CHECK(frobenius_diff(partial_transpose(pt, 2, 3), a) == 0.0);
  CHECK(std::abs(pt.trace() - a.trace()) < 1e-14);
  CHECK(pt.frobenius_norm() == doctest::Approx(a.frobenius_norm()));
  CHECK_THROWS_AS(partial_transpose(a, 2, 2), Error);
}

}  // TEST_SUITE
