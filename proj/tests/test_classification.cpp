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

#include "sppt/basis_tools.hpp"
#include "sppt/classification.hpp"
#include "sppt/linalg.hpp"
#include "sppt/rng.hpp"

using namespace sppt;

namespace {

BlockFactor remark3_factor() {
  BlockFactor f(2, 2);
  f.x(0) = ComplexMatrix::from_rows({{2.0, 1.0}, {1.0, -1.0}});
  f.s(0, 1) = ComplexMatrix::from_rows({{0.0, 1.0}, {-1.0, 0.0}});
  f.x(1) = ComplexMatrix::identity(2);
  return f;
}

ComplexMatrix hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return ComplexMatrix::from_rows({{h, h}, {h, -h}});
}

}  // namespace

TEST_SUITE("classification") {

TEST_CASE("is_ppt: Werner fixtures and product states") {
  const auto [flag04, eig04] = is_ppt(werner(0.4));
  CHECK_FALSE(flag04);
  CHECK(eig04 == doctest::Approx(-0.1).epsilon(1e-12));

  const auto [flag075, eig075] = is_ppt(werner(0.75));
  CHECK(flag075);
  CHECK(eig075 == doctest::Approx(0.25).epsilon(1e-12));

  Rng rng(21);
  const ComplexMatrix sa = rng.density_matrix(2);
  const ComplexMatrix sb = rng.density_matrix(3);
  const BipartiteState prod = make_state(2, 3, kron(sa, sb), true);
  CHECK(is_ppt(prod).first);
}

TEST_CASE("is_sppt: normal coupling passes, Werner factors fail off 3/4") {
  CHECK(is_sppt(remark3_factor()).first);
  CHECK(is_sppt(remark3_factor()).second < 1e-12);

  CHECK_FALSE(is_sppt(block_cholesky(werner(0.6))).first);
  CHECK(is_sppt(block_cholesky(werner(0.75))).first);
}

TEST_CASE("is_super_sppt: normality of the single coupling when M = 2") {
  CHECK(is_super_sppt(remark3_factor()).first);

  // Werner factor at p=1 has a nilpotent nonzero coupling: residual is
  // |s|^2 sqrt(2) / max(1, |s|^2) with s = 1/sqrt(2)
  const auto [flag, residual] = is_super_sppt(block_cholesky(werner(1.0)));
  CHECK_FALSE(flag);
  CHECK(residual == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-10));

  for (std::uint64_t seed : {3ull, 4ull, 5ull}) {
    const auto [state, factor] = random_super_sppt(3, 3, seed);
    const auto [ssflag, ssres] = is_super_sppt(factor);
    CHECK(ssflag);
    CHECK(ssres <= 1e-10);
  }
}

TEST_CASE("classify: Werner at p=0.6 is PPT but not SPPT") {
  const Classification c = classify(werner(0.6));
  CHECK(c.ppt);
  CHECK_FALSE(c.sppt);
  CHECK_FALSE(c.super_sppt);
}

TEST_CASE("classify: Werner sweep is SPPT only at p = 3/4") {
  for (double p : {0.5, 0.6, 0.7, 0.75, 0.8, 0.9, 1.0}) {
    const Classification c = classify(werner(p));
    CHECK(c.ppt);
    CHECK(c.sppt == (p == 0.75));
    CHECK(c.super_sppt == (p == 0.75));
  }
}

TEST_CASE("classify: basis dependence of the normal-coupling fixture") {
  const BipartiteState rho = from_factor(remark3_factor());
  const Classification comp = classify(rho);
  CHECK(comp.sppt);
  CHECK(comp.ppt);

  const Classification had = classify(rho, hadamard());
  CHECK(had.ppt);  // PPT is basis independent
  CHECK_FALSE(had.sppt);
  CHECK(max_abs_diff(had.basis, hadamard()) == 0.0);
}

TEST_CASE("classify: CC states are super SPPT in arbitrary A-bases") {
  Rng rng(23);
  for (int rep = 0; rep < 5; ++rep) {
    const auto p = rng.probability_vector(6);
    ComplexMatrix joint(2, 3);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) joint(i, j) = p[i * 3 + j];
    const BipartiteState s =
        cc_state(joint, rng.haar_unitary(2), rng.haar_unitary(3));
    for (int b = 0; b < 5; ++b) {
      const Classification c = classify(s, rng.haar_unitary(2), 1e-8);
      CHECK(c.super_sppt);
    }
  }
}

TEST_CASE("classify: 2xN CQ states are super SPPT in arbitrary qubit "
          "bases") {
  Rng rng(25);
  for (int rep = 0; rep < 5; ++rep) {
    const auto probs = rng.probability_vector(2);
    const std::vector<ComplexMatrix> sigmas{rng.density_matrix(3),
                                            rng.density_matrix(3)};
    const BipartiteState s = cq_state(probs, sigmas, rng.haar_unitary(2));
    for (int b = 0; b < 5; ++b) {
      const Classification c = classify(s, rng.haar_unitary(2), 1e-8);
      CHECK(c.super_sppt);
    }
  }
}

TEST_CASE("classify: implication chain holds on random corpora") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Classification c =
        classify(random_density(2 + seed % 3, 2 + seed % 3, 300 + seed));
    if (c.super_sppt) CHECK(c.sppt);
    if (c.sppt) CHECK(c.ppt);
  }
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto [state, factor] = random_super_sppt(2 + seed % 3, 2, seed);
    const Classification c = classify(state);
    if (c.super_sppt) CHECK(c.sppt);
    if (c.sppt) CHECK(c.ppt);
  }
}

TEST_CASE("classify: scale invariance of verdicts") {
  const auto [state, factor] = random_super_sppt(3, 2, 41);
  ComplexMatrix scaled = state.matrix;
  scaled *= cx{7.3};
  const BipartiteState big{3, 2, scaled, false};
  const Classification a = classify(state);
  const Classification b = classify(big);
  CHECK(a.ppt == b.ppt);
  CHECK(a.sppt == b.sppt);
  CHECK(a.super_sppt == b.super_sppt);
  CHECK(a.sppt_residual == doctest::Approx(b.sppt_residual).epsilon(1e-9));
}

TEST_CASE("remark 2: with full-rank X_1 on a 2xN system, the SPPT flag "
          "equals normality of the coupling") {
  Rng rng(27);
  for (int rep = 0; rep < 6; ++rep) {
    const std::size_t n = 2 + rep % 3;
    BlockFactor f(2, n);
    // full-rank PSD diagonal blocks
    ComplexMatrix g = rng.gaussian_matrix(n, n);
    f.x(0) = ComplexMatrix::mul_adj_left(g, g) + ComplexMatrix::identity(n);
    g = rng.gaussian_matrix(n, n);
    f.x(1) = ComplexMatrix::mul_adj_left(g, g) + ComplexMatrix::identity(n);

    // normal coupling: unitary similarity of a diagonal
    const ComplexMatrix v = rng.haar_unitary(n);
    ComplexMatrix lambda(n, n);
    for (std::size_t d = 0; d < n; ++d) lambda(d, d) = rng.gaussian_cx();
    f.s(0, 1) = v * ComplexMatrix::mul_adj_right(lambda, v);
    CHECK(is_sppt(f).first);

    // generic coupling is not normal
    f.s(0, 1) = rng.gaussian_matrix(n, n);
    ComplexMatrix comm =
        ComplexMatrix::mul_adj_right(f.s(0, 1), f.s(0, 1));
    comm -= ComplexMatrix::mul_adj_left(f.s(0, 1), f.s(0, 1));
    REQUIRE(comm.frobenius_norm() > 1e-3);  // clearly non-normal draw
    CHECK_FALSE(is_sppt(f).first);
  }
}

TEST_CASE("gauge invariance: block-unitary gauges leave residuals and "
          "verdicts in place") {
  Rng rng(29);
  for (std::uint64_t seed : {50ull, 51ull, 52ull}) {
    const auto [state, factor] = random_super_sppt(3, 3, seed);

    BlockFactor gauged(3, 3);
    for (std::size_t k = 0; k < 3; ++k) {
      const ComplexMatrix w = rng.haar_unitary(3);
      gauged.x(k) = w * factor.x(k);
      for (std::size_t j = k + 1; j < 3; ++j)
        gauged.s(k, j) =
            ComplexMatrix::mul_adj_right(w * factor.s(k, j), w);
    }

    const auto [f1, r1] = is_sppt(factor);
    const auto [f2, r2] = is_sppt(gauged);
    CHECK(f1 == f2);
    CHECK(std::abs(r1 - r2) <= 1e-9);

    const auto [g1, q1] = is_super_sppt(factor);
    const auto [g2, q2] = is_super_sppt(gauged);
    CHECK(g1 == g2);
    CHECK(std::abs(q1 - q2) <= 1e-9);
  }
}

TEST_CASE("classify: rejects a non-unitary basis") {
  ComplexMatrix nu(2, 2);
  nu(0, 0) = 2.0;
  nu(1, 1) = 1.0;
  CHECK_THROWS_AS(classify(werner(0.6), nu), Error);
}

}  // TEST_SUITE
