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
#include "sppt/linalg.hpp"
#include "sppt/rng.hpp"

using namespace sppt;

namespace {

BipartiteState remark3_state() {
  BlockFactor f(2, 2);
  f.x(0) = ComplexMatrix::from_rows({{2.0, 1.0}, {1.0, -1.0}});
  f.s(0, 1) = ComplexMatrix::from_rows({{0.0, 1.0}, {-1.0, 0.0}});
  f.x(1) = ComplexMatrix::identity(2);
  return from_factor(f);
}

ComplexMatrix hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return ComplexMatrix::from_rows({{h, h}, {h, -h}});
}

}  // namespace

TEST_SUITE("basis_tools") {

TEST_CASE("local_unitary_a: identity leaves the state alone; spectrum is "
          "preserved") {
  const BipartiteState s = remark3_state();
  const BipartiteState t = local_unitary_a(s, ComplexMatrix::identity(2));
  CHECK(max_abs_diff(s.matrix, t.matrix) <= 1e-14 * s.matrix.max_abs());

  Rng rng(71);
  const ComplexMatrix u = rng.haar_unitary(2);
  const BipartiteState r = local_unitary_a(s, u);
  const auto ev_a = hermitian_eig(s.matrix).values;
  const auto ev_b = hermitian_eig(r.matrix).values;
  for (std::size_t i = 0; i < ev_a.size(); ++i)
    CHECK(ev_a[i] == doctest::Approx(ev_b[i]).epsilon(1e-10));
}

TEST_CASE("local_unitary_a: Hadamard breaks the factorization verdict but "
          "not positivity of the partial transpose") {
  const BipartiteState s = remark3_state();
  REQUIRE(classify(s).sppt);

  const BipartiteState t = local_unitary_a(s, hadamard());
  const Classification c = classify(t);
  CHECK_FALSE(c.sppt);
  CHECK(c.ppt);  // ppt verdict is invariant under local unitaries
}

TEST_CASE("local_unitary_b: identity; A-then-B equals B-then-A") {
  Rng rng(73);
  const BipartiteState s = random_density(2, 3, 99);
  CHECK(max_abs_diff(
            local_unitary_b(s, ComplexMatrix::identity(3)).matrix,
            s.matrix) <= 1e-15);

  const ComplexMatrix ua = rng.haar_unitary(2);
  const ComplexMatrix ub = rng.haar_unitary(3);
  const BipartiteState ab = local_unitary_b(local_unitary_a(s, ua), ub);
  const BipartiteState ba = local_unitary_a(local_unitary_b(s, ub), ua);
  CHECK(max_abs_diff(ab.matrix, ba.matrix) <= 1e-13);
}

TEST_CASE("local unitaries: dimension and unitarity validation") {
  const BipartiteState s = random_density(2, 3, 100);
  CHECK_THROWS_AS(local_unitary_a(s, ComplexMatrix::identity(3)), Error);
  CHECK_THROWS_AS(local_unitary_b(s, ComplexMatrix::identity(2)), Error);
  ComplexMatrix skew(2, 2);
  skew(0, 0) = 2.0;
  skew(1, 1) = 1.0;
  CHECK_THROWS_AS(local_unitary_a(s, skew), Error);
}

TEST_CASE("werner states are invariant under U (x) U") {
  Rng rng(75);
  const BipartiteState w = werner(0.6);
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix u = rng.haar_unitary(2);
    const BipartiteState t = local_unitary_b(local_unitary_a(w, u), u);
    worst = std::max(worst, max_abs_diff(t.matrix, w.matrix));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("random_basis_search: CC states hit the target immediately") {
  Rng rng(77);
  ComplexMatrix joint(2, 2);
  const auto p = rng.probability_vector(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) joint(i, j) = p[i * 2 + j];
  const BipartiteState s =
      cc_state(joint, rng.haar_unitary(2), rng.haar_unitary(2));

  const BasisSearchResult r =
      random_basis_search(s, 10, 1e-8, 123, SearchTarget::kSuperSppt);
  CHECK(r.found());
  CHECK(r.trial == 0);
  CHECK(r.classification->super_sppt);
}

TEST_CASE("random_basis_search: werner(0.75) is SPPT in the first basis "
          "tried; werner(0.6) never is") {
  const BasisSearchResult hit =
      random_basis_search(werner(0.75), 5, 1e-9, 7, SearchTarget::kSppt);
  CHECK(hit.found());
  CHECK(hit.trial == 0);

  const BasisSearchResult miss =
      random_basis_search(werner(0.6), 200, 1e-9, 7, SearchTarget::kSppt);
  CHECK_FALSE(miss.found());
  CHECK(miss.trials_run == 200);
  CHECK(miss.best_residual > 1e-9);  // diagnostics carry the best attempt
}

TEST_CASE("U (x) U invariance keeps werner(0.9) off the SPPT set in 50 "
          "sampled bases") {
  const BasisSearchResult miss =
      random_basis_search(werner(0.9), 50, 1e-9, 13, SearchTarget::kSppt);
  CHECK_FALSE(miss.found());
}

TEST_CASE("random_basis_search: deterministic and self-certifying") {
  Rng rng(79);
  ComplexMatrix joint(2, 3);
  const auto p = rng.probability_vector(6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) joint(i, j) = p[i * 3 + j];
  const BipartiteState s =
      cc_state(joint, rng.haar_unitary(2), rng.haar_unitary(3));

  const BasisSearchResult a =
      random_basis_search(s, 8, 1e-8, 555, SearchTarget::kSppt);
  const BasisSearchResult b =
      random_basis_search(s, 8, 1e-8, 555, SearchTarget::kSppt);
  REQUIRE(a.found());
  REQUIRE(b.found());
  CHECK(max_abs_diff(*a.basis, *b.basis) == 0.0);

  // re-running classify on the returned basis reproduces the verdict
  const Classification again = classify(s, *a.basis, 1e-8);
  CHECK(again.sppt == a.classification->sppt);
  CHECK(again.sppt_residual ==
        doctest::Approx(a.classification->sppt_residual).epsilon(1e-12));
}

}  // TEST_SUITE
