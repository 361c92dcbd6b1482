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

#include "sppt/json_io.hpp"
#include "sppt/rng.hpp"

using namespace sppt;
using nlohmann::json;

TEST_SUITE("json_io") {

TEST_CASE("matrix round trip is bit exact, including the decimal form") {
  Rng rng(81);
  const ComplexMatrix m = rng.gaussian_matrix(3, 4);
  const json j = to_json(m);
  const ComplexMatrix back = matrix_from_json(parse_json(j.dump()));
  REQUIRE(back.rows() == m.rows());
  REQUIRE(back.cols() == m.cols());
  for (std::size_t i = 0; i < m.size(); ++i)
    CHECK(back.data()[i] == m.data()[i]);  // exact doubles
  CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("state round trip preserves flags and exact entries") {
  const auto [state, factor] = random_super_sppt(3, 2, 17);
  const json j = to_json(state);
  const BipartiteState back = state_from_json(parse_json(j.dump()));
  CHECK(back.dim_a == state.dim_a);
  CHECK(back.dim_b == state.dim_b);
  CHECK(back.normalized == state.normalized);
  CHECK(max_abs_diff(back.matrix, state.matrix) == 0.0);
  CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("factor round trip keeps every block and the recorded residual") {
  const BipartiteState s = random_density(3, 2, 23);
  const BlockFactor f = block_cholesky(s);
  const json j = to_json(f);
  const BlockFactor back = factor_from_json(parse_json(j.dump()));
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(max_abs_diff(back.x(k), f.x(k)) == 0.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t jj = i + 1; jj < 3; ++jj)
      CHECK(max_abs_diff(back.s(i, jj), f.s(i, jj)) == 0.0);
  CHECK(back.reconstruction_residual() == f.reconstruction_residual());
  CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("decomposition round trip") {
  const auto [state, factor] = random_super_sppt(2, 3, 29);
  const SeparableDecomposition d = separable_decomposition(factor);
  const json j = to_json(d);
  const SeparableDecomposition back =
      decomposition_from_json(parse_json(j.dump()));
  REQUIRE(back.terms.size() == d.terms.size());
  for (std::size_t t = 0; t < d.terms.size(); ++t) {
    CHECK(back.terms[t].weight == d.terms[t].weight);
    CHECK(back.terms[t].vec_a == d.terms[t].vec_a);
    CHECK(back.terms[t].vec_b == d.terms[t].vec_b);
  }
  CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("classification serializes all verdict fields") {
  const Classification c = classify(werner(0.75));
  const json j = to_json(c);
  CHECK(j.at("ppt").get<bool>());
  CHECK(j.at("sppt").get<bool>());
  CHECK(j.at("super_sppt").get<bool>());
  CHECK(j.at("tol").get<double>() == kDefaultTol);
  CHECK(j.contains("basis"));
  CHECK(j.at("diagnostics").contains("sppt_marginal"));
}

TEST_CASE("parser rejects malformed documents with ParseError") {
  CHECK_THROWS_AS(parse_json("{not json"), Error);
  CHECK_THROWS_AS(matrix_from_json(parse_json("{\"rows\":2,\"cols\":2}")),
                  Error);
  CHECK_THROWS_AS(
      matrix_from_json(parse_json(
          "{\"rows\":2,\"cols\":2,\"data\":[[0,0],[0,0],[0,0]]}")),
      Error);
  // a parsed state must still satisfy the state invariants
  const json bad = parse_json(
      "{\"dim_a\":1,\"dim_b\":2,\"normalized\":false,\"matrix\":"
      "{\"rows\":2,\"cols\":2,\"data\":[[1,0],[0,0],[0,0],[-1,0]]}}");
  CHECK_THROWS_AS(state_from_json(bad), Error);
}

}  // TEST_SUITE
