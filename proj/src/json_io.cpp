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

#include "sppt/json_io.hpp"

namespace sppt {

using nlohmann::json;

namespace {

json complex_pair(const cx& v) { return json::array({v.real(), v.imag()}); }

cx complex_from(const json& j) {
  require(j.is_array() && j.size() == 2 && j[0].is_number() &&
              j[1].is_number(),
          ErrorKind::ParseError, "complex entries are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

const json& field(const json& j, const char* name) {
  require(j.is_object() && j.contains(name), ErrorKind::ParseError,
          std::string("missing field '") + name + "'");
  return j.at(name);
}

std::size_t count_field(const json& j, const char* name) {
  const json& f = field(j, name);
  require(f.is_number_unsigned() && f.get<std::uint64_t>() >= 1,
          ErrorKind::ParseError,
          std::string("field '") + name + "' must be a positive count");
  return f.get<std::size_t>();
}

std::vector<cx> vector_from_json(const json& j, const char* what) {
  require(j.is_array() && !j.empty(), ErrorKind::ParseError,
          std::string(what) + " must be a non-empty array");
  std::vector<cx> out;
  out.reserve(j.size());
  for (const json& e : j) out.push_back(complex_from(e));
  return out;
}

json vector_to_json(const std::vector<cx>& v) {
  json out = json::array();
  for (const cx& c : v) out.push_back(complex_pair(c));
  return out;
}

}  // namespace

json to_json(const ComplexMatrix& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.size(); ++i)
    data.push_back(complex_pair(m.data()[i]));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const std::size_t rows = count_field(j, "rows");
  const std::size_t cols = count_field(j, "cols");
  const json& data = field(j, "data");
  require(data.is_array() && data.size() == rows * cols,
          ErrorKind::ParseError, "matrix data length must be rows*cols");
  std::vector<cx> entries;
  entries.reserve(rows * cols);
  for (const json& e : data) entries.push_back(complex_from(e));
  return ComplexMatrix::from_data(rows, cols, std::move(entries));
}

json to_json(const BipartiteState& s) {
  return json{{"dim_a", s.dim_a},
              {"dim_b", s.dim_b},
              {"normalized", s.normalized},
              {"matrix", to_json(s.matrix)}};
}

BipartiteState state_from_json(const json& j) {
  const std::size_t dim_a = count_field(j, "dim_a");
  const std::size_t dim_b = count_field(j, "dim_b");
  const json& norm = field(j, "normalized");
  require(norm.is_boolean(), ErrorKind::ParseError,
          "'normalized' must be a boolean");
  return make_state(dim_a, dim_b, matrix_from_json(field(j, "matrix")),
                    norm.get<bool>());
}

json to_json(const BlockFactor& f) {
  json x = json::array();
  for (std::size_t k = 0; k < f.dim_a(); ++k) x.push_back(to_json(f.x(k)));
  json s = json::array();
  for (std::size_t i = 0; i < f.dim_a(); ++i) {
    for (std::size_t j = i + 1; j < f.dim_a(); ++j) {
      s.push_back(json{
          {"i", i + 1}, {"j", j + 1}, {"matrix", to_json(f.s(i, j))}});
    }
  }
  return json{{"dim_a", f.dim_a()},
              {"dim_b", f.dim_b()},
              {"x", x},
              {"s", s},
              {"basis", to_json(f.basis())},
              {"reconstruction_residual", f.reconstruction_residual()}};
}

BlockFactor factor_from_json(const json& j) {
  const std::size_t dim_a = count_field(j, "dim_a");
  const std::size_t dim_b = count_field(j, "dim_b");
  BlockFactor f(dim_a, dim_b);

  const json& x = field(j, "x");
  require(x.is_array() && x.size() == dim_a, ErrorKind::ParseError,
          "factor needs exactly M diagonal blocks");
  for (std::size_t k = 0; k < dim_a; ++k) f.x(k) = matrix_from_json(x[k]);

  const json& s = field(j, "s");
  require(s.is_array() && s.size() == dim_a * (dim_a - 1) / 2,
          ErrorKind::ParseError, "factor needs M(M-1)/2 coupling blocks");
  for (const json& entry : s) {
    const std::size_t i = count_field(entry, "i");
    const std::size_t jj = count_field(entry, "j");
    require(i >= 1 && i < jj && jj <= dim_a, ErrorKind::ParseError,
            "coupling indices must satisfy 1 <= i < j <= M");
    f.s(i - 1, jj - 1) = matrix_from_json(field(entry, "matrix"));
  }
  if (j.contains("basis")) f.set_basis(matrix_from_json(j.at("basis")));
  if (j.contains("reconstruction_residual")) {
    const json& r = j.at("reconstruction_residual");
    require(r.is_number(), ErrorKind::ParseError,
            "reconstruction_residual must be a number");
    f.set_reconstruction_residual(r.get<double>());
  }
  f.validate();
  return f;
}

json to_json(const Classification& c) {
  return json{{"ppt", c.ppt},
              {"ppt_min_eig", c.ppt_min_eig},
              {"sppt", c.sppt},
              {"sppt_residual", c.sppt_residual},
              {"super_sppt", c.super_sppt},
              {"ssppt_residual", c.ssppt_residual},
              {"tol", c.tol},
              {"basis", to_json(c.basis)},
              {"diagnostics",
               json{{"ppt_marginal", c.ppt_marginal},
                    {"sppt_marginal", c.sppt_marginal},
                    {"ssppt_marginal", c.ssppt_marginal}}}};
}

json to_json(const SeparableDecomposition& d) {
  json terms = json::array();
  for (const ProductTerm& t : d.terms) {
    terms.push_back(json{{"weight", t.weight},
                         {"vec_a", vector_to_json(t.vec_a)},
                         {"vec_b", vector_to_json(t.vec_b)}});
  }
  return json{{"dim_a", d.dim_a}, {"dim_b", d.dim_b}, {"terms", terms}};
}

SeparableDecomposition decomposition_from_json(const json& j) {
  SeparableDecomposition d;
  d.dim_a = count_field(j, "dim_a");
  d.dim_b = count_field(j, "dim_b");
  const json& terms = field(j, "terms");
  require(terms.is_array(), ErrorKind::ParseError,
          "'terms' must be an array");
  for (const json& t : terms) {
    const json& w = field(t, "weight");
    require(w.is_number(), ErrorKind::ParseError, "weight must be a number");
    ProductTerm term;
    term.weight = w.get<double>();
    term.vec_a = vector_from_json(field(t, "vec_a"), "vec_a");
    term.vec_b = vector_from_json(field(t, "vec_b"), "vec_b");
    require(term.vec_a.size() == d.dim_a && term.vec_b.size() == d.dim_b,
            ErrorKind::ParseError, "term vector lengths must match dims");
    d.terms.push_back(std::move(term));
  }
  return d;
}

json to_json(const VerificationReport& r) {
  return json{{"passed", r.passed},
              {"residual", r.residual},
              {"min_weight", r.min_weight},
              {"max_norm_defect_a", r.max_norm_defect_a},
              {"max_norm_defect_b", r.max_norm_defect_b},
              {"term_count", r.term_count}};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError,
                std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace sppt
