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

// Command-line front end. Subcommands speak the JSON interchange format on
// stdin/stdout (or --input/--output files), so they compose into pipelines:
//
//   sppt gen werner --p 0.75 | sppt classify
//   sppt gen random-ssppt --m 3 --n 3 --seed 7 | sppt decompose | sppt verify
//
// Exit codes: 0 success, 1 internal/numerical error, 2 invalid input,
// 3 verification failure, 4 basis search exhausted.

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "sppt/json_io.hpp"
#include "sppt/rng.hpp"

namespace {

using nlohmann::json;

std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  sppt::require(in.good(), sppt::ErrorKind::ParseError,
                "cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json read_json(const std::string& path) {
  return sppt::parse_json(read_text(path));
}

void write_json(const std::string& path, const json& j) {
  const std::string text = j.dump() + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  sppt::require(out.good(), sppt::ErrorKind::ParseError,
                "cannot open output file: " + path);
  out << text;
}

sppt::BipartiteState read_state(const std::string& path) {
  return sppt::state_from_json(read_json(path));
}

sppt::ComplexMatrix basis_option(const std::string& kind, std::size_t dim,
                                 sppt::Rng& rng) {
  if (kind == "identity") return sppt::ComplexMatrix::identity(dim);
  sppt::require(kind == "random", sppt::ErrorKind::OutOfRange,
                "basis option must be 'random' or 'identity'");
  return rng.haar_unitary(dim);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipartite density-matrix factorization, PPT/SPPT/super-SPPT "
               "classification, and separable decompositions"};
  app.require_subcommand(1);
  std::function<int()> handler;

  std::string input;
  std::string output;
  double tol = sppt::kDefaultTol;

  // ---- gen ----------------------------------------------------------
  CLI::App* gen = app.add_subcommand("gen", "generate a state");
  gen->require_subcommand(1);

  {
    auto* c = gen->add_subcommand("werner", "two-qubit Werner state W_p");
    auto p = std::make_shared<double>(0.5);
    c->add_option("--p", *p, "mixing parameter in [0, 1]")->required();
    c->add_option("--output", output, "output file (default stdout)");
    c->callback([&, p] {
      handler = [&, p] {
        write_json(output, sppt::to_json(sppt::werner(*p)));
        return 0;
      };
    });
  }
  {
    auto* c = gen->add_subcommand(
        "cq", "seeded random classical-quantum state");
    auto m = std::make_shared<std::size_t>(2);
    auto n = std::make_shared<std::size_t>(2);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto basis_a = std::make_shared<std::string>("random");
    c->add_option("--m", *m, "A-side dimension")->required();
    c->add_option("--n", *n, "B-side dimension")->required();
    c->add_option("--seed", *seed, "PRNG seed")->required();
    c->add_option("--basis-a", *basis_a, "random|identity (default random)");
    c->add_option("--output", output, "output file (default stdout)");
    c->callback([&, m, n, seed, basis_a] {
      handler = [&, m, n, seed, basis_a] {
        sppt::Rng rng(*seed);
        const sppt::ComplexMatrix ba = basis_option(*basis_a, *m, rng);
        const std::vector<double> probs = rng.probability_vector(*m);
        std::vector<sppt::ComplexMatrix> sigmas;
        for (std::size_t i = 0; i < *m; ++i)
          sigmas.push_back(rng.density_matrix(*n));
        write_json(output, sppt::to_json(sppt::cq_state(probs, sigmas, ba)));
        return 0;
      };
    });
  }
  {
    auto* c = gen->add_subcommand(
        "cc", "seeded random classical-classical state");
    auto m = std::make_shared<std::size_t>(2);
    auto n = std::make_shared<std::size_t>(2);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto basis_a = std::make_shared<std::string>("random");
    auto basis_b = std::make_shared<std::string>("random");
    c->add_option("--m", *m, "A-side dimension")->required();
    c->add_option("--n", *n, "B-side dimension")->required();
    c->add_option("--seed", *seed, "PRNG seed")->required();
    c->add_option("--basis-a", *basis_a, "random|identity (default random)");
    c->add_option("--basis-b", *basis_b, "random|identity (default random)");
    c->add_option("--output", output, "output file (default stdout)");
    c->callback([&, m, n, seed, basis_a, basis_b] {
      handler = [&, m, n, seed, basis_a, basis_b] {
        sppt::Rng rng(*seed);
        const sppt::ComplexMatrix ba = basis_option(*basis_a, *m, rng);
        const sppt::ComplexMatrix bb = basis_option(*basis_b, *n, rng);
        const std::vector<double> p = rng.probability_vector(*m * *n);
        sppt::ComplexMatrix joint(*m, *n);
        for (std::size_t i = 0; i < *m; ++i)
          for (std::size_t j = 0; j < *n; ++j) joint(i, j) = p[i * *n + j];
        write_json(output, sppt::to_json(sppt::cc_state(joint, ba, bb)));
        return 0;
      };
    });
  }
  {
    auto* c = gen->add_subcommand("random", "seeded random density matrix");
    auto m = std::make_shared<std::size_t>(2);
    auto n = std::make_shared<std::size_t>(2);
    auto seed = std::make_shared<std::uint64_t>(0);
    c->add_option("--m", *m, "A-side dimension")->required();
    c->add_option("--n", *n, "B-side dimension")->required();
    c->add_option("--seed", *seed, "PRNG seed")->required();
    c->add_option("--output", output, "output file (default stdout)");
    c->callback([&, m, n, seed] {
      handler = [&, m, n, seed] {
        write_json(output,
                   sppt::to_json(sppt::random_density(*m, *n, *seed)));
        return 0;
      };
    });
  }
  {
    auto* c = gen->add_subcommand(
        "random-ssppt",
        "seeded random state that is super SPPT by construction");
    auto m = std::make_shared<std::size_t>(2);
    auto n = std::make_shared<std::size_t>(2);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto factor_out = std::make_shared<std::string>();
    c->add_option("--m", *m, "A-side dimension (>= 2)")->required();
    c->add_option("--n", *n, "B-side dimension")->required();
    c->add_option("--seed", *seed, "PRNG seed")->required();
    c->add_option("--factor-output", *factor_out,
                  "also write the generating factor to this file");
    c->add_option("--output", output, "output file (default stdout)");
    c->callback([&, m, n, seed, factor_out] {
      handler = [&, m, n, seed, factor_out] {
        const auto [state, factor] = sppt::random_super_sppt(*m, *n, *seed);
        if (!factor_out->empty())
          write_json(*factor_out, sppt::to_json(factor));
        write_json(output, sppt::to_json(state));
        return 0;
      };
    });
  }

  // ---- factor -------------------------------------------------------
  {
    auto* c = app.add_subcommand(
        "factor", "block-triangular factorization of a state");
    c->add_option("--input", input, "state JSON (default stdin)");
    c->add_option("--output", output, "output file (default stdout)");
    c->add_option("--tol", tol, "relative tolerance (default 1e-9)");
    c->callback([&] {
      handler = [&] {
        const sppt::BlockFactor f =
            sppt::block_cholesky(read_state(input), tol);
        write_json(output, sppt::to_json(f));
        return 0;
      };
    });
  }

  // ---- classify -----------------------------------------------------
  {
    auto* c = app.add_subcommand(
        "classify", "PPT / SPPT / super-SPPT verdicts with residuals");
    auto basis_path = std::make_shared<std::string>();
    c->add_option("--input", input, "state JSON (default stdin)");
    c->add_option("--basis", *basis_path,
                  "unitary matrix JSON for the A-side basis");
    c->add_option("--output", output, "output file (default stdout)");
    c->add_option("--tol", tol, "relative tolerance (default 1e-9)");
    c->callback([&, basis_path] {
      handler = [&, basis_path] {
        const sppt::BipartiteState s = read_state(input);
        const sppt::ComplexMatrix basis =
            basis_path->empty()
                ? sppt::ComplexMatrix::identity(s.dim_a)
                : sppt::matrix_from_json(read_json(*basis_path));
        write_json(output, sppt::to_json(sppt::classify(s, basis, tol)));
        return 0;
      };
    });
  }

  // ---- decompose ----------------------------------------------------
  {
    auto* c = app.add_subcommand(
        "decompose",
        "separable decomposition of a super-SPPT state (errors otherwise)");
    c->add_option("--input", input, "state JSON (default stdin)");
    c->add_option("--output", output, "output file (default stdout)");
    c->add_option("--tol", tol, "relative tolerance (default 1e-9)");
    c->callback([&] {
      handler = [&] {
        const sppt::BipartiteState s = read_state(input);
        const sppt::BlockFactor f = sppt::block_cholesky(s, tol);
        const sppt::SeparableDecomposition d =
            sppt::separable_decomposition(f, tol);
        json out = sppt::to_json(d);
        // embed the source so `... | decompose | verify` is self-contained
        out["source_state"] = sppt::to_json(s);
        write_json(output, out);
        return 0;
      };
    });
  }

  // ---- verify -------------------------------------------------------
  {
    auto* c = app.add_subcommand(
        "verify", "check a separable decomposition against a state");
    auto state_path = std::make_shared<std::string>();
    auto decomp_path = std::make_shared<std::string>();
    auto vtol = std::make_shared<double>(1e-8);
    c->add_option("--state", *state_path,
                  "state JSON (default: source_state embedded in the "
                  "decomposition)");
    c->add_option("--decomp", *decomp_path,
                  "decomposition JSON (default stdin)");
    c->add_option("--output", output, "output file (default stdout)");
    c->add_option("--tol", *vtol, "relative tolerance (default 1e-8)");
    c->callback([&, state_path, decomp_path, vtol] {
      handler = [&, state_path, decomp_path, vtol] {
        const json dj = read_json(*decomp_path);
        const sppt::SeparableDecomposition d =
            sppt::decomposition_from_json(dj);
        sppt::BipartiteState s = [&] {
          if (!state_path->empty()) return read_state(*state_path);
          sppt::require(dj.contains("source_state"),
                        sppt::ErrorKind::ParseError,
                        "no --state given and the decomposition has no "
                        "embedded source_state");
          return sppt::state_from_json(dj.at("source_state"));
        }();
        const sppt::VerificationReport r =
            sppt::verify_decomposition(d, s, *vtol);
        write_json(output, sppt::to_json(r));
        return r.passed ? 0 : 3;
      };
    });
  }

  // ---- transform ----------------------------------------------------
  {
    auto* c = app.add_subcommand(
        "transform", "apply a local unitary on side A or B");
    auto u_path = std::make_shared<std::string>();
    auto side = std::make_shared<std::string>();
    c->add_option("--input", input, "state JSON (default stdin)");
    c->add_option("--unitary", *u_path, "unitary matrix JSON")->required();
    c->add_option("--side", *side, "A or B")->required();
    c->add_option("--output", output, "output file (default stdout)");
    c->callback([&, u_path, side] {
      handler = [&, u_path, side] {
        const sppt::BipartiteState s = read_state(input);
        const sppt::ComplexMatrix u =
            sppt::matrix_from_json(read_json(*u_path));
        sppt::require(*side == "A" || *side == "B",
                      sppt::ErrorKind::OutOfRange, "--side must be A or B");
        const sppt::BipartiteState t = *side == "A"
                                           ? sppt::local_unitary_a(s, u)
                                           : sppt::local_unitary_b(s, u);
        write_json(output, sppt::to_json(t));
        return 0;
      };
    });
  }

  // ---- search-basis -------------------------------------------------
  {
    auto* c = app.add_subcommand(
        "search-basis",
        "sample random A-side bases looking for a target verdict");
    auto trials = std::make_shared<std::size_t>(100);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto target = std::make_shared<std::string>();
    c->add_option("--input", input, "state JSON (default stdin)");
    c->add_option("--trials", *trials, "number of bases to try")->required();
    c->add_option("--seed", *seed, "PRNG seed")->required();
    c->add_option("--target", *target, "sppt or ssppt")->required();
    c->add_option("--output", output, "output file (default stdout)");
    c->add_option("--tol", tol, "relative tolerance (default 1e-9)");
    c->callback([&, trials, seed, target] {
      handler = [&, trials, seed, target] {
        sppt::require(*target == "sppt" || *target == "ssppt",
                      sppt::ErrorKind::OutOfRange,
                      "--target must be sppt or ssppt");
        const sppt::SearchTarget st = *target == "sppt"
                                          ? sppt::SearchTarget::kSppt
                                          : sppt::SearchTarget::kSuperSppt;
        const sppt::BasisSearchResult r = sppt::random_basis_search(
            read_state(input), *trials, tol, *seed, st);
        json out;
        out["found"] = r.found();
        out["trials_run"] = r.trials_run;
        out["best_residual"] = r.best_residual;
        out["best_basis"] = sppt::to_json(r.best_basis);
        if (r.found()) {
          out["trial"] = r.trial;
          out["basis"] = sppt::to_json(*r.basis);
          out["classification"] = sppt::to_json(*r.classification);
        }
        write_json(output, out);
        return r.found() ? 0 : 4;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return handler();
  } catch (const sppt::Error& e) {
    std::cerr << sppt::error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return e.is_input_error() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
