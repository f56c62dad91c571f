// Copyright 2026 The Latroid Authors
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

#include <algorithm>
#include <regex>
#include <string>

#include "cli_core.hpp"
#include "latroid/enumerators.hpp"
#include "latroid/errors.hpp"

using namespace latroid;
using nlohmann::json;

namespace {

cli::Outcome run(const std::string& command, const std::string& config) {
  return cli::run_command(command, cli::parse_config(config), 7);
}

std::vector<std::string> numbers_in(const std::string& text) {
  static const std::regex num("-?[0-9]+(/[0-9]+)?");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), num); it != std::sregex_iterator(); ++it) {
    out.push_back(it->str());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Numbers in the values of the flattened text, without the path indices.
std::vector<std::string> text_value_numbers(const std::string& text) {
  std::string values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto end = text.find('\n', pos);
    const std::string line = text.substr(pos, end - pos);
    values += line.substr(line.find(" = ") + 3) + "\n";
    pos = end + 1;
  }
  return numbers_in(values);
}

const char* kZ4 = "ring = 4\nn = 2\ngen = 1 2\n";
const char* kZ4Zero = "ring = 4\nn = 1\n";
const char* kZ6Iso = "ring = 6\nn = 2\nsupport = z6\nmatrix = 2 3\nmatrix = 3 2\ngen = 1 0\n";
const char* kLee = "ring = 4\nn = 1\nsupport = table\nsupport_row = 0 : 0\nsupport_row = 1 : 1\n"
                   "support_row = 2 : 2\nsupport_row = 3 : 1\n";
const char* kBlock = "ring = 2\nn = 3\ngen = 1 1 0\nlattice = boolean\n";
const char* kRank = "kind = matrix\nq = 2\nblocks = 3x2\ngen = 1 0 0 1 1 1\n";
const char* kSumRank = "kind = matrix\nq = 2\nblocks = 3x1, 3x2\ngen = 1 1 0 1 0 0 1 0 0\nlattice = sum-rank-row\n";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("ring specs") {
    CHECK(cli::parse_ring("4") == Pir::chain(2, 2));
    CHECK(cli::parse_ring("Z_9") == Pir::chain(3, 2));
    CHECK(cli::parse_ring("Z12") == Pir({{2, 2}, {3, 1}}));
    CHECK_THROWS_AS(cli::parse_ring("1"), InputError);
    CHECK_THROWS_AS(cli::parse_ring("four"), InputError);
  }

  TEST_CASE("config parsing") {
    const cli::ProblemConfig cfg = cli::parse_config("# comment\nring = 4  # trailing\nn = 2\ngen = 1 2\ngen = 0,2\n");
    CHECK(cfg.n == 2);
    CHECK(cfg.generators == std::vector<std::vector<std::int64_t>>{{1, 2}, {0, 2}});
    CHECK_THROWS_AS(cli::parse_config("ring = 4\nn = 2\ncolour = red\n"), InputError);
    CHECK_THROWS_AS(cli::parse_config("ring = 4\nn = 2\ngen = 1\n"), InputError);
    CHECK_THROWS_AS(cli::parse_config("ring = 4\ngen = 1\n"), InputError);
    CHECK_THROWS_AS(cli::parse_config("ring = 4\nn = 2\nmatrix = 1 0\n"), InputError);
    CHECK_THROWS_AS(cli::parse_config("kind = matrix\nq = 4\nblocks = 2x2\n"), InputError);
    CHECK_THROWS_AS(cli::parse_config("ring 4\n"), InputError);
    const cli::ProblemConfig m = cli::parse_config(kSumRank);
    REQUIRE(m.blocks.size() == 2);
    CHECK(m.blocks[1].m == 3);
    CHECK(m.blocks[1].n == 2);
  }

  TEST_CASE("weights fixture") {
    const cli::Outcome o = run("weights", kZ4);
    CHECK(o.exit_code == cli::kOk);
    CHECK(o.report["result"]["dbar"] == json::array({1, 3}));
    CHECK(o.report["schema_version"] == cli::kSchemaVersion);
  }

  TEST_CASE("tutte fixture") {
    const cli::Outcome o = run("tutte", kZ4Zero);
    CHECK(o.exit_code == cli::kOk);
    CHECK(o.report["result"]["W"]["text"] == "y^2");
    const ExpPoly w = ExpPoly::from_json(o.report["result"]["W"]["polynomial"]);
    CHECK(w.num_terms() == 1);
    CHECK(w.coefficient({0, 2}) == 1);
  }

  TEST_CASE("isometry fixture") {
    const cli::Outcome o = run("isometry", kZ6Iso);
    CHECK(o.exit_code == cli::kOk);
    const json& p = o.report["result"]["projections"];
    REQUIRE(p.size() == 2);
    CHECK(p[0]["matrix"] == json::parse("[[0,1],[1,0]]"));
    CHECK(p[1]["matrix"] == json::parse("[[2,0],[0,2]]"));
    CHECK(o.report["result"]["equivalence"]["ok"] == true);
    const cli::Outcome bad = run("isometry", "ring = 4\nn = 2\nmatrix = 1 1\nmatrix = 0 1\n");
    CHECK(bad.exit_code == cli::kValidationFailure);
  }

  TEST_CASE("support validation exit codes") {
    const cli::Outcome lee = run("validate-support", kLee);
    CHECK(lee.exit_code == cli::kValidationFailure);
    CHECK(lee.report["result"]["coordinate_table"]["axiom"] == 2);
    CHECK(lee.report["result"]["coordinate_table"]["r"] == "2");
    const cli::Outcome tau = run("validate-support", "ring = 3\nn = 2\nsupport = tau\n");
    CHECK(tau.exit_code == cli::kOk);
    CHECK(tau.report["result"]["modular"]["valid"] == false);
    try {
      run("weights", std::string(kLee) + "gen = 1\n");
      FAIL("an invalid support table must be rejected");
    } catch (const Error& e) {
      CHECK(cli::exit_code_for(e) == cli::kValidationFailure);
    }
  }

  TEST_CASE("error classes map to exit codes") {
    CHECK(cli::exit_code_for(InputError("x")) == cli::kInputError);
    CHECK(cli::exit_code_for(HypothesisError("x")) == cli::kInputError);
    CHECK(cli::exit_code_for(CapExceeded("x")) == cli::kCapExceeded);
    CHECK_THROWS_AS(run("crypto-roundtrip", kZ4), HypothesisError);
  }

  TEST_CASE("reports re-parse and re-validate") {
    for (const auto& [command, config] : std::vector<std::pair<std::string, std::string>>{
             {"latroid", kZ4}, {"latroid", kBlock}, {"latroid", kRank}, {"latroid", kSumRank},
             {"latroid", std::string(kZ4) + "lattice = submodules\n"},
             {"latroid", std::string(kZ4) + "lattice = rectangular\n"},
             {"latroid", "ring = 6\nn = 2\ngen = 1 3\n"}}) {
      CAPTURE(config);
      const cli::Outcome o = run(command, config);
      CHECK(o.exit_code == cli::kOk);
      const json back = json::parse(o.report.dump());
      CHECK(back == o.report);
      const Latroid lt = cli::latroid_from_json(back["result"]["latroid"]);
      CHECK(validate_latroid(lt).valid);
      CHECK(cli::latroid_json(lt) == o.report["result"]["latroid"]);
    }
    const cli::Outcome e = run("enumerator", kZ4);
    const json back = json::parse(e.report.dump());
    const ExpPoly w = ExpPoly::from_json(back["result"]["refined"]["polynomial"]);
    CHECK(w.to_string() == back["result"]["refined"]["text"]);
    CHECK_THROWS_AS(cli::latroid_from_json(json::parse("{\"elements\": 3}")), InputError);
  }

  TEST_CASE("text and JSON carry the same numbers") {
    for (const auto& [command, config] : std::vector<std::pair<std::string, std::string>>{
             {"weights", kZ4}, {"tutte", kZ4Zero}, {"isometry", kZ6Iso}, {"axioms", kBlock},
             {"crypto-roundtrip", kBlock}, {"circuits", kRank}, {"weights", kSumRank}, {"enumerator", kZ4}}) {
      CAPTURE(command);
      const cli::Outcome o = run(command, config);
      CHECK(text_value_numbers(cli::render_text(o.report)) == numbers_in(o.report.dump()));
    }
  }

  TEST_CASE("identical inputs give byte-identical reports") {
    for (const std::string& command : {"weights", "tutte", "latroid", "enumerator", "circuits"}) {
      CHECK(run(command, kZ4).report.dump() == run(command, kZ4).report.dump());
    }
  }
}
