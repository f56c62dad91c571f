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


#pragma once

// Batch front end: line-oriented problem configs, command dispatch and
// versioned JSON reports.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "latroid/code_latroids.hpp"
#include "latroid/latroid.hpp"
#include "latroid/supports.hpp"

namespace latroid::cli {

constexpr int kSchemaVersion = 1;

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kInputError = 2, kCapExceeded = 3 };

struct ProblemConfig {
  std::string kind = "ring";  // "ring" or "matrix"
  std::string ring;           // modulus, e.g. "4" or "Z_6"
  int n = 0;
  int q = 0;                  // matrix codes
  std::vector<Block> blocks;  // matrix codes
  std::vector<std::vector<std::int64_t>> generators;
  std::string support = "chain";
  std::vector<std::pair<std::int64_t, std::vector<std::int32_t>>> support_rows;
  std::string lattice;  // empty: the default for the code kind
  std::vector<std::vector<std::int64_t>> matrix;
};

// key = value lines; '#' starts a comment; gen, support_row and matrix repeat.
// InputError on unknown keys, malformed values or inconsistent dimensions.
ProblemConfig parse_config(const std::string& text);
ProblemConfig load_config(const std::string& path);

// "4", "Z_4", "Z4" or "6": Z_m split into its prime-power CRT factors.
Pir parse_ring(const std::string& spec);

const std::vector<std::string>& command_names();

struct Outcome {
  nlohmann::json report;
  int exit_code = kOk;
};

// Runs one command. Library errors propagate; see exit_code_for.
Outcome run_command(const std::string& command, const ProblemConfig& cfg, std::uint64_t seed);
int exit_code_for(const std::exception& e);

// Flattened "path = value" lines carrying the same numbers as the JSON.
std::string render_text(const nlohmann::json& report);

nlohmann::json scalar_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);
// Elements with labels, upper covers, rho and length.
nlohmann::json latroid_json(const Latroid& lt);
// Rebuilds a latroid from latroid_json output; InputError if malformed.
Latroid latroid_from_json(const nlohmann::json& j);

}  // namespace latroid::cli
