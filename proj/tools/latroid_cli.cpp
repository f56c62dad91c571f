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


#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "cli_core.hpp"
#include "latroid/errors.hpp"

namespace {

using nlohmann::json;
namespace cli = latroid::cli;

void write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw latroid::InputError("cannot write '" + tmp + "'");
    out << text;
    out.flush();
    if (!out) throw latroid::InputError("write to '" + tmp + "' failed");
  }
  std::filesystem::rename(tmp, path);
}

std::string selftest_table(const json& report) {
  std::ostringstream os;
  for (const auto& c : report.at("result").at("criteria")) {
    char line[96];
    std::snprintf(line, sizeof line, "%s %2d %-32s ", c.at("passed").get<bool>() ? "PASS" : "FAIL",
                  c.at("id").get<int>(), c.at("name").get<std::string>().c_str());
    os << line << c.at("detail").get<std::string>() << "\n";
  }
  os << report["result"]["passed"].get<int>() << "/" << report["result"]["total"].get<int>()
     << " criteria passed (seed " << report["result"]["seed"].get<std::uint64_t>() << ")\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Latroids of linear codes: supports, latroids, weights, enumerators and isometries."};
  std::string config_path, command, out_path, format = "json";
  std::uint64_t seed = 20260101;
  std::uint64_t cap = 0;
  bool allow_large = false;
  app.add_option("--config", config_path, "problem config (key = value lines)");
  app.add_option("--command", command, "command to run")->required()->check(CLI::IsMember(cli::command_names()));
  app.add_option("--out", out_path, "write the report here (atomically) instead of stdout");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "seed for randomized corpora");
  app.add_option("--cap", cap, "exhaustive-enumeration cap on |R|^n");
  app.add_flag("--allow-large", allow_large, "acknowledge a cap above the default");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kInputError;
  }

  json report;
  int rc = cli::kOk;
  try {
    if (cap != 0) {
      const latroid::Caps defaults;
      if (cap > defaults.ambient && !allow_large) {
        throw latroid::InputError("--cap above " + std::to_string(defaults.ambient) + " needs --allow-large");
      }
      if (cap > latroid::Caps::kHardAmbientLimit) {
        throw latroid::InputError("--cap may not exceed " + std::to_string(latroid::Caps::kHardAmbientLimit));
      }
      latroid::caps().ambient = cap;
    }
    cli::ProblemConfig cfg;
    if (command != "selftest") {
      if (config_path.empty()) throw latroid::InputError("--config is required for " + command);
      cfg = cli::load_config(config_path);
    }
    cli::Outcome o = cli::run_command(command, cfg, seed);
    report = std::move(o.report);
    rc = o.exit_code;
  } catch (const std::exception& e) {
    rc = cli::exit_code_for(e);
    report = json{{"schema_version", cli::kSchemaVersion},
                  {"command", command},
                  {"exit_code", rc},
                  {"error", e.what()}};
    std::cerr << "error: " << e.what() << "\n";
  }

  std::string text;
  if (format == "json") {
    text = report.dump(2) + "\n";
  } else if (command == "selftest" && report.contains("result")) {
    text = selftest_table(report);
  } else {
    text = cli::render_text(report);
  }
  try {
    if (out_path.empty()) {
      std::cout << text;
    } else {
      write_atomically(out_path, text);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kInputError;
  }
  return rc;
}
