// Copyright 2026 The chandet Authors
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

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "chandet/cli.hpp"

namespace {

constexpr int kInputError = 2;
constexpr int kValidationError = 3;

}  // namespace

int main(int argc, char** argv) {
  namespace cli = chandet::cli;

  CLI::App app{"Detect properties of quantum channels with Choi-state witnesses"};
  std::string command;
  std::string channel_path;
  std::string target_path;
  std::string format = "json";
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  int starts = 50;
  std::string witness;
  bool timing = false;

  app.add_option("command", command,
                 "choi | schmidt | decompose-witness | detect-eb | detect-sru | detect-sep | detect-npt | simulate")
      ->required();
  app.add_option("--channel", channel_path, "Channel-spec JSON file")->required();
  app.add_option("--target", target_path, "Gate spec the sru witness is built for (default: the channel)");
  auto* shots_opt = app.add_option("--shots", shots, "Shots per measurement setting (0 = exact)");
  app.add_option("--seed", seed, "Seed for sampling and optimizer starts");
  app.add_option("--starts", starts, "Optimizer starts for alpha_sru")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--witness", witness, "Witness for decompose-witness and simulate")
      ->check(CLI::IsMember({"eb", "sru", "stabilizer", "ppt"}));
  app.add_flag("--timing", timing, "Include wall-clock time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    const cli::Command cmd = cli::parse_command(command);
    const bool tp = cli::requires_trace_preserving(cmd);
    cli::Options options;
    if (*shots_opt) options.shots = shots;
    options.seed = seed;
    options.starts = starts;
    if (!witness.empty()) options.witness = witness;
    options.timing = timing;

    const cli::LoadedChannel channel = cli::load_channel_spec(channel_path, tp);
    std::optional<cli::LoadedChannel> target;
    if (!target_path.empty()) target = cli::load_channel_spec(target_path, false);

    const cli::Report report = cli::run_pipeline(cmd, channel, options, target);
    std::cout << cli::render_report(report, cli::parse_format(format));
    return 0;
  } catch (const chandet::ValidationError& e) {
    std::cerr << "chandet: validation failed: " << e.what() << "\n";
    return kValidationError;
  } catch (const cli::SpecError& e) {
    std::cerr << "chandet: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "chandet: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "chandet: " << e.what() << "\n";
    return kValidationError;
  }
}
