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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "chandet/channels.hpp"
#include "chandet/detect.hpp"
#include "chandet/measure.hpp"

namespace chandet::cli {

// Unreadable file or a channel-spec document that violates the schema.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Channel-spec document:
//   {"dims": [2, 2], "kind": "named", "name": "cnot", "params": {...}}
//   {"dims": [2], "kind": "kraus", "kraus": [matrix, ...]}
// A matrix is an array of rows, each row an array of [re, im] pairs.
struct ChannelSpec {
  Dims dims;
  std::string kind;
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  std::vector<ComplexMatrix> kraus;
  nlohmann::json raw;
};

struct LoadedChannel {
  ChannelSpec spec;
  Channel channel;
};

ComplexMatrix matrix_from_json(const nlohmann::json& j, const Dims& dims, const std::string& field);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

ChannelSpec parse_channel_spec(const nlohmann::json& j);
// CP holds by construction; TP is checked only when `require_tp`.
Channel build_channel(const ChannelSpec& spec, bool require_tp);
LoadedChannel load_channel_spec(const std::filesystem::path& path, bool require_tp = true);

enum class Command { choi, schmidt, decompose_witness, detect_eb, detect_sru, detect_sep, detect_npt, simulate };
Command parse_command(std::string_view text);
std::string_view to_string(Command c);
// detect-eb, detect-sru, detect-npt and simulate demand trace preservation.
bool requires_trace_preserving(Command c);

struct Options {
  std::optional<std::uint64_t> shots;  // 0 selects exact evaluation
  std::uint64_t seed = 0;
  int starts = 50;
  std::optional<std::string> witness;  // eb, sru, stabilizer, ppt
  bool timing = false;
};

struct Report {
  std::string pipeline;
  nlohmann::json inputs;
  std::optional<double> exact_expectation;
  std::optional<ShotEstimate> shot_estimate;
  std::map<std::string, double> thresholds;
  std::optional<std::string> verdict;
  std::optional<BoundReport> bounds;
  std::optional<double> elapsed_ms;
  std::uint64_t seed = 0;
  nlohmann::json details = nlohmann::json::object();

  friend bool operator==(const Report&, const Report&) = default;
};

// `target` is the gate a witness is built for; when absent the channel itself
// must be a unitary gate for the sru/sep pipelines.
Report run_pipeline(Command command, const LoadedChannel& channel, const Options& options,
                    const std::optional<LoadedChannel>& target = std::nullopt);

enum class Format { json, text };
Format parse_format(std::string_view text);

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string render_report(const Report& r, Format format);

}  // namespace chandet::cli
