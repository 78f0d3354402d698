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

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

#include "chandet/cli.hpp"

namespace chandet::cli {

using nlohmann::json;

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

json shot_json(const ShotEstimate& s) {
  return {{"value", s.value},
          {"std_error", s.std_error},
          {"shots_per_setting", s.shots_per_setting},
          {"seed", s.seed},
          {"settings", s.settings}};
}

ShotEstimate shot_from_json(const json& j) {
  ShotEstimate s;
  s.value = j.at("value").get<double>();
  s.std_error = j.at("std_error").get<double>();
  s.shots_per_setting = j.at("shots_per_setting").get<std::uint64_t>();
  s.seed = j.at("seed").get<std::uint64_t>();
  s.settings = j.at("settings").get<std::size_t>();
  return s;
}

json bounds_json(const BoundReport& b) {
  return {{"c", b.c}, {"w_max", b.w_max}, {"robustness_lb", b.robustness_lb}, {"mu_c_lb", b.mu_c_lb}};
}

BoundReport bounds_from_json(const json& j) {
  BoundReport b;
  b.c = j.at("c").get<double>();
  b.w_max = j.at("w_max").get<double>();
  b.robustness_lb = j.at("robustness_lb").get<double>();
  b.mu_c_lb = j.at("mu_c_lb").get<double>();
  return b;
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

void detail_line(std::ostringstream& out, const json& details, const char* key, const char* label) {
  if (!details.contains(key)) return;
  const json& v = details.at(key);
  out << label << ": ";
  if (v.is_number_float()) {
    out << num(v.get<double>());
  } else if (v.is_array()) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      out << (k ? " " : "") << (v[k].is_number_float() ? num(v[k].get<double>()) : v[k].dump());
    }
  } else if (v.is_string()) {
    out << v.get<std::string>();
  } else {
    out << v.dump();
  }
  out << "\n";
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "pipeline: " << r.pipeline << "\n";
  out << "seed: " << r.seed << "\n";
  const json& d = r.details;
  if (r.pipeline == "detect-npt") {
    detail_line(out, d, "lambda_minus", "lambda_minus");
    detail_line(out, d, "multiplicity", "multiplicity");
    detail_line(out, d, "noise_p", "p");
    detail_line(out, d, "unital", "unital");
    detail_line(out, d, "two_term_value", "two-term value");
    detail_line(out, d, "diagnostic", "diagnostic");
  } else if (r.pipeline == "schmidt") {
    detail_line(out, d, "sigmas", "sigmas");
    detail_line(out, d, "rank", "rank");
    detail_line(out, d, "sum_sigma_sq", "sum sigma^2");
  } else if (r.pipeline == "choi") {
    detail_line(out, d, "dims", "dims");
    detail_line(out, d, "trace", "trace");
    detail_line(out, d, "min_eigenvalue", "min eigenvalue");
    detail_line(out, d, "flags", "flags");
  } else {
    detail_line(out, d, "witness", "witness");
    detail_line(out, d, "alpha_sru", "alpha_sru");
    detail_line(out, d, "alpha_sru_source", "alpha_sru source");
    detail_line(out, d, "alpha_s", "alpha_s");
    detail_line(out, d, "sigmas", "sigmas");
    detail_line(out, d, "mu_c_reference", "mu_c reference");
    detail_line(out, d, "setting_count", "settings");
    if (d.contains("terms")) {
      for (const auto& t : d.at("terms")) {
        out << "  " << t.at("string").get<std::string>() << " " << num(t.at("coefficient").get<double>()) << "\n";
      }
    }
    if (d.contains("settings")) {
      for (const auto& s : d.at("settings")) out << "  setting " << s.at("bases").get<std::string>() << "\n";
    }
  }
  if (r.exact_expectation) out << "expectation: " << num(*r.exact_expectation) << "\n";
  if (r.shot_estimate) {
    const auto& s = *r.shot_estimate;
    out << "estimate: " << num(s.value) << " +/- " << num(s.std_error) << " (" << s.shots_per_setting
        << " shots x " << s.settings << " settings)\n";
  }
  for (const auto& [name, value] : r.thresholds) out << "threshold " << name << ": " << num(value) << "\n";
  if (r.bounds) {
    out << "robustness lower bound: " << num(r.bounds->robustness_lb) << "\n";
    out << "mu_c lower bound: " << num(r.bounds->mu_c_lb) << "\n";
  }
  detail_line(out, d, "sampling", "sampling");
  if (r.verdict) out << "verdict: " << *r.verdict << "\n";
  if (r.elapsed_ms) out << "elapsed_ms: " << num(*r.elapsed_ms) << "\n";
  return out.str();
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected json or text)");
}

json report_to_json(const Report& r) {
  json j;
  j["pipeline"] = r.pipeline;
  j["seed"] = r.seed;
  j["inputs"] = r.inputs;
  j["exact_expectation"] = optional_json(r.exact_expectation);
  j["shot_estimate"] = r.shot_estimate ? shot_json(*r.shot_estimate) : json(nullptr);
  j["thresholds"] = r.thresholds;
  j["verdict"] = optional_json(r.verdict);
  j["bounds"] = r.bounds ? bounds_json(*r.bounds) : json(nullptr);
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  j["details"] = r.details;
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.pipeline = j.at("pipeline").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.inputs = j.at("inputs");
  if (!j.at("exact_expectation").is_null()) r.exact_expectation = j.at("exact_expectation").get<double>();
  if (!j.at("shot_estimate").is_null()) r.shot_estimate = shot_from_json(j.at("shot_estimate"));
  r.thresholds = j.at("thresholds").get<std::map<std::string, double>>();
  if (!j.at("verdict").is_null()) r.verdict = j.at("verdict").get<std::string>();
  if (!j.at("bounds").is_null()) r.bounds = bounds_from_json(j.at("bounds"));
  if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
  r.details = j.at("details");
  return r;
}

std::string render_report(const Report& r, Format format) {
  if (format == Format::json) return report_to_json(r).dump(2) + "\n";
  return render_text(r);
}

}  // namespace chandet::cli
