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

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "chandet/cli.hpp"
#include "chandet/pptdetect.hpp"

namespace chandet::cli {

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSimulateShots = 10000;

struct CommandName {
  Command command;
  std::string_view text;
};

constexpr CommandName kCommands[] = {
    {Command::choi, "choi"},
    {Command::schmidt, "schmidt"},
    {Command::decompose_witness, "decompose-witness"},
    {Command::detect_eb, "detect-eb"},
    {Command::detect_sru, "detect-sru"},
    {Command::detect_sep, "detect-sep"},
    {Command::detect_npt, "detect-npt"},
    {Command::simulate, "simulate"},
};

bool all_qubits(const Dims& dims) {
  for (int d : dims) {
    if (d != 2) return false;
  }
  return true;
}

bool is_bipartite_square(const Dims& dims) { return dims.size() == 2 && dims[0] == dims[1]; }

void require_dims(bool ok, Command c, const Dims& dims, const std::string& expected) {
  if (ok) return;
  std::string got = "[";
  for (std::size_t k = 0; k < dims.size(); ++k) got += (k ? "," : "") + std::to_string(dims[k]);
  got += "]";
  throw DimensionError(std::string(to_string(c)) + " needs dims " + expected + ", got " + got);
}

json dims_json(const Dims& dims) { return json(dims); }

// The single unitary Kraus operator of a gate channel.
ComplexMatrix gate_of(const LoadedChannel& lc, const std::string& role) {
  const auto& kraus = lc.channel.kraus();
  if (kraus.size() != 1 || !kraus.front().is_unitary(kSpectralTol)) {
    throw std::invalid_argument(role + " must be a unitary gate (a single unitary Kraus operator)");
  }
  return kraus.front().with_dims(lc.channel.dims());
}

bool is_cnot(const ComplexMatrix& u) {
  return u.dims() == Dims{2, 2} && u.max_abs_diff(cnot_gate()) <= kHermitianTol;
}

struct SruWitness {
  Witness witness;
  json details;
};

SruWitness sru_witness_for(const ComplexMatrix& gate, const Options& options) {
  json details;
  double alpha = 0.0;
  if (is_cnot(gate)) {
    alpha = 1.0 / std::sqrt(2.0);
    details["alpha_sru_source"] = "exact";
  } else {
    const SruOptimum opt = alpha_sru_optimize(gate, options.starts, options.seed);
    alpha = opt.alpha_sru;
    details["alpha_sru_source"] = "optimizer";
    details["optimizer"] = {{"starts", opt.starts}, {"best_start", opt.best_start}, {"seed", options.seed}};
  }
  Witness w = build_sru_witness(gate, alpha * alpha);
  details["alpha_sru"] = alpha;
  details["alpha_sru_sq"] = *w.alpha_sru_sq();
  details["alpha_s"] = std::sqrt(*w.alpha_s_sq());
  details["alpha_s_sq"] = *w.alpha_s_sq();
  return SruWitness{std::move(w), std::move(details)};
}

// A witness together with the channel whose Choi state it is measured on.
struct WitnessPlan {
  Witness witness;
  Channel measured;
  json details = json::object();
};

std::string default_witness(const Dims& dims) {
  if (dims == Dims{2}) return "eb";
  return "sru";
}

WitnessPlan plan_witness(const std::string& kind, const LoadedChannel& lc, const Options& options,
                         const std::optional<LoadedChannel>& target) {
  const Channel& ch = lc.channel;
  if (kind == "eb") {
    if (ch.dims() != Dims{2}) throw DimensionError("the eb witness needs a single-qubit channel");
    return WitnessPlan{eb_witness(), ch};
  }
  if (kind == "sru") {
    if (!is_bipartite_square(ch.dims())) throw DimensionError("the sru witness needs dims [d,d]");
    const ComplexMatrix gate = target ? gate_of(*target, "target") : gate_of(lc, "channel");
    if (gate.dims() != ch.dims()) throw DimensionError("target dims do not match the channel dims");
    SruWitness sw = sru_witness_for(gate, options);
    return WitnessPlan{std::move(sw.witness), ch, std::move(sw.details)};
  }
  if (kind == "stabilizer") {
    if (ch.dims() != Dims{2, 2}) throw DimensionError("the stabilizer witness needs dims [2,2]");
    json details;
    details["generators"] = cnot_choi_stabilizers();
    return WitnessPlan{stabilizer_witness(cnot_choi_stabilizers()), ch, std::move(details)};
  }
  if (kind == "ppt") {
    if (!is_bipartite_square(ch.dims())) throw DimensionError("the ppt witness needs dims [d,d]");
    PptWitness pw = ppt_witness(ch);
    json details;
    details["lambda_minus"] = pw.lambda_minus;
    details["multiplicity"] = pw.multiplicity;
    details["noise_p"] = spa_noise(ch.dims()[0]);
    return WitnessPlan{std::move(pw.witness), spa_composite(ch), std::move(details)};
  }
  throw std::invalid_argument("unknown witness '" + kind + "' (expected eb, sru, stabilizer or ppt)");
}

json terms_json(const std::vector<PauliTerm>& terms) {
  json out = json::array();
  for (const auto& t : terms) out.push_back({{"string", t.letters}, {"coefficient", t.coefficient}});
  return out;
}

json settings_json(const std::vector<MeasurementSetting>& settings) {
  json out = json::array();
  for (const auto& s : settings) out.push_back({{"bases", s.bases}, {"covered_terms", s.covered_terms}});
  return out;
}

// Adds a sampled estimate when shots were requested and the system is
// made of qubits; qudit witnesses are evaluated exactly only.
void maybe_sample(Report& r, const WitnessPlan& plan, const Options& options, std::uint64_t default_shots = 0) {
  const std::uint64_t shots = options.shots.value_or(default_shots);
  if (shots == 0) return;
  if (!all_qubits(plan.measured.dims())) {
    r.details["sampling"] = "skipped: measurement simulation is available for qubit systems only";
    return;
  }
  r.shot_estimate = estimate_witness(plan.measured, plan.witness, shots, options.seed);
}

json inputs_json(Command command, const LoadedChannel& lc, const Options& options,
                 const std::optional<LoadedChannel>& target) {
  json in;
  in["command"] = std::string(to_string(command));
  in["channel"] = lc.spec.raw;
  if (target) in["target"] = target->spec.raw;
  if (options.shots) in["shots"] = *options.shots;
  in["seed"] = options.seed;
  in["starts"] = options.starts;
  if (options.witness) in["witness"] = *options.witness;
  return in;
}

void run_choi(Report& r, const Channel& ch) {
  const ChoiMatrix& c = ch.choi();
  const EigenSystem es = hermitian_eig(c.matrix);
  const ChannelFlags flags = classify(ch);
  r.details["dims"] = dims_json(c.matrix.dims());
  r.details["matrix"] = matrix_to_json(c.matrix);
  r.details["trace"] = c.matrix.trace().real();
  r.details["min_eigenvalue"] = es.values(0);
  r.details["kraus_count"] = ch.kraus().size();
  r.details["flags"] = {{"cp", flags.cp}, {"tp", flags.tp}, {"unital", flags.unital}};
}

void run_schmidt(Report& r, const LoadedChannel& lc) {
  const Channel& ch = lc.channel;
  if (ch.dims().size() != 2) throw DimensionError("schmidt needs a bipartite channel");
  if (ch.kraus().size() != 1) throw std::invalid_argument("schmidt needs a single Kraus operator");
  const ComplexMatrix op = ch.kraus().front().with_dims(ch.dims());
  const SchmidtDecomposition s = operator_schmidt(op, ch.dims()[0], ch.dims()[1]);
  json a = json::array();
  json b = json::array();
  for (int i = 0; i < s.rank; ++i) {
    a.push_back(matrix_to_json(s.a_factors[i]));
    b.push_back(matrix_to_json(s.b_factors[i]));
  }
  double sum_sq = 0.0;
  for (double v : s.sigmas) sum_sq += v * v;
  r.details["sigmas"] = s.sigmas;
  r.details["rank"] = s.rank;
  r.details["sum_sigma_sq"] = sum_sq;
  r.details["alpha_s"] = s.sigmas.front();
  r.details["a_factors"] = std::move(a);
  r.details["b_factors"] = std::move(b);
}

void run_decompose(Report& r, const LoadedChannel& lc, const Options& options,
                   const std::optional<LoadedChannel>& target) {
  const std::string kind = options.witness.value_or(default_witness(lc.channel.dims()));
  WitnessPlan plan = plan_witness(kind, lc, options, target);
  if (!all_qubits(plan.witness.op().dims())) {
    throw DimensionError("decompose-witness is available for qubit witnesses only");
  }
  const auto terms = pauli_decompose(plan.witness.op());
  const auto settings = group_settings(terms);
  r.details = plan.details;
  r.details["witness"] = kind;
  r.details["terms"] = terms_json(terms);
  r.details["settings"] = settings_json(settings);
  r.details["setting_count"] = settings.size();
  r.exact_expectation = evaluate_witness(plan.witness, plan.measured);
  maybe_sample(r, plan, options);
}

void run_detect_eb(Report& r, const LoadedChannel& lc, const Options& options) {
  require_dims(lc.channel.dims() == Dims{2}, Command::detect_eb, lc.channel.dims(), "[2]");
  WitnessPlan plan = plan_witness("eb", lc, options, std::nullopt);
  const double c = evaluate_witness(plan.witness, plan.measured);
  r.exact_expectation = c;
  r.thresholds["entanglement_breaking"] = 0.0;
  r.verdict = c < 0.0 ? "not_entanglement_breaking" : "undetected";
  r.bounds = robustness_bounds(c, plan.witness);
  r.details["witness"] = "eb";
  if (lc.spec.kind == "named" && lc.spec.name == "depolarizing") {
    const double p = lc.spec.params.at("p").get<double>();
    if (p < 0.5) r.details["mu_c_reference"] = (2.0 - 4.0 * p) / (3.0 - 4.0 * p);
  }
  maybe_sample(r, plan, options);
}

void run_detect_sru_sep(Report& r, Command command, const LoadedChannel& lc, const Options& options,
                        const std::optional<LoadedChannel>& target) {
  require_dims(is_bipartite_square(lc.channel.dims()), command, lc.channel.dims(), "[d,d]");
  WitnessPlan plan = plan_witness("sru", lc, options, target);
  const double c = evaluate_witness(plan.witness, plan.measured);
  const double sru_sq = *plan.witness.alpha_sru_sq();
  const double s_sq = *plan.witness.alpha_s_sq();
  r.details = plan.details;
  r.details["witness"] = "sru";
  r.exact_expectation = c;
  r.thresholds["not_sru"] = 0.0;
  r.thresholds["not_separable"] = sru_sq - s_sq;
  r.verdict = std::string(to_string(classify_violation(c, plan.witness)));
  r.bounds = robustness_bounds(c, plan.witness);
  if (command == Command::detect_sep) {
    const ComplexMatrix gate = target ? gate_of(*target, "target") : gate_of(lc, "channel");
    const SchmidtDecomposition s = operator_schmidt(gate, gate.dims()[0], gate.dims()[1]);
    r.details["sigmas"] = s.sigmas;
    r.details["rank"] = s.rank;
  }
  maybe_sample(r, plan, options);
}

void run_detect_npt(Report& r, const LoadedChannel& lc, const Options& options) {
  const Channel& ch = lc.channel;
  require_dims(is_bipartite_square(ch.dims()), Command::detect_npt, ch.dims(), "[d,d]");
  const NptReport npt = detect_npt(ch);
  json& d = r.details;
  d["d"] = npt.d;
  d["lambda_minus"] = npt.lambda_minus;
  d["multiplicity"] = npt.multiplicity;
  d["noise_p"] = npt.noise_p;
  d["unital"] = npt.unital;
  if (npt.first_term) d["first_term"] = *npt.first_term;
  if (npt.second_term_mt) d["second_term_mt"] = *npt.second_term_mt;
  if (npt.second_term_m) d["second_term_m"] = *npt.second_term_m;
  if (npt.two_term_value) d["two_term_value"] = *npt.two_term_value;
  if (!npt.diagnostic.empty()) d["diagnostic"] = npt.diagnostic;
  r.exact_expectation = npt.expectation;
  r.thresholds["npt"] = npt.threshold;
  r.verdict = std::string(to_string(npt.verdict));
  if (npt.expectation && options.shots.value_or(0) > 0) {
    maybe_sample(r, plan_witness("ppt", lc, options, std::nullopt), options);
  }
}

void run_simulate(Report& r, const LoadedChannel& lc, const Options& options,
                  const std::optional<LoadedChannel>& target) {
  const std::string kind = options.witness.value_or(default_witness(lc.channel.dims()));
  WitnessPlan plan = plan_witness(kind, lc, options, target);
  if (!all_qubits(plan.measured.dims())) throw DimensionError("simulate is available for qubit systems only");
  r.details = plan.details;
  r.details["witness"] = kind;
  r.exact_expectation = evaluate_witness(plan.witness, plan.measured);
  maybe_sample(r, plan, options, kDefaultSimulateShots);
}

}  // namespace

Command parse_command(std::string_view text) {
  for (const auto& c : kCommands) {
    if (c.text == text) return c.command;
  }
  throw std::invalid_argument("unknown command '" + std::string(text) + "'");
}

std::string_view to_string(Command c) {
  for (const auto& entry : kCommands) {
    if (entry.command == c) return entry.text;
  }
  return "unknown";
}

bool requires_trace_preserving(Command c) {
  switch (c) {
    case Command::detect_eb:
    case Command::detect_sru:
    case Command::detect_npt:
    case Command::simulate:
      return true;
    default:
      return false;
  }
}

Report run_pipeline(Command command, const LoadedChannel& channel, const Options& options,
                    const std::optional<LoadedChannel>& target) {
  if (options.starts < 1) throw std::invalid_argument("--starts must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.pipeline = std::string(to_string(command));
  r.seed = options.seed;
  r.inputs = inputs_json(command, channel, options, target);
  switch (command) {
    case Command::choi:
      run_choi(r, channel.channel);
      break;
    case Command::schmidt:
      run_schmidt(r, channel);
      break;
    case Command::decompose_witness:
      run_decompose(r, channel, options, target);
      break;
    case Command::detect_eb:
      run_detect_eb(r, channel, options);
      break;
    case Command::detect_sru:
    case Command::detect_sep:
      run_detect_sru_sep(r, command, channel, options, target);
      break;
    case Command::detect_npt:
      run_detect_npt(r, channel, options);
      break;
    case Command::simulate:
      run_simulate(r, channel, options, target);
      break;
  }
  if (options.timing) {
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

}  // namespace chandet::cli
