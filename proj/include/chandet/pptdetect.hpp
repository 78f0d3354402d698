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

#include <optional>
#include <string>
#include <string_view>

#include "chandet/channels.hpp"
#include "chandet/detect.hpp"

namespace chandet {

// Thrown by ppt_witness when the conjugated Choi operator has no negative
// eigenvalue, so the construction has nothing to detect.
class PptUndetectable : public std::runtime_error {
 public:
  PptUndetectable(const std::string& what, double min_eigenvalue)
      : std::runtime_error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

struct PptConjugate {
  Superoperator superoperator;  // T_A o M o T_A
  ChoiMatrix choi;              // Hermitian, possibly indefinite
};

// Channel on two equal qudits {d, d}.
PptConjugate ppt_conjugate(const Channel& ch);

// Noise weight d^3 / (d^3 + 1) that makes the noisy partial transpose CP.
double spa_noise(int d);

// Choi operator of (1 - p) T_A + p D, where D[rho] = Tr[rho] I / d^2, on
// {d, d}. Exposed for any p so that the CP threshold can be probed.
ChoiMatrix noisy_transpose_choi(int d, double p);

// The physical approximation of T_A at p = spa_noise(d), in Kraus form.
Channel spa_transpose(int d);

struct PptWitness {
  Witness witness;
  double lambda_minus = 0.0;
  int multiplicity = 1;      // eigenvalues within 1e-10 of lambda_minus
  Eigen::VectorXcd lambda_vector;
};

// W = (|l-><l-|)^{T_A}, T_A on the first output qudit, from the most
// negative eigenpair of the conjugated Choi. Throws PptUndetectable when the
// minimum eigenvalue is not below -kSpectralTol.
PptWitness ppt_witness(const Channel& ch);

// M o T~_A as a CP channel, the map realised in the experiment.
Channel spa_composite(const Channel& ch);

enum class NptVerdict { npt_detected, not_detected };
std::string_view to_string(NptVerdict v);

struct NptReport {
  int d = 0;
  double lambda_minus = 0.0;  // minimum eigenvalue of the conjugated Choi
  int multiplicity = 0;
  std::optional<double> expectation;  // Tr[W C_{M o T~_A}], direct
  // (1-p) <l-|C_{M_T}|l-> and the depolarised contributions
  // <l-| M_T[I/d^2] (x) I/d^2 |l-> and <l-| M[I/d^2] (x) I/d^2 |l->.
  std::optional<double> first_term;
  std::optional<double> second_term_mt;
  std::optional<double> second_term_m;
  std::optional<double> two_term_value;  // (1-p) first + p second_mt
  double noise_p = 0.0;
  double threshold = 0.0;  // p/d^4 for unital maps, 0 otherwise
  bool unital = false;
  NptVerdict verdict = NptVerdict::not_detected;
  std::string diagnostic;
};

// Detects NPT-ness through the noisy-transpose experiment. A channel whose
// conjugated Choi is PSD yields not_detected with a diagnostic.
NptReport detect_npt(const Channel& ch);

}  // namespace chandet
