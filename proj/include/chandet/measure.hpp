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
#include <string>
#include <vector>

#include "chandet/channels.hpp"
#include "chandet/detect.hpp"
#include "chandet/qmath.hpp"

namespace chandet {

struct PauliTerm {
  std::string letters;  // one of I, X, Y, Z per qubit
  double coefficient = 0.0;
};

// A product basis, one of X, Y, Z per qubit, and the indices (into the term
// list it was grouped from) of the terms read off its shots.
struct MeasurementSetting {
  std::string bases;
  std::vector<std::size_t> covered_terms;
};

struct ShotEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t shots_per_setting = 0;
  std::uint64_t seed = 0;
  std::size_t settings = 0;

  friend bool operator==(const ShotEstimate&, const ShotEstimate&) = default;
};

// Coefficients Tr[P W] / 2^n over all 4^n strings, in lexicographic order
// (I < X < Y < Z, first qubit leftmost); |c| <= 1e-12 dropped. Requires a
// Hermitian operator on qubits only.
std::vector<PauliTerm> pauli_decompose(const ComplexMatrix& w);

// Every non-I letter of the term equals the setting's letter there.
bool is_compatible(const std::string& term, const std::string& setting);

// Greedy covering of the non-identity terms. Terms are visited by number of
// I letters (fewest first, stable). A term joins the first compatible
// setting; otherwise it opens a new one whose free positions are filled one
// at a time with the letter most frequent at that position among uncovered
// terms still compatible with the partial setting (ties X, then Y, then Z).
std::vector<MeasurementSetting> group_settings(const std::vector<PauliTerm>& terms);

// Outcome histogram of `shots` projective measurements of every qubit in
// the setting's bases. Index bit (n-1-k) is qubit k's outcome, 0 for the
// +1 eigenvalue. Throws ValidationError for non-PSD or non-unit-trace input.
std::vector<std::uint64_t> simulate_counts(const ComplexMatrix& state, const std::string& bases,
                                           std::uint64_t shots, std::uint64_t seed);

// Exact outcome distribution for the same convention.
std::vector<double> outcome_probabilities(const ComplexMatrix& state, const std::string& bases);

// Seed of the sampling stream for one setting.
std::uint64_t setting_seed(std::uint64_t seed, std::size_t setting_index);

// Estimates Tr[W C_M] by sampling the Choi state in every setting.
// shots_per_setting = 0 returns the exact value with zero error.
ShotEstimate estimate_witness(const Channel& ch, const Witness& w, std::uint64_t shots_per_setting,
                              std::uint64_t seed);
ShotEstimate estimate_witness(const ComplexMatrix& state, const Witness& w, std::uint64_t shots_per_setting,
                              std::uint64_t seed);

}  // namespace chandet
