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

#include <cmath>
#include <random>
#include <string>

#include "chandet/measure.hpp"

namespace chandet {

namespace {

// Rotation taking the setting's eigenbasis to the computational basis.
ComplexMatrix basis_change(const std::string& bases) {
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<ComplexMatrix> factors;
  for (char b : bases) {
    Eigen::Matrix2cd u;
    switch (b) {
      case 'X':
        u << h, h, h, -h;
        break;
      case 'Y':  // H S^dagger
        u << h, Complex(0, -h), h, Complex(0, h);
        break;
      case 'Z':
        u << 1, 0, 0, 1;
        break;
      default:
        throw DimensionError(std::string("invalid measurement basis '") + b + "'");
    }
    factors.emplace_back(Eigen::MatrixXcd(u), Dims{2});
  }
  return kron(factors);
}

void validate_state(const ComplexMatrix& state, const std::string& bases) {
  for (int d : state.dims()) {
    if (d != 2) throw DimensionError("measurement simulation supports qubits only");
  }
  if (state.num_subsystems() != bases.size()) throw DimensionError("setting length does not match qubit count");
  if (std::abs(state.trace() - 1.0) > kSpectralTol) throw ValidationError("state does not have unit trace");
  if (hermitian_eig(state).values(0) < -kSpectralTol) throw ValidationError("state is not positive semidefinite");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// +1 or -1: product of the outcome eigenvalues on the term's support.
int term_sign(const std::string& term, std::size_t outcome) {
  const std::size_t n = term.size();
  int parity = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (term[k] != 'I') parity ^= static_cast<int>((outcome >> (n - 1 - k)) & 1U);
  }
  return parity ? -1 : 1;
}

}  // namespace

std::vector<double> outcome_probabilities(const ComplexMatrix& state, const std::string& bases) {
  validate_state(state, bases);
  const ComplexMatrix u = basis_change(bases);
  const Eigen::MatrixXcd rotated = u.data() * state.data() * u.data().adjoint();
  std::vector<double> probs(static_cast<std::size_t>(rotated.rows()));
  for (Eigen::Index k = 0; k < rotated.rows(); ++k) probs[static_cast<std::size_t>(k)] = std::max(0.0, rotated(k, k).real());
  return probs;
}

std::vector<std::uint64_t> simulate_counts(const ComplexMatrix& state, const std::string& bases, std::uint64_t shots,
                                           std::uint64_t seed) {
  const std::vector<double> probs = outcome_probabilities(state, bases);
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> counts(probs.size(), 0);
  // multinomial draw as a chain of conditional binomials
  std::uint64_t remaining = shots;
  double mass = 0.0;
  for (double p : probs) mass += p;
  for (std::size_t k = 0; k + 1 < probs.size() && remaining > 0; ++k) {
    if (mass <= 0.0) break;
    const double q = std::min(1.0, probs[k] / mass);
    std::binomial_distribution<std::uint64_t> draw(remaining, q);
    const std::uint64_t c = q > 0.0 ? draw(rng) : 0;
    counts[k] = c;
    remaining -= c;
    mass -= probs[k];
  }
  if (remaining > 0) counts.back() += remaining;
  return counts;
}

std::uint64_t setting_seed(std::uint64_t seed, std::size_t setting_index) {
  return splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(setting_index));
}

ShotEstimate estimate_witness(const ComplexMatrix& state, const Witness& w, std::uint64_t shots_per_setting,
                              std::uint64_t seed) {
  ShotEstimate out;
  out.shots_per_setting = shots_per_setting;
  out.seed = seed;
  if (shots_per_setting == 0) {
    out.value = evaluate_witness(w, state);
    return out;
  }
  if (w.op().dims() != state.dims()) throw DimensionError("estimate_witness: witness and state dims differ");
  const auto terms = pauli_decompose(w.op());
  const auto settings = group_settings(terms);
  out.settings = settings.size();

  double value = 0.0;
  double variance = 0.0;
  for (const auto& t : terms) {
    if (t.letters.find_first_not_of('I') == std::string::npos) value += t.coefficient;
  }
  const double n = static_cast<double>(shots_per_setting);
  for (std::size_t s = 0; s < settings.size(); ++s) {
    const auto counts = simulate_counts(state, settings[s].bases, shots_per_setting, setting_seed(seed, s));
    // per-shot combined value y(o) of all terms read from this setting
    std::vector<double> y(counts.size(), 0.0);
    for (std::size_t o = 0; o < counts.size(); ++o) {
      for (std::size_t idx : settings[s].covered_terms) y[o] += terms[idx].coefficient * term_sign(terms[idx].letters, o);
    }
    double mean = 0.0;
    for (std::size_t o = 0; o < counts.size(); ++o) mean += static_cast<double>(counts[o]) * y[o];
    mean /= n;
    double ss = 0.0;
    for (std::size_t o = 0; o < counts.size(); ++o) ss += static_cast<double>(counts[o]) * (y[o] - mean) * (y[o] - mean);
    value += mean;
    if (shots_per_setting > 1) variance += ss / (n - 1.0) / n;
  }
  out.value = value;
  out.std_error = std::sqrt(variance);
  return out;
}

ShotEstimate estimate_witness(const Channel& ch, const Witness& w, std::uint64_t shots_per_setting,
                              std::uint64_t seed) {
  return estimate_witness(ch.choi().matrix, w, shots_per_setting, seed);
}

}  // namespace chandet
