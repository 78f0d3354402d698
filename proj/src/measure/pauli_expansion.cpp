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

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "chandet/measure.hpp"

namespace chandet {

namespace {

constexpr std::array<char, 4> kLetters{'I', 'X', 'Y', 'Z'};

std::size_t identity_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), 'I'));
}

// Partial settings may still carry 'I' as an unfilled slot.
bool fits_partial(const std::string& term, const std::string& partial) {
  for (std::size_t k = 0; k < term.size(); ++k) {
    if (term[k] != 'I' && partial[k] != 'I' && term[k] != partial[k]) return false;
  }
  return true;
}

}  // namespace

std::vector<PauliTerm> pauli_decompose(const ComplexMatrix& w) {
  for (int d : w.dims()) {
    if (d != 2) throw DimensionError("pauli_decompose: every subsystem must be a qubit");
  }
  const double defect = w.hermiticity_defect();
  if (defect > kHermitianTol) throw ValidationError("pauli_decompose: operator is not Hermitian");
  const std::size_t n = w.num_subsystems();
  const double norm = std::pow(2.0, static_cast<double>(n));

  std::vector<PauliTerm> terms;
  std::string letters(n, 'I');
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (std::size_t k = n; k-- > 0;) {
      letters[k] = kLetters[rest % 4];
      rest /= 4;
    }
    const Complex c = trace_product(pauli_string(letters), w) / norm;
    if (std::abs(c.imag()) > kHermitianTol) {
      throw ValidationError("pauli_decompose: coefficient of " + letters + " is not real");
    }
    if (std::abs(c.real()) > 1e-12) terms.push_back(PauliTerm{letters, c.real()});
  }
  return terms;
}

bool is_compatible(const std::string& term, const std::string& setting) {
  if (term.size() != setting.size()) return false;
  for (std::size_t k = 0; k < term.size(); ++k) {
    if (term[k] != 'I' && term[k] != setting[k]) return false;
  }
  return true;
}

std::vector<MeasurementSetting> group_settings(const std::vector<PauliTerm>& terms) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (identity_count(terms[i].letters) != terms[i].letters.size()) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return identity_count(terms[a].letters) < identity_count(terms[b].letters);
  });

  std::vector<bool> covered(terms.size(), false);
  std::vector<MeasurementSetting> settings;
  for (std::size_t idx : order) {
    const std::string& letters = terms[idx].letters;
    auto joined = std::find_if(settings.begin(), settings.end(),
                               [&](const MeasurementSetting& s) { return is_compatible(letters, s.bases); });
    if (joined != settings.end()) {
      joined->covered_terms.push_back(idx);
      covered[idx] = true;
      continue;
    }
    std::string bases = letters;
    for (std::size_t pos = 0; pos < bases.size(); ++pos) {
      if (bases[pos] != 'I') continue;
      std::array<int, 3> votes{0, 0, 0};  // X, Y, Z
      for (std::size_t other = 0; other < terms.size(); ++other) {
        if (other == idx || covered[other]) continue;
        const std::string& t = terms[other].letters;
        if (t.size() != bases.size() || t[pos] == 'I' || !fits_partial(t, bases)) continue;
        ++votes[t[pos] == 'X' ? 0 : (t[pos] == 'Y' ? 1 : 2)];
      }
      const auto best = std::max_element(votes.begin(), votes.end()) - votes.begin();
      bases[pos] = kLetters[static_cast<std::size_t>(best) + 1];
    }
    settings.push_back(MeasurementSetting{bases, {idx}});
    covered[idx] = true;
  }
  return settings;
}

}  // namespace chandet
