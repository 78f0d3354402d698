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

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "chandet/channels.hpp"

namespace chandet {

namespace {

void require_unitary(const ComplexMatrix& u, const char* who) {
  const double defect = u.unitarity_defect();
  if (defect > kSpectralTol) {
    throw ValidationError(std::string(who) + ": matrix is not unitary (max|U^dagger U - I| = " +
                          std::to_string(defect) + ")");
  }
}

void require_probabilities(std::span<const double> probabilities, std::size_t expected, const char* who) {
  if (probabilities.size() != expected || expected == 0) {
    throw DimensionError(std::string(who) + ": need one probability per unitary");
  }
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError(std::string(who) + ": probability outside [0, 1]");
    total += p;
  }
  if (std::abs(total - 1.0) > kSpectralTol) {
    throw ValidationError(std::string(who) + ": probabilities sum to " + std::to_string(total));
  }
}

}  // namespace

ComplexMatrix cnot_gate() {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return ComplexMatrix(std::move(m), Dims{2, 2});
}

ComplexMatrix z3_gate() {
  std::array<Complex, 9> diag;
  diag.fill(1.0);
  diag[8] = -1.0;
  return ComplexMatrix::diagonal(diag, Dims{3, 3});
}

Channel identity_channel(const Dims& dims) { return Channel({ComplexMatrix::identity(dims)}, dims); }

Channel depolarizing_channel(double p, int d) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("depolarizing: p must lie in [0, 1]");
  if (d < 2) throw DimensionError("depolarizing: d must be at least 2");
  std::vector<ComplexMatrix> kraus;
  const double others = p / static_cast<double>(d * d - 1);
  if (d == 2) {
    const std::array<std::pair<char, double>, 4> terms{{{'I', 1.0 - p}, {'X', others}, {'Y', others}, {'Z', others}}};
    for (const auto& [letter, weight] : terms) {
      if (weight > 0.0) kraus.push_back(std::sqrt(weight) * pauli(letter));
    }
    return Channel(std::move(kraus), Dims{2});
  }
  // Weyl operators X^a Z^b
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const double weight = (a == 0 && b == 0) ? 1.0 - p : others;
      if (weight <= 0.0) continue;
      Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(d, d);
      for (int k = 0; k < d; ++k) w((k + a) % d, k) = std::pow(omega, b * k);
      kraus.emplace_back(std::sqrt(weight) * w, Dims{d});
    }
  }
  return Channel(std::move(kraus), Dims{d});
}

Channel fully_depolarizing_channel(const ComplexMatrix& sigma) {
  const auto eig = hermitian_eig(sigma);
  if (eig.values(0) < -kSpectralTol) throw ValidationError("fully_depolarizing: sigma is not positive semidefinite");
  if (std::abs(sigma.trace() - 1.0) > kSpectralTol) throw ValidationError("fully_depolarizing: sigma must have unit trace");
  const Eigen::Index n = sigma.side();
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index m = 0; m < n; ++m) {
    const double lambda = eig.values(m);
    if (lambda <= 0.0) continue;
    for (Eigen::Index i = 0; i < n; ++i) {
      Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
      a.col(i) = std::sqrt(lambda) * eig.vectors.col(m);
      kraus.emplace_back(std::move(a), sigma.dims());
    }
  }
  return Channel(std::move(kraus), sigma.dims());
}

Channel unitary_channel(const ComplexMatrix& u) {
  require_unitary(u, "unitary");
  return Channel({u}, u.dims());
}

Channel random_unitary_channel(std::span<const double> probabilities, std::span<const ComplexMatrix> unitaries) {
  require_probabilities(probabilities, unitaries.size(), "random_unitary");
  std::vector<ComplexMatrix> kraus;
  for (std::size_t k = 0; k < unitaries.size(); ++k) {
    require_unitary(unitaries[k], "random_unitary");
    if (unitaries[k].dims() != unitaries.front().dims()) throw DimensionError("random_unitary: unitaries differ in dims");
    if (probabilities[k] > 0.0) kraus.push_back(std::sqrt(probabilities[k]) * unitaries[k]);
  }
  return Channel(std::move(kraus), unitaries.front().dims());
}

Channel sru_channel(std::span<const double> probabilities, std::span<const ComplexMatrix> a_unitaries,
                    std::span<const ComplexMatrix> b_unitaries) {
  if (a_unitaries.size() != b_unitaries.size()) throw DimensionError("sru: A and B lists differ in length");
  require_probabilities(probabilities, a_unitaries.size(), "sru");
  std::vector<ComplexMatrix> kraus;
  for (std::size_t k = 0; k < a_unitaries.size(); ++k) {
    require_unitary(a_unitaries[k], "sru");
    require_unitary(b_unitaries[k], "sru");
    if (a_unitaries[k].side() != a_unitaries.front().side() || b_unitaries[k].side() != b_unitaries.front().side()) {
      throw DimensionError("sru: local unitaries differ in dimension");
    }
    if (probabilities[k] > 0.0) kraus.push_back(std::sqrt(probabilities[k]) * kron(a_unitaries[k], b_unitaries[k]));
  }
  const Dims dims{static_cast<int>(a_unitaries.front().side()), static_cast<int>(b_unitaries.front().side())};
  return Channel(std::move(kraus), dims);
}

ChannelName parse_channel_name(std::string_view name) {
  if (name == "identity") return ChannelName::identity;
  if (name == "depolarizing") return ChannelName::depolarizing;
  if (name == "fully_depolarizing") return ChannelName::fully_depolarizing;
  if (name == "unitary") return ChannelName::unitary;
  if (name == "cnot") return ChannelName::cnot;
  if (name == "z3") return ChannelName::z3;
  if (name == "random_unitary") return ChannelName::random_unitary;
  if (name == "sru") return ChannelName::sru;
  throw DimensionError("unknown channel name '" + std::string(name) + "'");
}

std::string_view to_string(ChannelName name) {
  switch (name) {
    case ChannelName::identity: return "identity";
    case ChannelName::depolarizing: return "depolarizing";
    case ChannelName::fully_depolarizing: return "fully_depolarizing";
    case ChannelName::unitary: return "unitary";
    case ChannelName::cnot: return "cnot";
    case ChannelName::z3: return "z3";
    case ChannelName::random_unitary: return "random_unitary";
    case ChannelName::sru: return "sru";
  }
  return "unknown";
}

Channel make_named_channel(ChannelName name, const ChannelParams& params) {
  switch (name) {
    case ChannelName::identity:
      return identity_channel(params.dims.empty() ? Dims{params.d} : params.dims);
    case ChannelName::depolarizing:
      return depolarizing_channel(params.p, params.d);
    case ChannelName::fully_depolarizing:
      if (!params.sigma) throw DimensionError("fully_depolarizing: missing sigma");
      return fully_depolarizing_channel(*params.sigma);
    case ChannelName::unitary:
      if (!params.unitary) throw DimensionError("unitary: missing matrix");
      return unitary_channel(*params.unitary);
    case ChannelName::cnot:
      return unitary_channel(cnot_gate());
    case ChannelName::z3:
      return unitary_channel(z3_gate());
    case ChannelName::random_unitary:
      return random_unitary_channel(params.probabilities, params.unitaries);
    case ChannelName::sru:
      return sru_channel(params.probabilities, params.unitaries, params.b_unitaries);
  }
  throw DimensionError("unknown channel name");
}

}  // namespace chandet
