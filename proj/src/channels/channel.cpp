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

#include <string>

#include "chandet/channels.hpp"

namespace chandet {

namespace {

double identity_deficit(const Eigen::MatrixXcd& sum) {
  return (sum - Eigen::MatrixXcd::Identity(sum.rows(), sum.cols())).cwiseAbs().maxCoeff();
}

ChoiMatrix choi_from_kraus(const std::vector<ComplexMatrix>& kraus, const Dims& dims) {
  const Eigen::Index n = static_cast<Eigen::Index>(product(dims));
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n * n, n * n);
  Eigen::VectorXcd v(n * n);
  for (const auto& a : kraus) {
    for (Eigen::Index row = 0; row < n; ++row) {
      for (Eigen::Index col = 0; col < n; ++col) v(row * n + col) = a(row, col);
    }
    c.noalias() += v * v.adjoint();
  }
  c /= static_cast<double>(n);
  Dims choi_dims = dims;
  choi_dims.insert(choi_dims.end(), dims.begin(), dims.end());
  return ChoiMatrix{ComplexMatrix(std::move(c), std::move(choi_dims)), dims};
}

Superoperator superop_from_kraus(const std::vector<ComplexMatrix>& kraus, const Dims& dims) {
  ComplexMatrix s = kron(kraus.front().conjugate(), kraus.front());
  for (std::size_t k = 1; k < kraus.size(); ++k) s = s + kron(kraus[k].conjugate(), kraus[k]);
  return Superoperator{std::move(s), dims};
}

}  // namespace

double tp_deficit(const std::vector<ComplexMatrix>& kraus) {
  if (kraus.empty()) return 1.0;
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(kraus.front().side(), kraus.front().side());
  for (const auto& a : kraus) sum.noalias() += a.data().adjoint() * a.data();
  return identity_deficit(sum);
}

double unital_deficit(const std::vector<ComplexMatrix>& kraus) {
  if (kraus.empty()) return 1.0;
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(kraus.front().side(), kraus.front().side());
  for (const auto& a : kraus) sum.noalias() += a.data() * a.data().adjoint();
  return identity_deficit(sum);
}

Channel::Channel(std::vector<ComplexMatrix> kraus, Dims dims, bool trace_preserving_required)
    : kraus_(std::move(kraus)), dims_(std::move(dims)), tp_required_(trace_preserving_required) {
  if (kraus_.empty()) throw DimensionError("channel needs at least one Kraus operator");
  const auto n = static_cast<Eigen::Index>(product(dims_));
  for (auto& a : kraus_) {
    if (a.side() != n) {
      throw DimensionError("Kraus operator side " + std::to_string(a.side()) +
                           " does not match system dimension " + std::to_string(n));
    }
    a = a.with_dims(dims_);
  }
  if (tp_required_) {
    const double deficit = tp_deficit(kraus_);
    if (deficit > kSpectralTol) {
      throw ValidationError("channel is not trace preserving: max|sum A^dagger A - I| = " +
                            std::to_string(deficit));
    }
  }
  choi_ = choi_from_kraus(kraus_, dims_);
  superop_ = superop_from_kraus(kraus_, dims_);
}

ComplexMatrix Channel::apply(const ComplexMatrix& rho) const {
  if (rho.side() != kraus_.front().side()) throw DimensionError("apply: state dimension mismatch");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.side(), rho.side());
  for (const auto& a : kraus_) out.noalias() += a.data() * rho.data() * a.data().adjoint();
  return ComplexMatrix(std::move(out), dims_);
}

const ChoiMatrix& choi_of(const Channel& ch) { return ch.choi(); }

const Superoperator& superoperator_of(const Channel& ch) { return ch.superoperator(); }

ChannelFlags classify(const Channel& ch) {
  ChannelFlags flags;
  flags.tp = tp_deficit(ch.kraus()) <= kSpectralTol;
  flags.unital = unital_deficit(ch.kraus()) <= kSpectralTol;
  flags.cp = hermitian_eig(ch.choi().matrix).values(0) >= -kSpectralTol;
  return flags;
}

Channel tensor_product(const Channel& first, const Channel& second) {
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(first.kraus().size() * second.kraus().size());
  for (const auto& a : first.kraus()) {
    for (const auto& b : second.kraus()) kraus.push_back(kron(a, b));
  }
  Dims dims = first.dims();
  dims.insert(dims.end(), second.dims().begin(), second.dims().end());
  return Channel(std::move(kraus), std::move(dims),
                 first.trace_preserving_required() && second.trace_preserving_required());
}

}  // namespace chandet
