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
#include <numeric>
#include <string>

#include "chandet/qmath.hpp"

namespace chandet {

std::size_t product(std::span<const int> dims) {
  std::size_t p = 1;
  for (int d : dims) p *= static_cast<std::size_t>(d);
  return p;
}

namespace {

void check_dims(const Eigen::MatrixXcd& data, const Dims& dims) {
  if (data.rows() != data.cols()) {
    throw DimensionError("matrix is not square: " + std::to_string(data.rows()) + "x" +
                         std::to_string(data.cols()));
  }
  if (dims.empty()) throw DimensionError("empty subsystem dimension list");
  for (int d : dims) {
    if (d < 1) throw DimensionError("subsystem dimension must be positive");
  }
  if (product(dims) != static_cast<std::size_t>(data.rows())) {
    throw DimensionError("side length " + std::to_string(data.rows()) +
                         " does not match product of subsystem dimensions " +
                         std::to_string(product(dims)));
  }
}

void require_same_side(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.side() != b.side()) {
    throw DimensionError(std::string(what) + ": side mismatch " + std::to_string(a.side()) +
                         " vs " + std::to_string(b.side()));
  }
}

// Binary results keep the left operand's factorisation unless the two
// disagree, in which case the coarse single-subsystem view is used.
Dims merged_dims(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dims() == b.dims()) return a.dims();
  return Dims{static_cast<int>(a.side())};
}

}  // namespace

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd data, Dims dims)
    : data_(std::move(data)), dims_(std::move(dims)) {
  check_dims(data_, dims_);
}

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd data)
    : ComplexMatrix(data, Dims{static_cast<int>(data.rows())}) {}

ComplexMatrix ComplexMatrix::identity(const Dims& dims) {
  const auto n = static_cast<Eigen::Index>(product(dims));
  return ComplexMatrix(Eigen::MatrixXcd::Identity(n, n), dims);
}

ComplexMatrix ComplexMatrix::zero(const Dims& dims) {
  const auto n = static_cast<Eigen::Index>(product(dims));
  return ComplexMatrix(Eigen::MatrixXcd::Zero(n, n), dims);
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> entries, Dims dims) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(entries.size()),
                                               static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = entries[i];
  }
  return ComplexMatrix(std::move(m), std::move(dims));
}

ComplexMatrix ComplexMatrix::adjoint() const { return ComplexMatrix(data_.adjoint(), dims_); }

ComplexMatrix ComplexMatrix::conjugate() const { return ComplexMatrix(data_.conjugate(), dims_); }

ComplexMatrix ComplexMatrix::transpose() const { return ComplexMatrix(data_.transpose(), dims_); }

Complex ComplexMatrix::trace() const { return data_.trace(); }

ComplexMatrix ComplexMatrix::with_dims(Dims dims) const { return ComplexMatrix(data_, std::move(dims)); }

double ComplexMatrix::hermiticity_defect() const {
  if (data_.size() == 0) return 0.0;
  return (data_ - data_.adjoint()).cwiseAbs().maxCoeff();
}

double ComplexMatrix::unitarity_defect() const {
  if (data_.size() == 0) return 0.0;
  const Eigen::MatrixXcd gram = data_.adjoint() * data_;
  return (gram - Eigen::MatrixXcd::Identity(side(), side())).cwiseAbs().maxCoeff();
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  require_same_side(*this, other, "max_abs_diff");
  if (data_.size() == 0) return 0.0;
  return (data_ - other.data_).cwiseAbs().maxCoeff();
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_side(a, b, "operator+");
  return ComplexMatrix(a.data_ + b.data_, merged_dims(a, b));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_side(a, b, "operator-");
  return ComplexMatrix(a.data_ - b.data_, merged_dims(a, b));
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_side(a, b, "operator*");
  return ComplexMatrix(a.data_ * b.data_, merged_dims(a, b));
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) { return ComplexMatrix(s * m.data_, m.dims_); }

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_side(a, b, "trace_product");
  // Tr[ab] = sum_ij a_ij b_ji
  return (a.data().array() * b.data().transpose().array()).sum();
}

PureState::PureState(Eigen::VectorXcd amplitudes, Dims dims)
    : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
  if (product(dims_) != static_cast<std::size_t>(amplitudes_.size())) {
    throw DimensionError("state length does not match product of subsystem dimensions");
  }
  const double norm_sq = amplitudes_.squaredNorm();
  if (std::abs(norm_sq - 1.0) > kHermitianTol) {
    throw ValidationError("state is not normalised: squared norm " + std::to_string(norm_sq));
  }
}

ComplexMatrix PureState::projector() const {
  return ComplexMatrix(amplitudes_ * amplitudes_.adjoint(), dims_);
}

}  // namespace chandet
