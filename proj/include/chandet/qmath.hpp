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

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace chandet {

using Complex = std::complex<double>;
using Dims = std::vector<int>;

// Absolute tolerances shared by the whole library.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kSpectralTol = 1e-10;

// Malformed shapes, bad indices, inconsistent dimensions.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical property the input was required to have does not hold
// (Hermiticity, unitarity, trace preservation, positivity).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t product(std::span<const int> dims);

// Dense square complex matrix together with the tensor factorisation of its
// index space. Row/column index k is the row-major multi-index over `dims`
// (first subsystem most significant). Values never change after
// construction.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(Eigen::MatrixXcd data, Dims dims);
  // Single-subsystem matrix.
  explicit ComplexMatrix(Eigen::MatrixXcd data);

  static ComplexMatrix identity(const Dims& dims);
  static ComplexMatrix zero(const Dims& dims);
  static ComplexMatrix diagonal(std::span<const Complex> entries, Dims dims);

  const Eigen::MatrixXcd& data() const { return data_; }
  const Dims& dims() const { return dims_; }
  Eigen::Index side() const { return data_.rows(); }
  std::size_t num_subsystems() const { return dims_.size(); }
  Complex operator()(Eigen::Index row, Eigen::Index col) const { return data_(row, col); }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  // Same entries, different tensor factorisation.
  ComplexMatrix with_dims(Dims dims) const;

  // max |M - M^dagger|
  double hermiticity_defect() const;
  bool is_hermitian(double tol = kHermitianTol) const { return hermiticity_defect() <= tol; }
  // max |M^dagger M - I|
  double unitarity_defect() const;
  bool is_unitary(double tol = kHermitianTol) const { return unitarity_defect() <= tol; }

  // max |M - other|; sides must agree.
  double max_abs_diff(const ComplexMatrix& other) const;

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& m);
  friend ComplexMatrix operator*(const ComplexMatrix& m, Complex s) { return s * m; }

 private:
  Eigen::MatrixXcd data_;
  Dims dims_;
};

// Tr[a b] without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

class PureState {
 public:
  PureState(Eigen::VectorXcd amplitudes, Dims dims);

  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  const Dims& dims() const { return dims_; }
  ComplexMatrix projector() const;

 private:
  Eigen::VectorXcd amplitudes_;
  Dims dims_;
};

// Kronecker product; dims concatenate.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(std::span<const ComplexMatrix> factors);

// Traces out every subsystem whose index is not listed in `keep`. The kept
// subsystems retain their original relative order.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> keep);
ComplexMatrix partial_transpose(const ComplexMatrix& m, int subsystem);

// Subsystem k of the result is subsystem perm[k] of the input.
ComplexMatrix permute_subsystems(const ComplexMatrix& m, std::span<const int> perm);
PureState permute_subsystems(const PureState& s, std::span<const int> perm);

// (1/sqrt(d)) sum_k |k>|k> on dims {d, d}.
PureState max_entangled(int d);

struct EigenSystem {
  Eigen::VectorXd values;    // ascending
  Eigen::MatrixXcd vectors;  // column k pairs with values[k]
};

// Throws ValidationError when m is not Hermitian within kHermitianTol.
EigenSystem hermitian_eig(const ComplexMatrix& m);

// Unitary factor of the polar decomposition (the closest unitary).
Eigen::MatrixXcd polar_unitary(const Eigen::MatrixXcd& m);
// Sum of singular values.
double trace_norm(const Eigen::MatrixXcd& m);

// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
// of R's diagonal pushed into Q.
ComplexMatrix haar_unitary(int d, std::uint64_t seed);
ComplexMatrix haar_unitary(int d, std::mt19937_64& rng);

// Single-qubit Pauli from one of I, X, Y, Z.
ComplexMatrix pauli(char letter);
// Tensor product of single-qubit Paulis, e.g. "XIZY".
ComplexMatrix pauli_string(std::string_view letters);

}  // namespace chandet
