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
#include <string>

#include "chandet/channels.hpp"

namespace chandet {

namespace {

Dims doubled(const Dims& dims) {
  Dims out = dims;
  out.insert(out.end(), dims.begin(), dims.end());
  return out;
}

void require_same_system(const Superoperator& a, const Superoperator& b) {
  if (a.system_dims != b.system_dims) throw DimensionError("compose: system dimensions differ");
}

}  // namespace

ChoiMatrix choi_from_superoperator(const Superoperator& s) {
  const auto n = static_cast<Eigen::Index>(product(s.system_dims));
  if (s.matrix.side() != n * n) throw DimensionError("superoperator side does not match system dims");
  Eigen::MatrixXcd c(n * n, n * n);
  const double scale = 1.0 / static_cast<double>(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index b = 0; b < n; ++b) {
        for (Eigen::Index j = 0; j < n; ++j) c(a * n + i, b * n + j) = scale * s.matrix(a + n * b, i + n * j);
      }
    }
  }
  return ChoiMatrix{ComplexMatrix(std::move(c), doubled(s.system_dims)), s.system_dims};
}

Superoperator superoperator_from_choi(const ChoiMatrix& c) {
  const auto n = static_cast<Eigen::Index>(product(c.source_dims));
  if (c.matrix.side() != n * n) throw DimensionError("Choi side does not match source dims");
  Eigen::MatrixXcd s(n * n, n * n);
  const double scale = static_cast<double>(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index b = 0; b < n; ++b) {
        for (Eigen::Index j = 0; j < n; ++j) s(a + n * b, i + n * j) = scale * c.matrix(a * n + i, b * n + j);
      }
    }
  }
  return Superoperator{ComplexMatrix(std::move(s), doubled(c.source_dims)), c.source_dims};
}

Superoperator transpose_superoperator(int subsystem, const Dims& dims) {
  if (subsystem < 0 || static_cast<std::size_t>(subsystem) >= dims.size()) {
    throw DimensionError("transpose_superoperator: subsystem " + std::to_string(subsystem) + " out of range");
  }
  const auto n = product(dims);
  std::size_t stride = 1;
  for (std::size_t k = static_cast<std::size_t>(subsystem) + 1; k < dims.size(); ++k) {
    stride *= static_cast<std::size_t>(dims[k]);
  }
  const auto d = static_cast<std::size_t>(dims[static_cast<std::size_t>(subsystem)]);
  const auto nn = static_cast<Eigen::Index>(n * n);
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(nn, nn);
  // |i><j| -> |i'><j'| with the subsystem digit exchanged
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t di = (i / stride) % d;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t dj = (j / stride) % d;
      const std::size_t ii = i - di * stride + dj * stride;
      const std::size_t jj = j - dj * stride + di * stride;
      s(static_cast<Eigen::Index>(ii + n * jj), static_cast<Eigen::Index>(i + n * j)) = 1.0;
    }
  }
  return Superoperator{ComplexMatrix(std::move(s), doubled(dims)), dims};
}

ComplexMatrix apply_superoperator(const Superoperator& s, const ComplexMatrix& rho) {
  const auto n = static_cast<Eigen::Index>(product(s.system_dims));
  if (rho.side() != n) throw DimensionError("apply_superoperator: operator dimension mismatch");
  const Eigen::VectorXcd v = rho.data().reshaped();  // column-major == column stacking
  const Eigen::VectorXcd out = s.matrix.data() * v;
  return ComplexMatrix(out.reshaped(n, n), s.system_dims);
}

Superoperator compose(const Superoperator& outer, const Superoperator& inner) {
  require_same_system(outer, inner);
  return Superoperator{outer.matrix * inner.matrix, outer.system_dims};
}

Superoperator compose(const Channel& outer, const Channel& inner) {
  return compose(outer.superoperator(), inner.superoperator());
}

Superoperator compose(const Superoperator& outer, const Channel& inner) {
  return compose(outer, inner.superoperator());
}

Superoperator compose(const Channel& outer, const Superoperator& inner) {
  return compose(outer.superoperator(), inner);
}

Channel kraus_from_choi(const ChoiMatrix& c) {
  const auto eig = hermitian_eig(c.matrix);
  if (eig.values(0) < -1e-9) {
    throw ValidationError("Choi operator is not positive semidefinite: eigenvalue " + std::to_string(eig.values(0)));
  }
  const auto n = static_cast<Eigen::Index>(product(c.source_dims));
  std::vector<ComplexMatrix> kraus;
  // largest weight first
  for (Eigen::Index k = eig.values.size(); k-- > 0;) {
    const double lambda = eig.values(k);
    if (lambda <= kSpectralTol) break;
    const double scale = std::sqrt(lambda * static_cast<double>(n));
    Eigen::MatrixXcd a(n, n);
    for (Eigen::Index row = 0; row < n; ++row) {
      for (Eigen::Index col = 0; col < n; ++col) a(row, col) = scale * eig.vectors(row * n + col, k);
    }
    kraus.emplace_back(std::move(a), c.source_dims);
  }
  if (kraus.empty()) throw ValidationError("Choi operator is numerically zero");
  return Channel(std::move(kraus), c.source_dims, false);
}

}  // namespace chandet
