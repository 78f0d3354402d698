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
#include <cmath>
#include <string>

#include "chandet/qmath.hpp"

namespace chandet {

namespace {

// Digits of a row-major multi-index, first subsystem most significant.
std::vector<int> digits_of(std::size_t index, const Dims& dims) {
  std::vector<int> digits(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = static_cast<int>(index % static_cast<std::size_t>(dims[k]));
    index /= static_cast<std::size_t>(dims[k]);
  }
  return digits;
}

std::size_t index_of(std::span<const int> digits, const Dims& dims) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    index = index * static_cast<std::size_t>(dims[k]) + static_cast<std::size_t>(digits[k]);
  }
  return index;
}

void check_subsystem(int subsystem, const Dims& dims) {
  if (subsystem < 0 || static_cast<std::size_t>(subsystem) >= dims.size()) {
    throw DimensionError("subsystem index " + std::to_string(subsystem) + " out of range for " +
                         std::to_string(dims.size()) + " subsystems");
  }
}

void check_permutation(std::span<const int> perm, std::size_t n) {
  if (perm.size() != n) {
    throw DimensionError("permutation has length " + std::to_string(perm.size()) + ", expected " +
                         std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || seen[static_cast<std::size_t>(p)]) {
      throw DimensionError("malformed permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
}

// Maps every index of the input space to its position after permuting.
std::vector<Eigen::Index> permuted_positions(const Dims& dims, std::span<const int> perm, Dims& out_dims) {
  out_dims.resize(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k) out_dims[k] = dims[static_cast<std::size_t>(perm[k])];
  const std::size_t n = product(dims);
  std::vector<Eigen::Index> pos(n);
  std::vector<int> out_digits(dims.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto in_digits = digits_of(i, dims);
    for (std::size_t k = 0; k < dims.size(); ++k) out_digits[k] = in_digits[static_cast<std::size_t>(perm[k])];
    pos[i] = static_cast<Eigen::Index>(index_of(out_digits, out_dims));
  }
  return pos;
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index na = a.side();
  const Eigen::Index nb = b.side();
  Eigen::MatrixXcd out(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < na; ++j) {
      out.block(i * nb, j * nb, nb, nb) = a(i, j) * b.data();
    }
  }
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return ComplexMatrix(std::move(out), std::move(dims));
}

ComplexMatrix kron(std::span<const ComplexMatrix> factors) {
  if (factors.empty()) throw DimensionError("kron of an empty factor list");
  ComplexMatrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> keep) {
  const Dims& dims = m.dims();
  std::vector<bool> kept(dims.size(), false);
  for (int k : keep) {
    check_subsystem(k, dims);
    if (kept[static_cast<std::size_t>(k)]) throw DimensionError("duplicate subsystem in keep set");
    kept[static_cast<std::size_t>(k)] = true;
  }
  Dims keep_dims;
  Dims traced_dims;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    (kept[k] ? keep_dims : traced_dims).push_back(dims[k]);
  }
  if (keep_dims.empty()) {
    // Full trace, kept as a 1x1 operator.
    return ComplexMatrix(Eigen::MatrixXcd::Constant(1, 1, m.trace()), Dims{1});
  }
  if (traced_dims.empty()) traced_dims.push_back(1);

  const std::size_t n = product(dims);
  std::vector<Eigen::Index> keep_index(n);
  std::vector<std::size_t> traced_index(n);
  std::vector<int> kd;
  std::vector<int> td;
  for (std::size_t i = 0; i < n; ++i) {
    const auto digits = digits_of(i, dims);
    kd.clear();
    td.clear();
    for (std::size_t k = 0; k < dims.size(); ++k) (kept[k] ? kd : td).push_back(digits[k]);
    keep_index[i] = static_cast<Eigen::Index>(index_of(kd, keep_dims));
    traced_index[i] = td.empty() ? 0 : index_of(td, Dims(traced_dims));
  }

  const auto nk = static_cast<Eigen::Index>(product(keep_dims));
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(nk, nk);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (traced_index[i] == traced_index[j]) {
        out(keep_index[i], keep_index[j]) += m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
  }
  return ComplexMatrix(std::move(out), std::move(keep_dims));
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, int subsystem) {
  const Dims& dims = m.dims();
  check_subsystem(subsystem, dims);
  const auto s = static_cast<std::size_t>(subsystem);
  std::size_t stride = 1;
  for (std::size_t k = s + 1; k < dims.size(); ++k) stride *= static_cast<std::size_t>(dims[k]);
  const auto d = static_cast<std::size_t>(dims[s]);

  const auto n = static_cast<std::size_t>(m.side());
  Eigen::MatrixXcd out(m.side(), m.side());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t di = (i / stride) % d;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t dj = (j / stride) % d;
      // swap the subsystem digit between row and column
      const std::size_t ii = i - di * stride + dj * stride;
      const std::size_t jj = j - dj * stride + di * stride;
      out(static_cast<Eigen::Index>(ii), static_cast<Eigen::Index>(jj)) =
          m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return ComplexMatrix(std::move(out), dims);
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m, std::span<const int> perm) {
  check_permutation(perm, m.num_subsystems());
  Dims out_dims;
  const auto pos = permuted_positions(m.dims(), perm, out_dims);
  Eigen::MatrixXcd out(m.side(), m.side());
  for (std::size_t i = 0; i < pos.size(); ++i) {
    for (std::size_t j = 0; j < pos.size(); ++j) {
      out(pos[i], pos[j]) = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return ComplexMatrix(std::move(out), std::move(out_dims));
}

PureState permute_subsystems(const PureState& s, std::span<const int> perm) {
  check_permutation(perm, s.dims().size());
  Dims out_dims;
  const auto pos = permuted_positions(s.dims(), perm, out_dims);
  Eigen::VectorXcd out(s.amplitudes().size());
  for (std::size_t i = 0; i < pos.size(); ++i) out(pos[i]) = s.amplitudes()(static_cast<Eigen::Index>(i));
  return PureState(std::move(out), std::move(out_dims));
}

PureState max_entangled(int d) {
  if (d < 2) throw DimensionError("maximally entangled state needs d >= 2, got " + std::to_string(d));
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(d) * d);
  const double c = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k) amps(static_cast<Eigen::Index>(k) * d + k) = c;
  return PureState(std::move(amps), Dims{d, d});
}

}  // namespace chandet
